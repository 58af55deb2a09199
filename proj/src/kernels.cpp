#include "shems/kernels.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shems::kern {

namespace {
std::atomic<bool> g_parallel{[] {
    const char* env = std::getenv("SHEMS_PARALLEL");
    return !(env && env[0] == '0');
}()};

// Below this element count the fork/join overhead dominates on any machine
// we care about.
constexpr int kParallelCutoff = 2048;
} // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void price_columns_serial(const CscView& A, std::span<const double> c,
                          std::span<const double> y,
                          std::span<const unsigned char> active,
                          std::span<double> d) {
    for (int j = 0; j < A.n_cols; ++j) {
        if (!active[j]) continue;
        double acc = 0.0;
        for (int k = A.col_start[j]; k < A.col_start[j + 1]; ++k)
            acc += y[A.row_idx[k]] * A.value[k];
        d[j] = c[j] - acc;
    }
}

void price_columns_omp(const CscView& A, std::span<const double> c,
                       std::span<const double> y,
                       std::span<const unsigned char> active,
                       std::span<double> d) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int j = 0; j < A.n_cols; ++j) {
        if (!active[j]) continue;
        double acc = 0.0;
        for (int k = A.col_start[j]; k < A.col_start[j + 1]; ++k)
            acc += y[A.row_idx[k]] * A.value[k];
        d[j] = c[j] - acc;
    }
#else
    price_columns_serial(A, c, y, active, d);
#endif
}

void price_columns(const CscView& A, std::span<const double> c,
                   std::span<const double> y,
                   std::span<const unsigned char> active,
                   std::span<double> d) {
    if (parallel_enabled() && A.n_cols >= kParallelCutoff)
        price_columns_omp(A, c, y, active, d);
    else
        price_columns_serial(A, c, y, active, d);
}

void row_activity_serial(const CsrView& A, std::span<const double> x,
                         std::span<double> r) {
    for (int i = 0; i < A.n_rows; ++i) {
        double acc = 0.0;
        for (int k = A.row_start[i]; k < A.row_start[i + 1]; ++k)
            acc += A.value[k] * x[A.col_idx[k]];
        r[i] = acc;
    }
}

void row_activity_omp(const CsrView& A, std::span<const double> x,
                      std::span<double> r) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < A.n_rows; ++i) {
        double acc = 0.0;
        for (int k = A.row_start[i]; k < A.row_start[i + 1]; ++k)
            acc += A.value[k] * x[A.col_idx[k]];
        r[i] = acc;
    }
#else
    row_activity_serial(A, x, r);
#endif
}

void row_activity(const CsrView& A, std::span<const double> x,
                  std::span<double> r) {
    if (parallel_enabled() && A.n_rows >= kParallelCutoff)
        row_activity_omp(A, x, r);
    else
        row_activity_serial(A, x, r);
}

void axpy_serial(double t, std::span<const double> w, std::span<double> x) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) x[i] -= t * w[i];
}

void axpy_omp(double t, std::span<const double> w, std::span<double> x) {
#ifdef _OPENMP
    const long n = static_cast<long>(x.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) x[i] -= t * w[i];
#else
    axpy_serial(t, w, x);
#endif
}

void axpy(double t, std::span<const double> w, std::span<double> x) {
    if (parallel_enabled() && x.size() >= kParallelCutoff)
        axpy_omp(t, w, x);
    else
        axpy_serial(t, w, x);
}

int argmax_scored(std::span<const double> score, double floor) {
    int best = -1;
    double best_v = floor;
    const int n = static_cast<int>(score.size());
    for (int j = 0; j < n; ++j) {
        if (score[j] > best_v) {
            best_v = score[j];
            best = j;
        }
    }
    return best;
}

} // namespace shems::kern
