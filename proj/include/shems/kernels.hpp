#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Data-parallel primitives shared by the solver and analytics. Every kernel
// has a serial reference implementation and an OpenMP variant producing the
// same bits (element-wise parallelism only, no floating-point reductions
// whose order depends on the schedule). kern::set_parallel(false) forces the
// serial path; the bench target compares the two.

namespace shems::kern {

bool parallel_enabled();
void set_parallel(bool on);
int  thread_count();

// Compressed sparse column view of a coefficient matrix.
struct CscView {
    std::span<const int>    col_start;  // size n+1
    std::span<const int>    row_idx;
    std::span<const double> value;
    int n_rows = 0;
    int n_cols = 0;
};

// Compressed sparse row view.
struct CsrView {
    std::span<const int>    row_start;  // size m+1
    std::span<const int>    col_idx;
    std::span<const double> value;
    int n_rows = 0;
    int n_cols = 0;
};

// d[j] = c[j] - sum_k y[row_k] * v_k over column j, for every j with
// active[j] != 0. Inactive entries are left untouched.
void price_columns_serial(const CscView& A, std::span<const double> c,
                          std::span<const double> y,
                          std::span<const unsigned char> active,
                          std::span<double> d);
void price_columns_omp(const CscView& A, std::span<const double> c,
                       std::span<const double> y,
                       std::span<const unsigned char> active,
                       std::span<double> d);
void price_columns(const CscView& A, std::span<const double> c,
                   std::span<const double> y,
                   std::span<const unsigned char> active,
                   std::span<double> d);

// r[i] = sum_j a_ij * x_j per row (CSR traversal).
void row_activity_serial(const CsrView& A, std::span<const double> x,
                         std::span<double> r);
void row_activity_omp(const CsrView& A, std::span<const double> x,
                      std::span<double> r);
void row_activity(const CsrView& A, std::span<const double> x,
                  std::span<double> r);

// x -= t * w
void axpy_serial(double t, std::span<const double> w, std::span<double> x);
void axpy_omp(double t, std::span<const double> w, std::span<double> x);
void axpy(double t, std::span<const double> w, std::span<double> x);

// Index of the largest score (strictly greater wins, ties keep the lowest
// index); -1 when no entry exceeds `floor`. Deterministic for any schedule.
int argmax_scored(std::span<const double> score, double floor);

} // namespace shems::kern
