#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

#include "shems/kernels.hpp"

namespace shems::lp::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-8;
constexpr double kEtaDropTol = 1e-12;
constexpr double kRatioSlack = 1e-9;

double pow2_scale(double maxabs) {
    if (maxabs <= 0.0 || !std::isfinite(maxabs)) return 1.0;
    double e = std::round(std::log2(maxabs));
    e = std::clamp(e, -30.0, 30.0);
    return std::exp2(-e);
}

} // namespace

Simplex::Simplex(const MilpInstance& inst, const SolveOptions& opts)
    : inst_(inst), opts_(opts) {
    m_ = inst.n_rows();
    n_ = inst.n_cols();
    ntot_ = n_ + m_;
    build_scaled(inst);
    state_.assign(ntot_, static_cast<std::uint8_t>(VState::AtLower));
    pos_of_.assign(ntot_, -1);
    work_y_.resize(m_);
    work_w_.resize(m_);
    work_d_.assign(ntot_, 0.0);
    work_score_.assign(ntot_, 0.0);
    active_.assign(ntot_, 0);
}

void Simplex::build_scaled(const MilpInstance& inst) {
    row_scale_.assign(m_, 1.0);
    col_scale_.assign(n_, 1.0);

    const auto csr = inst.csr();
    for (int i = 0; i < m_; ++i) {
        double mx = 0.0;
        for (int k = csr.row_start[i]; k < csr.row_start[i + 1]; ++k)
            mx = std::max(mx, std::abs(csr.value[k]));
        row_scale_[i] = pow2_scale(mx);
    }
    const auto csc = inst.csc();
    for (int j = 0; j < n_; ++j) {
        double mx = 0.0;
        for (int k = csc.col_start[j]; k < csc.col_start[j + 1]; ++k)
            mx = std::max(mx, std::abs(csc.value[k] * row_scale_[csc.row_idx[k]]));
        col_scale_[j] = pow2_scale(mx);
    }

    // scaled CSC including one slack column per row
    col_start_.assign(ntot_ + 1, 0);
    const std::size_t nnz = inst.coef_val.size() + static_cast<std::size_t>(m_);
    row_idx_.clear();
    val_.clear();
    row_idx_.reserve(nnz);
    val_.reserve(nnz);
    for (int j = 0; j < n_; ++j) {
        for (int k = csc.col_start[j]; k < csc.col_start[j + 1]; ++k) {
            row_idx_.push_back(csc.row_idx[k]);
            val_.push_back(csc.value[k] * row_scale_[csc.row_idx[k]] * col_scale_[j]);
        }
        col_start_[j + 1] = static_cast<int>(row_idx_.size());
    }
    for (int i = 0; i < m_; ++i) {
        row_idx_.push_back(i);
        val_.push_back(1.0);
        col_start_[n_ + i + 1] = static_cast<int>(row_idx_.size());
    }

    rhs_.resize(m_);
    for (int i = 0; i < m_; ++i) rhs_[i] = inst.rows[i].rhs * row_scale_[i];

    lo_.assign(ntot_, 0.0);
    up_.assign(ntot_, 0.0);
    cobj_.assign(ntot_, 0.0);
    for (int j = 0; j < n_; ++j) {
        const Column& c = inst.cols[j];
        lo_[j] = std::isfinite(c.lower) ? c.lower / col_scale_[j] : c.lower;
        up_[j] = std::isfinite(c.upper) ? c.upper / col_scale_[j] : c.upper;
        cobj_[j] = c.obj * col_scale_[j];
    }
    for (int i = 0; i < m_; ++i) {
        const int j = n_ + i;
        switch (inst.rows[i].sense) {
            case RowSense::LE: lo_[j] = 0.0; up_[j] = kInf; break;
            case RowSense::EQ: lo_[j] = 0.0; up_[j] = 0.0; break;
            case RowSense::GE: lo_[j] = -kInf; up_[j] = 0.0; break;
        }
    }
}

void Simplex::set_bounds(int col, double lower, double upper) {
    lo_[col] = std::isfinite(lower) ? lower / col_scale_[col] : lower;
    up_[col] = std::isfinite(upper) ? upper / col_scale_[col] : upper;
}

void Simplex::reset_bounds() {
    for (int j = 0; j < n_; ++j) {
        const Column& c = inst_.cols[j];
        lo_[j] = std::isfinite(c.lower) ? c.lower / col_scale_[j] : c.lower;
        up_[j] = std::isfinite(c.upper) ? c.upper / col_scale_[j] : c.upper;
    }
}

Simplex::BasisSnapshot Simplex::snapshot() const {
    return BasisSnapshot{basic_, state_};
}

void Simplex::restore(const BasisSnapshot& snap) {
    basic_ = snap.basic;
    state_ = snap.state;
    pos_of_.assign(ntot_, -1);
    for (int p = 0; p < m_; ++p) pos_of_[basic_[p]] = p;
}

void Simplex::init_basis_slack() {
    basic_.resize(m_);
    pos_of_.assign(ntot_, -1);
    for (int i = 0; i < m_; ++i) {
        basic_[i] = n_ + i;
        pos_of_[n_ + i] = i;
    }
    for (int j = 0; j < ntot_; ++j) {
        if (pos_of_[j] >= 0) {
            state_[j] = static_cast<std::uint8_t>(VState::Basic);
        } else if (std::isfinite(lo_[j])) {
            state_[j] = static_cast<std::uint8_t>(VState::AtLower);
        } else if (std::isfinite(up_[j])) {
            state_[j] = static_cast<std::uint8_t>(VState::AtUpper);
        } else {
            state_[j] = static_cast<std::uint8_t>(VState::FreeZero);
        }
    }
}

void Simplex::init_basis_from_hint() {
    init_basis_slack();
    if (inst_.basis_hint.empty()) return;
    for (int i = 0; i < m_; ++i) {
        const int c = inst_.basis_hint[i];
        if (c < 0 || c >= n_ || pos_of_[c] >= 0) continue;
        const int old = basic_[i];
        state_[old] = static_cast<std::uint8_t>(
            std::isfinite(lo_[old]) ? VState::AtLower
                                    : (std::isfinite(up_[old]) ? VState::AtUpper
                                                               : VState::FreeZero));
        pos_of_[old] = -1;
        basic_[i] = c;
        pos_of_[c] = i;
        state_[c] = static_cast<std::uint8_t>(VState::Basic);
    }
}

bool Simplex::factorize() {
    etas_.clear();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(m_) * 4);
    for (int p = 0; p < m_; ++p) {
        const int j = basic_[p];
        for (int k = col_start_[j]; k < col_start_[j + 1]; ++k)
            trips.emplace_back(row_idx_[k], p, val_[k]);
    }
    bmat_.resize(m_, m_);
    bmat_.setFromTriplets(trips.begin(), trips.end());
    bmat_.makeCompressed();
    lu_.analyzePattern(bmat_);
    lu_.factorize(bmat_);
    return lu_.info() == Eigen::Success;
}

double Simplex::var_value(int j) const {
    switch (static_cast<VState>(state_[j])) {
        case VState::Basic: return xb_[pos_of_[j]];
        case VState::AtLower: return lo_[j];
        case VState::AtUpper: return up_[j];
        case VState::FreeZero: return 0.0;
    }
    return 0.0;
}

void Simplex::compute_xb() {
    std::vector<double> r = rhs_;
    for (int j = 0; j < ntot_; ++j) {
        if (state_[j] == static_cast<std::uint8_t>(VState::Basic)) continue;
        const double v = var_value(j);
        if (v == 0.0) continue;
        for (int k = col_start_[j]; k < col_start_[j + 1]; ++k)
            r[row_idx_[k]] -= val_[k] * v;
    }
    ftran(r);
    xb_ = std::move(r);
}

void Simplex::ftran(std::vector<double>& v) {
    Eigen::Map<Eigen::VectorXd> mv(v.data(), m_);
    Eigen::VectorXd out = lu_.solve(mv);
    mv = out;
    for (const Eta& e : etas_) {
        const double t = v[e.r] / e.pivot;
        v[e.r] = t;
        if (t == 0.0) continue;
        const std::size_t cnt = e.idx.size();
        for (std::size_t k = 0; k < cnt; ++k) v[e.idx[k]] -= e.val[k] * t;
    }
}

void Simplex::btran(std::vector<double>& v) {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
        const Eta& e = *it;
        double s = v[e.r];
        const std::size_t cnt = e.idx.size();
        for (std::size_t k = 0; k < cnt; ++k) s -= e.val[k] * v[e.idx[k]];
        v[e.r] = s / e.pivot;
    }
    Eigen::Map<Eigen::VectorXd> mv(v.data(), m_);
    Eigen::VectorXd out = lu_.transpose().solve(mv);
    mv = out;
}

double Simplex::infeasibility(int pos, int j) const {
    const double x = xb_[pos];
    if (x < lo_[j]) return lo_[j] - x;
    if (x > up_[j]) return x - up_[j];
    return 0.0;
}

SolveStatus Simplex::run(bool phase1) {
    const double ftol = opts_.feasibility_tol;
    const double dtol = 1e-9;
    const long iter_cap = 20000 + 200L * m_;
    long stall = 0;
    const long stall_limit = std::max<long>(1000, m_);
    long local_iters = 0;

    std::vector<double> chat(ntot_, 0.0);

    while (true) {
        if (static_cast<int>(etas_.size()) >= refactor_interval_) {
            if (!factorize())
                throw numeric_error("simplex: basis became singular");
            compute_xb();
        }

        const double* cost = cobj_.data();
        double total_infeas = 0.0;
        if (phase1) {
            std::fill(chat.begin(), chat.end(), 0.0);
            for (int p = 0; p < m_; ++p) {
                const int j = basic_[p];
                const double x = xb_[p];
                if (x < lo_[j] - ftol) {
                    chat[j] = 1.0;  // increase to reduce violation
                    total_infeas += lo_[j] - x;
                } else if (x > up_[j] + ftol) {
                    chat[j] = -1.0;
                    total_infeas += x - up_[j];
                }
            }
            if (total_infeas <= ftol)
                return SolveStatus::Optimal;  // phase 1 done
            cost = chat.data();
        }

        // y = B^-T c_B
        for (int p = 0; p < m_; ++p) work_y_[p] = cost[basic_[p]];
        btran(work_y_);

        // reduced costs of movable nonbasic columns
        for (int j = 0; j < ntot_; ++j)
            active_[j] =
                state_[j] != static_cast<std::uint8_t>(VState::Basic) &&
                lo_[j] < up_[j];
        kern::CscView A{col_start_, row_idx_, val_, m_, ntot_};
        kern::price_columns(A, std::span<const double>(cost, ntot_), work_y_,
                            active_, work_d_);

        int q = -1;
        int dir = 0;
        if (!bland_) {
            for (int j = 0; j < ntot_; ++j) {
                double s = 0.0;
                if (active_[j]) {
                    const auto st = static_cast<VState>(state_[j]);
                    if (st == VState::AtLower) s = work_d_[j];
                    else if (st == VState::AtUpper) s = -work_d_[j];
                    else s = std::abs(work_d_[j]);
                }
                work_score_[j] = s;
            }
            q = kern::argmax_scored(work_score_, dtol);
        } else {
            for (int j = 0; j < ntot_; ++j) {
                if (!active_[j]) continue;
                const auto st = static_cast<VState>(state_[j]);
                const double s = st == VState::AtLower ? work_d_[j]
                                : st == VState::AtUpper ? -work_d_[j]
                                                        : std::abs(work_d_[j]);
                if (s > dtol) { q = j; break; }
            }
        }
        if (q < 0) {
            if (!phase1) return SolveStatus::Optimal;
            // no direction reduces the remaining infeasibility; accept
            // near-feasible points, certify infeasibility otherwise
            const double relaxed =
                ftol * (1.0 + std::sqrt(static_cast<double>(m_)));
            return total_infeas <= relaxed ? SolveStatus::Optimal
                                           : SolveStatus::Infeasible;
        }

        {
            const auto st = static_cast<VState>(state_[q]);
            if (st == VState::AtUpper) dir = -1;
            else if (st == VState::FreeZero) dir = work_d_[q] > 0 ? 1 : -1;
            else dir = 1;
        }

        // w = B^-1 a_q
        std::fill(work_w_.begin(), work_w_.end(), 0.0);
        for (int k = col_start_[q]; k < col_start_[q + 1]; ++k)
            work_w_[row_idx_[k]] = val_[k];
        ftran(work_w_);

        // ratio test: x_B(t) = x_B - t*dir*w, entering moves t*dir from its bound
        const double t_own = up_[q] - lo_[q];  // +inf when unbounded range
        double t_min = std::isfinite(t_own) ? t_own : kInf;
        bool own_blocks = std::isfinite(t_own);
        for (int p = 0; p < m_; ++p) {
            const double wi = work_w_[p];
            if (std::abs(wi) <= kPivotTol) continue;
            const int j = basic_[p];
            const double rate = -dir * wi;
            const double x = xb_[p];
            double target;
            if (rate < 0.0) {
                if (phase1 && x > up_[j] + ftol) target = up_[j];
                else if (phase1 && x < lo_[j] - ftol) continue;
                else if (!std::isfinite(lo_[j])) continue;
                else target = lo_[j];
            } else {
                if (phase1 && x < lo_[j] - ftol) target = lo_[j];
                else if (phase1 && x > up_[j] + ftol) continue;
                else if (!std::isfinite(up_[j])) continue;
                else target = up_[j];
            }
            double t = (target - x) / rate;
            if (t < 0.0) t = 0.0;
            if (t < t_min) t_min = t;
        }

        if (!std::isfinite(t_min)) {
            if (phase1)
                throw numeric_error("simplex: phase 1 direction unbounded");
            return SolveStatus::Unbounded;
        }

        // choose the blocking row: among candidates within slack of t_min
        // take the largest pivot magnitude (Bland: lowest variable index)
        int r_pos = -1;
        int hit = 0;
        double best_piv = 0.0;
        int best_idx = ntot_;
        const double slack = t_min + kRatioSlack * (1.0 + t_min);
        for (int p = 0; p < m_; ++p) {
            const double wi = work_w_[p];
            if (std::abs(wi) <= kPivotTol) continue;
            const int j = basic_[p];
            const double rate = -dir * wi;
            const double x = xb_[p];
            double target;
            int which;
            if (rate < 0.0) {
                if (phase1 && x > up_[j] + ftol) { target = up_[j]; which = 1; }
                else if (phase1 && x < lo_[j] - ftol) continue;
                else if (!std::isfinite(lo_[j])) continue;
                else { target = lo_[j]; which = -1; }
            } else {
                if (phase1 && x < lo_[j] - ftol) { target = lo_[j]; which = -1; }
                else if (phase1 && x > up_[j] + ftol) continue;
                else if (!std::isfinite(up_[j])) continue;
                else { target = up_[j]; which = 1; }
            }
            double t = (target - x) / rate;
            if (t < 0.0) t = 0.0;
            if (t > slack) continue;
            if (!bland_) {
                if (std::abs(wi) > best_piv ||
                    (std::abs(wi) == best_piv && r_pos >= 0 && p < r_pos)) {
                    best_piv = std::abs(wi);
                    r_pos = p;
                    hit = which;
                }
            } else {
                if (j < best_idx) {
                    best_idx = j;
                    r_pos = p;
                    hit = which;
                }
            }
        }

        const bool flip = own_blocks && (r_pos < 0 || t_own <= t_min + kRatioSlack);
        double step = flip ? t_own : 0.0;
        if (!flip) {
            const int j = basic_[r_pos];
            const double rate = -dir * work_w_[r_pos];
            const double target = hit < 0 ? lo_[j] : up_[j];
            step = std::max(0.0, (target - xb_[r_pos]) / rate);
        }

        const double start_val = var_value(q);
        kern::axpy(step * dir, work_w_, xb_);

        if (flip) {
            state_[q] = static_cast<std::uint8_t>(dir > 0 ? VState::AtUpper
                                                          : VState::AtLower);
        } else {
            const int leave = basic_[r_pos];
            state_[leave] = static_cast<std::uint8_t>(
                hit < 0 ? VState::AtLower : VState::AtUpper);
            pos_of_[leave] = -1;
            basic_[r_pos] = q;
            pos_of_[q] = r_pos;
            state_[q] = static_cast<std::uint8_t>(VState::Basic);
            xb_[r_pos] = start_val + dir * step;

            Eta e;
            e.r = r_pos;
            e.pivot = work_w_[r_pos];
            for (int p = 0; p < m_; ++p)
                if (p != r_pos && std::abs(work_w_[p]) > kEtaDropTol) {
                    e.idx.push_back(p);
                    e.val.push_back(work_w_[p]);
                }
            etas_.push_back(std::move(e));
        }

        ++iters_;
        ++local_iters;
        if (step <= 1e-10) {
            if (++stall > stall_limit) bland_ = true;
        } else {
            stall = 0;
        }
        if (local_iters > iter_cap)
            throw numeric_error(fmt::format(
                "simplex: iteration cap {} exceeded (m={}, n={})", iter_cap,
                m_, n_));
    }
}

SolveStatus Simplex::solve_once(bool warm) {
    if (warm && has_basis()) {
        if (!factorize()) {
            init_basis_from_hint();
            if (!factorize()) {
                init_basis_slack();
                if (!factorize())
                    throw numeric_error("simplex: slack basis singular");
            }
        }
    } else {
        init_basis_from_hint();
        if (!factorize()) {
            init_basis_slack();
            if (!factorize())
                throw numeric_error("simplex: slack basis singular");
        }
    }
    compute_xb();
    SolveStatus st = run(true);
    if (st != SolveStatus::Optimal) return st;  // Infeasible
    st = run(false);
    if (st != SolveStatus::Optimal) return st;  // Unbounded
    finalize_solution();
    return SolveStatus::Optimal;
}

void Simplex::finalize_solution() {
    x_orig_.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j) x_orig_[j] = var_value(j) * col_scale_[j];
    obj_ = 0.0;
    for (int j = 0; j < n_; ++j) obj_ += inst_.cols[j].obj * x_orig_[j];
}

bool Simplex::verify() const {
    const double ftol = opts_.feasibility_tol;
    std::vector<double> act(m_, 0.0);
    kern::row_activity(inst_.csr(), x_orig_, act);
    for (int i = 0; i < m_; ++i) {
        const Row& row = inst_.rows[i];
        const double tol = ftol * (1.0 + std::abs(row.rhs));
        const double diff = act[i] - row.rhs;
        if (row.sense == RowSense::EQ && std::abs(diff) > tol) return false;
        if (row.sense == RowSense::LE && diff > tol) return false;
        if (row.sense == RowSense::GE && diff < -tol) return false;
    }
    for (int j = 0; j < n_; ++j) {
        const double lo = lo_[j] * col_scale_[j];
        const double up = std::isfinite(up_[j]) ? up_[j] * col_scale_[j] : kInf;
        const double tol = ftol * (1.0 + std::abs(x_orig_[j]));
        if (std::isfinite(lo) && x_orig_[j] < lo - tol) return false;
        if (std::isfinite(up) && x_orig_[j] > up + tol) return false;
    }
    return true;
}

SolveStatus Simplex::optimize(bool warm) {
    struct Attempt {
        bool warm;
        bool bland;
        int refactor;
    };
    const Attempt plan[] = {
        {warm, false, 64},
        {false, false, 64},
        {false, true, 16},
    };
    std::string last_issue;
    for (const Attempt& a : plan) {
        if (a.warm && !has_basis()) continue;
        bland_ = a.bland;
        refactor_interval_ = a.refactor;
        try {
            const SolveStatus st = solve_once(a.warm);
            if (st != SolveStatus::Optimal) return st;
            if (verify()) return st;
            last_issue = "residual verification failed";
        } catch (const numeric_error& e) {
            last_issue = e.what();
        }
    }
    throw numeric_error("simplex: " + last_issue);
}

} // namespace shems::lp::detail
