#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cstdint>
#include <vector>

#include "shems/lp.hpp"
#include "shems/model.hpp"

// Bounded revised simplex over a product-form-of-the-inverse basis: sparse LU
// of the latest reinversion plus one eta vector per pivot since. Maximize
// sense throughout. Used by solve_lp directly and re-entered with bound
// changes by the branch-and-bound driver.

namespace shems::lp::detail {

enum class VState : std::uint8_t { Basic = 0, AtLower, AtUpper, FreeZero };

class Simplex {
public:
    Simplex(const MilpInstance& inst, const SolveOptions& opts);

    /// Replace the bounds of a structural column (original units).
    void set_bounds(int col, double lower, double upper);
    /// Restore all structural bounds from the instance.
    void reset_bounds();

    /// Full solve with escalation: warm start from the current basis when
    /// requested, otherwise (and on any numerical trouble) from the crash or
    /// slack basis, finally with Bland's rule throughout. Throws
    /// numeric_error when every attempt breaks down.
    SolveStatus optimize(bool warm);

    double objective() const { return obj_; }
    const std::vector<double>& values() const { return x_orig_; }
    long iterations() const { return iters_; }

    struct BasisSnapshot {
        std::vector<int> basic;
        std::vector<std::uint8_t> state;
    };
    BasisSnapshot snapshot() const;
    void restore(const BasisSnapshot& snap);
    bool has_basis() const { return !basic_.empty(); }

private:
    struct Eta {
        int r;
        double pivot;
        std::vector<int> idx;
        std::vector<double> val;
    };

    void build_scaled(const MilpInstance& inst);
    void init_basis_from_hint();
    void init_basis_slack();
    bool factorize();          // false when the basis matrix is singular
    void compute_xb();
    void ftran(std::vector<double>& v);
    void btran(std::vector<double>& v);
    double var_value(int j) const;
    double infeasibility(int pos, int j) const;
    SolveStatus run(bool phase1);
    SolveStatus solve_once(bool warm);
    bool verify() const;       // residuals + bounds in original units
    void finalize_solution();

    const MilpInstance& inst_;
    SolveOptions opts_;
    int m_ = 0, n_ = 0, ntot_ = 0;

    // scaled problem
    std::vector<int> col_start_, row_idx_;
    std::vector<double> val_;
    std::vector<double> lo_, up_, cobj_, rhs_;
    std::vector<double> row_scale_, col_scale_;

    // basis
    std::vector<int> basic_;
    std::vector<std::uint8_t> state_;
    std::vector<int> pos_of_;
    std::vector<double> xb_;
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu_;
    Eigen::SparseMatrix<double> bmat_;
    std::vector<Eta> etas_;
    int refactor_interval_ = 64;
    bool bland_ = false;

    // results
    std::vector<double> x_orig_;
    double obj_ = 0.0;
    long iters_ = 0;

    // scratch buffers
    std::vector<double> work_y_, work_w_, work_d_, work_score_;
    std::vector<unsigned char> active_;
};

} // namespace shems::lp::detail
