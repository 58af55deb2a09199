#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "shems/model.hpp"

namespace shems::lp {

enum class SolveStatus { Optimal, GapReached, Infeasible, Unbounded, LimitHit };

const char* to_string(SolveStatus s);

struct SolveOptions {
    double rel_mip_gap = 0.005;
    double feasibility_tol = 1e-6;
    double integrality_tol = 1e-6;
    long node_limit = 0;      ///< branch-and-bound nodes, 0 = unlimited
    double time_limit = 0.0;  ///< seconds, 0 = none (keeps runs deterministic)

    void validate() const;
};

struct SolveReport {
    SolveStatus status = SolveStatus::Infeasible;
    double incumbent = std::numeric_limits<double>::quiet_NaN();
    double best_bound = std::numeric_limits<double>::quiet_NaN();
    double gap = 0.0;          ///< (best_bound - incumbent) / max(|inc|,|bnd|,1e-9)
    long nodes = 0;
    long iterations = 0;       ///< simplex iterations across all nodes
    double wall_seconds = 0.0;
};

struct LpResult {
    std::vector<double> values;  ///< structural column values, original units
    double objective = 0.0;
    SolveReport report;
};

/// Solves the LP relaxation of an instance (binary columns are treated as
/// continuous within their bounds). Bounded revised simplex, Dantzig pricing
/// with a Bland's-rule fallback after stall detection, product-form basis
/// updates over a sparse LU factorization, power-of-two equilibration. The
/// returned point is re-verified against the original rows; a verification
/// failure raises numeric_error.
LpResult solve_lp(const MilpInstance& instance, const SolveOptions& options);

struct MilpResult {
    std::optional<Solution> solution;  ///< empty when no incumbent was found
    SolveReport report;
};

/// Best-first branch and bound over the binary columns: branches on the most
/// fractional binary (ties to the lowest column index), explores nodes in
/// best-bound order, terminates at the requested relative gap. Deterministic
/// for identical inputs.
MilpResult solve_milp(const MilpInstance& instance, const SolveOptions& options);

} // namespace shems::lp
