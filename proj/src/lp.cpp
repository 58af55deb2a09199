#include "shems/lp.hpp"

#include <chrono>

#include "simplex.hpp"

namespace shems::lp {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::GapReached: return "gap_reached";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::LimitHit: return "limit_hit";
    }
    return "unknown";
}

void SolveOptions::validate() const {
    if (rel_mip_gap < 0) throw validation_error("options: rel_mip_gap < 0");
    if (feasibility_tol <= 0 || integrality_tol <= 0)
        throw validation_error("options: tolerances must be positive");
    if (node_limit < 0 || time_limit < 0)
        throw validation_error("options: limits must be >= 0");
}

LpResult solve_lp(const MilpInstance& instance, const SolveOptions& options) {
    options.validate();
    const auto t0 = std::chrono::steady_clock::now();

    detail::Simplex spx(instance, options);
    const SolveStatus st = spx.optimize(false);

    LpResult out;
    out.report.status = st;
    out.report.iterations = spx.iterations();
    if (st == SolveStatus::Optimal) {
        out.values = spx.values();
        out.objective = spx.objective();
        out.report.incumbent = out.objective;
        out.report.best_bound = out.objective;
    }
    out.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return out;
}

} // namespace shems::lp
