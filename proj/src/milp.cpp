#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>

#include "shems/lp.hpp"
#include "simplex.hpp"

namespace shems::lp {

namespace {

double relative_gap(double incumbent, double bound) {
    const double den =
        std::max({std::abs(incumbent), std::abs(bound), 1e-9});
    return (bound - incumbent) / den;
}

struct Node {
    double bound;
    long id;
    std::vector<std::pair<int, double>> fixings;  // (column, value)
    detail::Simplex::BasisSnapshot basis;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound < b.bound;  // max-heap on bound
        return a.id > b.id;                                // then oldest first
    }
};

} // namespace

MilpResult solve_milp(const MilpInstance& instance, const SolveOptions& options) {
    options.validate();
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    };

    std::vector<int> bin_cols;
    for (int j = 0; j < instance.n_cols(); ++j)
        if (instance.cols[j].kind == VarKind::Binary) bin_cols.push_back(j);

    detail::Simplex spx(instance, options);

    MilpResult out;
    out.report.nodes = 0;

    std::optional<Solution> incumbent;
    double inc_obj = -std::numeric_limits<double>::infinity();

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long next_id = 0;

    // improvement threshold: nodes at or below it cannot better the incumbent
    // by more than the requested gap
    auto cutoff = [&] {
        if (!incumbent) return -std::numeric_limits<double>::infinity();
        const double den = std::max({std::abs(inc_obj), 1.0});
        return inc_obj + std::max(options.rel_mip_gap *
                                      std::max(std::abs(inc_obj), 1e-9),
                                  1e-9 * den);
    };

    // most fractional binary, ties to the lowest column index
    auto pick_branch = [&](const std::vector<double>& x) {
        int best = -1;
        double best_frac = options.integrality_tol;
        for (int j : bin_cols) {
            const double v = x[j];
            const double frac = std::abs(v - std::round(v));
            if (frac > best_frac) {
                best_frac = frac;
                best = j;
            }
        }
        return best;
    };

    SolveStatus final_status = SolveStatus::Optimal;
    double best_open_bound = -std::numeric_limits<double>::infinity();
    bool limit_hit = false;

    // root
    {
        const SolveStatus st = spx.optimize(false);
        out.report.nodes = 1;
        if (st == SolveStatus::Unbounded || st == SolveStatus::Infeasible) {
            out.report.status = st;
            out.report.iterations = spx.iterations();
            out.report.wall_seconds = elapsed();
            return out;
        }
        const double obj = spx.objective();
        const int frac = pick_branch(spx.values());
        if (frac < 0) {
            incumbent = extract_solution(instance, spx.values());
            inc_obj = incumbent->objective;
        } else {
            Node n{obj, next_id++, {}, spx.snapshot()};
            n.fixings.reserve(4);
            Node n0 = n, n1 = n;
            n0.id = next_id++;
            n0.fixings.emplace_back(frac, 0.0);
            n1.id = next_id++;
            n1.fixings.emplace_back(frac, 1.0);
            open.push(std::move(n0));
            open.push(std::move(n1));
        }
    }

    while (!open.empty()) {
        best_open_bound = open.top().bound;
        if (incumbent) {
            const double gap = relative_gap(inc_obj, best_open_bound);
            if (best_open_bound <= cutoff() || gap <= options.rel_mip_gap)
                break;
        }
        if (options.node_limit > 0 && out.report.nodes >= options.node_limit) {
            limit_hit = true;
            break;
        }
        if (options.time_limit > 0 && elapsed() > options.time_limit) {
            limit_hit = true;
            break;
        }

        Node node = open.top();
        open.pop();
        ++out.report.nodes;

        spx.reset_bounds();
        for (const auto& [col, v] : node.fixings) spx.set_bounds(col, v, v);
        spx.restore(node.basis);
        const SolveStatus st = spx.optimize(true);
        if (st == SolveStatus::Infeasible) continue;
        if (st == SolveStatus::Unbounded)
            throw numeric_error("branch and bound: child LP unbounded");

        const double obj = spx.objective();
        if (incumbent && obj <= cutoff()) continue;

        const int frac = pick_branch(spx.values());
        if (frac < 0) {
            Solution cand = extract_solution(instance, spx.values());
            if (!incumbent || cand.objective > inc_obj) {
                inc_obj = cand.objective;
                incumbent = std::move(cand);
            }
            continue;
        }

        Node child{obj, 0, node.fixings, spx.snapshot()};
        Node c0 = child, c1 = std::move(child);
        c0.id = next_id++;
        c0.fixings.emplace_back(frac, 0.0);
        c1.id = next_id++;
        c1.fixings.emplace_back(frac, 1.0);
        open.push(std::move(c0));
        open.push(std::move(c1));
    }

    out.report.iterations = spx.iterations();
    out.report.wall_seconds = elapsed();

    if (limit_hit) {
        final_status = SolveStatus::LimitHit;
        out.report.best_bound = std::max(best_open_bound, inc_obj);
    } else if (open.empty()) {
        final_status = incumbent ? SolveStatus::Optimal : SolveStatus::Infeasible;
        out.report.best_bound = incumbent ? inc_obj : best_open_bound;
    } else {
        // stopped by the gap criterion
        out.report.best_bound = best_open_bound;
        const double gap = relative_gap(inc_obj, best_open_bound);
        final_status = gap <= 1e-9 ? SolveStatus::Optimal : SolveStatus::GapReached;
    }
    out.report.status = final_status;
    if (incumbent) {
        out.report.incumbent = inc_obj;
        out.report.gap = std::max(0.0, relative_gap(inc_obj, out.report.best_bound));
        incumbent->mip_gap = out.report.gap;
        incumbent->solve_seconds = out.report.wall_seconds;
        out.solution = std::move(incumbent);
    }
    return out;
}

} // namespace shems::lp
