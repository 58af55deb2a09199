#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle_enum.hpp"
#include "shems/lp.hpp"
#include "shems/model.hpp"
#include "shems/types.hpp"

using namespace shems;
using lp::SolveStatus;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

lp::SolveOptions exact_options() {
    lp::SolveOptions o;
    o.rel_mip_gap = 0.0;
    return o;
}

struct RandomInstance {
    MilpInstance inst;
    int horizon;
};

RandomInstance random_household(std::mt19937_64& rng, int max_hours) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const int hours = 3 + static_cast<int>(u01(rng) * (max_hours - 3 + 0.999));
    TimeSeriesData data;
    for (int h = 0; h < hours; ++h) {
        data.d_e.push_back(1.5 * u01(rng));
        data.g_e.push_back(6.0 * u01(rng));
        data.d_fh.push_back(2.0 * u01(rng));
        data.d_hw.push_back(1.0 * u01(rng));
        data.t_outside.push_back(-10.0 + 45.0 * u01(rng));
    }
    TechSpecs specs;
    ScenarioConfig config;
    config.battery_enabled = u01(rng) < 0.7;
    config.use_b_switch = u01(rng) < 0.3;
    SystemState init;
    init.soc_b = config.battery_enabled ? 13.5 * u01(rng) : 0.0;
    init.t_fh = 18.0 + 6.0 * u01(rng);
    init.v_hw = 40.0 + 120.0 * u01(rng);
    const auto derived = derive_params(specs, data);
    return {build_model(specs, data, derived, config, init, hours), hours};
}

} // namespace

TEST(SolveMilp, RoundingInfeasibleRelaxation) {
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Binary, 0, 1, 1.0);
    const int r = b.add_row("cap", RowSense::LE, 0.5);
    b.set_coef(r, x, 1.0);
    const auto res = lp::solve_milp(b.finalize(), exact_options());
    ASSERT_TRUE(res.solution.has_value());
    EXPECT_NEAR(res.solution->objective, 0.0, 1e-9);
    EXPECT_NEAR(res.solution->values[0], 0.0, 1e-9);
    EXPECT_EQ(res.report.status, SolveStatus::Optimal);
}

TEST(SolveMilp, SmallKnapsack) {
    // max 3a + 4b + 5c  s.t.  2a + 3b + 4c <= 5  -> a=b=1
    InstanceBuilder b;
    const int a = b.add_column("a", VarKind::Binary, 0, 1, 3.0);
    const int bb = b.add_column("b", VarKind::Binary, 0, 1, 4.0);
    const int c = b.add_column("c", VarKind::Binary, 0, 1, 5.0);
    const int r = b.add_row("w", RowSense::LE, 5.0);
    b.set_coef(r, a, 2.0);
    b.set_coef(r, bb, 3.0);
    b.set_coef(r, c, 4.0);
    const auto res = lp::solve_milp(b.finalize(), exact_options());
    ASSERT_TRUE(res.solution.has_value());
    EXPECT_NEAR(res.solution->objective, 7.0, 1e-9);
}

TEST(SolveMilp, MixedIntegerContinuous) {
    // max 2x + y, x binary, 0 <= y <= 10, x + y <= 1.5
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Binary, 0, 1, 2.0);
    const int y = b.add_column("y", VarKind::Continuous, 0, 10.0, 1.0);
    const int r = b.add_row("cap", RowSense::LE, 1.5);
    b.set_coef(r, x, 1.0);
    b.set_coef(r, y, 1.0);
    const auto res = lp::solve_milp(b.finalize(), exact_options());
    ASSERT_TRUE(res.solution.has_value());
    EXPECT_NEAR(res.solution->objective, 2.5, 1e-9);  // x=1, y=0.5
}

TEST(SolveMilp, InfeasibleMilp) {
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Binary, 0, 1, 1.0);
    int r = b.add_row("lo", RowSense::GE, 0.4);
    b.set_coef(r, x, 1.0);
    r = b.add_row("hi", RowSense::LE, 0.6);
    b.set_coef(r, x, 1.0);
    const auto res = lp::solve_milp(b.finalize(), exact_options());
    EXPECT_FALSE(res.solution.has_value());
    EXPECT_EQ(res.report.status, SolveStatus::Infeasible);
}

TEST(SolveMilp, PureLpPassThrough) {
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Continuous, 0, kInf, 1.0);
    const int r = b.add_row("cap", RowSense::LE, 2.5);
    b.set_coef(r, x, 1.0);
    const auto res = lp::solve_milp(b.finalize(), exact_options());
    ASSERT_TRUE(res.solution.has_value());
    EXPECT_NEAR(res.solution->objective, 2.5, 1e-9);
}

TEST(SolveMilp, EnumerationOracleSmall) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 6; ++trial) {
        const auto ri = random_household(rng, 4);
        const auto opts = exact_options();
        const auto oracle = oracle::enumerate_binary_optimum(ri.inst, opts);
        const auto res = lp::solve_milp(ri.inst, opts);
        ASSERT_EQ(oracle.feasible, res.solution.has_value())
            << "trial " << trial;
        if (oracle.feasible) {
            const double scale = std::max(1.0, std::abs(oracle.objective));
            EXPECT_NEAR(res.solution->objective, oracle.objective, 1e-6 * scale)
                << "trial " << trial << " hours " << ri.horizon;
        }
    }
}

TEST(SolveMilp, ReportInvariant) {
    std::mt19937_64 rng(77);
    const auto ri = random_household(rng, 5);
    lp::SolveOptions opts;  // default 0.5% gap
    const auto res = lp::solve_milp(ri.inst, opts);
    ASSERT_TRUE(res.solution.has_value());
    const auto& rep = res.report;
    EXPECT_TRUE(rep.status == SolveStatus::Optimal ||
                rep.status == SolveStatus::GapReached);
    EXPECT_LE(rep.incumbent,
              rep.best_bound + opts.rel_mip_gap * std::abs(rep.best_bound) + 1e-7);
    EXPECT_GE(rep.gap, 0.0);
}

TEST(SolveMilp, DeterministicRepeat) {
    std::mt19937_64 rng(99);
    const auto ri = random_household(rng, 5);
    const auto a = lp::solve_milp(ri.inst, {});
    const auto b = lp::solve_milp(ri.inst, {});
    ASSERT_TRUE(a.solution && b.solution);
    EXPECT_EQ(a.solution->objective, b.solution->objective);
    ASSERT_EQ(a.solution->values.size(), b.solution->values.size());
    for (std::size_t i = 0; i < a.solution->values.size(); ++i)
        EXPECT_EQ(a.solution->values[i], b.solution->values[i]);
    EXPECT_EQ(a.report.nodes, b.report.nodes);
}

TEST(SolveMilp, NodeLimitReported) {
    std::mt19937_64 rng(5);
    const auto ri = random_household(rng, 6);
    lp::SolveOptions opts;
    opts.rel_mip_gap = 0.0;
    opts.node_limit = 2;
    const auto res = lp::solve_milp(ri.inst, opts);
    if (res.report.status == SolveStatus::LimitHit)
        EXPECT_GE(res.report.best_bound,
                  res.solution ? res.solution->objective : -1e300);
    else  // solved within two nodes
        EXPECT_TRUE(res.report.status == SolveStatus::Optimal);
}

TEST(PresolveHot, ObjectiveUnchangedWithinGap) {
    // 48-hour profile crossing the guard band so that some Hot binaries are
    // fixed and others stay free
    TimeSeriesData data;
    for (int h = 0; h < 48; ++h) {
        const double tod = 2.0 * M_PI * (h % 24) / 24.0;
        data.d_e.push_back(0.4 + 0.3 * std::sin(tod));
        data.g_e.push_back(std::max(0.0, 5.0 * std::sin(tod - 1.0)));
        data.d_fh.push_back(std::max(0.0, 1.2 - 1.4 * std::sin(tod)));
        data.d_hw.push_back(0.25);
        data.t_outside.push_back(14.0 + 16.0 * std::sin(tod - 2.0));
    }
    TechSpecs specs;
    const auto derived = derive_params(specs, data);
    const auto inst = build_model(specs, data, derived, {}, {0.0, 21.0, 100.0}, 48);
    const auto fixed = presolve_fix_hot(inst, data, specs);

    int n_fixed = 0;
    for (int h = 1; h <= 48; ++h) {
        const auto& c = fixed.cols[fixed.col_of(VarSym::Hot, h)];
        if (c.lower == c.upper) ++n_fixed;
    }
    EXPECT_GT(n_fixed, 0);

    lp::SolveOptions opts;  // 0.5% default gap
    const auto plain = lp::solve_milp(inst, opts);
    const auto pre = lp::solve_milp(fixed, opts);
    ASSERT_TRUE(plain.solution && pre.solution);
    const double scale = std::max(1.0, std::abs(plain.solution->objective));
    EXPECT_NEAR(plain.solution->objective, pre.solution->objective,
                2.0 * opts.rel_mip_gap * scale);
}
