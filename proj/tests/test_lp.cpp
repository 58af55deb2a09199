#include <gtest/gtest.h>

#include <limits>

#include "shems/lp.hpp"
#include "shems/model.hpp"
#include "shems/types.hpp"

using namespace shems;
using lp::SolveStatus;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

MilpInstance single_var_lp() {
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Continuous, 0, kInf, 1.0);
    const int r = b.add_row("cap", RowSense::LE, 3.0);
    b.set_coef(r, x, 1.0);
    return b.finalize();
}
} // namespace

TEST(SolveLp, OneVariable) {
    const auto res = lp::solve_lp(single_var_lp(), {});
    ASSERT_EQ(res.report.status, SolveStatus::Optimal);
    EXPECT_NEAR(res.objective, 3.0, 1e-9);
    EXPECT_NEAR(res.values[0], 3.0, 1e-9);
}

TEST(SolveLp, DegenerateOptimumObjectiveOnly) {
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Continuous, 0, kInf, 1.0);
    const int y = b.add_column("y", VarKind::Continuous, 0, kInf, 1.0);
    const int r = b.add_row("sum", RowSense::LE, 1.0);
    b.set_coef(r, x, 1.0);
    b.set_coef(r, y, 1.0);
    const auto res = lp::solve_lp(b.finalize(), {});
    ASSERT_EQ(res.report.status, SolveStatus::Optimal);
    EXPECT_NEAR(res.objective, 1.0, 1e-9);
}

TEST(SolveLp, InfeasibleDetected) {
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Continuous, 0, 1.0, 1.0);
    const int r = b.add_row("need", RowSense::GE, 2.0);
    b.set_coef(r, x, 1.0);
    const auto res = lp::solve_lp(b.finalize(), {});
    EXPECT_EQ(res.report.status, SolveStatus::Infeasible);
}

TEST(SolveLp, UnboundedDetected) {
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Continuous, 0, kInf, 1.0);
    const int y = b.add_column("y", VarKind::Continuous, 0, kInf, 0.0);
    const int r = b.add_row("tie", RowSense::EQ, 0.0);
    b.set_coef(r, x, 1.0);
    b.set_coef(r, y, -1.0);
    const auto res = lp::solve_lp(b.finalize(), {});
    EXPECT_EQ(res.report.status, SolveStatus::Unbounded);
}

TEST(SolveLp, EqualityAndRanges) {
    // max 2x + y  s.t.  x + y = 4,  x - y >= -2,  x <= 3, y <= 5
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Continuous, 0, 3.0, 2.0);
    const int y = b.add_column("y", VarKind::Continuous, 0, 5.0, 1.0);
    int r = b.add_row("sum", RowSense::EQ, 4.0);
    b.set_coef(r, x, 1.0);
    b.set_coef(r, y, 1.0);
    r = b.add_row("diff", RowSense::GE, -2.0);
    b.set_coef(r, x, 1.0);
    b.set_coef(r, y, -1.0);
    const auto res = lp::solve_lp(b.finalize(), {});
    ASSERT_EQ(res.report.status, SolveStatus::Optimal);
    EXPECT_NEAR(res.objective, 7.0, 1e-9);  // x=3, y=1
    EXPECT_NEAR(res.values[0], 3.0, 1e-9);
    EXPECT_NEAR(res.values[1], 1.0, 1e-9);
}

TEST(SolveLp, FreeVariable) {
    // max -|x| style: min x via free var bounded by rows
    InstanceBuilder b;
    const int x = b.add_column("x", VarKind::Continuous, -kInf, kInf, -1.0);
    const int r = b.add_row("floor", RowSense::GE, -7.0);
    b.set_coef(r, x, 1.0);
    const auto res = lp::solve_lp(b.finalize(), {});
    ASSERT_EQ(res.report.status, SolveStatus::Optimal);
    EXPECT_NEAR(res.values[0], -7.0, 1e-9);
    EXPECT_NEAR(res.objective, 7.0, 1e-9);
}

TEST(SolveLp, HouseholdSingleHourRelaxation) {
    // One sunny hour: PV 2 kWh, demand 1 kWh, no thermal demand, battery off.
    // The surplus goes to the grid at p_sell = 0.1, so the optimum is 0.1.
    TechSpecs specs;
    TimeSeriesData data;
    data.d_e = {1.0};
    data.g_e = {2.0};
    data.d_fh = {0.0};
    data.d_hw = {0.0};
    data.t_outside = {20.0};
    const auto derived = derive_params(specs, data);
    ScenarioConfig config;
    config.battery_enabled = false;
    const SystemState initial{0.0, 21.0, 100.0};
    const auto inst = build_model(specs, data, derived, config, initial, 1);
    const auto res = lp::solve_lp(inst, {});
    ASSERT_EQ(res.report.status, SolveStatus::Optimal);
    EXPECT_NEAR(res.objective, 0.1, 1e-9);
}

TEST(SolveLp, DeterministicRepeat) {
    TechSpecs specs;
    TimeSeriesData data;
    data.d_e = {0.4, 1.2, 0.6};
    data.g_e = {0.0, 3.5, 1.0};
    data.d_fh = {1.0, 0.2, 0.8};
    data.d_hw = {0.3, 0.0, 0.6};
    data.t_outside = {-2.0, 1.0, 4.0};
    const auto derived = derive_params(specs, data);
    const auto inst = build_model(specs, data, derived, {}, {0.0, 21.0, 100.0}, 3);
    const auto a = lp::solve_lp(inst, {});
    const auto b = lp::solve_lp(inst, {});
    ASSERT_EQ(a.report.status, SolveStatus::Optimal);
    ASSERT_EQ(b.report.status, SolveStatus::Optimal);
    EXPECT_EQ(a.objective, b.objective);  // bit-identical
    ASSERT_EQ(a.values.size(), b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        EXPECT_EQ(a.values[i], b.values[i]);
}

TEST(SolveLp, RejectsBadOptions) {
    lp::SolveOptions opt;
    opt.feasibility_tol = 0.0;
    EXPECT_THROW(lp::solve_lp(single_var_lp(), opt), validation_error);
    lp::SolveOptions opt2;
    opt2.rel_mip_gap = -1.0;
    EXPECT_THROW(lp::solve_lp(single_var_lp(), opt2), validation_error);
}
