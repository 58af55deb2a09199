#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "shems/types.hpp"

using namespace shems;

namespace {

TimeSeriesData constant_data(int hours, double t_out) {
    TimeSeriesData d;
    d.d_e.assign(hours, 0.5);
    d.g_e.assign(hours, 1.0);
    d.d_fh.assign(hours, 0.3);
    d.d_hw.assign(hours, 0.2);
    d.t_outside.assign(hours, t_out);
    return d;
}

} // namespace

TEST(Cop, SpotValues) {
    EXPECT_DOUBLE_EQ(compute_cop(30.0, 30.0), 5.8);
    EXPECT_NEAR(compute_cop(45.0, -5.0), 5.8 - 50.0 / 14.0, 1e-12);
    EXPECT_DOUBLE_EQ(compute_cop(30.0, -60.0), 0.0);
}

TEST(Cop, RejectsNonFinite) {
    EXPECT_THROW(compute_cop(std::nan(""), 0.0), validation_error);
    EXPECT_THROW(compute_cop(30.0, INFINITY), validation_error);
}

TEST(Cop, SymmetricAndMonotone) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> gap(0.0, 100.0);
    double prev = 5.8;
    for (double g = 0.0; g <= 100.0; g += 0.7) {
        const double up = compute_cop(30.0, 30.0 + g);
        const double dn = compute_cop(30.0, 30.0 - g);
        EXPECT_DOUBLE_EQ(up, dn);
        EXPECT_LE(up, prev + 1e-12);
        prev = up;
    }
    // zero at and beyond a gap of 14 * 5.8 = 81.2
    EXPECT_NEAR(compute_cop(0.0, 81.2), 0.0, 1e-12);
    EXPECT_DOUBLE_EQ(compute_cop(0.0, 90.0), 0.0);
    (void)rng;
    (void)gap;
}

TEST(DeriveParams, ConversionFactors) {
    TechSpecs specs;
    const auto d = derive_params(specs, constant_data(4, 10.0));
    EXPECT_DOUBLE_EQ(d.conv_fh, 0.15);  // 3600 / (2400 * 10 * 1)
    EXPECT_NEAR(d.conv_hw, 19.178, 1e-3);
    EXPECT_NEAR(d.conv_hw, 3600.0 / (997.0 * 45.0 * 4.184 / 1000.0), 1e-15);
}

TEST(DeriveParams, CopSeries) {
    TechSpecs specs;
    const auto d = derive_params(specs, constant_data(6, 30.0));
    ASSERT_EQ(d.cop_fh.size(), 6u);
    for (double c : d.cop_fh) EXPECT_DOUBLE_EQ(c, 5.8);
    for (double c : d.cop_hw) EXPECT_NEAR(c, 5.8 - 15.0 / 14.0, 1e-12);
}

TEST(DeriveParams, FloorCopDominatesBelowMidpoint) {
    TechSpecs specs;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> t(-25.0, 37.5);
    TimeSeriesData data = constant_data(200, 0.0);
    for (auto& v : data.t_outside) v = t(rng);
    const auto d = derive_params(specs, data);
    for (std::size_t i = 0; i < d.cop_fh.size(); ++i)
        EXPECT_GE(d.cop_fh[i], d.cop_hw[i] - 1e-12);
}

TEST(DeriveParams, RejectsBadSpecs) {
    TechSpecs specs;
    specs.v_fh = 0.0;
    EXPECT_THROW(derive_params(specs, constant_data(2, 0.0)), validation_error);
    TechSpecs s2;
    s2.t_hw_supply = -1.0;
    EXPECT_THROW(derive_params(s2, constant_data(2, 0.0)), validation_error);
}

TEST(ComfortCost, Examples) {
    EXPECT_DOUBLE_EQ(comfort_cost(0, 0, 0, 0, 1.0), 0.0);
    EXPECT_DOUBLE_EQ(comfort_cost(1.5, 0, 0, 2.0, 1.0), 3.5);
    EXPECT_DOUBLE_EQ(comfort_cost(1, 1, 1, 1, 2.0), 8.0);
    EXPECT_THROW(comfort_cost(-0.1, 0, 0, 0, 1.0), validation_error);
}

TEST(TimeSeries, Validation) {
    TimeSeriesData d = constant_data(3, 5.0);
    EXPECT_NO_THROW(d.validate());

    TimeSeriesData bad = d;
    bad.g_e.pop_back();
    EXPECT_THROW(bad.validate(), validation_error);

    bad = d;
    bad.d_fh[1] = -0.5;
    EXPECT_THROW(bad.validate(), validation_error);

    bad = d;
    bad.g_e[2] = 99.0;  // above pv_max * 1h
    TechSpecs specs;
    EXPECT_THROW(bad.validate_against(specs), validation_error);
    EXPECT_NO_THROW(d.validate_against(specs));
}

TEST(TimeSeries, Slice) {
    TimeSeriesData d = constant_data(5, 5.0);
    d.d_e = {1, 2, 3, 4, 5};
    const auto s = d.slice(2, 4);
    EXPECT_EQ(s.length(), 3);
    EXPECT_DOUBLE_EQ(s.d_e.front(), 2);
    EXPECT_DOUBLE_EQ(s.d_e.back(), 4);
    EXPECT_THROW(d.slice(0, 2), validation_error);
    EXPECT_THROW(d.slice(4, 6), validation_error);
}

TEST(TechSpecs, Invariants) {
    TechSpecs s;
    EXPECT_NO_THROW(s.validate());
    s.soc_b_min = 20.0;
    EXPECT_THROW(s.validate(), validation_error);

    TechSpecs s2;
    s2.eta_b = 0.0;
    EXPECT_THROW(s2.validate(), validation_error);

    TechSpecs s3;
    s3.t_fh_min = 25.0;
    EXPECT_THROW(s3.validate(), validation_error);

    TechSpecs s4;
    s4.v_hw_min = 200.0;
    EXPECT_THROW(s4.validate(), validation_error);
}
