#include "shems/types.hpp"

#include <cmath>
#include <fmt/format.h>

namespace shems {

void TimeSeriesData::validate() const {
    const std::size_t h = d_e.size();
    if (h == 0) throw validation_error("time series is empty");
    if (g_e.size() != h || d_fh.size() != h || d_hw.size() != h ||
        t_outside.size() != h)
        throw validation_error(fmt::format(
            "time series lengths differ: d_e={} g_e={} d_fh={} d_hw={} t_outside={}",
            d_e.size(), g_e.size(), d_fh.size(), d_hw.size(), t_outside.size()));
    for (std::size_t i = 0; i < h; ++i) {
        if (!std::isfinite(d_e[i]) || !std::isfinite(g_e[i]) ||
            !std::isfinite(d_fh[i]) || !std::isfinite(d_hw[i]) ||
            !std::isfinite(t_outside[i]))
            throw validation_error(
                fmt::format("non-finite value at hour {}", i + 1));
        if (d_e[i] < 0 || g_e[i] < 0 || d_fh[i] < 0 || d_hw[i] < 0)
            throw validation_error(fmt::format(
                "negative demand or generation at hour {}", i + 1));
    }
}

void TimeSeriesData::validate_against(const TechSpecs& specs) const {
    validate();
    for (std::size_t i = 0; i < g_e.size(); ++i)
        if (g_e[i] > specs.pv_max + 1e-9)
            throw validation_error(fmt::format(
                "g_e at hour {} is {:.6g} kWh, above pv_max of {:.6g} kWp * 1h",
                i + 1, g_e[i], specs.pv_max));
}

TimeSeriesData TimeSeriesData::slice(int first, int last) const {
    if (first < 1 || last > length() || first > last)
        throw validation_error(fmt::format(
            "slice [{}, {}] outside data of length {}", first, last, length()));
    auto cut = [&](const std::vector<double>& v) {
        return std::vector<double>(v.begin() + (first - 1), v.begin() + last);
    };
    return TimeSeriesData{cut(d_e), cut(g_e), cut(d_fh), cut(d_hw), cut(t_outside)};
}

void TechSpecs::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw validation_error(std::string("tech specs: ") + what);
    };
    require(pv_max >= 0, "pv_max must be >= 0");
    require(hp_max >= 0, "hp_max must be >= 0");
    require(soc_b_min <= soc_b_max, "soc_b_min must not exceed soc_b_max");
    require(soc_b_min >= 0, "soc_b_min must be >= 0");
    require(eta_b > 0 && eta_b <= 1, "eta_b must be in (0, 1]");
    require(loss_b >= 0 && loss_b < 1, "loss_b must be in [0, 1)");
    require(b_rate_max >= 0, "b_rate_max must be >= 0");
    require(v_fh > 0 && p_concr > 0 && c_concr > 0,
            "floor store volume, density and heat capacity must be positive");
    require(t_fh_min < t_fh_max, "floor comfort band is empty");
    require(loss_fh >= 0 && loss_hw >= 0, "store losses must be >= 0");
    require(big > 0, "big must be positive");
    require(p_water > 0 && c_water > 0 && t_hw_supply > 0,
            "hot-water density, heat capacity and supply temperature must be positive");
    require(v_hw_min < v_hw_max, "hot-water comfort band is empty");
    require(p_buy >= 0 && p_sell >= 0, "tariffs must be >= 0");
    require(cost_factor >= 0, "cost_factor must be >= 0");
}

double compute_cop(double t_supply, double t_outside) {
    if (!std::isfinite(t_supply) || !std::isfinite(t_outside))
        throw validation_error("compute_cop: non-finite temperature");
    const double cop = 5.8 - std::abs(t_supply - t_outside) / 14.0;
    return cop > 0.0 ? cop : 0.0;
}

DerivedParams derive_params(const TechSpecs& specs, const TimeSeriesData& data) {
    specs.validate();
    DerivedParams out;
    out.conv_fh = 3600.0 / (specs.p_concr * specs.v_fh * specs.c_concr);
    out.conv_hw = 3600.0 / ((specs.p_water * specs.t_hw_supply * specs.c_water) / 1000.0);
    out.cop_fh.reserve(data.t_outside.size());
    out.cop_hw.reserve(data.t_outside.size());
    for (double t : data.t_outside) {
        out.cop_fh.push_back(compute_cop(specs.t_fh_supply, t));
        out.cop_hw.push_back(compute_cop(specs.t_hw_supply, t));
    }
    return out;
}

double comfort_cost(double t_fh_plus, double t_fh_minus, double v_hw_plus,
                    double v_hw_minus, double cost_factor) {
    if (t_fh_plus < 0 || t_fh_minus < 0 || v_hw_plus < 0 || v_hw_minus < 0)
        throw validation_error("comfort_cost: negative violation");
    return cost_factor * (t_fh_plus + t_fh_minus + v_hw_plus + v_hw_minus);
}

} // namespace shems
