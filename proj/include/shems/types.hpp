#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace shems {

// Error taxonomy. The CLI maps validation_error to exit code 2 and
// infeasible_error to exit code 3.
class validation_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class infeasible_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class numeric_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class io_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Hourly exogenous inputs for a planning horizon. Hour index is 1-based;
/// element h-1 of each series belongs to hour h. All series share length H.
struct TimeSeriesData {
    std::vector<double> d_e;        ///< electricity demand [kWh]
    std::vector<double> g_e;        ///< PV generation [kWh]
    std::vector<double> d_fh;       ///< floor-heating thermal demand [kWh]
    std::vector<double> d_hw;       ///< hot-water thermal demand [kWh]
    std::vector<double> t_outside;  ///< outside temperature [degC]

    int length() const { return static_cast<int>(d_e.size()); }

    /// Structural checks: equal lengths, H >= 1, non-negative demands and
    /// generation. Throws validation_error.
    void validate() const;

    /// Additional check against device limits (g_e <= pv_max * 1h).
    void validate_against(const struct TechSpecs& specs) const;

    /// Copy of hours [first, last], 1-based inclusive.
    TimeSeriesData slice(int first, int last) const;
};

/// Device and tariff parameters. Defaults are a Tesla Powerwall 2 class
/// battery, a 3 kW modulating air-water heat pump with floor-heating and
/// hot-water stores, a 10 kWp PV system and German retail/feed-in tariffs.
struct TechSpecs {
    double pv_max = 10.0;        ///< PV capacity [kWp]
    double hp_max = 3.0;         ///< max electrical heat-pump power [kW]

    double soc_b_min = 0.0;      ///< usable battery minimum [kWh]
    double soc_b_max = 13.5;     ///< usable battery maximum [kWh]
    double eta_b = 0.95;         ///< one-way battery efficiency
    double b_rate_max = 3.3;     ///< inverter limit per direction [kWh/h]
    double loss_b = 3e-5;        ///< battery self-discharge per hour (fraction)

    double v_fh = 10.0;          ///< floor thermal mass volume [m^3]
    double p_concr = 2400.0;     ///< concrete density [kg/m^3]
    double c_concr = 1.0;        ///< concrete heat capacity [kJ/(kg*degC)]
    double t_fh_supply = 30.0;   ///< floor-heating supply temperature [degC]
    double t_fh_min = 20.0;      ///< comfort band lower bound [degC]
    double t_fh_max = 22.0;      ///< comfort band upper bound [degC]
    double loss_fh = 0.045;      ///< floor store loss per hour [kW]
    double big = 60.0;           ///< max |T_fh - t_outside| for the Hot switch [degC]

    double t_hw_supply = 45.0;   ///< hot-water supply temperature [degC]
    double p_water = 997.0;      ///< water density [kg/m^3]
    double c_water = 4.184;      ///< water heat capacity [kJ/(kg*degC)]
    double v_hw_min = 20.0;      ///< comfort band lower bound [l]
    double v_hw_max = 180.0;     ///< comfort band upper bound [l]
    double loss_hw = 0.035;      ///< tank loss per hour [kW]

    double p_buy = 0.30;         ///< retail price [EUR/kWh]
    double p_sell = 0.10;        ///< feed-in tariff [EUR/kWh]
    double cost_factor = 1.0;    ///< comfort violation price [EUR per degC or l]

    void validate() const;  ///< throws validation_error on inconsistent values
};

/// Storage levels at the start of an hour.
struct SystemState {
    double soc_b = 0.0;   ///< battery charge [kWh]
    double t_fh = 21.0;   ///< floor temperature [degC]
    double v_hw = 100.0;  ///< well-tempered hot water [l]
};

/// Parameters derived from TechSpecs and the temperature series.
struct DerivedParams {
    std::vector<double> cop_fh;  ///< per-hour COP, floor-heating mode
    std::vector<double> cop_hw;  ///< per-hour COP, hot-water mode
    double conv_fh = 0.0;        ///< kWh -> degC conversion [degC/kWh]
    double conv_hw = 0.0;        ///< kWh -> liter conversion [l/kWh]
};

/// Heat-pump coefficient of performance for a supply/outside temperature
/// pair: max(5.8 - |t_supply - t_outside| / 14, 0).
double compute_cop(double t_supply, double t_outside);

/// Conversion factors and per-hour COP series for both heat-pump modes.
DerivedParams derive_params(const TechSpecs& specs, const TimeSeriesData& data);

/// Comfort cost of one hour's violation quadruple (T_fh+, T_fh-, V_hw+,
/// V_hw-), each >= 0, priced at cost_factor per unit.
double comfort_cost(double t_fh_plus, double t_fh_minus, double v_hw_plus,
                    double v_hw_minus, double cost_factor);

} // namespace shems
