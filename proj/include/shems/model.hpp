#pragma once

#include <optional>
#include <vector>

#include "shems/kernels.hpp"
#include "shems/types.hpp"

namespace shems {

enum class Objective { Profit, SelfConsumption, SelfSufficiency };

/// Scenario toggles of the numerical study: battery installed or not, grid
/// feed-in allowed or not (realized as a zero feed-in tariff with the
/// PV-to-grid column kept and reported as curtailment), one of three
/// objectives, an optional cap on the total comfort violations and the
/// charge/discharge exclusivity binary.
struct ScenarioConfig {
    bool battery_enabled = true;
    bool feed_in_enabled = true;
    Objective objective = Objective::Profit;
    std::optional<double> violation_cap;  // [degC + l]
    bool use_b_switch = false;

    /// Throws validation_error when the combination is inconsistent
    /// (alternate objectives need a violation cap).
    void validate() const;

    /// Copy with use_b_switch forced on for the alternate objectives.
    ScenarioConfig normalized() const;
};

enum class VarKind { Continuous, Binary };
enum class RowSense { LE, EQ, GE };

/// Variable families. Generic marks columns of hand-built instances that do
/// not belong to the household model.
enum class VarSym : int {
    Generic = -1,
    XPvDe = 0, XBDe, XGrDe, XPvHp, XGrHp, XBHp, XHpFh, XHpHw, XPvB, XPvGr,
    ModFh, ModHw,
    HpSwitch, Hot,
    TfhPlus, TfhMinus, VhwPlus, VhwMinus,
    LossPlus, LossMinus,
    SocB, Tfh, Vhw,
    BSwitch,
};

struct Column {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lower = 0.0;
    double upper = 0.0;  // +inf allowed
    double obj = 0.0;    // maximize sense
    VarSym symbol = VarSym::Generic;
    int hour = 0;        // 1-based; state samples run 1..H+1
};

struct Row {
    std::string name;
    RowSense sense = RowSense::EQ;
    double rhs = 0.0;
};

/// A mixed-integer linear program in maximize sense with column bounds,
/// stored both column-wise (for the simplex) and row-wise (for residual
/// checks). Immutable once finalized.
struct MilpInstance {
    int horizon = 0;
    bool has_b_switch = false;
    bool battery_enabled = true;
    Objective objective_kind = Objective::Profit;
    double p_sell_eff = 0.0;  // tariff actually priced into the objective
    double p_buy = 0.0;
    double cost_factor = 0.0;
    SystemState initial;

    std::vector<Column> cols;
    std::vector<Row> rows;

    std::vector<int> col_start;  // CSC, size n+1
    std::vector<int> coef_row;
    std::vector<double> coef_val;

    std::vector<int> row_start;  // CSR mirror, size m+1
    std::vector<int> coef_col;
    std::vector<double> coef_val_csr;

    /// Suggested starting basis: one column index per row, -1 means slack.
    std::vector<int> basis_hint;

    int n_cols() const { return static_cast<int>(cols.size()); }
    int n_rows() const { return static_cast<int>(rows.size()); }
    int n_binaries() const;

    kern::CscView csc() const;
    kern::CsrView csr() const;

    /// Column index of a model variable; state symbols accept hour H+1.
    int col_of(VarSym v, int hour) const;
};

/// Incremental construction helper; also the way tests assemble small
/// hand-written instances.
class InstanceBuilder {
public:
    int add_column(std::string name, VarKind kind, double lower, double upper,
                   double obj, VarSym symbol = VarSym::Generic, int hour = 0);
    int add_row(std::string name, RowSense sense, double rhs);
    void set_coef(int row, int col, double value);
    void set_basis_hint(int row, int col);

    /// Moves the accumulated data into a finalized instance.
    MilpInstance finalize();

private:
    MilpInstance inst_;
    std::vector<int> trip_row_, trip_col_;
    std::vector<double> trip_val_;
    std::vector<int> hint_rows_, hint_cols_;
};

/// Per-hour slice of a solution, used for state stepping and analytics.
struct SolutionHour {
    double x_pv_de, x_b_de, x_gr_de;
    double x_pv_hp, x_gr_hp, x_b_hp;
    double x_hp_fh, x_hp_hw;
    double x_pv_b, x_pv_gr;
    double mod_fh, mod_hw;
    double hp_switch, hot;
    double tfh_plus, tfh_minus, vhw_plus, vhw_minus;
    double loss_plus, loss_minus;
    double b_switch;  // 0 when the instance has none
};

/// Values of one solved instance grouped by variable family. `values` keeps
/// the raw column vector; the family vectors are empty for hand-built
/// instances without model symbols.
struct Solution {
    int horizon = 0;
    std::vector<double> values;

    std::vector<double> x_pv_de, x_b_de, x_gr_de;
    std::vector<double> x_pv_hp, x_gr_hp, x_b_hp;
    std::vector<double> x_hp_fh, x_hp_hw;
    std::vector<double> x_pv_b, x_pv_gr;
    std::vector<double> mod_fh, mod_hw, hp_switch, hot;
    std::vector<double> tfh_plus, tfh_minus, vhw_plus, vhw_minus;
    std::vector<double> loss_plus, loss_minus, b_switch;
    std::vector<double> soc_b, t_fh, v_hw;  // length H+1

    double objective = 0.0;
    double mip_gap = 0.0;
    double solve_seconds = 0.0;

    SolutionHour hour(int h) const;  // 1-based
};

/// Assembles the household MILP over `horizon` hours: flow balances, battery
/// dynamics, heat-pump modulation and mode exclusivity, both thermal-store
/// dynamics with soft comfort bounds, the Hot sign switch for the floor
/// loss, the configured objective, and optionally the violation-cap row and
/// the battery charge/discharge exclusivity rows.
MilpInstance build_model(const TechSpecs& specs, const TimeSeriesData& data,
                         const DerivedParams& derived,
                         const ScenarioConfig& config,
                         const SystemState& initial, int horizon);

/// Fixes Hot binaries whose value is forced by the outside temperature:
/// Hot=1 when t_outside > t_fh_max + slack, Hot=0 when
/// t_outside < t_fh_min - slack. Pure bound transformation.
MilpInstance presolve_fix_hot(const MilpInstance& instance,
                              const TimeSeriesData& data,
                              const TechSpecs& specs, double slack = 5.0);

/// Groups a raw column vector into a Solution. Verifies row residuals
/// against feasibility_tol * (1 + |rhs|) and rounds binaries; binaries more
/// than 1e-4 from an integer raise numeric_error, residual breaches raise
/// infeasible_error.
Solution extract_solution(const MilpInstance& instance,
                          const std::vector<double>& raw_values,
                          double feasibility_tol = 1e-6);

} // namespace shems
