#include "shems/model.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numeric>

namespace shems {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Column offsets inside one hour block; states of hour h live in block h.
constexpr int kNumPlainCols = 23;

// Row offsets inside one hour block.
enum RowOff : int {
    R_DE = 0, R_GE, R_SOCB, R_HP, R_MODF, R_MODW, R_EXCLF, R_EXCLW,
    R_TFH, R_LOSSP, R_LOSSM, R_HOTA, R_HOTB, R_TMAX, R_TMIN,
    R_VHW, R_VMAX, R_VMIN,
    kNumPlainRows,
};

std::string tag(const char* prefix, int h) {
    return fmt::format("{}{:04d}", prefix, h);
}

const char* col_prefix(VarSym v) {
    switch (v) {
        case VarSym::XPvDe: return "PVDE";
        case VarSym::XBDe: return "BDE_";
        case VarSym::XGrDe: return "GRDE";
        case VarSym::XPvHp: return "PVHP";
        case VarSym::XGrHp: return "GRHP";
        case VarSym::XBHp: return "BHP_";
        case VarSym::XHpFh: return "HPFH";
        case VarSym::XHpHw: return "HPHW";
        case VarSym::XPvB: return "PVB_";
        case VarSym::XPvGr: return "PVGR";
        case VarSym::ModFh: return "MODF";
        case VarSym::ModHw: return "MODW";
        case VarSym::HpSwitch: return "HPSW";
        case VarSym::Hot: return "HOT_";
        case VarSym::TfhPlus: return "TFHP";
        case VarSym::TfhMinus: return "TFHM";
        case VarSym::VhwPlus: return "VHWP";
        case VarSym::VhwMinus: return "VHWM";
        case VarSym::LossPlus: return "LFHP";
        case VarSym::LossMinus: return "LFHM";
        case VarSym::SocB: return "SOCB";
        case VarSym::Tfh: return "TFH_";
        case VarSym::Vhw: return "VHW_";
        case VarSym::BSwitch: return "BSW_";
        default: return "GEN_";
    }
}

} // namespace

void ScenarioConfig::validate() const {
    if (objective != Objective::Profit && !violation_cap.has_value())
        throw validation_error(
            "scenario: alternate objectives require a violation cap");
    if (violation_cap && *violation_cap < 0)
        throw validation_error("scenario: violation cap must be >= 0");
}

ScenarioConfig ScenarioConfig::normalized() const {
    ScenarioConfig out = *this;
    if (out.objective != Objective::Profit) out.use_b_switch = true;
    return out;
}

int MilpInstance::n_binaries() const {
    return static_cast<int>(std::count_if(
        cols.begin(), cols.end(),
        [](const Column& c) { return c.kind == VarKind::Binary; }));
}

kern::CscView MilpInstance::csc() const {
    return {col_start, coef_row, coef_val, n_rows(), n_cols()};
}

kern::CsrView MilpInstance::csr() const {
    return {row_start, coef_col, coef_val_csr, n_rows(), n_cols()};
}

int MilpInstance::col_of(VarSym v, int hour) const {
    const int stride = kNumPlainCols + (has_b_switch ? 1 : 0);
    const int off = static_cast<int>(v);
    const bool is_state =
        v == VarSym::SocB || v == VarSym::Tfh || v == VarSym::Vhw;
    if (hour == horizon + 1 && is_state)
        return horizon * stride + (off - static_cast<int>(VarSym::SocB));
    if (hour < 1 || hour > horizon || off < 0 ||
        (v == VarSym::BSwitch && !has_b_switch))
        throw validation_error(fmt::format("no column for symbol {} hour {}",
                                           off, hour));
    return (hour - 1) * stride + off;
}

int InstanceBuilder::add_column(std::string name, VarKind kind, double lower,
                                double upper, double obj, VarSym symbol,
                                int hour) {
    inst_.cols.push_back(
        Column{std::move(name), kind, lower, upper, obj, symbol, hour});
    return static_cast<int>(inst_.cols.size()) - 1;
}

int InstanceBuilder::add_row(std::string name, RowSense sense, double rhs) {
    inst_.rows.push_back(Row{std::move(name), sense, rhs});
    return static_cast<int>(inst_.rows.size()) - 1;
}

void InstanceBuilder::set_coef(int row, int col, double value) {
    if (value == 0.0) return;
    trip_row_.push_back(row);
    trip_col_.push_back(col);
    trip_val_.push_back(value);
}

void InstanceBuilder::set_basis_hint(int row, int col) {
    hint_rows_.push_back(row);
    hint_cols_.push_back(col);
}

MilpInstance InstanceBuilder::finalize() {
    const int n = static_cast<int>(inst_.cols.size());
    const int m = static_cast<int>(inst_.rows.size());
    const std::size_t nnz = trip_val_.size();

    std::vector<std::size_t> order(nnz);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (trip_col_[a] != trip_col_[b]) return trip_col_[a] < trip_col_[b];
        return trip_row_[a] < trip_row_[b];
    });

    inst_.coef_row.clear();
    inst_.coef_val.clear();
    inst_.coef_row.reserve(nnz);
    inst_.coef_val.reserve(nnz);
    std::vector<int> kept_col;
    kept_col.reserve(nnz);
    for (std::size_t idx : order) {
        const int c = trip_col_[idx];
        const int r = trip_row_[idx];
        if (!kept_col.empty() && kept_col.back() == c &&
            inst_.coef_row.back() == r) {
            inst_.coef_val.back() += trip_val_[idx];  // duplicate cell
        } else {
            kept_col.push_back(c);
            inst_.coef_row.push_back(r);
            inst_.coef_val.push_back(trip_val_[idx]);
        }
    }
    inst_.col_start.assign(n + 1, 0);
    for (int c : kept_col) inst_.col_start[c + 1]++;
    for (int c = 0; c < n; ++c) inst_.col_start[c + 1] += inst_.col_start[c];

    // CSR mirror
    inst_.row_start.assign(m + 1, 0);
    const std::size_t stored = inst_.coef_row.size();
    for (std::size_t k = 0; k < stored; ++k)
        inst_.row_start[inst_.coef_row[k] + 1]++;
    for (int i = 0; i < m; ++i) inst_.row_start[i + 1] += inst_.row_start[i];
    inst_.coef_col.assign(stored, 0);
    inst_.coef_val_csr.assign(stored, 0.0);
    std::vector<int> cursor(inst_.row_start.begin(), inst_.row_start.end() - 1);
    for (int c = 0; c < n; ++c)
        for (int k = inst_.col_start[c]; k < inst_.col_start[c + 1]; ++k) {
            const int pos = cursor[inst_.coef_row[k]]++;
            inst_.coef_col[pos] = c;
            inst_.coef_val_csr[pos] = inst_.coef_val[k];
        }

    inst_.basis_hint.assign(m, -1);
    for (std::size_t k = 0; k < hint_rows_.size(); ++k)
        inst_.basis_hint[hint_rows_[k]] = hint_cols_[k];

    return std::move(inst_);
}

SolutionHour Solution::hour(int h) const {
    const int i = h - 1;
    return SolutionHour{
        x_pv_de[i], x_b_de[i], x_gr_de[i],
        x_pv_hp[i], x_gr_hp[i], x_b_hp[i],
        x_hp_fh[i], x_hp_hw[i],
        x_pv_b[i], x_pv_gr[i],
        mod_fh[i], mod_hw[i],
        hp_switch[i], hot[i],
        tfh_plus[i], tfh_minus[i], vhw_plus[i], vhw_minus[i],
        loss_plus[i], loss_minus[i],
        b_switch.empty() ? 0.0 : b_switch[i],
    };
}

MilpInstance build_model(const TechSpecs& specs, const TimeSeriesData& data,
                         const DerivedParams& derived,
                         const ScenarioConfig& config_in,
                         const SystemState& initial, int horizon) {
    specs.validate();
    data.validate();
    config_in.validate();
    const ScenarioConfig config = config_in.normalized();

    if (horizon < 1)
        throw validation_error("build_model: empty model (horizon < 1)");
    if (horizon > data.length())
        throw validation_error(fmt::format(
            "build_model: horizon {} exceeds data length {}", horizon,
            data.length()));
    if (static_cast<int>(derived.cop_fh.size()) < horizon ||
        static_cast<int>(derived.cop_hw.size()) < horizon)
        throw validation_error("build_model: derived COP series too short");
    if (initial.soc_b < specs.soc_b_min - 1e-9 ||
        initial.soc_b > specs.soc_b_max + 1e-9)
        throw validation_error(fmt::format(
            "build_model: initial soc_b {:.6g} outside [{:.6g}, {:.6g}]",
            initial.soc_b, specs.soc_b_min, specs.soc_b_max));
    if (!config.battery_enabled && initial.soc_b != 0.0)
        throw validation_error(
            "build_model: battery disabled but initial soc_b is nonzero");

    const double p_sell_eff = config.feed_in_enabled ? specs.p_sell : 0.0;
    const double cf = specs.cost_factor;
    const bool bsw = config.use_b_switch;
    const double batt_cap = config.battery_enabled ? specs.b_rate_max : 0.0;

    double c_feed = 0.0, c_buy = 0.0;
    switch (config.objective) {
        case Objective::Profit:
            c_feed = p_sell_eff;
            c_buy = -specs.p_buy;
            break;
        case Objective::SelfConsumption:  // minimize feed-in, negated
            c_feed = -1.0;
            c_buy = 0.0;
            break;
        case Objective::SelfSufficiency:  // minimize grid sourcing, negated
            c_feed = 0.0;
            c_buy = -1.0;
            break;
    }

    InstanceBuilder b;
    auto add_hour_col = [&](VarSym v, int h, VarKind kind, double lo, double hi,
                            double obj) {
        return b.add_column(tag(col_prefix(v), h), kind, lo, hi, obj, v, h);
    };

    for (int h = 1; h <= horizon; ++h) {
        add_hour_col(VarSym::XPvDe, h, VarKind::Continuous, 0, kInf, 0);
        add_hour_col(VarSym::XBDe, h, VarKind::Continuous, 0, batt_cap, 0);
        add_hour_col(VarSym::XGrDe, h, VarKind::Continuous, 0, kInf, c_buy);
        add_hour_col(VarSym::XPvHp, h, VarKind::Continuous, 0, kInf, 0);
        add_hour_col(VarSym::XGrHp, h, VarKind::Continuous, 0, kInf, c_buy);
        add_hour_col(VarSym::XBHp, h, VarKind::Continuous, 0, batt_cap, 0);
        add_hour_col(VarSym::XHpFh, h, VarKind::Continuous, 0, kInf, 0);
        add_hour_col(VarSym::XHpHw, h, VarKind::Continuous, 0, kInf, 0);
        add_hour_col(VarSym::XPvB, h, VarKind::Continuous, 0, batt_cap, 0);
        add_hour_col(VarSym::XPvGr, h, VarKind::Continuous, 0, kInf, c_feed);
        add_hour_col(VarSym::ModFh, h, VarKind::Continuous, 0, 1, 0);
        add_hour_col(VarSym::ModHw, h, VarKind::Continuous, 0, 1, 0);
        add_hour_col(VarSym::HpSwitch, h, VarKind::Binary, 0, 1, 0);
        add_hour_col(VarSym::Hot, h, VarKind::Binary, 0, 1, 0);
        add_hour_col(VarSym::TfhPlus, h, VarKind::Continuous, 0, kInf, -cf);
        add_hour_col(VarSym::TfhMinus, h, VarKind::Continuous, 0, kInf, -cf);
        add_hour_col(VarSym::VhwPlus, h, VarKind::Continuous, 0, kInf, -cf);
        add_hour_col(VarSym::VhwMinus, h, VarKind::Continuous, 0, kInf, -cf);
        add_hour_col(VarSym::LossPlus, h, VarKind::Continuous, 0, kInf, 0);
        add_hour_col(VarSym::LossMinus, h, VarKind::Continuous, 0, kInf, 0);
        // state samples at the start of hour h
        if (h == 1) {
            add_hour_col(VarSym::SocB, h, VarKind::Continuous, initial.soc_b,
                         initial.soc_b, 0);
            add_hour_col(VarSym::Tfh, h, VarKind::Continuous, initial.t_fh,
                         initial.t_fh, 0);
            add_hour_col(VarSym::Vhw, h, VarKind::Continuous, initial.v_hw,
                         initial.v_hw, 0);
        } else {
            add_hour_col(VarSym::SocB, h, VarKind::Continuous,
                         config.battery_enabled ? specs.soc_b_min : 0.0,
                         config.battery_enabled ? specs.soc_b_max : 0.0, 0);
            add_hour_col(VarSym::Tfh, h, VarKind::Continuous, 0, kInf, 0);
            add_hour_col(VarSym::Vhw, h, VarKind::Continuous, 0, kInf, 0);
        }
        if (bsw) add_hour_col(VarSym::BSwitch, h, VarKind::Binary, 0, 1, 0);
    }
    // terminal state samples
    add_hour_col(VarSym::SocB, horizon + 1, VarKind::Continuous,
                 config.battery_enabled ? specs.soc_b_min : 0.0,
                 config.battery_enabled ? specs.soc_b_max : 0.0, 0);
    add_hour_col(VarSym::Tfh, horizon + 1, VarKind::Continuous, 0, kInf, 0);
    add_hour_col(VarSym::Vhw, horizon + 1, VarKind::Continuous, 0, kInf, 0);

    MilpInstance shape;  // only for col_of() arithmetic while building
    shape.horizon = horizon;
    shape.has_b_switch = bsw;
    auto C = [&](VarSym v, int h) { return shape.col_of(v, h); };

    for (int h = 1; h <= horizon; ++h) {
        const int i = h - 1;
        const double de = data.d_e[i], ge = data.g_e[i];
        const double dfh = data.d_fh[i], dhw = data.d_hw[i];
        const double tout = data.t_outside[i];
        const double copf = derived.cop_fh[i], copw = derived.cop_hw[i];

        int r = b.add_row(tag("E02_", h), RowSense::EQ, de);
        b.set_coef(r, C(VarSym::XPvDe, h), 1);
        b.set_coef(r, C(VarSym::XBDe, h), 1);
        b.set_coef(r, C(VarSym::XGrDe, h), 1);
        b.set_basis_hint(r, C(VarSym::XGrDe, h));

        r = b.add_row(tag("E03_", h), RowSense::EQ, ge);
        b.set_coef(r, C(VarSym::XPvDe, h), 1);
        b.set_coef(r, C(VarSym::XPvB, h), 1);
        b.set_coef(r, C(VarSym::XPvGr, h), 1);
        b.set_coef(r, C(VarSym::XPvHp, h), 1);
        b.set_basis_hint(r, C(VarSym::XPvGr, h));

        r = b.add_row(tag("E04_", h), RowSense::EQ, 0);
        b.set_coef(r, C(VarSym::SocB, h + 1), 1);
        b.set_coef(r, C(VarSym::SocB, h), -(1.0 - specs.loss_b));
        b.set_coef(r, C(VarSym::XPvB, h), -specs.eta_b);
        b.set_coef(r, C(VarSym::XBDe, h), 1.0 / specs.eta_b);
        b.set_coef(r, C(VarSym::XBHp, h), 1.0 / specs.eta_b);
        b.set_basis_hint(r, C(VarSym::SocB, h + 1));

        r = b.add_row(tag("E07_", h), RowSense::EQ, 0);
        b.set_coef(r, C(VarSym::XHpFh, h), 1);
        b.set_coef(r, C(VarSym::XHpHw, h), 1);
        b.set_coef(r, C(VarSym::XPvHp, h), -1);
        b.set_coef(r, C(VarSym::XGrHp, h), -1);
        b.set_coef(r, C(VarSym::XBHp, h), -1);
        b.set_basis_hint(r, C(VarSym::XGrHp, h));

        r = b.add_row(tag("E08A", h), RowSense::EQ, 0);
        b.set_coef(r, C(VarSym::XHpFh, h), 1);
        b.set_coef(r, C(VarSym::ModFh, h), -specs.hp_max);
        b.set_basis_hint(r, C(VarSym::XHpFh, h));

        r = b.add_row(tag("E08B", h), RowSense::EQ, 0);
        b.set_coef(r, C(VarSym::XHpHw, h), 1);
        b.set_coef(r, C(VarSym::ModHw, h), -specs.hp_max);
        b.set_basis_hint(r, C(VarSym::XHpHw, h));

        r = b.add_row(tag("E09A", h), RowSense::LE, 0);
        b.set_coef(r, C(VarSym::ModFh, h), 1);
        b.set_coef(r, C(VarSym::HpSwitch, h), -1);

        r = b.add_row(tag("E09B", h), RowSense::LE, 1);
        b.set_coef(r, C(VarSym::ModHw, h), 1);
        b.set_coef(r, C(VarSym::HpSwitch, h), 1);

        r = b.add_row(tag("E10_", h), RowSense::EQ, -derived.conv_fh * dfh);
        b.set_coef(r, C(VarSym::Tfh, h + 1), 1);
        b.set_coef(r, C(VarSym::Tfh, h), -1);
        b.set_coef(r, C(VarSym::XHpFh, h), -derived.conv_fh * copf);
        b.set_coef(r, C(VarSym::LossPlus, h), derived.conv_fh);
        b.set_coef(r, C(VarSym::LossMinus, h), -derived.conv_fh);
        b.set_basis_hint(r, C(VarSym::Tfh, h + 1));

        r = b.add_row(tag("E12A", h), RowSense::EQ, specs.loss_fh);
        b.set_coef(r, C(VarSym::LossPlus, h), 1);
        b.set_coef(r, C(VarSym::Hot, h), specs.loss_fh);
        b.set_basis_hint(r, C(VarSym::LossPlus, h));

        r = b.add_row(tag("E12B", h), RowSense::EQ, 0);
        b.set_coef(r, C(VarSym::LossMinus, h), 1);
        b.set_coef(r, C(VarSym::Hot, h), -specs.loss_fh);
        b.set_basis_hint(r, C(VarSym::LossMinus, h));

        r = b.add_row(tag("E13A", h), RowSense::LE, tout + specs.big);
        b.set_coef(r, C(VarSym::Tfh, h), 1);
        b.set_coef(r, C(VarSym::Hot, h), specs.big);

        r = b.add_row(tag("E13B", h), RowSense::GE, tout);
        b.set_coef(r, C(VarSym::Tfh, h), 1);
        b.set_coef(r, C(VarSym::Hot, h), specs.big);

        r = b.add_row(tag("E14_", h), RowSense::LE, specs.t_fh_max);
        b.set_coef(r, C(VarSym::Tfh, h), 1);
        b.set_coef(r, C(VarSym::TfhPlus, h), -1);

        r = b.add_row(tag("E15_", h), RowSense::GE, specs.t_fh_min);
        b.set_coef(r, C(VarSym::Tfh, h), 1);
        b.set_coef(r, C(VarSym::TfhMinus, h), 1);

        r = b.add_row(tag("E16_", h), RowSense::EQ,
                      -derived.conv_hw * (dhw + specs.loss_hw));
        b.set_coef(r, C(VarSym::Vhw, h + 1), 1);
        b.set_coef(r, C(VarSym::Vhw, h), -1);
        b.set_coef(r, C(VarSym::XHpHw, h), -derived.conv_hw * copw);
        b.set_basis_hint(r, C(VarSym::Vhw, h + 1));

        r = b.add_row(tag("E17A", h), RowSense::LE, specs.v_hw_max);
        b.set_coef(r, C(VarSym::Vhw, h), 1);
        b.set_coef(r, C(VarSym::VhwPlus, h), -1);

        r = b.add_row(tag("E17B", h), RowSense::GE, specs.v_hw_min);
        b.set_coef(r, C(VarSym::Vhw, h), 1);
        b.set_coef(r, C(VarSym::VhwMinus, h), 1);

        if (bsw) {
            r = b.add_row(tag("EB1_", h), RowSense::LE, 0);
            b.set_coef(r, C(VarSym::XPvB, h), 1);
            b.set_coef(r, C(VarSym::BSwitch, h), -specs.b_rate_max);

            r = b.add_row(tag("EB2_", h), RowSense::LE, specs.b_rate_max);
            b.set_coef(r, C(VarSym::XBDe, h), 1);
            b.set_coef(r, C(VarSym::XBHp, h), 1);
            b.set_coef(r, C(VarSym::BSwitch, h), specs.b_rate_max);
        }
    }

    if (config.violation_cap) {
        const int r = b.add_row("ECAP0000", RowSense::LE, *config.violation_cap);
        for (int h = 1; h <= horizon; ++h) {
            b.set_coef(r, C(VarSym::TfhPlus, h), 1);
            b.set_coef(r, C(VarSym::TfhMinus, h), 1);
            b.set_coef(r, C(VarSym::VhwPlus, h), 1);
            b.set_coef(r, C(VarSym::VhwMinus, h), 1);
        }
    }

    MilpInstance inst = b.finalize();
    inst.horizon = horizon;
    inst.has_b_switch = bsw;
    inst.battery_enabled = config.battery_enabled;
    inst.objective_kind = config.objective;
    inst.p_sell_eff = p_sell_eff;
    inst.p_buy = specs.p_buy;
    inst.cost_factor = cf;
    inst.initial = initial;
    return inst;
}

MilpInstance presolve_fix_hot(const MilpInstance& instance,
                              const TimeSeriesData& data,
                              const TechSpecs& specs, double slack) {
    MilpInstance out = instance;
    for (int h = 1; h <= out.horizon; ++h) {
        const double tout = data.t_outside[h - 1];
        Column& hot = out.cols[out.col_of(VarSym::Hot, h)];
        if (hot.lower == hot.upper) continue;  // already fixed
        if (tout > specs.t_fh_max + slack) {
            hot.lower = hot.upper = 1.0;
        } else if (tout < specs.t_fh_min - slack) {
            hot.lower = hot.upper = 0.0;
        }
    }
    return out;
}

Solution extract_solution(const MilpInstance& instance,
                          const std::vector<double>& raw_values,
                          double feasibility_tol) {
    const int n = instance.n_cols();
    const int m = instance.n_rows();
    if (static_cast<int>(raw_values.size()) != n)
        throw validation_error(fmt::format(
            "extract_solution: got {} values for {} columns",
            raw_values.size(), n));

    Solution sol;
    sol.values = raw_values;

    // round binaries; reject values far from integral
    for (int j = 0; j < n; ++j) {
        if (instance.cols[j].kind != VarKind::Binary) continue;
        const double v = sol.values[j];
        const double r = std::round(v);
        if (std::abs(v - r) > 1e-4)
            throw numeric_error(fmt::format(
                "extract_solution: column {} = {:.8g} is not integral",
                instance.cols[j].name, v));
        sol.values[j] = r;
    }

    // independent residual check on the rounded vector
    std::vector<double> act(m, 0.0);
    kern::row_activity(instance.csr(), sol.values, act);
    for (int i = 0; i < m; ++i) {
        const Row& row = instance.rows[i];
        const double tol = feasibility_tol * (1.0 + std::abs(row.rhs));
        const double diff = act[i] - row.rhs;
        const bool bad = (row.sense == RowSense::EQ && std::abs(diff) > tol) ||
                         (row.sense == RowSense::LE && diff > tol) ||
                         (row.sense == RowSense::GE && diff < -tol);
        if (bad)
            throw infeasible_error(fmt::format(
                "extract_solution: row {} violated by {:.3e}", row.name,
                std::abs(diff)));
    }

    sol.objective = 0.0;
    for (int j = 0; j < n; ++j)
        sol.objective += instance.cols[j].obj * sol.values[j];

    if (instance.horizon == 0) return sol;  // hand-built instance

    const int H = instance.horizon;
    sol.horizon = H;
    auto fill = [&](std::vector<double>& out, VarSym v, int count) {
        out.resize(count);
        for (int h = 1; h <= count; ++h)
            out[h - 1] = sol.values[instance.col_of(v, h)];
    };
    fill(sol.x_pv_de, VarSym::XPvDe, H);
    fill(sol.x_b_de, VarSym::XBDe, H);
    fill(sol.x_gr_de, VarSym::XGrDe, H);
    fill(sol.x_pv_hp, VarSym::XPvHp, H);
    fill(sol.x_gr_hp, VarSym::XGrHp, H);
    fill(sol.x_b_hp, VarSym::XBHp, H);
    fill(sol.x_hp_fh, VarSym::XHpFh, H);
    fill(sol.x_hp_hw, VarSym::XHpHw, H);
    fill(sol.x_pv_b, VarSym::XPvB, H);
    fill(sol.x_pv_gr, VarSym::XPvGr, H);
    fill(sol.mod_fh, VarSym::ModFh, H);
    fill(sol.mod_hw, VarSym::ModHw, H);
    fill(sol.hp_switch, VarSym::HpSwitch, H);
    fill(sol.hot, VarSym::Hot, H);
    fill(sol.tfh_plus, VarSym::TfhPlus, H);
    fill(sol.tfh_minus, VarSym::TfhMinus, H);
    fill(sol.vhw_plus, VarSym::VhwPlus, H);
    fill(sol.vhw_minus, VarSym::VhwMinus, H);
    fill(sol.loss_plus, VarSym::LossPlus, H);
    fill(sol.loss_minus, VarSym::LossMinus, H);
    if (instance.has_b_switch) fill(sol.b_switch, VarSym::BSwitch, H);
    fill(sol.soc_b, VarSym::SocB, H + 1);
    fill(sol.t_fh, VarSym::Tfh, H + 1);
    fill(sol.v_hw, VarSym::Vhw, H + 1);
    return sol;
}

} // namespace shems
