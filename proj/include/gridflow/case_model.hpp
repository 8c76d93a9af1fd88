#pragma once

#include <array>
#include <string>
#include <vector>

namespace gridflow {

// ---------------------------------------------------------------------------
// Record structures
//
// One struct per table of the case format. Power quantities are p.u. on the
// record's s_base as found in the file; parse_case() rescales everything onto
// the case system base, after which s_base holds the system base itself.
// ---------------------------------------------------------------------------

struct BusRecord {
    int number = 0;        // unique bus id
    double v_base = 0.0;   // kV
    double v0 = 1.0;       // voltage magnitude initial guess, p.u.
    double theta0 = 0.0;   // voltage phase initial guess, rad
    int area = 0;          // 0 = unassigned
    int region = 0;        // 0 = unassigned
};

// Areas.con and Regions.con share one layout.
struct AreaRecord {
    int number = 0;
    int slack_bus = 0;         // 0 = no reference bus for this area
    double s_base = 100.0;     // MVA
    double p_exported = 0.0;   // p.u., > 0 = injecting
    double p_tolerance = 0.0;  // p.u. interchange acceptable error
    double growth_rate = 0.0;  // percent / yr
};
using RegionRecord = AreaRecord;

struct PQLoad {
    int bus = 0;
    double s_base = 100.0;
    double v_base = 0.0;
    double p_load = 0.0;   // consumption-positive, p.u.
    double q_load = 0.0;
    double v_max = 1.1;
    double v_min = 0.9;
    bool z_convertible = false;  // allow conversion to constant impedance
    bool connected = true;
};

// Wind farms: fixed-P,Q buses seen by the solvers as negative loads.
struct PQGen {
    int bus = 0;
    double s_base = 100.0;
    double v_base = 0.0;
    double p_gen = 0.0;   // injection-positive, p.u.
    double q_gen = 0.0;
    double v_max = 1.1;
    double v_min = 0.9;
    bool z_convertible = false;
    bool connected = true;
};

struct SlackGen {
    int bus = 0;
    double s_base = 100.0;
    double v_base = 0.0;
    double v0 = 1.0;      // fixed voltage magnitude, p.u.
    double theta0 = 0.0;  // fixed phase when is_phase_reference, rad
    double q_max = 99.0;
    double q_min = -99.0;
    double v_max = 1.1;
    double v_min = 0.9;
    double p_g0 = 0.0;    // initial active power (CPF/OPF), p.u.
    double gamma = 1.0;   // loss-sharing factor in [0,1]
    bool is_phase_reference = true;
    bool connected = true;
};

struct PVGen {
    int bus = 0;
    double s_base = 100.0;
    double v_base = 0.0;
    double p_gen = 0.0;
    double v0 = 1.0;
    double q_max = 99.0;
    double q_min = -99.0;
    double v_max = 1.1;
    double v_min = 0.9;
    double gamma = 1.0;  // takes effect only under the distributed slack model
    bool connected = true;
};

struct ShuntDevice {
    int bus = 0;
    double s_base = 100.0;
    double v_base = 0.0;
    double f_nominal = 60.0;  // Hz
    double g = 0.0;           // p.u. conductance
    double b = 0.0;           // p.u. susceptance (< 0 inductive, > 0 capacitive)
    bool connected = true;
};

/// Nominal primary/secondary kV pair, written "a/b" in the case file.
/// Both zero means "not a transformer".
struct VoltageRatio {
    double primary = 0.0;
    double secondary = 0.0;

    bool defined() const { return primary > 0.0 && secondary > 0.0; }
    double value() const { return defined() ? primary / secondary : 0.0; }
};

struct Branch {
    int from_bus = 0;
    int to_bus = 0;
    double s_base = 100.0;
    double v_base = 0.0;
    double f_nominal = 60.0;
    double length = 0.0;      // km; 0 means r/x/b are already total p.u.
    VoltageRatio k_t;         // nominal ratio, transformers only
    double r = 0.0;           // p.u. (or p.u./km when length > 0)
    double x = 0.0;
    double b = 0.0;           // total charging, split half per end
    double tap = 0.0;         // off-nominal ratio; 0 means line
    double phase_shift = 0.0; // degrees
    double i_max = 0.0;       // p.u. limits; 0 = not specified
    double p_max = 0.0;
    double s_max = 0.0;
    bool connected = true;
};

enum class BranchKind { line, transformer, phase_shifter };

struct SupplyBid {
    int bus = 0;
    double s_base = 100.0;
    double p_s0 = 0.0;    // active power growth direction, p.u.
    double p_s_max = 0.0;
    double p_s_min = 0.0;
    double p_s = 0.0;     // optimized result slot
    double c_p0 = 0.0;    // R$/h
    double c_p1 = 0.0;    // R$/MWh
    double c_p2 = 0.0;    // R$/MW^2 h
    double c_q0 = 0.0;
    double c_q1 = 0.0;    // R$/MVArh
    double c_q2 = 0.0;
    bool commitment = false;  // u_c; carried as data, no commitment logic
    double fut1 = 0.0;        // future-use columns, preserved verbatim
    double gamma = 1.0;
    double q_max = 0.0;
    double q_min = 0.0;
    double fut2 = 0.0;
    double fut3 = 0.0;
    bool connected = true;
};

struct DemandBid {
    int bus = 0;
    double s_base = 100.0;
    double p_d0 = 0.0;    // active load growth direction, p.u.
    double q_d0 = 0.0;
    double p_d_max = 0.0;
    double p_d_min = 0.0;
    double p_d = 0.0;     // optimized result slot
    double c_p0 = 0.0;
    double c_p1 = 0.0;
    double c_p2 = 0.0;
    double c_q0 = 0.0;
    double c_q1 = 0.0;
    double c_q2 = 0.0;
    bool commitment = false;
    double fut1 = 0.0;
    double fut2 = 0.0;
    double fut3 = 0.0;
    bool connected = true;
};

/// One row of LoadLev.{Heavy,Medium,Light}.con or CapacFactor.{...}.con:
/// an area id plus twelve monthly values.
struct MonthlyRow {
    int area = 0;
    std::array<double, 12> values{};
};

enum class LoadLevel { heavy, medium, light, annual_average };
enum class Source { wind, hydro, fossil };

/// Optional SourceTag.con row: explicit generator source classification,
/// overriding the EOL/UHE/UTE name-suffix convention.
struct SourceTag {
    int bus = 0;
    Source source = Source::wind;
};

// ---------------------------------------------------------------------------
// The aggregate case
// ---------------------------------------------------------------------------

struct PowerCase {
    double system_base = 100.0;  // MVA

    std::vector<BusRecord> buses;
    std::vector<AreaRecord> areas;
    std::vector<RegionRecord> regions;
    std::vector<std::string> bus_names;     // positional with buses
    std::vector<std::string> area_names;
    std::vector<std::string> region_names;

    std::vector<PQLoad> pq_loads;
    std::vector<PQGen> pq_gens;
    std::vector<SlackGen> slack_gens;
    std::vector<PVGen> pv_gens;
    std::vector<ShuntDevice> shunts;
    std::vector<Branch> branches;
    std::vector<SupplyBid> supplies;
    std::vector<DemandBid> demands;

    std::vector<MonthlyRow> load_level_heavy;
    std::vector<MonthlyRow> load_level_medium;
    std::vector<MonthlyRow> load_level_light;
    std::vector<MonthlyRow> cf_wind;
    std::vector<MonthlyRow> cf_hydro;
    std::vector<MonthlyRow> cf_fossil;

    std::vector<SourceTag> source_tags;

    std::size_t n_buses() const { return buses.size(); }

    /// Index of the bus record with this number, or -1.
    int bus_index(int number) const;

    /// Name of a bus (from Bus.names) or its number as text.
    std::string bus_label(int number) const;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class RecordKind {
    bus, area, region, name_table, pq_load, pq_gen, slack_gen, pv_gen,
    shunt, branch, supply, demand, load_level, capacity_factor, source_tag, case_wide
};

const char* to_string(RecordKind kind);

struct Diagnostic {
    RecordKind kind = RecordKind::case_wide;
    int row = -1;           // 0-based index into the record table, -1 = whole case
    std::string rule;       // stable rule id, e.g. "pq-gen-power-factor"
    std::string message;
};

/// Checks every record invariant plus whole-case consistency. An empty result
/// means the case is fit for the solvers. Never throws; everything is a
/// diagnostic.
std::vector<Diagnostic> validate_case(const PowerCase& c);

/// Line / transformer / phase shifter discrimination: a branch is a
/// transformer iff k_t or tap is set, and a phase shifter when it is a
/// transformer with a nonzero phase angle.
BranchKind classify_branch(const Branch& branch);

/// Field-by-field equality of two cases on the same system base. Numeric
/// fields compare exactly; use after parse-normalization, where round trips
/// are bit-stable.
bool semantically_equal(const PowerCase& a, const PowerCase& b);

/// Source of a generating unit at `bus`: explicit SourceTag.con row when
/// present, otherwise the EOL/UHE/UTE convention in the bus name.
/// Returns false when neither applies.
bool classify_source(const PowerCase& c, int bus, Source& out);

const char* to_string(Source source);
const char* to_string(LoadLevel level);

} // namespace gridflow
