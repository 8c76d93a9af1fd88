#pragma once

#include <vector>

#include "gridflow/case_model.hpp"

namespace gridflow {

/// Selects an operating point: month and load level pick the centroid
/// multipliers, per-source switches control capacity-factor scaling, and
/// growth rates compound onto every load.
struct ScenarioSpec {
    int month = 0;  // 1..12; 0 = no monthly scaling at all
    LoadLevel level = LoadLevel::annual_average;
    bool scale_wind = true;
    bool scale_hydro = true;
    bool scale_fossil = true;
    std::vector<double> growth_rates;  // percent/yr, applied in order
};

/// Multiplies every PQ load by its area's centroid for (level, month).
/// annual_average is the identity. Throws Error when an area with load has
/// no centroid table.
PowerCase apply_load_level(const PowerCase& c, const ScenarioSpec& spec);

/// Multiplies each generating unit (PQgen p/q, PV p, SW p_g0) by its
/// source's capacity factor for the month. Sources come from SourceTag.con
/// or the EOL/UHE/UTE name convention. Throws Error for an untaggable
/// generator or a missing factor table.
PowerCase apply_capacity_factors(const PowerCase& c, const ScenarioSpec& spec);

/// base * prod(1 + r/100) over the rate list.
double compound_growth(double base_load, const std::vector<double>& rates_percent);

/// Growth compounding on every PQ load (p and q alike).
PowerCase apply_growth(const PowerCase& c, const std::vector<double>& rates_percent);

/// Full pipeline: growth, then load level, then capacity factors.
PowerCase apply_scenario(const PowerCase& c, const ScenarioSpec& spec);

} // namespace gridflow
