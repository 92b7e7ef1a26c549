#pragma once

#include <string>
#include <vector>

#include "hardylab/classes.hpp"
#include "hardylab/hb_space.hpp"
#include "hardylab/lab/config.hpp"
#include "hardylab/lab/report.hpp"
#include "hardylab/operators.hpp"

namespace hardylab::lab {

/// Pythagorean pair of a quotient spec h = b/a. Rational quotients carry their own inner part.
PythagoreanPair pair_from_quotient(const FunctionSpec& h, const ScenarioConfig& config);

/// Probe verdict per symbol against multiplier certification per (symbol, pair) cell.
struct PanelResult {
    std::vector<std::string> symbols;
    std::vector<std::string> pairs;
    std::vector<ContinuityProbeReport> probes;            ///< one per symbol
    std::vector<std::vector<MultiplierReport>> cells;     ///< [symbol][pair]
    /// Multiplier only when every pair in the panel certifies: the classes are intersections
    /// of multiplier algebras over the family, so the probe is compared with the universal verdict.
    std::vector<MultiplierVerdict> universal;

    /// Bounded with Multiplier, or Divergent with NotCertified.
    bool agrees(std::size_t symbol) const;
};

PanelResult run_class_panel(const ClassPanel& panel, const ProbeSpace& space, const ScenarioConfig& config);

/// Runs config.scenario. Scenario-level failures become FAIL checks; configuration problems throw
/// ConfigError.
Report run_scenario(const ScenarioConfig& config);

} // namespace hardylab::lab
