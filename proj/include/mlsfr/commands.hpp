#pragma once

#include <string>

#include "mlsfr/scenario.hpp"

namespace mlsfr {

enum class OutputFormat { csv, json };

OutputFormat output_format_from_string(const std::string& text);

// Each command renders a complete document. Output depends only on the
// scenario, so identical scenarios give byte-identical text.

/// Efficiency against gamma in [-30, 0] dB (step 0.25) for beta0^2 in
/// {0.25, 0.5, 0.75, 1}.
std::string run_fig5(const Scenario& scenario, OutputFormat format);

/// Efficiency against beta0 in [0.05, 1] (step 0.05) for every level of
/// reuse-1, SFR-2 and the ML-SFR scheme, plus the operating points the
/// equal-rate allocation actually uses on the scenario circles.
std::string run_fig6(const Scenario& scenario, OutputFormat format);

/// Equal-rate allocation for reuse-1, SFR-2 and ML-SFR.
std::string run_table4(const Scenario& scenario, OutputFormat format);

/// Gamma design at each anchor and the resulting ML-SFR gain table.
std::string run_design(const Scenario& scenario, OutputFormat format);

/// Coverage-ordered first-fit allocation of the scenario's requests.
std::string run_alloc(const Scenario& scenario, OutputFormat format);

/// Two-cell interference pattern comparison.
std::string run_pairing(const Scenario& scenario, OutputFormat format);

}  // namespace mlsfr
