#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlsfr/allocator.hpp"
#include "mlsfr/hexgrid.hpp"
#include "mlsfr/linkmodel.hpp"
#include "mlsfr/schemes.hpp"

namespace mlsfr {

enum class SchemeKind { reuse1, sfr2, mlsfr };

const char* to_string(SchemeKind kind);
SchemeKind scheme_kind_from_string(const std::string& text);

/// Everything a CLI run needs. Serialized as a flat JSON object; every key is
/// optional and missing keys keep the defaults below.
struct Scenario {
  LinkParams link;
  double cell_radius_km = 1.0;

  double sfr2_gamma_db = -6.0;
  std::size_t mlsfr_subbands = 4;
  double mlsfr_gamma_min_db = -17.0;

  std::vector<double> circles = default_circles();

  // gamma design anchors, paired element-wise
  std::vector<double> design_beta0 = {1.0};
  std::vector<double> design_fractions = {0.90};

  double coverage_margin = kDefaultCoverageMargin;

  SchemeKind alloc_scheme = SchemeKind::mlsfr;
  std::vector<AllocationRequest> alloc_requests = {
      {1.0, 0.05}, {0.875, 0.05}, {0.5, 0.10}, {0.25, 0.10}, {0.125, 0.15}};

  std::array<double, 2> pairing_edge_beta0 = {0.7, 0.95};
  std::array<double, 2> pairing_center_beta0 = {0.2, 0.5};

  std::string out;  // empty: stdout

  NetworkLayout layout() const { return build_layout(cell_radius_km); }
  Scheme scheme(SchemeKind kind) const;

  /// Throws std::invalid_argument on the first inconsistent field.
  void validate() const;
};

nlohmann::json to_json(const Scenario& scenario);

/// Unknown keys and wrongly typed values are rejected.
Scenario scenario_from_json(const nlohmann::json& doc);

Scenario load_scenario(const std::string& path);

}  // namespace mlsfr
