#include "mlsfr/scenario.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

namespace mlsfr {

using nlohmann::json;

const char* to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::reuse1: return "reuse1";
    case SchemeKind::sfr2: return "sfr2";
    case SchemeKind::mlsfr: return "mlsfr";
  }
  return "unknown";
}

SchemeKind scheme_kind_from_string(const std::string& text) {
  if (text == "reuse1") return SchemeKind::reuse1;
  if (text == "sfr2") return SchemeKind::sfr2;
  if (text == "mlsfr") return SchemeKind::mlsfr;
  throw std::invalid_argument(fmt::format("unknown scheme kind '{}'", text));
}

Scheme Scenario::scheme(SchemeKind kind) const {
  switch (kind) {
    case SchemeKind::reuse1: return make_reuse1();
    case SchemeKind::sfr2: return make_sfr2(sfr2_gamma_db);
    case SchemeKind::mlsfr: return make_mlsfr(mlsfr_subbands, mlsfr_gamma_min_db);
  }
  throw std::logic_error("unhandled scheme kind");
}

void Scenario::validate() const {
  link.validate();
  if (!(cell_radius_km > 0.0)) throw std::invalid_argument("cell_radius_km must be positive");
  if (!(sfr2_gamma_db <= 0.0)) throw std::invalid_argument("sfr2_gamma_db must be <= 0");
  if (mlsfr_subbands == 0) throw std::invalid_argument("mlsfr_subbands must be >= 1");
  if (!(mlsfr_gamma_min_db <= 0.0)) throw std::invalid_argument("mlsfr_gamma_min_db must be <= 0");
  if (circles.empty()) throw std::invalid_argument("circles must not be empty");
  for (double c : circles) {
    if (!(c > 0.0 && c <= 1.0)) throw std::invalid_argument("circles must lie in (0, 1]");
  }
  if (design_beta0.size() != design_fractions.size()) {
    throw std::invalid_argument("design_beta0 and design_fractions must have equal length");
  }
  if (!(coverage_margin > 0.0)) throw std::invalid_argument("coverage_margin must be positive");
}

json to_json(const Scenario& s) {
  json requests = json::array();
  for (const auto& r : s.alloc_requests) requests.push_back({r.beta0, r.demand});
  return json{
      {"noise_density_dbm_per_hz", s.link.noise_density_dbm_per_hz},
      {"tx_density_dbm_per_mhz", s.link.tx_density_dbm_per_mhz},
      {"bandwidth_mhz", s.link.bandwidth_mhz},
      {"pathloss_intercept_db", s.link.pathloss_intercept_db},
      {"pathloss_slope", s.link.pathloss_slope},
      {"cell_radius_km", s.cell_radius_km},
      {"sfr2_gamma_db", s.sfr2_gamma_db},
      {"mlsfr_subbands", s.mlsfr_subbands},
      {"mlsfr_gamma_min_db", s.mlsfr_gamma_min_db},
      {"circles", s.circles},
      {"design_beta0", s.design_beta0},
      {"design_fractions", s.design_fractions},
      {"coverage_margin", s.coverage_margin},
      {"alloc_scheme", to_string(s.alloc_scheme)},
      {"alloc_requests", requests},
      {"pairing_edge_beta0", s.pairing_edge_beta0},
      {"pairing_center_beta0", s.pairing_center_beta0},
      {"out", s.out},
  };
}

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("scenario must be a JSON object");

  Scenario s;
  const json defaults = to_json(s);
  for (const auto& [key, value] : doc.items()) {
    if (!defaults.contains(key)) {
      throw std::invalid_argument(fmt::format("unknown scenario key '{}'", key));
    }
  }

  auto read = [&doc](const char* key, auto& field) {
    if (!doc.contains(key)) return;
    try {
      doc.at(key).get_to(field);
    } catch (const json::exception& e) {
      throw std::invalid_argument(fmt::format("scenario key '{}': {}", key, e.what()));
    }
  };

  read("noise_density_dbm_per_hz", s.link.noise_density_dbm_per_hz);
  read("tx_density_dbm_per_mhz", s.link.tx_density_dbm_per_mhz);
  read("bandwidth_mhz", s.link.bandwidth_mhz);
  read("pathloss_intercept_db", s.link.pathloss_intercept_db);
  read("pathloss_slope", s.link.pathloss_slope);
  read("cell_radius_km", s.cell_radius_km);
  read("sfr2_gamma_db", s.sfr2_gamma_db);
  if (doc.contains("mlsfr_subbands")) {
    const json& v = doc.at("mlsfr_subbands");
    if (!v.is_number_unsigned()) {
      throw std::invalid_argument("scenario key 'mlsfr_subbands' must be a non-negative integer");
    }
    s.mlsfr_subbands = v.get<std::size_t>();
  }
  read("mlsfr_gamma_min_db", s.mlsfr_gamma_min_db);
  read("circles", s.circles);
  read("design_beta0", s.design_beta0);
  read("design_fractions", s.design_fractions);
  read("coverage_margin", s.coverage_margin);
  read("pairing_edge_beta0", s.pairing_edge_beta0);
  read("pairing_center_beta0", s.pairing_center_beta0);
  read("out", s.out);

  if (doc.contains("alloc_scheme")) {
    std::string kind;
    read("alloc_scheme", kind);
    s.alloc_scheme = scheme_kind_from_string(kind);
  }
  if (doc.contains("alloc_requests")) {
    std::vector<std::array<double, 2>> pairs;
    read("alloc_requests", pairs);
    s.alloc_requests.clear();
    for (const auto& [beta0, demand] : pairs) s.alloc_requests.push_back({beta0, demand});
  }

  s.validate();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open scenario '{}'", path));
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(fmt::format("scenario '{}' is not valid JSON: {}", path, e.what()));
  }
  return scenario_from_json(doc);
}

}  // namespace mlsfr
