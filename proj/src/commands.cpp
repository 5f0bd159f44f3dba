#include "mlsfr/commands.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace mlsfr {

using nlohmann::json;

namespace {

std::string num(double v) { return fmt::format("{:.10g}", v); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::vector<Scheme> compared_schemes(const Scenario& s) {
  return {s.scheme(SchemeKind::reuse1), s.scheme(SchemeKind::sfr2), s.scheme(SchemeKind::mlsfr)};
}

json level_json(const Level& lv) {
  return {{"index", lv.index},
          {"gain_db", lv.gain_db},
          {"role", to_string(lv.role)},
          {"partner_index", lv.partner_index},
          {"bandwidth_cap", lv.bandwidth_cap}};
}

json scheme_json(const Scheme& scheme) {
  json levels = json::array();
  for (const Level& lv : scheme.levels) levels.push_back(level_json(lv));
  json bands = json::array();
  const auto sub_bands = scheme.sub_bands();
  for (std::size_t m = 0; m < sub_bands.size(); ++m) {
    bands.push_back({{"sub_band", m + 1},
                     {"primary_gain_db", sub_bands[m].primary_gain_db},
                     {"secondary_gain_db", sub_bands[m].secondary_gain_db},
                     {"gamma_db", sub_bands[m].gamma_db()}});
  }
  return {{"name", scheme.name},
          {"sub_band_count", scheme.sub_band_count},
          {"levels", levels},
          {"sub_bands", bands}};
}

std::vector<double> percent(const std::vector<double>& fractions) {
  std::vector<double> out;
  for (double f : fractions) out.push_back(100.0 * f);
  return out;
}

}  // namespace

OutputFormat output_format_from_string(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument(fmt::format("unknown output format '{}'", text));
}

std::string run_fig5(const Scenario& s, OutputFormat format) {
  s.validate();
  const NetworkLayout layout = s.layout();

  std::vector<double> grid;
  for (int k = 0; k <= 120; ++k) grid.push_back(-30.0 + 0.25 * k);

  const std::vector<double> beta0_sq = {0.25, 0.5, 0.75, 1.0};
  std::string csv = "beta0_sq,beta0,gamma_db,efficiency\n";
  json curves = json::array();
  for (double bsq : beta0_sq) {
    const double beta0 = std::sqrt(bsq);
    const auto curve = gamma_sweep(s.link, layout, beta0, grid);
    const double plateau = efficiency_at_gamma(s.link, layout, beta0, 0.0);
    json points = json::array();
    for (const auto& p : curve) {
      csv += fmt::format("{},{},{},{}\n", num(bsq), num(beta0), num(p.gamma_db), num(p.efficiency));
      points.push_back({p.gamma_db, p.efficiency});
    }
    curves.push_back({{"beta0_sq", bsq}, {"beta0", beta0}, {"plateau", plateau}, {"points", points}});
  }
  if (format == OutputFormat::csv) return csv;
  return dump({{"figure", "efficiency_vs_gamma"}, {"curves", curves}});
}

std::string run_fig6(const Scenario& s, OutputFormat format) {
  s.validate();
  const NetworkLayout layout = s.layout();

  std::vector<double> grid;
  for (int k = 1; k <= 20; ++k) grid.push_back(k / 20.0);

  std::string csv = "kind,scheme,level,beta0,efficiency,bandwidth_fraction\n";
  json schemes = json::array();
  for (const Scheme& scheme : compared_schemes(s)) {
    const EfficiencyMatrix curves = efficiency_matrix(s.link, layout, scheme, grid);
    const EfficiencyMatrix ops = efficiency_matrix(s.link, layout, scheme, s.circles);
    const AllocationResult alloc = solve_equal_rate(scheme, ops);

    json levels = json::array();
    for (std::size_t n = 0; n < scheme.size(); ++n) {
      json points = json::array();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        csv += fmt::format("curve,{},{},{},{},\n", scheme.name, n + 1, num(grid[i]),
                           num(curves.eta[n][i]));
        points.push_back({grid[i], curves.eta[n][i]});
      }
      json dots = json::array();
      for (std::size_t i = 0; i < s.circles.size(); ++i) {
        if (alloc.x[n][i] <= 1e-12) continue;
        csv += fmt::format("dot,{},{},{},{},{}\n", scheme.name, n + 1, num(s.circles[i]),
                           num(ops.eta[n][i]), num(alloc.x[n][i]));
        dots.push_back({{"beta0", s.circles[i]},
                        {"efficiency", ops.eta[n][i]},
                        {"bandwidth_fraction", alloc.x[n][i]}});
      }
      levels.push_back({{"level", n + 1},
                        {"gain_db", scheme.level(n + 1).gain_db},
                        {"curve", points},
                        {"operating_points", dots}});
    }
    schemes.push_back({{"scheme", scheme.name}, {"levels", levels}});
  }
  if (format == OutputFormat::csv) return csv;
  return dump({{"figure", "efficiency_vs_beta0"}, {"schemes", schemes}});
}

std::string run_table4(const Scenario& s, OutputFormat format) {
  s.validate();
  const NetworkLayout layout = s.layout();

  struct Row {
    Scheme scheme;
    AllocationResult alloc;
  };
  std::vector<Row> rows;
  for (Scheme& scheme : compared_schemes(s)) {
    const EfficiencyMatrix eff = efficiency_matrix(s.link, layout, scheme, s.circles);
    AllocationResult alloc = solve_equal_rate(scheme, eff);
    rows.push_back({std::move(scheme), std::move(alloc)});
  }
  const double baseline = rows.front().alloc.overall_efficiency;
  auto improvement = [baseline](double overall) { return 100.0 * (overall / baseline - 1.0); };

  if (format == OutputFormat::csv) {
    std::string csv = "scheme,level";
    for (double c : s.circles) csv += "," + num(c);
    csv += ",level_total_percent,common_rate,overall_efficiency,improvement_percent\n";
    for (const Row& row : rows) {
      const auto totals = row.alloc.level_totals();
      const std::string tail = fmt::format(",{},{},{}", num(row.alloc.common_rate),
                                           num(row.alloc.overall_efficiency),
                                           num(improvement(row.alloc.overall_efficiency)));
      for (std::size_t n = 0; n < row.alloc.x.size(); ++n) {
        csv += fmt::format("{},{}", row.scheme.name, n + 1);
        for (double v : row.alloc.x[n]) csv += "," + num(100.0 * v);
        csv += "," + num(100.0 * totals[n]) + tail + "\n";
      }
      csv += fmt::format("{},T", row.scheme.name);
      double all = 0.0;
      for (double v : row.alloc.circle_totals()) {
        csv += "," + num(100.0 * v);
        all += v;
      }
      csv += "," + num(100.0 * all) + tail + "\n";
    }
    return csv;
  }

  json schemes = json::array();
  for (const Row& row : rows) {
    json matrix = json::array();
    for (const auto& r : row.alloc.x) matrix.push_back(percent(r));
    schemes.push_back({{"scheme", row.scheme.name},
                       {"gains_db", [&] {
                          std::vector<double> g;
                          for (const Level& lv : row.scheme.levels) g.push_back(lv.gain_db);
                          return g;
                        }()},
                       {"allocation_percent", matrix},
                       {"level_totals_percent", percent(row.alloc.level_totals())},
                       {"circle_totals_percent", percent(row.alloc.circle_totals())},
                       {"cap_binding", row.alloc.cap_binding},
                       {"common_rate", row.alloc.common_rate},
                       {"overall_efficiency", row.alloc.overall_efficiency},
                       {"improvement_percent", improvement(row.alloc.overall_efficiency)}});
  }
  return dump({{"table", "equal_rate_allocation"}, {"circles", s.circles}, {"schemes", schemes}});
}

std::string run_design(const Scenario& s, OutputFormat format) {
  s.validate();
  const NetworkLayout layout = s.layout();

  json anchors = json::array();
  std::string csv = "section,key,beta0,value\n";
  for (std::size_t a = 0; a < s.design_beta0.size(); ++a) {
    const double beta0 = s.design_beta0[a];
    const double fraction = s.design_fractions[a];
    const double gamma_db = design_gamma(s.link, layout, beta0, fraction);
    const double ceiling = efficiency_at_gamma(s.link, layout, beta0, 0.0);
    anchors.push_back({{"beta0", beta0},
                       {"fraction", fraction},
                       {"gamma_db", gamma_db},
                       {"ceiling_efficiency", ceiling}});
    csv += fmt::format("anchor,gamma_db@{},{},{}\n", num(fraction), num(beta0), num(gamma_db));
  }

  const Scheme scheme = s.scheme(SchemeKind::mlsfr);
  for (const Level& lv : scheme.levels) {
    csv += fmt::format("level,{},,{}\n", lv.index, num(lv.gain_db));
  }
  const auto bands = scheme.sub_bands();
  for (std::size_t m = 0; m < bands.size(); ++m) {
    csv += fmt::format("sub_band_gamma_db,{},,{}\n", m + 1, num(bands[m].gamma_db()));
  }
  if (format == OutputFormat::csv) return csv;
  return dump({{"anchors", anchors}, {"scheme", scheme_json(scheme)}});
}

std::string run_alloc(const Scenario& s, OutputFormat format) {
  s.validate();
  const Scheme scheme = s.scheme(s.alloc_scheme);
  const GreedyResult result =
      greedy_allocate(s.alloc_requests, scheme, s.coverage_margin, s.link.pathloss_slope);

  std::string csv = "ue,beta0,demand,status,level,band_list\n";
  json grants = json::array();
  for (std::size_t u = 0; u < result.grants.size(); ++u) {
    const UeGrant& g = result.grants[u];
    const AllocationRequest& req = s.alloc_requests[u];
    std::string list;
    for (std::size_t n : g.band_list) list += (list.empty() ? "" : " ") + std::to_string(n);
    csv += fmt::format("{},{},{},{},{},{}\n", u + 1, num(req.beta0), num(req.demand),
                       to_string(g.status), g.level ? std::to_string(*g.level) : "", list);
    grants.push_back({{"ue", u + 1},
                      {"beta0", req.beta0},
                      {"demand", req.demand},
                      {"status", to_string(g.status)},
                      {"level", g.level ? json(*g.level) : json(nullptr)},
                      {"band_list", g.band_list}});
  }
  if (format == OutputFormat::csv) return csv;

  json coverage = json::array();
  for (std::size_t n = 1; n <= scheme.size(); ++n) {
    coverage.push_back(coverage_beta(scheme, n, s.coverage_margin, s.link.pathloss_slope));
  }
  return dump({{"scheme", scheme_json(scheme)},
               {"coverage_beta0", coverage},
               {"grants", grants},
               {"remaining_capacity", result.remaining}});
}

std::string run_pairing(const Scenario& s, OutputFormat format) {
  s.validate();
  const PairingComparison cmp =
      evaluate_pairings(s.pairing_edge_beta0, s.pairing_center_beta0, s.link, s.layout());

  const std::array<const char*, 4> names = {"T11", "T12", "T21", "T22"};
  const std::array<double, 4> positions = {s.pairing_edge_beta0[0], s.pairing_edge_beta0[1],
                                           s.pairing_center_beta0[0], s.pairing_center_beta0[1]};
  if (format == OutputFormat::csv) {
    std::string csv = "pattern,ue,beta0,efficiency\n";
    for (const auto& [label, eval] : {std::pair{"straight", &cmp.straight},
                                      std::pair{"switched", &cmp.switched}}) {
      for (std::size_t u = 0; u < 4; ++u) {
        csv += fmt::format("{},{},{},{}\n", label, names[u], num(positions[u]),
                           num(eval->efficiency[u]));
      }
      csv += fmt::format("{},min,,{}\n", label, num(eval->min_efficiency));
    }
    csv += fmt::format("better,{},,\n", to_string(cmp.better));
    return csv;
  }

  auto pattern = [&](const PatternEvaluation& eval) {
    json per_ue = json::object();
    for (std::size_t u = 0; u < 4; ++u) per_ue[names[u]] = eval.efficiency[u];
    return json{{"efficiency", per_ue}, {"min_efficiency", eval.min_efficiency}};
  };
  json ues = json::object();
  for (std::size_t u = 0; u < 4; ++u) ues[names[u]] = positions[u];
  return dump({{"positions_beta0", ues},
               {"straight", pattern(cmp.straight)},
               {"switched", pattern(cmp.switched)},
               {"better", to_string(cmp.better)},
               {"random_success_probability",
                {{"one_neighbor", optimal_pattern_probability(1)},
                 {"six_neighbors", optimal_pattern_probability(6)}}}});
}

}  // namespace mlsfr
