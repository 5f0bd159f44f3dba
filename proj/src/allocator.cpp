#include "mlsfr/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "mlsfr/simplex.hpp"

namespace mlsfr {

std::vector<double> default_circles() {
  std::vector<double> circles;
  for (int i = 1; i <= 8; ++i) circles.push_back(i / 8.0);
  return circles;
}

EfficiencyMatrix efficiency_matrix(const LinkParams& params, const NetworkLayout& layout,
                                   const Scheme& scheme, std::span<const double> circles) {
  if (circles.empty()) throw std::invalid_argument("no circles given");
  EfficiencyMatrix eff;
  eff.circles.assign(circles.begin(), circles.end());

  std::vector<CellDistances> dists;
  dists.reserve(circles.size());
  for (double beta0 : circles) dists.push_back(distances(layout, beta0));

  eff.eta.resize(scheme.size());
  for (std::size_t n = 1; n <= scheme.size(); ++n) {
    const InterferenceProfile profile = interference_profile(scheme, n);
    auto& row = eff.eta[n - 1];
    row.reserve(circles.size());
    for (const CellDistances& d : dists) row.push_back(spectral_efficiency(params, profile, d));
  }
  return eff;
}

std::vector<double> AllocationResult::level_totals() const {
  std::vector<double> totals;
  for (const auto& row : x) {
    double sum = 0.0;
    for (double v : row) sum += v;
    totals.push_back(sum);
  }
  return totals;
}

std::vector<double> AllocationResult::circle_totals() const {
  std::vector<double> totals(x.empty() ? 0 : x.front().size(), 0.0);
  for (const auto& row : x) {
    for (std::size_t i = 0; i < row.size(); ++i) totals[i] += row[i];
  }
  return totals;
}

AllocationResult solve_equal_rate(const Scheme& scheme, const EfficiencyMatrix& eff) {
  const std::size_t levels = scheme.size();
  const std::size_t circles = eff.circle_count();
  if (eff.level_count() != levels) {
    throw std::invalid_argument("efficiency matrix does not match the scheme");
  }
  for (const auto& row : eff.eta) {
    if (row.size() != circles) throw std::invalid_argument("ragged efficiency matrix");
    for (double v : row) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("efficiencies must be positive and finite");
      }
    }
  }

  // Variables: x[n][i] level-major, then R. Rows: one per circle
  // (R - sum_n eta x <= 0), then one per level cap.
  const std::size_t rate_col = levels * circles;
  LinearProgram lp(circles + levels, rate_col + 1);
  for (std::size_t i = 0; i < circles; ++i) {
    for (std::size_t n = 0; n < levels; ++n) lp.at(i, n * circles + i) = -eff.eta[n][i];
    lp.at(i, rate_col) = 1.0;
  }
  for (std::size_t n = 0; n < levels; ++n) {
    for (std::size_t i = 0; i < circles; ++i) lp.at(circles + n, n * circles + i) = 1.0;
    lp.b[circles + n] = scheme.level(n + 1).bandwidth_cap;
  }
  lp.c[rate_col] = 1.0;

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) {
    throw std::logic_error("equal-rate allocation is unbounded");
  }

  AllocationResult result;
  result.common_rate = sol.x[rate_col];
  result.x.assign(levels, std::vector<double>(circles, 0.0));
  for (std::size_t n = 0; n < levels; ++n) {
    for (std::size_t i = 0; i < circles; ++i) result.x[n][i] = sol.x[n * circles + i];
  }

  // A circle served above R gives back the surplus, which only loosens caps.
  for (std::size_t i = 0; i < circles; ++i) {
    double rate = 0.0;
    for (std::size_t n = 0; n < levels; ++n) rate += result.x[n][i] * eff.eta[n][i];
    if (rate > result.common_rate && rate > 0.0) {
      const double scale = result.common_rate / rate;
      for (std::size_t n = 0; n < levels; ++n) result.x[n][i] *= scale;
    }
  }

  result.overall_efficiency = static_cast<double>(circles) * result.common_rate;
  const auto totals = result.level_totals();
  for (std::size_t n = 0; n < levels; ++n) {
    result.cap_binding.push_back(totals[n] >= scheme.level(n + 1).bandwidth_cap - 1e-9);
  }
  return result;
}

const char* to_string(GrantStatus status) {
  switch (status) {
    case GrantStatus::granted: return "granted";
    case GrantStatus::out_of_coverage: return "out of coverage";
    case GrantStatus::insufficient_resources: return "insufficient resources";
  }
  return "unknown";
}

std::vector<std::size_t> band_list(const Scheme& scheme, double beta0, double margin,
                                   double pathloss_slope) {
  struct Candidate {
    double coverage;
    double gain_db;
    std::size_t index;
  };
  std::vector<Candidate> covering;
  for (std::size_t n = 1; n <= scheme.size(); ++n) {
    const double coverage = coverage_beta(scheme, n, margin, pathloss_slope);
    if (coverage >= beta0) covering.push_back({coverage, scheme.level(n).gain_db, n});
  }
  std::sort(covering.begin(), covering.end(), [](const Candidate& a, const Candidate& b) {
    if (a.coverage != b.coverage) return a.coverage < b.coverage;
    if (a.gain_db != b.gain_db) return a.gain_db < b.gain_db;
    return a.index > b.index;
  });
  std::vector<std::size_t> list;
  for (const auto& c : covering) list.push_back(c.index);
  return list;
}

GreedyResult greedy_allocate(std::span<const AllocationRequest> requests, const Scheme& scheme,
                             double margin, double pathloss_slope) {
  GreedyResult result;
  for (const Level& lv : scheme.levels) result.remaining.push_back(lv.bandwidth_cap);

  for (const AllocationRequest& req : requests) {
    if (!(req.beta0 > 0.0 && req.beta0 <= 1.0)) {
      throw std::invalid_argument(fmt::format("request beta0 {} not in (0, 1]", req.beta0));
    }
    if (!(req.demand > 0.0) || !std::isfinite(req.demand)) {
      throw std::invalid_argument("request demand must be positive");
    }

    UeGrant grant;
    grant.band_list = band_list(scheme, req.beta0, margin, pathloss_slope);
    if (grant.band_list.empty()) {
      grant.status = GrantStatus::out_of_coverage;
    } else {
      grant.status = GrantStatus::insufficient_resources;
      for (std::size_t n : grant.band_list) {
        double& room = result.remaining[n - 1];
        if (room + 1e-12 >= req.demand) {
          room = std::max(0.0, room - req.demand);
          grant.status = GrantStatus::granted;
          grant.level = n;
          break;
        }
      }
    }
    result.grants.push_back(std::move(grant));
  }
  return result;
}

const char* to_string(PairingChoice choice) {
  switch (choice) {
    case PairingChoice::straight: return "straight";
    case PairingChoice::switched: return "switched";
    case PairingChoice::tie: return "tie";
  }
  return "unknown";
}

namespace {

struct PairingUe {
  Point2 position;
  std::size_t cell;     // index into the layout
  double tx_power = 0;  // noise-normalized, linear
};

}  // namespace

PairingComparison evaluate_pairings(std::array<double, 2> edge_beta0,
                                    std::array<double, 2> center_beta0, const LinkParams& params,
                                    const NetworkLayout& layout) {
  constexpr std::size_t cell_a = kServingCell;
  constexpr std::size_t cell_b = kFirstRingBegin;
  const Point2 corner = vertex_a(layout);
  const double r = layout.cell_radius_km;
  const double k0 = params.k0_linear();
  const double edge_loss = path_loss_linear(params, r);

  auto make_ue = [&](double beta0, std::size_t cell) {
    if (!(beta0 > 0.0 && beta0 <= 1.0)) {
      throw std::invalid_argument(fmt::format("pairing beta0 {} not in (0, 1]", beta0));
    }
    const Point2 bs = layout.centers[cell];
    const double span = distance(bs, corner);
    const double t = beta0 * r / span;
    PairingUe ue;
    ue.position = {bs.x + t * (corner.x - bs.x), bs.y + t * (corner.y - bs.y)};
    ue.cell = cell;
    ue.tx_power = k0 * path_loss_linear(params, beta0 * r) / edge_loss;
    return ue;
  };

  const std::array<PairingUe, 4> ues = {make_ue(edge_beta0[0], cell_a), make_ue(edge_beta0[1], cell_a),
                                        make_ue(center_beta0[0], cell_b),
                                        make_ue(center_beta0[1], cell_b)};

  auto efficiency = [&](const PairingUe& victim, const PairingUe& aggressor) {
    const double signal =
        victim.tx_power / path_loss_linear(params, distance(victim.position, layout.centers[victim.cell]));
    const double interference =
        aggressor.tx_power /
        path_loss_linear(params, distance(victim.position, layout.centers[aggressor.cell]));
    return std::log2(1.0 + signal / (interference + 1.0));
  };

  auto evaluate = [&](std::size_t partner_of_t11, std::size_t partner_of_t12) {
    PatternEvaluation eval;
    eval.efficiency[0] = efficiency(ues[0], ues[partner_of_t11]);
    eval.efficiency[1] = efficiency(ues[1], ues[partner_of_t12]);
    eval.efficiency[partner_of_t11] = efficiency(ues[partner_of_t11], ues[0]);
    eval.efficiency[partner_of_t12] = efficiency(ues[partner_of_t12], ues[1]);
    eval.min_efficiency = *std::min_element(eval.efficiency.begin(), eval.efficiency.end());
    return eval;
  };

  PairingComparison cmp;
  cmp.straight = evaluate(2, 3);
  cmp.switched = evaluate(3, 2);

  const double a = cmp.straight.min_efficiency;
  const double b = cmp.switched.min_efficiency;
  if (std::abs(a - b) <= 1e-12 * std::max(a, b)) {
    cmp.better = PairingChoice::tie;
  } else {
    cmp.better = a > b ? PairingChoice::straight : PairingChoice::switched;
  }
  return cmp;
}

double optimal_pattern_probability(unsigned neighbor_count) {
  return std::ldexp(1.0, -static_cast<int>(neighbor_count));
}

}  // namespace mlsfr
