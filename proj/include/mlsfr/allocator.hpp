#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlsfr/hexgrid.hpp"
#include "mlsfr/linkmodel.hpp"
#include "mlsfr/schemes.hpp"

namespace mlsfr {

/// Eight UE circles at beta0 = i/8.
std::vector<double> default_circles();

/// eta[level][circle] in bit/s/Hz.
struct EfficiencyMatrix {
  std::vector<double> circles;
  std::vector<std::vector<double>> eta;

  std::size_t level_count() const { return eta.size(); }
  std::size_t circle_count() const { return circles.size(); }
};

EfficiencyMatrix efficiency_matrix(const LinkParams& params, const NetworkLayout& layout,
                                   const Scheme& scheme, std::span<const double> circles);

struct AllocationResult {
  std::vector<std::vector<double>> x;  // bandwidth fraction [level][circle]
  double common_rate = 0.0;            // bit/s/Hz delivered to every circle
  double overall_efficiency = 0.0;     // circle count * common_rate
  std::vector<bool> cap_binding;       // per level

  std::vector<double> level_totals() const;
  std::vector<double> circle_totals() const;
};

/// Maximizes the common per-circle rate R subject to
///   sum_n x[n][i] * eta[n][i] = R   for every circle i,
///   sum_i x[n][i] <= cap_n          for every level n,
///   x >= 0.
AllocationResult solve_equal_rate(const Scheme& scheme, const EfficiencyMatrix& eff);

// --- coverage-ordered first-fit allocation ---------------------------------

struct AllocationRequest {
  double beta0 = 1.0;
  double demand = 0.0;  // fraction of the carrier
};

enum class GrantStatus { granted, out_of_coverage, insufficient_resources };

const char* to_string(GrantStatus status);

struct UeGrant {
  GrantStatus status = GrantStatus::granted;
  std::optional<std::size_t> level;  // set when granted
  std::vector<std::size_t> band_list;  // covering levels, smallest coverage first
};

struct GreedyResult {
  std::vector<UeGrant> grants;        // one per request, in request order
  std::vector<double> remaining;      // per level
};

/// Levels whose coverage reaches beta0, smallest coverage first. Levels with
/// equal coverage (clipped at the cell edge) are ordered by ascending gain.
std::vector<std::size_t> band_list(const Scheme& scheme, double beta0, double margin,
                                   double pathloss_slope = 37.6);

/// Serves requests in order. Each UE takes its whole demand from the first
/// level in its band list that still has room.
GreedyResult greedy_allocate(std::span<const AllocationRequest> requests, const Scheme& scheme,
                             double margin, double pathloss_slope = 37.6);

// --- two-cell interference pattern -----------------------------------------

enum class PairingChoice { straight, switched, tie };

const char* to_string(PairingChoice choice);

struct PatternEvaluation {
  // T11, T12 (edge UEs of cell A) then T21, T22 (centre UEs of cell B).
  std::array<double, 4> efficiency{};
  double min_efficiency = 0.0;
};

struct PairingComparison {
  PatternEvaluation straight;  // T11-T21 share f1, T12-T22 share f2
  PatternEvaluation switched;  // T11-T22 share f1, T12-T21 share f2
  PairingChoice better = PairingChoice::tie;
};

/// Compares the two ways two edge UEs of cell 0 can share two frequencies
/// with two centre UEs of neighbour cell 1. Each UE sits on the line from
/// its base station to the corner the two cells share, and every downlink
/// transmission uses the power that lands a UE at the cell edge on exactly
/// the full-PDL SNR, so farther UEs get (and radiate) more power.
PairingComparison evaluate_pairings(std::array<double, 2> edge_beta0,
                                    std::array<double, 2> center_beta0, const LinkParams& params,
                                    const NetworkLayout& layout);

/// Chance that independent random choices on `neighbor_count` links all land
/// on the better pattern: 2^-neighbor_count.
double optimal_pattern_probability(unsigned neighbor_count);

}  // namespace mlsfr
