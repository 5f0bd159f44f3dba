#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mlsfr/hexgrid.hpp"
#include "mlsfr/linkmodel.hpp"

namespace mlsfr {

enum class Role { primary, secondary };

const char* to_string(Role role);

/// One power density limit (PDL) level, seen from the serving cell.
/// Gains are relative to the highest PDL, so level 1 is always 0 dB.
struct Level {
  std::size_t index = 1;  // 1-based, by descending gain
  double gain_db = 0.0;
  Role role = Role::primary;
  std::size_t partner_index = 1;  // level on the same sub-band in the opposite role
  double bandwidth_cap = 1.0;     // fraction of the whole carrier
};

/// Primary and secondary PDL of one sub-band and their ratio.
struct SubBand {
  double primary_gain_db = 0.0;
  double secondary_gain_db = 0.0;

  double gamma_db() const { return secondary_gain_db - primary_gain_db; }
};

/// A frequency reuse scheme: reuse-1, SFR-2 or a 2N-level multi-level SFR.
///
/// Sub-band m (1-based) carries primary level m and secondary level 2N+1-m,
/// so the strongest primary PDL shares its sub-band with the weakest
/// secondary PDL. Every primary level gets 1/(3N) of the carrier and every
/// secondary level 2/(3N), which is how a 3-cell reuse pattern splits each
/// sub-band between one primary and two secondary thirds.
struct Scheme {
  std::string name;
  std::vector<Level> levels;
  std::size_t sub_band_count = 1;

  const Level& level(std::size_t index) const;
  std::size_t size() const { return levels.size(); }

  /// Sub-bands in order m = 1..N.
  std::vector<SubBand> sub_bands() const;

  /// Throws std::logic_error if any structural invariant is broken.
  void validate() const;
};

Scheme make_reuse1();
Scheme make_sfr2(double gamma_db);

/// 2N levels spaced uniformly in dB from 0 down to gamma_min_db.
Scheme make_mlsfr(std::size_t n_subbands, double gamma_min_db);

/// Serving cell and second ring at the level's own PDL, first ring at the
/// partner level's PDL.
InterferenceProfile interference_profile(const Scheme& scheme, std::size_t level_index);

inline constexpr double kDefaultCoverageMargin = 1.45;

/// Largest beta0 a level may serve: the equal-received-power contour
/// margin * 10^(gain / slope), capped at the cell edge.
double coverage_beta(const Scheme& scheme, std::size_t level_index, double margin,
                     double pathloss_slope = 37.6);

/// Secondary-to-primary ratio (dB) at which the efficiency of a UE at beta0
/// drops to `efficiency_fraction` of its value with a silent first ring.
/// Found by bisection on the linear ratio.
double design_gamma(const LinkParams& params, const NetworkLayout& layout, double beta0,
                    double efficiency_fraction);

}  // namespace mlsfr
