#include "mlsfr/linkmodel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mlsfr {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double density_dbm_per_mhz(double total_dbm, double bandwidth_mhz) {
  if (!(bandwidth_mhz > 0.0)) {
    throw std::invalid_argument("bandwidth must be positive");
  }
  return total_dbm - linear_to_db(bandwidth_mhz);
}

double LinkParams::k0_db() const {
  // dBm/MHz -> dBm/Hz is -60 dB.
  return (tx_density_dbm_per_mhz - 60.0) - noise_density_dbm_per_hz;
}

double LinkParams::k0_linear() const { return db_to_linear(k0_db()); }

void LinkParams::validate() const {
  if (!std::isfinite(noise_density_dbm_per_hz) || !std::isfinite(tx_density_dbm_per_mhz)) {
    throw std::invalid_argument("power densities must be finite");
  }
  if (!(bandwidth_mhz > 0.0) || !std::isfinite(bandwidth_mhz)) {
    throw std::invalid_argument("bandwidth must be positive and finite");
  }
  if (!std::isfinite(pathloss_intercept_db)) {
    throw std::invalid_argument("path-loss intercept must be finite");
  }
  if (!(pathloss_slope > 0.0) || !std::isfinite(pathloss_slope)) {
    throw std::invalid_argument("path-loss slope must be positive and finite");
  }
}

double path_loss_db(const LinkParams& params, double d_km) {
  if (!(d_km > 0.0)) {
    throw std::domain_error("path loss needs a positive distance, got " + std::to_string(d_km));
  }
  return params.pathloss_intercept_db + params.pathloss_slope * std::log10(d_km);
}

double path_loss_linear(const LinkParams& params, double d_km) {
  return db_to_linear(path_loss_db(params, d_km));
}

void InterferenceProfile::validate() const {
  for (double g : {serving_gain_db, ring1_gain_db, ring2_gain_db}) {
    if (std::isnan(g) || g > 0.0) {
      throw std::invalid_argument("PDL gains must be <= 0 dB");
    }
  }
}

LinkBudget link_budget(const LinkParams& params, const InterferenceProfile& profile,
                       const CellDistances& dists) {
  profile.validate();
  const double k0 = params.k0_linear();

  double ring1 = 0.0;
  double ring2 = 0.0;
  for (std::size_t k = 0; k < kRingSize; ++k) {
    ring1 += 1.0 / path_loss_linear(params, dists[kFirstRingBegin + k]);
    ring2 += 1.0 / path_loss_linear(params, dists[kSecondRingBegin + k]);
  }

  LinkBudget budget;
  budget.signal = db_to_linear(profile.serving_gain_db) * k0 /
                  path_loss_linear(params, dists[kServingCell]);
  budget.interference =
      k0 * (db_to_linear(profile.ring1_gain_db) * ring1 + db_to_linear(profile.ring2_gain_db) * ring2);
  return budget;
}

double spectral_efficiency(const LinkParams& params, const InterferenceProfile& profile,
                           const CellDistances& dists) {
  return std::log2(1.0 + link_budget(params, profile, dists).sinr());
}

double efficiency_at_gamma(const LinkParams& params, const NetworkLayout& layout, double beta0,
                           double gamma_linear) {
  if (!(gamma_linear >= 0.0 && gamma_linear <= 1.0)) {
    throw std::invalid_argument("linear gamma must lie in [0, 1]");
  }
  const InterferenceProfile profile{0.0, linear_to_db(gamma_linear), 0.0};
  return spectral_efficiency(params, profile, distances(layout, beta0));
}

std::vector<SweepPoint> gamma_sweep(const LinkParams& params, const NetworkLayout& layout,
                                    double beta0, std::span<const double> gamma_grid_db) {
  if (gamma_grid_db.empty()) {
    throw std::invalid_argument("gamma grid is empty");
  }
  const CellDistances dists = distances(layout, beta0);
  std::vector<SweepPoint> curve;
  curve.reserve(gamma_grid_db.size());
  for (double gamma_db : gamma_grid_db) {
    if (std::isnan(gamma_db) || gamma_db > 0.0) {
      throw std::invalid_argument("gamma must be <= 0 dB");
    }
    curve.push_back({gamma_db, spectral_efficiency(params, {0.0, gamma_db, 0.0}, dists)});
  }
  return curve;
}

}  // namespace mlsfr
