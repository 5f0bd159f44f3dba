#pragma once

#include <span>
#include <vector>

#include "mlsfr/hexgrid.hpp"

namespace mlsfr {

double db_to_linear(double db);
double linear_to_db(double linear);

/// Downlink link budget. L(d) = intercept + slope * log10(d), d in km.
///
/// The default transmit density is 50 dBm spread over a 20 MHz carrier,
/// rounded to 37 dBm/MHz, which puts k0 = p0 / N0 at 146 dB.
struct LinkParams {
  double noise_density_dbm_per_hz = -169.0;
  double tx_density_dbm_per_mhz = 37.0;
  double bandwidth_mhz = 20.0;
  double pathloss_intercept_db = 128.1;
  double pathloss_slope = 37.6;

  /// Transmit density over noise density, both per Hz, in dB.
  double k0_db() const;
  double k0_linear() const;

  void validate() const;
};

/// Converts a total carrier power into a per-MHz density.
double density_dbm_per_mhz(double total_dbm, double bandwidth_mhz);

double path_loss_db(const LinkParams& params, double d_km);
double path_loss_linear(const LinkParams& params, double d_km);

/// PDL gains (dB, relative to the highest PDL) seen by one UE on one band:
/// its own cell, the six first-ring cells, and the six second-ring cells.
/// -infinity is allowed and means the cells are silent on that band.
struct InterferenceProfile {
  double serving_gain_db = 0.0;
  double ring1_gain_db = 0.0;
  double ring2_gain_db = 0.0;

  void validate() const;
};

/// Signal, interference and noise powers, all normalized to the noise power
/// N0 * B in the UE receiver.
struct LinkBudget {
  double signal = 0.0;
  double interference = 0.0;

  double sinr() const { return signal / (interference + 1.0); }
};

LinkBudget link_budget(const LinkParams& params, const InterferenceProfile& profile,
                       const CellDistances& dists);

/// Shannon bound log2(1 + S / (I + N)) for a flat channel, in bit/s/Hz.
double spectral_efficiency(const LinkParams& params, const InterferenceProfile& profile,
                           const CellDistances& dists);

/// Efficiency with the first ring at linear power ratio gamma_linear (in [0, 1])
/// and every other cell at full PDL.
double efficiency_at_gamma(const LinkParams& params, const NetworkLayout& layout, double beta0,
                           double gamma_linear);

struct SweepPoint {
  double gamma_db = 0.0;
  double efficiency = 0.0;
};

/// Efficiency against gamma for a UE at beta0, with the serving and second-ring
/// cells on the primary PDL and the first ring on the secondary PDL.
std::vector<SweepPoint> gamma_sweep(const LinkParams& params, const NetworkLayout& layout,
                                    double beta0, std::span<const double> gamma_grid_db);

}  // namespace mlsfr
