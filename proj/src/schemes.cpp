#include "mlsfr/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace mlsfr {

namespace {

void check_gamma(double gamma_db) {
  if (std::isnan(gamma_db) || gamma_db > 0.0 || !std::isfinite(gamma_db)) {
    throw std::invalid_argument(
        fmt::format("gamma must be finite and <= 0 dB, got {}", gamma_db));
  }
}

}  // namespace

const char* to_string(Role role) { return role == Role::primary ? "primary" : "secondary"; }

const Level& Scheme::level(std::size_t index) const {
  if (index < 1 || index > levels.size()) {
    throw std::out_of_range(fmt::format("level {} not in 1..{}", index, levels.size()));
  }
  return levels[index - 1];
}

std::vector<SubBand> Scheme::sub_bands() const {
  std::vector<SubBand> bands;
  if (levels.size() == 1) {
    bands.push_back({levels[0].gain_db, levels[0].gain_db});
    return bands;
  }
  for (std::size_t m = 1; m <= sub_band_count; ++m) {
    const Level& primary = level(m);
    bands.push_back({primary.gain_db, level(primary.partner_index).gain_db});
  }
  return bands;
}

void Scheme::validate() const {
  auto fail = [this](const std::string& what) {
    throw std::logic_error(fmt::format("scheme '{}': {}", name, what));
  };
  if (levels.empty()) fail("no levels");
  if (levels.front().gain_db != 0.0) fail("level 1 must have 0 dB gain");

  double cap_sum = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Level& lv = levels[i];
    if (lv.index != i + 1) fail("level indices must be 1..L in order");
    if (!(lv.gain_db <= 0.0)) fail("gains must be <= 0 dB");
    if (i > 0 && lv.gain_db > levels[i - 1].gain_db) fail("gains must be non-increasing");
    if (!(lv.bandwidth_cap > 0.0 && lv.bandwidth_cap <= 1.0)) fail("caps must lie in (0, 1]");
    if (lv.partner_index < 1 || lv.partner_index > levels.size()) fail("partner out of range");
    if (level(lv.partner_index).partner_index != lv.index) fail("partner relation not an involution");
    cap_sum += lv.bandwidth_cap;
  }
  if (std::abs(cap_sum - 1.0) > 1e-12) fail("caps must sum to 1");

  if (levels.size() == 1) return;

  if (levels.size() != 2 * sub_band_count) fail("level count must be 2N");
  const std::size_t count = levels.size();
  for (const Level& lv : levels) {
    const bool upper = lv.index <= sub_band_count;
    if ((lv.role == Role::primary) != upper) fail("levels 1..N must be primary, N+1..2N secondary");
    if (lv.partner_index != count + 1 - lv.index) fail("pairing must match highest with lowest");
    const Level& partner = level(lv.partner_index);
    if (partner.role == lv.role) fail("partners must have opposite roles");
    if (lv.role == Role::primary && std::abs(2.0 * lv.bandwidth_cap - partner.bandwidth_cap) > 1e-12) {
      fail("primary cap must be half its partner's cap");
    }
  }

  // l_1 <= ... <= l_N <= h_N <= ... <= h_1
  const auto bands = sub_bands();
  for (std::size_t m = 0; m < bands.size(); ++m) {
    if (bands[m].secondary_gain_db > bands[m].primary_gain_db) fail("secondary PDL above primary");
    if (m + 1 < bands.size()) {
      if (bands[m].secondary_gain_db > bands[m + 1].secondary_gain_db) fail("secondary PDLs out of order");
      if (bands[m + 1].primary_gain_db > bands[m].primary_gain_db) fail("primary PDLs out of order");
    }
  }
}

Scheme make_reuse1() {
  Scheme scheme;
  scheme.name = "reuse-1";
  scheme.sub_band_count = 1;
  scheme.levels.push_back({1, 0.0, Role::primary, 1, 1.0});
  return scheme;
}

Scheme make_sfr2(double gamma_db) {
  Scheme scheme = make_mlsfr(1, gamma_db);
  scheme.name = "SFR-2";
  return scheme;
}

Scheme make_mlsfr(std::size_t n_subbands, double gamma_min_db) {
  if (n_subbands == 0) {
    throw std::invalid_argument("ML-SFR needs at least one sub-band");
  }
  check_gamma(gamma_min_db);

  const std::size_t count = 2 * n_subbands;
  const double step = gamma_min_db / static_cast<double>(count - 1);
  const double n = static_cast<double>(n_subbands);

  Scheme scheme;
  scheme.name = fmt::format("SFR-{}", count);
  scheme.sub_band_count = n_subbands;
  scheme.levels.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    Level lv;
    lv.index = i;
    lv.gain_db = i == 1 ? 0.0 : (i == count ? gamma_min_db : step * static_cast<double>(i - 1));
    lv.role = i <= n_subbands ? Role::primary : Role::secondary;
    lv.partner_index = count + 1 - i;
    lv.bandwidth_cap = lv.role == Role::primary ? 1.0 / (3.0 * n) : 2.0 / (3.0 * n);
    scheme.levels.push_back(lv);
  }
  scheme.validate();
  return scheme;
}

InterferenceProfile interference_profile(const Scheme& scheme, std::size_t level_index) {
  const Level& lv = scheme.level(level_index);
  return {lv.gain_db, scheme.level(lv.partner_index).gain_db, lv.gain_db};
}

double coverage_beta(const Scheme& scheme, std::size_t level_index, double margin,
                     double pathloss_slope) {
  if (!(margin > 0.0) || !std::isfinite(margin)) {
    throw std::invalid_argument("coverage margin must be positive");
  }
  if (!(pathloss_slope > 0.0)) {
    throw std::invalid_argument("path-loss slope must be positive");
  }
  const double gain_db = scheme.level(level_index).gain_db;
  return std::min(1.0, margin * std::pow(10.0, gain_db / pathloss_slope));
}

double design_gamma(const LinkParams& params, const NetworkLayout& layout, double beta0,
                    double efficiency_fraction) {
  if (!(efficiency_fraction > 0.0 && efficiency_fraction < 1.0)) {
    throw std::invalid_argument(
        fmt::format("efficiency fraction must lie in (0, 1), got {}", efficiency_fraction));
  }
  const double ceiling = efficiency_at_gamma(params, layout, beta0, 0.0);
  const double target = efficiency_fraction * ceiling;
  if (efficiency_at_gamma(params, layout, beta0, 1.0) > target) {
    throw std::domain_error(fmt::format(
        "efficiency fraction {} is below the reuse-1 level at beta0={}", efficiency_fraction, beta0));
  }

  // Efficiency falls monotonically as the linear ratio grows.
  double lo = 0.0;
  double hi = 1.0;
  double mid = 0.5;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double eta = efficiency_at_gamma(params, layout, beta0, mid);
    if (eta == target || hi - lo <= 1e-16) break;
    if (eta > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return linear_to_db(mid);
}

}  // namespace mlsfr
