#include "mlsfr/hexgrid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mlsfr {

namespace {

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

Point2 polar(double radius, double angle_rad) {
  return {radius * std::cos(angle_rad), radius * std::sin(angle_rad)};
}

void check_beta0(double beta0) {
  if (!(beta0 > 0.0 && beta0 <= 1.0)) {
    throw std::invalid_argument("beta0 must lie in (0, 1], got " + std::to_string(beta0));
  }
}

}  // namespace

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

NetworkLayout build_layout(double cell_radius_km) {
  if (!(cell_radius_km > 0.0) || !std::isfinite(cell_radius_km)) {
    throw std::invalid_argument("cell radius must be positive and finite");
  }
  NetworkLayout layout;
  layout.cell_radius_km = cell_radius_km;
  layout.ue_axis_angle_rad = deg_to_rad(60.0);

  const double ring1 = std::sqrt(3.0) * cell_radius_km;
  const double ring2 = 3.0 * cell_radius_km;
  layout.centers[kServingCell] = {0.0, 0.0};
  for (std::size_t k = 0; k < kRingSize; ++k) {
    const auto step = static_cast<double>(k) * 60.0;
    layout.centers[kFirstRingBegin + k] = polar(ring1, deg_to_rad(30.0 - step));
    layout.centers[kSecondRingBegin + k] = polar(ring2, deg_to_rad(60.0 - step));
  }
  return layout;
}

Point2 vertex_a(const NetworkLayout& layout) {
  return polar(layout.cell_radius_km, layout.ue_axis_angle_rad);
}

UePosition place_ue(const NetworkLayout& layout, double beta0) {
  check_beta0(beta0);
  return {beta0, polar(beta0 * layout.cell_radius_km, layout.ue_axis_angle_rad)};
}

CellDistances distances(const NetworkLayout& layout, double beta0) {
  const UePosition ue = place_ue(layout, beta0);
  CellDistances d{};
  d[kServingCell] = beta0 * layout.cell_radius_km;
  for (std::size_t n = kFirstRingBegin; n < kCellCount; ++n) {
    d[n] = distance(ue.coordinates, layout.centers[n]);
  }
  return d;
}

}  // namespace mlsfr
