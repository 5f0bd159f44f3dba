#pragma once

#include <array>
#include <cstddef>

namespace mlsfr {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point2 a, Point2 b);

inline constexpr std::size_t kCellCount = 13;
inline constexpr std::size_t kServingCell = 0;
inline constexpr std::size_t kFirstRingBegin = 1;   // cells 1..6
inline constexpr std::size_t kSecondRingBegin = 7;  // cells 7..12
inline constexpr std::size_t kRingSize = 6;

using CellDistances = std::array<double, kCellCount>;

/// The 13-cell downlink topology: a serving cell, its six neighbours at the
/// inter-site distance sqrt(3) r, and the six second-ring cells at 3 r that
/// reuse the serving cell's primary band.
///
/// Cells are numbered clockwise. Cell 1 sits at 30 degrees and cell 6 at
/// 90 degrees, so the UE axis at 60 degrees ends on the vertex shared by
/// cells 0, 1 and 6. Cell 7 lies on the UE axis beyond that vertex.
struct NetworkLayout {
  double cell_radius_km = 1.0;
  std::array<Point2, kCellCount> centers{};
  double ue_axis_angle_rad = 0.0;
};

/// Throws std::invalid_argument unless r > 0.
NetworkLayout build_layout(double cell_radius_km);

/// End point of the UE axis: the corner of cell 0 shared with cells 1 and 6.
Point2 vertex_a(const NetworkLayout& layout);

struct UePosition {
  double beta0 = 1.0;
  Point2 coordinates{};
};

/// UE at beta0 * r along the UE axis. beta0 must lie in (0, 1].
UePosition place_ue(const NetworkLayout& layout, double beta0);

/// Distances (km) from the UE at beta0 to every base station, in cell order.
/// d_0 is exactly beta0 * r.
CellDistances distances(const NetworkLayout& layout, double beta0);

}  // namespace mlsfr
