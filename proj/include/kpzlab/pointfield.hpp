#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "kpzlab/rng.hpp"

namespace kpzlab {

/// A planar point. In the polymer frame (first, second) = (y, z); in the
/// space-time frame (first, second) = (x, t).
struct Point {
  double first = 0.0;
  double second = 0.0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

enum class Frame { Polymer, SpaceTime };

/// [0,a] x [0,b] in (y,z).
struct Rectangle {
  double a = 0.0;
  double b = 0.0;
};

/// {y, z >= 0, y + z <= 2t} in (y,z): the backward light cone of (0,t)
/// reaching down to the flat substrate.
struct Triangle {
  double t = 0.0;
};

/// Forward light cone of the origin intersected with the backward light cone
/// of (x, T), in (x', t').
struct Diamond {
  double x = 0.0;
  double T = 0.0;
};

using Region = std::variant<Rectangle, Triangle, Diamond>;

double area(const Region& region);
Frame frame_of(const Region& region);
bool contains(const Region& region, const Point& p);
/// Throws InvalidParameter unless every region parameter is admissible.
void validate(const Region& region);

struct PointField {
  std::vector<Point> points;  ///< lexicographically sorted
  Region region;
  double intensity = 0.0;
  Seed seed;

  std::size_t size() const { return points.size(); }
  Frame frame() const { return frame_of(region); }
};

/// Poisson point field of constant intensity on `region`. The count is
/// Poisson(intensity * area); given the count, points are i.i.d. uniform,
/// triangles and diamonds by rejection from the bounding box. Coordinate ties
/// are broken by moving the later point by one ulp.
PointField sample_poisson(const Region& region, double intensity, Seed seed);

/// (x', t') -> (y, z) = (t' + x', t' - x'); Jacobian 2.
constexpr Point spacetime_to_polymer(Point p) {
  return {p.second + p.first, p.second - p.first};
}

/// Inverse of spacetime_to_polymer.
constexpr Point polymer_to_spacetime(Point p) {
  return {0.5 * (p.first - p.second), 0.5 * (p.first + p.second)};
}

/// Maps every point to the other frame; the region tag is kept, so the result
/// is meant for consumers that only need the coordinates.
std::vector<Point> to_spacetime(const std::vector<Point>& polymer_points);
std::vector<Point> to_polymer(const std::vector<Point>& spacetime_points);

/// CSV with header `y,z` or `x,t`, 17 significant digits.
void write_csv(std::ostream& os, const std::vector<Point>& points, Frame frame);
std::vector<Point> read_csv(std::istream& is, Frame& frame);

}  // namespace kpzlab
