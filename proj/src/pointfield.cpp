#include "kpzlab/pointfield.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "kpzlab/errors.hpp"

namespace kpzlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

struct Box {
  double lo0, hi0, lo1, hi1;
};

Box bounding_box(const Region& region) {
  return std::visit(
      overloaded{
          [](const Rectangle& r) { return Box{0.0, r.a, 0.0, r.b}; },
          [](const Triangle& r) { return Box{0.0, 2.0 * r.t, 0.0, 2.0 * r.t}; },
          [](const Diamond& r) {
            return Box{-0.5 * (r.T - r.x), 0.5 * (r.T + r.x), 0.0, r.T};
          },
      },
      region);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// Moves coordinate `axis` of points[idx] by one ulp, staying inside the region.
void nudge(std::vector<Point>& points, std::size_t idx, int axis, const Region& region) {
  Point& p = points[idx];
  double& c = axis == 0 ? p.first : p.second;
  const double old = c;
  c = std::nextafter(old, INFINITY);
  if (!contains(region, p)) c = std::nextafter(old, -INFINITY);
}

// Returns true if any tie was found (and broken).
bool break_ties(std::vector<Point>& points, const Region& region) {
  bool found = false;
  std::vector<std::size_t> order(points.size());
  for (int axis = 0; axis < 2; ++axis) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto coord = [&](std::size_t i) { return axis == 0 ? points[i].first : points[i].second; };
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return coord(i) < coord(j) || (coord(i) == coord(j) && i < j);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (coord(order[k]) == coord(order[k - 1])) {
        const std::size_t later = std::max(order[k], order[k - 1]);
        std::clog << "kpzlab: warning: coordinate tie in point field, perturbing point "
                  << later << " by one ulp\n";
        nudge(points, later, axis, region);
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

double area(const Region& region) {
  return std::visit(overloaded{
                        [](const Rectangle& r) { return r.a * r.b; },
                        [](const Triangle& r) { return 2.0 * r.t * r.t; },
                        [](const Diamond& r) { return 0.5 * (r.T - r.x) * (r.T + r.x); },
                    },
                    region);
}

Frame frame_of(const Region& region) {
  return std::holds_alternative<Diamond>(region) ? Frame::SpaceTime : Frame::Polymer;
}

bool contains(const Region& region, const Point& p) {
  return std::visit(
      overloaded{
          [&](const Rectangle& r) {
            return p.first >= 0.0 && p.first <= r.a && p.second >= 0.0 && p.second <= r.b;
          },
          [&](const Triangle& r) {
            return p.first >= 0.0 && p.second >= 0.0 && p.first + p.second <= 2.0 * r.t;
          },
          [&](const Diamond& r) {
            const double x = p.first, t = p.second;
            return std::abs(x) <= t && std::abs(x - r.x) <= r.T - t;
          },
      },
      region);
}

void validate(const Region& region) {
  std::visit(overloaded{
                 [](const Rectangle& r) {
                   if (!positive_finite(r.a) || !positive_finite(r.b))
                     throw InvalidParameter("rectangle sides must be positive and finite");
                 },
                 [](const Triangle& r) {
                   if (!positive_finite(r.t))
                     throw InvalidParameter("triangle height must be positive and finite");
                 },
                 [](const Diamond& r) {
                   if (!positive_finite(r.T) || !std::isfinite(r.x) || std::abs(r.x) >= r.T)
                     throw InvalidParameter("diamond needs T > 0 and |x| < T");
                 },
             },
             region);
}

PointField sample_poisson(const Region& region, double intensity, Seed seed) {
  if (!std::isfinite(intensity) || intensity < 0.0)
    throw InvalidParameter("intensity must be finite and non-negative");
  validate(region);

  PointField field{{}, region, intensity, seed};
  const double mean = intensity * area(region);
  if (mean == 0.0) return field;

  CounterRng rng(seed);
  std::poisson_distribution<long long> count_dist(mean);
  const auto count = static_cast<std::size_t>(count_dist(rng));

  const Box box = bounding_box(region);
  std::uniform_real_distribution<double> u0(box.lo0, box.hi0);
  std::uniform_real_distribution<double> u1(box.lo1, box.hi1);
  const bool is_rect = std::holds_alternative<Rectangle>(region);

  auto& pts = field.points;
  pts.reserve(count);
  while (pts.size() < count) {
    Point p{u0(rng), u1(rng)};
    if (is_rect || contains(region, p)) pts.push_back(p);
  }
  while (break_ties(pts, region)) {
  }
  std::sort(pts.begin(), pts.end());
  return field;
}

std::vector<Point> to_spacetime(const std::vector<Point>& polymer_points) {
  std::vector<Point> out;
  out.reserve(polymer_points.size());
  for (const auto& p : polymer_points) out.push_back(polymer_to_spacetime(p));
  return out;
}

std::vector<Point> to_polymer(const std::vector<Point>& spacetime_points) {
  std::vector<Point> out;
  out.reserve(spacetime_points.size());
  for (const auto& p : spacetime_points) out.push_back(spacetime_to_polymer(p));
  return out;
}

void write_csv(std::ostream& os, const std::vector<Point>& points, Frame frame) {
  os << (frame == Frame::Polymer ? "y,z\n" : "x,t\n");
  os << std::setprecision(17);
  for (const auto& p : points) os << p.first << ',' << p.second << '\n';
}

std::vector<Point> read_csv(std::istream& is, Frame& frame) {
  std::string line;
  while (std::getline(is, line) && !line.empty() && line[0] == '#') {
  }
  if (line == "y,z") {
    frame = Frame::Polymer;
  } else if (line == "x,t") {
    frame = Frame::SpaceTime;
  } else {
    throw InvalidInput("point CSV: expected header 'y,z' or 'x,t', got '" + line + "'");
  }
  std::vector<Point> out;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    Point p;
    char comma = 0;
    if (!(row >> p.first >> comma >> p.second) || comma != ',')
      throw InvalidInput("point CSV: malformed row '" + line + "'");
    out.push_back(p);
  }
  return out;
}

}  // namespace kpzlab
