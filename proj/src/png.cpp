#include "kpzlab/png.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>

#include "json.hpp"
#include "kpzlab/combinatorics.hpp"
#include "kpzlab/errors.hpp"

namespace kpzlab {

int SurfaceState::height_at(double x) const {
  // closed islands: a step sitting exactly at x still counts as raised
  const auto ups = std::upper_bound(up.begin(), up.end(), x) - up.begin();
  const auto downs = std::lower_bound(down.begin(), down.end(), x) - down.begin();
  return static_cast<int>(ups - downs);
}

HeightProfile SurfaceState::sample(std::span<const double> xs) const {
  HeightProfile p{t, {xs.begin(), xs.end()}, {}};
  p.hs.reserve(xs.size());
  for (double x : xs) p.hs.push_back(height_at(x));
  return p;
}

int droplet_height(double T, double x, std::span<const Point> polymer_points) {
  if (std::abs(x) >= T) return 0;
  if (!std::is_sorted(polymer_points.begin(), polymer_points.end())) {
    std::vector<Point> sorted(polymer_points.begin(), polymer_points.end());
    std::sort(sorted.begin(), sorted.end());
    return droplet_height(T, x, std::span<const Point>(sorted));
  }
  const double y_max = T + x, z_max = T - x;
  std::vector<double> zs;
  zs.reserve(polymer_points.size());
  // Points are sorted by y, so the z sequence is already in chain order.
  for (const auto& p : polymer_points) {
    if (p.first > y_max) break;
    if (p.second <= z_max) zs.push_back(p.second);
  }
  return detail::lis_unchecked<double>(zs);
}

int droplet_height(double T, double x, const PointField& field) {
  return droplet_height(T, x, std::span<const Point>(field.points));
}

int flat_height(double T, std::span<const Point> polymer_points) {
  if (!std::is_sorted(polymer_points.begin(), polymer_points.end())) {
    std::vector<Point> sorted(polymer_points.begin(), polymer_points.end());
    std::sort(sorted.begin(), sorted.end());
    return flat_height(T, std::span<const Point>(sorted));
  }
  std::vector<double> zs;
  zs.reserve(polymer_points.size());
  for (const auto& p : polymer_points)
    if (p.first >= 0.0 && p.second >= 0.0 && p.first + p.second <= 2.0 * T) zs.push_back(p.second);
  return detail::lis_unchecked<double>(zs);
}

int flat_height(double T, const PointField& field) {
  return flat_height(T, std::span<const Point>(field.points));
}

HeightProfile height_profile(double T, std::span<const double> xs, const PointField& field) {
  HeightProfile p{T, {xs.begin(), xs.end()}, {}};
  p.hs.reserve(xs.size());
  for (double x : xs) p.hs.push_back(droplet_height(T, x, field));
  return p;
}

std::vector<double> default_grid(double T, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = -T + 2.0 * T * i / (n - 1);
  return xs;
}

namespace {

// A unit step at position c + v t; v = -1 for up-steps, +1 for down-steps.
struct Step {
  double c;
  int v;
  double at(double t) const { return c + v * t; }
};

}  // namespace

SurfaceState simulate_png_dynamics(std::span<const Point> spacetime_nucleations, double T) {
  std::vector<Point> nuc(spacetime_nucleations.begin(), spacetime_nucleations.end());
  std::sort(nuc.begin(), nuc.end(),
            [](const Point& a, const Point& b) { return a.second < b.second; });
  for (std::size_t i = 1; i < nuc.size(); ++i)
    if (nuc[i].second == nuc[i - 1].second && nuc[i].first == nuc[i - 1].first)
      throw InvalidInput("simulate_png_dynamics: coincident nucleation events");

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<Step> steps;  // ordered by position
  std::size_t next = 0;
  for (;;) {
    const double t_nuc = next < nuc.size() ? nuc[next].second : inf;
    double t_col = inf;
    std::size_t k_col = 0;
    for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
      if (steps[k].v == 1 && steps[k + 1].v == -1) {
        const double tc = 0.5 * (steps[k + 1].c - steps[k].c);
        if (tc < t_col) {
          t_col = tc;
          k_col = k;
        }
      }
    }
    if (std::min(t_nuc, t_col) > T) break;
    if (t_col < t_nuc) {
      steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(k_col),
                  steps.begin() + static_cast<std::ptrdiff_t>(k_col + 2));
    } else {
      const double x0 = nuc[next].first, t0 = nuc[next].second;
      auto pos = std::find_if(steps.begin(), steps.end(),
                              [&](const Step& s) { return s.at(t0) > x0; });
      pos = steps.insert(pos, Step{x0 + t0, -1});
      steps.insert(pos + 1, Step{x0 - t0, 1});
      ++next;
    }
  }

  SurfaceState state{T, {}, {}};
  for (const auto& s : steps) (s.v < 0 ? state.up : state.down).push_back(s.at(T));
  std::sort(state.up.begin(), state.up.end());
  std::sort(state.down.begin(), state.down.end());
  return state;
}

LineEnsemble line_ensemble(double T, std::span<const Point> polymer_points, int depth) {
  if (depth < 1) throw InvalidParameter("line_ensemble: depth must be positive");
  std::vector<Point> inside;
  for (const auto& p : polymer_points)
    if (p.first >= 0.0 && p.first <= T && p.second >= 0.0 && p.second <= T) inside.push_back(p);
  const Partition shape = rsk_real(inside).P.shape();
  LineEnsemble e{T, {}};
  for (int l = 0; l > -depth; --l) e.levels[l] = shape[static_cast<std::size_t>(-l)] + l;
  return e;
}

LineEnsemble line_ensemble(double T, const PointField& field, int depth) {
  return line_ensemble(T, std::span<const Point>(field.points), depth);
}

DropletScaling rescale_droplet(int h, double T, double x) {
  if (!(T > 0.0)) throw InvalidParameter("rescale_droplet: T must be positive");
  const double xi = x * std::pow(T, -2.0 / 3.0);
  const double arg = 1.0 - xi * xi * std::pow(T, -2.0 / 3.0);
  if (!(arg > 0.0)) throw InvalidParameter("rescale_droplet: position outside the droplet (|x| >= T)");
  const double s = std::pow(T, -1.0 / 3.0) * (h - 2.0 * T * std::sqrt(arg));
  return {xi, s};
}

double rescale_flat(int h, double T) {
  if (!(T > 0.0)) throw InvalidParameter("rescale_flat: T must be positive");
  return (h - 2.0 * T) * std::cbrt(4.0) / std::cbrt(T);
}

void write_csv(std::ostream& os, const HeightProfile& profile) {
  os << "x,h\n" << std::setprecision(17);
  for (std::size_t i = 0; i < profile.xs.size(); ++i)
    os << profile.xs[i] << ',' << profile.hs[i] << '\n';
}

void write_json(std::ostream& os, const LineEnsemble& ensemble) {
  nlohmann::ordered_json levels;
  for (auto it = ensemble.levels.rbegin(); it != ensemble.levels.rend(); ++it)
    levels[std::to_string(it->first)] = it->second;
  nlohmann::ordered_json j;
  j["t"] = ensemble.t;
  j["levels"] = levels;
  os << j.dump() << '\n';
}

}  // namespace kpzlab
