#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "kpzlab/pointfield.hpp"

namespace kpzlab {

struct HeightProfile {
  double t = 0.0;
  std::vector<double> xs;
  std::vector<int> hs;
};

/// Heights h_l(0,t) of the multilayer ensemble, l = 0, -1, ..., -(depth-1).
struct LineEnsemble {
  double t = 0.0;
  std::map<int, int> levels;

  int depth() const { return static_cast<int>(levels.size()); }
};

/// Up- and down-step positions of a PNG surface at a fixed time.
struct SurfaceState {
  double t = 0.0;
  std::vector<double> up;    ///< sorted; each moves left at unit speed
  std::vector<double> down;  ///< sorted; each moves right at unit speed

  int height_at(double x) const;
  HeightProfile sample(std::span<const double> xs) const;
};

/// Droplet height h(x,T) from a unit-intensity polymer-frame field: the
/// longest chain inside [0,T+x] x [0,T-x]. Zero for |x| >= T.
int droplet_height(double T, double x, const PointField& field);
int droplet_height(double T, double x, std::span<const Point> polymer_points);

/// Flat height h(0,T): the longest chain among all points of the triangle.
int flat_height(double T, const PointField& field);
int flat_height(double T, std::span<const Point> polymer_points);

/// droplet_height on each grid point.
HeightProfile height_profile(double T, std::span<const double> xs, const PointField& field);

/// Default grid: 201 uniform points on [-T, T].
std::vector<double> default_grid(double T, int n = 201);

/// Exact event-driven PNG evolution from a flat zero surface: nucleations in
/// time order, steps at speed +-1, colliding down/up pairs annihilate.
/// O(events * steps); used as an independent check of the chain heights.
SurfaceState simulate_png_dynamics(std::span<const Point> spacetime_nucleations, double T);

/// h_l(0,T) = lambda_{1-l} + l with lambda the shape of real RS applied to
/// the points in [0,T]^2.
LineEnsemble line_ensemble(double T, const PointField& field, int depth = 5);
LineEnsemble line_ensemble(double T, std::span<const Point> polymer_points, int depth = 5);

struct DropletScaling {
  double xi = 0.0;
  double s = 0.0;
};

/// xi = x T^{-2/3}, s = T^{-1/3} (h - 2T sqrt(1 - xi^2 T^{-2/3})).
DropletScaling rescale_droplet(int h, double T, double x);

/// s = (h - 2T) 2^{2/3} T^{-1/3}.
double rescale_flat(int h, double T);

/// CSV `x,h`.
void write_csv(std::ostream& os, const HeightProfile& profile);
/// `{"t":...,"levels":{"0":...,"-1":...}}`
void write_json(std::ostream& os, const LineEnsemble& ensemble);

}  // namespace kpzlab
