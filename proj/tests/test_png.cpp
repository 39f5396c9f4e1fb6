#include <cmath>
#include <sstream>

#include "doctest.h"
#include "kpzlab/combinatorics.hpp"
#include "kpzlab/errors.hpp"
#include "kpzlab/png.hpp"

using namespace kpzlab;

namespace {

// Longest chain (both coordinates increasing) by subset enumeration.
int chain_bruteforce(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Point> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(pts[i]);
    std::sort(sub.begin(), sub.end());
    bool ok = true;
    for (std::size_t i = 1; i < sub.size() && ok; ++i) ok = sub[i].second > sub[i - 1].second;
    if (ok) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

}  // namespace

TEST_CASE("droplet height: trivial fields") {
  const std::vector<Point> none;
  CHECK(droplet_height(5.0, 0.0, none) == 0);
  const std::vector<Point> one{{1.0, 2.0}};
  CHECK(droplet_height(5.0, 0.0, one) == 1);
  CHECK(droplet_height(5.0, 3.5, one) == 0);  // z range is [0, 1.5]
  CHECK(droplet_height(5.0, 7.0, one) == 0);
  CHECK(droplet_height(5.0, -5.0, one) == 0);
}

TEST_CASE("single nucleation propagates freely") {
  const double x0 = 0.7, t0 = 1.5, T = 4.0;
  const std::vector<Point> st{{x0, t0}};
  const SurfaceState s = simulate_png_dynamics(st, T);
  for (double x = -5.0; x <= 5.0; x += 0.05) {
    const int expect = std::abs(x - x0) <= T - t0 ? 1 : 0;
    CHECK(s.height_at(x) == expect);
  }
  CHECK(simulate_png_dynamics(std::vector<Point>{}, T).height_at(0.0) == 0);
}

TEST_CASE("dynamics and chain heights agree on seeded fields") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const double T = 3.0 + static_cast<double>(seed % 13);
    const PointField f = sample_poisson(Rectangle{2 * T, 2 * T}, 1.0, Seed{seed, 21});
    const SurfaceState s = simulate_png_dynamics(to_spacetime(f.points), T);
    for (int k = -5; k <= 5; ++k) {
      const double x = 0.19 * k * T;
      REQUIRE(s.height_at(x) == droplet_height(T, x, f));
    }
  }
}

TEST_CASE("two merging islands") {
  // nucleation B sits in the forward cone of A; C lands on the merged plateau
  const std::vector<Point> st{{0.0, 0.5}, {0.3, 1.0}, {0.1, 2.0}};
  const double T = 3.0;
  const SurfaceState s = simulate_png_dynamics(st, T);
  const auto poly = to_polymer(st);
  for (double x = -3.0; x <= 3.0; x += 0.1) CHECK(s.height_at(x) == droplet_height(T, x, poly));
  CHECK(s.height_at(0.0) == 3);
}

TEST_CASE("flat height") {
  CHECK(flat_height(5.0, std::vector<Point>{}) == 0);
  // antichain along an anti-diagonal
  const std::vector<Point> anti{{1, 8}, {2, 7}, {3, 6}, {4, 5}};
  CHECK(flat_height(5.0, anti) == 1);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const PointField f = sample_poisson(Triangle{2.0}, 1.0, Seed{seed, 4});
    if (f.size() > 10) continue;
    CHECK(flat_height(2.0, f) == chain_bruteforce(f.points));
    CHECK(flat_height(2.0, f) == lis_length(std::vector<int>(comparison_permutation(f.points))));
  }
}

TEST_CASE("height profile") {
  const auto grid = default_grid(10.0);
  CHECK(grid.size() == 201);
  CHECK(grid.front() == -10.0);
  CHECK(grid.back() == 10.0);
  const PointField empty = sample_poisson(Rectangle{20, 20}, 0.0, Seed{1});
  for (int h : height_profile(10.0, grid, empty).hs) CHECK(h == 0);

  // one point at (y,z): raised where y <= T + x and z <= T - x
  PointField one = empty;
  one.points = {{8.0, 9.0}};
  const HeightProfile p = height_profile(10.0, grid, one);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int expect = (grid[i] >= -2.0 && grid[i] <= 1.0 && std::abs(grid[i]) < 10.0) ? 1 : 0;
    CHECK(p.hs[i] == expect);
  }
  std::ostringstream os;
  write_csv(os, p);
  CHECK(os.str().rfind("x,h\n", 0) == 0);
}

TEST_CASE("mean droplet height approaches the limit shape") {
  const double T = 100.0;
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    sum += droplet_height(T, 0.0, sample_poisson(Rectangle{T, T}, 1.0, Seed{seed, 8}));
  CHECK(std::abs(sum / 200.0 / T - 2.0) < 0.15);
}

TEST_CASE("line ensemble") {
  const LineEnsemble empty = line_ensemble(4.0, std::vector<Point>{}, 3);
  CHECK(empty.levels.at(0) == 0);
  CHECK(empty.levels.at(-1) == -1);
  CHECK(empty.levels.at(-2) == -2);

  // comparison permutation (2,3,1,5,4)
  std::vector<Point> pts;
  const Permutation sigma{2, 3, 1, 5, 4};
  for (int i = 0; i < 5; ++i) pts.push_back({0.5 + sigma[i], 0.5 + i});
  REQUIRE(comparison_permutation(pts) == sigma);
  const LineEnsemble e = line_ensemble(6.0, pts, 2);
  CHECK(e.levels.at(0) == 3);
  CHECK(e.levels.at(-1) == 1);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PointField f = sample_poisson(Rectangle{12, 12}, 1.0, Seed{seed, 2});
    const LineEnsemble le = line_ensemble(12.0, f, 5);
    CHECK(le.levels.at(0) == droplet_height(12.0, 0.0, f));
    for (int l = 0; l > -4; --l) CHECK(le.levels.at(l) > le.levels.at(l - 1));  // non-crossing
  }
  std::ostringstream os;
  write_json(os, e);
  CHECK(os.str().find("\"-1\":1") != std::string::npos);
  CHECK_THROWS_AS(line_ensemble(6.0, pts, 0), InvalidParameter);
}

TEST_CASE("rescaling") {
  const double T = 1000.0;
  auto a = rescale_droplet(2000, T, 0.0);
  CHECK(a.xi == 0.0);
  CHECK(a.s == doctest::Approx(0.0));
  CHECK(rescale_droplet(2010, T, 0.0).s == doctest::Approx(1.0));
  auto b = rescale_droplet(1900, T, 100.0);
  CHECK(b.xi == doctest::Approx(1.0));
  CHECK(b.s == doctest::Approx((1900 - 2000 * std::sqrt(1.0 - 0.01)) / 10.0));
  CHECK_THROWS_AS(rescale_droplet(0, T, T), InvalidParameter);
  CHECK_THROWS_AS(rescale_droplet(0, 0.0, 0.0), InvalidParameter);

  CHECK(rescale_flat(2000, T) == doctest::Approx(0.0));
  // T = 4000: 2^{-2/3} T^{1/3} = 10
  CHECK(rescale_flat(8010, 4000.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(rescale_flat(1, -1.0), InvalidParameter);
}
