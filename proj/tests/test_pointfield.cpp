#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "kpzlab/errors.hpp"
#include "kpzlab/pointfield.hpp"

using namespace kpzlab;

TEST_CASE("zero intensity gives an empty field") {
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(sample_poisson(Rectangle{10, 10}, 0.0, Seed{s}).size() == 0);
}

TEST_CASE("invalid intensity and regions are rejected") {
  CHECK_THROWS_AS(sample_poisson(Rectangle{10, 10}, -1.0, Seed{1}), InvalidParameter);
  CHECK_THROWS_AS(sample_poisson(Rectangle{10, 10}, std::numeric_limits<double>::infinity(), Seed{1}),
                  InvalidParameter);
  CHECK_THROWS_AS(sample_poisson(Rectangle{10, 10}, std::nan(""), Seed{1}), InvalidParameter);
  CHECK_THROWS_AS(sample_poisson(Rectangle{-1, 10}, 1.0, Seed{1}), InvalidParameter);
  CHECK_THROWS_AS(sample_poisson(Triangle{-2}, 1.0, Seed{1}), InvalidParameter);
}

TEST_CASE("Poisson counts: mean over 1e4 seeds within 3 standard errors") {
  const int n = 10000;
  double sum = 0.0, sum2 = 0.0;
  for (int s = 0; s < n; ++s) {
    const double c = static_cast<double>(sample_poisson(Rectangle{10, 10}, 1.0, Seed{static_cast<std::uint64_t>(s)}).size());
    sum += c;
    sum2 += c * c;
  }
  const double mean = sum / n;
  const double var = (sum2 - n * mean * mean) / (n - 1);
  CHECK(std::abs(mean - 100.0) < 3.0 * std::sqrt(100.0 / n));
  // Poisson: variance equals mean
  CHECK(std::abs(var - 100.0) < 6.0);
}

TEST_CASE("areas and triangle/diamond counts") {
  CHECK(area(Rectangle{3, 4}) == 12.0);
  CHECK(area(Triangle{5}) == doctest::Approx(50.0));
  CHECK(area(Diamond{0, 10}) == doctest::Approx(50.0));
  double sum = 0.0;
  const int n = 2000;
  for (int s = 0; s < n; ++s) sum += sample_poisson(Triangle{5}, 1.0, Seed{static_cast<std::uint64_t>(s), 3}).size();
  CHECK(std::abs(sum / n - 50.0) < 3.0 * std::sqrt(50.0 / n));
}

TEST_CASE("determinism and containment") {
  const Region regions[] = {Rectangle{7, 3}, Triangle{4}, Diamond{1.5, 6}};
  for (const Region& r : regions) {
    const PointField a = sample_poisson(r, 2.0, Seed{42});
    const PointField b = sample_poisson(r, 2.0, Seed{42});
    CHECK(a.points == b.points);
    CHECK(a.size() > 0);
    for (const Point& p : a.points) CHECK(contains(r, p));
    CHECK(std::is_sorted(a.points.begin(), a.points.end()));
    const PointField c = sample_poisson(r, 2.0, Seed{42, 1});
    CHECK(c.points != a.points);
  }
}

TEST_CASE("no coordinate ties") {
  const PointField f = sample_poisson(Rectangle{30, 30}, 1.0, Seed{5});
  std::vector<double> ys, zs;
  for (const Point& p : f.points) {
    ys.push_back(p.first);
    zs.push_back(p.second);
  }
  std::sort(ys.begin(), ys.end());
  std::sort(zs.begin(), zs.end());
  CHECK(std::adjacent_find(ys.begin(), ys.end()) == ys.end());
  CHECK(std::adjacent_find(zs.begin(), zs.end()) == zs.end());
}

TEST_CASE("frame transforms") {
  CHECK(spacetime_to_polymer({0, 0}) == Point{0, 0});
  CHECK(spacetime_to_polymer({1, 2}) == Point{3, 1});
  static_assert(spacetime_to_polymer({1, 2}).first == 3.0);

  // diamond corners land on the square corners
  const double T = 10.0;
  CHECK(spacetime_to_polymer({0, 0}) == Point{0, 0});
  CHECK(spacetime_to_polymer({0, T}) == Point{T, T});
  CHECK(spacetime_to_polymer({T / 2, T / 2}) == Point{T, 0});
  CHECK(spacetime_to_polymer({-T / 2, T / 2}) == Point{0, T});

  const PointField d = sample_poisson(Diamond{0, T}, 1.0, Seed{9});
  for (const Point& p : to_polymer(d.points)) CHECK(contains(Rectangle{T, T}, p));

  const PointField f = sample_poisson(Rectangle{20, 20}, 1.0, Seed{11});
  const auto back = to_polymer(to_spacetime(f.points));
  REQUIRE(back.size() == f.points.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(std::abs(back[i].first - f.points[i].first) <= 4 * std::numeric_limits<double>::epsilon() * 20);
    CHECK(std::abs(back[i].second - f.points[i].second) <= 4 * std::numeric_limits<double>::epsilon() * 20);
  }
}

TEST_CASE("CSV round trip") {
  const PointField f = sample_poisson(Triangle{3}, 1.0, Seed{2});
  std::stringstream ss;
  write_csv(ss, f.points, Frame::Polymer);
  Frame frame = Frame::SpaceTime;
  const auto pts = read_csv(ss, frame);
  CHECK(frame == Frame::Polymer);
  CHECK(pts == f.points);

  std::stringstream bad("a,b\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad, frame), InvalidInput);
}
