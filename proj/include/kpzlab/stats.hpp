#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kpzlab/tracy_widom.hpp"

namespace kpzlab {

/// Sorted Monte Carlo sample plus a free-form description of the run.
struct EmpiricalDist {
  std::vector<double> samples;
  std::string provenance;

  EmpiricalDist() = default;
  explicit EmpiricalDist(std::vector<double> values, std::string provenance = {});

  std::size_t n() const { return samples.size(); }
  /// Fraction of samples <= x.
  double cdf(double x) const;
};

struct KsResult {
  double ks = 0.0;
  bool clamped = false;  ///< some sample fell outside the reference grid
};

/// sup over the distinct sample values x of |F_emp(x) - F_ref(x)|, with the
/// empirical CDF taken right-continuous and F_ref interpolated linearly.
KsResult ks_distance(const EmpiricalDist& e, const DistTable& ref);

/// Two-sample statistic sup_x |F_a(x) - F_b(x)|.
double ks_two_sample(const EmpiricalDist& a, const EmpiricalDist& b);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased
  double skewness = 0.0;
  double kurtosis = 0.0;  ///< NaN for n < 4
};

Moments moments(const EmpiricalDist& e);

/// Unbiased sample variance of b_i - a_i; at least 100 pairs.
double estimate_g(std::span<const std::pair<double, double>> pairs);

struct ComparisonReport {
  double ks = 0.0;
  double mean_diff = 0.0;
  double var_diff = 0.0;
  std::size_t n = 0;
  std::string reference;
  bool clamped = false;
};

ComparisonReport compare(const EmpiricalDist& e, const DistTable& ref, std::string reference_tag);

/// `{"ks":..,"mean_diff":..,"var_diff":..,"n":..,"reference":..}`
void write_json(std::ostream& os, const ComparisonReport& r);

/// CSV `seed,s` (growth) or `seed,edge_value` (matrices) with `#` comment lines; the first comment becomes the
/// provenance.
EmpiricalDist read_empirical(std::istream& is);

}  // namespace kpzlab
