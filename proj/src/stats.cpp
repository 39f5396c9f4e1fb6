#include "kpzlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "json.hpp"
#include "kpzlab/errors.hpp"

namespace kpzlab {

EmpiricalDist::EmpiricalDist(std::vector<double> values, std::string prov)
    : samples(std::move(values)), provenance(std::move(prov)) {
  for (double v : samples)
    if (!std::isfinite(v)) throw InvalidInput("empirical sample contains a non-finite value");
  std::sort(samples.begin(), samples.end());
}

double EmpiricalDist::cdf(double x) const {
  if (samples.empty()) return 0.0;
  const auto it = std::upper_bound(samples.begin(), samples.end(), x);
  return static_cast<double>(it - samples.begin()) / static_cast<double>(samples.size());
}

KsResult ks_distance(const EmpiricalDist& e, const DistTable& ref) {
  if (e.samples.empty()) throw InvalidInput("ks_distance: empty sample");
  KsResult r;
  const double n = static_cast<double>(e.n());
  for (std::size_t i = 0; i < e.samples.size(); ++i) {
    if (i + 1 < e.samples.size() && e.samples[i + 1] == e.samples[i]) continue;
    bool out = false;
    const double f = ref.interpolate(e.samples[i], &out);
    r.clamped = r.clamped || out;
    r.ks = std::max(r.ks, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return r;
}

double ks_two_sample(const EmpiricalDist& a, const EmpiricalDist& b) {
  if (a.samples.empty() || b.samples.empty()) throw InvalidInput("ks_two_sample: empty sample");
  const double na = static_cast<double>(a.n()), nb = static_cast<double>(b.n());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.samples.size() && j < b.samples.size()) {
    const double x = std::min(a.samples[i], b.samples[j]);
    while (i < a.samples.size() && a.samples[i] == x) ++i;
    while (j < b.samples.size() && b.samples[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

Moments moments(const EmpiricalDist& e) {
  const std::size_t n = e.n();
  if (n < 2) throw InvalidInput("moments: need at least two samples");
  double mean = 0.0;
  for (double v : e.samples) mean += v;
  mean /= static_cast<double>(n);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : e.samples) {
    const double d = v - mean, d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const double dn = static_cast<double>(n);
  Moments m;
  m.mean = mean;
  m.variance = m2 / (dn - 1);
  const double c2 = m2 / dn;
  m.skewness = c2 > 0 ? (m3 / dn) / std::pow(c2, 1.5) : std::numeric_limits<double>::quiet_NaN();
  m.kurtosis = (n >= 4 && c2 > 0) ? (m4 / dn) / (c2 * c2) : std::numeric_limits<double>::quiet_NaN();
  return m;
}

double estimate_g(std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 100) throw InvalidInput("estimate_g: need at least 100 pairs");
  std::vector<double> d;
  d.reserve(pairs.size());
  for (const auto& [a, b] : pairs) d.push_back(b - a);
  double mean = 0.0;
  for (double v : d) mean += v;
  mean /= static_cast<double>(d.size());
  double ss = 0.0;
  for (double v : d) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(d.size() - 1);
}

ComparisonReport compare(const EmpiricalDist& e, const DistTable& ref, std::string reference_tag) {
  const KsResult ks = ks_distance(e, ref);
  const TableMoments tm = table_moments(ref);
  ComparisonReport r;
  r.ks = ks.ks;
  r.clamped = ks.clamped;
  r.n = e.n();
  r.reference = std::move(reference_tag);
  if (e.n() >= 2) {
    const Moments m = moments(e);
    r.mean_diff = m.mean - tm.mean;
    r.var_diff = m.variance - tm.variance;
  } else {
    r.mean_diff = e.samples.front() - tm.mean;
    r.var_diff = -tm.variance;
  }
  return r;
}

void write_json(std::ostream& os, const ComparisonReport& r) {
  nlohmann::ordered_json j;
  j["ks"] = r.ks;
  j["mean_diff"] = r.mean_diff;
  j["var_diff"] = r.var_diff;
  j["n"] = r.n;
  j["reference"] = r.reference;
  os << j.dump(2) << '\n';
}

EmpiricalDist read_empirical(std::istream& is) {
  std::string line, provenance;
  bool header = false;
  std::vector<double> values;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (provenance.empty()) provenance = line.substr(1);
      continue;
    }
    if (!header) {
      if (line != "seed,s" && line != "seed,edge_value")
        throw InvalidInput("empirical file: expected header 'seed,s' or 'seed,edge_value', got '" + line + "'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InvalidInput("empirical file: malformed row '" + line + "'");
    try {
      values.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw InvalidInput("empirical file: malformed row '" + line + "'");
    }
  }
  if (!header) throw InvalidInput("empirical file: expected header 'seed,s' or 'seed,edge_value'");
  if (values.empty()) throw InvalidInput("empirical file: no samples");
  return EmpiricalDist(std::move(values), provenance);
}

}  // namespace kpzlab
