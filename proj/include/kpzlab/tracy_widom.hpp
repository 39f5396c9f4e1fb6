#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kpzlab {

enum class TwMethod { Painleve, Fredholm };

std::string to_string(TwMethod m);
TwMethod parse_method(const std::string& name);

/// Tabulated Tracy-Widom CDF on an ascending grid.
struct DistTable {
  int beta = 2;
  std::vector<double> s;
  std::vector<double> F;
  TwMethod method = TwMethod::Painleve;

  /// Linear interpolation; clamps to the end values outside the grid.
  double interpolate(double x, bool* clamped = nullptr) const;
};

/// Right end of the Painleve integration and left end of the Airy-kernel
/// truncation window (s, s + kFredholmWindow].
inline constexpr double kPainleveStart = 8.0;
inline constexpr double kFredholmWindow = 16.0;

/// F_beta(s), beta in {1, 2}, for s in [-10, 6]. The Painleve route
/// integrates Hastings-McLeod and the tail integrals; the Fredholm route
/// evaluates det(I - K_Airy) on (s, s+16) or det(I - B(s)) on (0, 16).
double tw_cdf(int beta, double s, TwMethod method = TwMethod::Painleve);

/// 1 - F_beta(s) without cancellation (Painleve route).
double tw_survival(int beta, double s);

/// Table on s_min, s_min + step, ..., up to s_max.
DistTable tw_table(int beta, double s_min, double s_max, double step,
                   TwMethod method = TwMethod::Painleve);

struct TableMoments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance of the tabulated law on a uniform grid: density by
/// five-point centred differences of the table, moments by summation.
TableMoments table_moments(const DistTable& table);

/// CSV: `# beta=B method=M` then `s,F`.
void write_csv(std::ostream& os, const DistTable& table);
DistTable read_dist_table(std::istream& is);

}  // namespace kpzlab
