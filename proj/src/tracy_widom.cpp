#include "kpzlab/tracy_widom.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "kpzlab/airy.hpp"
#include "kpzlab/errors.hpp"
#include "kpzlab/fredholm.hpp"
#include "kpzlab/painleve.hpp"

namespace kpzlab {

namespace {

constexpr double kSolveStep = 0.05;
constexpr double kSolveMin = -10.0;
constexpr int kFredholmNodes = 24;

void check_args(int beta, double s) {
  if (beta != 1 && beta != 2) throw InvalidParameter("beta must be 1 or 2");
  if (!std::isfinite(s) || s < kSolveMin || s > kPainleveStart)
    throw InvalidParameter("s must lie in [-10, 8]");
}

const PainleveSolution& cached_solution() {
  static const PainleveSolution sol = painleve2_solve(kPainleveStart, kSolveMin, kSolveStep);
  return sol;
}

PainleveState state_at(double s) {
  const PainleveSolution& sol = cached_solution();
  // grid is descending from kPainleveStart in steps of kSolveStep
  auto i = static_cast<std::size_t>(std::floor((kPainleveStart - s) / kSolveStep));
  i = std::min(i, sol.s.size() - 1);
  while (i > 0 && sol.s[i] < s) --i;
  return painleve_advance(sol.states[i], sol.s[i], s, sol.control);
}

double cdf_from_state(int beta, const PainleveState& y) {
  return static_cast<double>(beta == 2 ? std::exp(-y(4)) : std::exp(-0.5L * (y(2) + y(4))));
}

double fredholm_cdf(int beta, double s) {
  std::unordered_map<double, AiryValue> cache;
  const auto ai = [&](double x) -> const AiryValue& {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, airy(x)).first;
    return it->second;
  };
  if (beta == 2) {
    const auto k = [&](double x, double y) {
      if (x == y) {
        const AiryValue& a = ai(x);
        return a.aip * a.aip - x * a.ai * a.ai;
      }
      const AiryValue &a = ai(x), &b = ai(y);
      return (b.ai * a.aip - b.aip * a.ai) / (y - x);
    };
    return fredholm_det_converged(k, s, s + kFredholmWindow, kFredholmNodes).value;
  }
  const auto k = [&](double x, double y) { return ai(x + y + s).ai; };
  return fredholm_det_converged(k, 0.0, kFredholmWindow, kFredholmNodes).value;
}

}  // namespace

std::string to_string(TwMethod m) { return m == TwMethod::Painleve ? "painleve" : "fredholm"; }

TwMethod parse_method(const std::string& name) {
  if (name == "painleve") return TwMethod::Painleve;
  if (name == "fredholm") return TwMethod::Fredholm;
  throw InvalidParameter("unknown method '" + name + "' (expected painleve or fredholm)");
}

double DistTable::interpolate(double x, bool* clamped) const {
  if (s.empty()) throw InvalidInput("empty distribution table");
  const bool out = x < s.front() || x > s.back();
  if (clamped) *clamped = out;
  if (x <= s.front()) return F.front();
  if (x >= s.back()) return F.back();
  const auto it = std::upper_bound(s.begin(), s.end(), x);
  const std::size_t j = static_cast<std::size_t>(it - s.begin());
  const double w = (x - s[j - 1]) / (s[j] - s[j - 1]);
  return (1 - w) * F[j - 1] + w * F[j];
}

double tw_cdf(int beta, double s, TwMethod method) {
  check_args(beta, s);
  if (method == TwMethod::Fredholm) return fredholm_cdf(beta, s);
  return cdf_from_state(beta, state_at(s));
}

double tw_survival(int beta, double s) {
  check_args(beta, s);
  const PainleveState y = state_at(s);
  const long double e = beta == 2 ? y(4) : 0.5L * (y(2) + y(4));
  return static_cast<double>(-std::expm1(-e));
}

DistTable tw_table(int beta, double s_min, double s_max, double step, TwMethod method) {
  if (!(step > 0.0) || !(s_min < s_max))
    throw InvalidParameter("tw_table: need s_min < s_max and step > 0");
  check_args(beta, s_min);
  check_args(beta, s_max);
  DistTable t;
  t.beta = beta;
  t.method = method;
  const auto n = static_cast<std::size_t>(std::floor((s_max - s_min) / step + 1e-9)) + 1;
  t.s.resize(n);
  t.F.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.s[i] = s_min + static_cast<double>(i) * step;
  if (method == TwMethod::Fredholm) {
    for (std::size_t i = 0; i < n; ++i) t.F[i] = fredholm_cdf(beta, t.s[i]);
    return t;
  }
  const PainleveSolution& sol = cached_solution();
  PainleveState y = state_at(t.s[n - 1]);
  double at = t.s[n - 1];
  for (std::size_t k = n; k-- > 0;) {
    y = painleve_advance(y, at, t.s[k], sol.control);
    at = t.s[k];
    t.F[k] = cdf_from_state(beta, y);
  }
  return t;
}

TableMoments table_moments(const DistTable& table) {
  const std::size_t n = table.s.size();
  if (n < 5) throw InvalidInput("table_moments: need at least five grid points");
  const double h = (table.s.back() - table.s.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(table.s[i] - table.s[i - 1] - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw InvalidInput("table_moments: grid must be uniform");
  const auto& F = table.F;
  // five-point centred differences; the three-point rule biases the
  // variance by h^2/3
  double mass = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double density = (-F[i + 2] + 8 * F[i + 1] - 8 * F[i - 1] + F[i - 2]) / (12 * h);
    mass += density * h;
    m1 += table.s[i] * density * h;
    m2 += table.s[i] * table.s[i] * density * h;
  }
  TableMoments m;
  m.mean = m1 / mass;
  m.variance = m2 / mass - m.mean * m.mean;
  return m;
}

void write_csv(std::ostream& os, const DistTable& table) {
  os << "# beta=" << table.beta << " method=" << to_string(table.method) << '\n';
  os << "s,F\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < table.s.size(); ++i) os << table.s[i] << ',' << table.F[i] << '\n';
}

DistTable read_dist_table(std::istream& is) {
  DistTable t;
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string tok;
      while (meta >> tok) {
        if (tok.rfind("beta=", 0) == 0) t.beta = std::stoi(tok.substr(5));
        if (tok.rfind("method=", 0) == 0) t.method = parse_method(tok.substr(7));
      }
      continue;
    }
    if (!header) {
      if (line != "s,F") throw InvalidInput("distribution table: expected header 's,F', got '" + line + "'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InvalidInput("distribution table: malformed row '" + line + "'");
    try {
      t.s.push_back(std::stod(line.substr(0, comma)));
      t.F.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw InvalidInput("distribution table: malformed row '" + line + "'");
    }
  }
  if (!header) throw InvalidInput("distribution table: expected header 's,F'");
  if (t.s.empty()) throw InvalidInput("distribution table: no rows");
  for (std::size_t i = 1; i < t.s.size(); ++i)
    if (!(t.s[i] > t.s[i - 1])) throw InvalidInput("distribution table: grid not ascending");
  return t;
}

}  // namespace kpzlab
