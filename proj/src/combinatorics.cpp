#include "kpzlab/combinatorics.hpp"

#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

namespace kpzlab {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool is_permutation(std::span<const int> sigma) {
  std::vector<char> seen(sigma.size() + 1, 0);
  for (int v : sigma) {
    if (v < 1 || static_cast<std::size_t>(v) > sigma.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    if (lambda.parts[i] < 1) return false;
    if (i > 0 && lambda.parts[i] > lambda.parts[i - 1]) return false;
  }
  return true;
}

bool is_standard(const StandardTableau& t) {
  const Partition shape = t.shape();
  if (!is_partition(shape)) return false;
  const int n = shape.size();
  std::vector<char> seen(n + 1, 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int v = t.rows[r][c];
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = 1;
      if (c > 0 && t.rows[r][c - 1] >= v) return false;
      if (r > 0 && t.rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

TableauPair<int> rsk(std::span<const int> sigma) {
  if (!is_permutation(sigma)) throw InvalidInput("rsk: input is not a permutation of 1..N");
  TableauPair<int> out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const std::size_t r = detail::row_insert(out.P.rows, sigma[i]);
    if (r == out.Q.rows.size()) out.Q.rows.emplace_back();
    out.Q.rows[r].push_back(static_cast<int>(i + 1));
  }
  return out;
}

Partition rsk_shape(std::span<const int> sigma) {
  std::vector<std::vector<int>> rows;
  for (int v : sigma) detail::row_insert(rows, v);
  Partition p;
  for (const auto& r : rows) p.parts.push_back(static_cast<int>(r.size()));
  return p;
}

Permutation rsk_inverse(const StandardTableau& P, const StandardTableau& Q) {
  if (P.shape() != Q.shape()) throw InvalidInput("rsk_inverse: P and Q have different shapes");
  if (!is_standard(P) || !is_standard(Q))
    throw InvalidInput("rsk_inverse: tableaux must be standard");

  auto p = P.rows;
  auto q = Q.rows;
  const int n = P.shape().size();
  Permutation sigma(n);
  for (int k = n; k >= 1; --k) {
    // The largest Q entry sits at the end of some row (a corner).
    std::size_t r = 0;
    while (q[r].back() != k) ++r;
    q[r].pop_back();
    int x = p[r].back();
    p[r].pop_back();
    if (p[r].empty()) {
      p.pop_back();
      q.pop_back();
    }
    while (r-- > 0) {
      auto& row = p[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);  // first entry >= x
      --it;                                                   // largest entry < x
      std::swap(*it, x);
    }
    sigma[k - 1] = x;
  }
  return sigma;
}

TableauPair<double> rsk_real(std::span<const Point> points) {
  std::vector<Point> by_z(points.begin(), points.end());
  std::sort(by_z.begin(), by_z.end(),
            [](const Point& a, const Point& b) { return a.second < b.second; });
  for (std::size_t i = 1; i < by_z.size(); ++i)
    if (by_z[i].second == by_z[i - 1].second)
      throw InvalidInput("rsk_real: tie in second coordinate");
  {
    std::vector<double> ys;
    ys.reserve(by_z.size());
    for (const auto& p : by_z) ys.push_back(p.first);
    std::sort(ys.begin(), ys.end());
    if (std::adjacent_find(ys.begin(), ys.end()) != ys.end())
      throw InvalidInput("rsk_real: tie in first coordinate");
  }
  TableauPair<double> out;
  for (const auto& p : by_z) {
    const std::size_t r = detail::row_insert(out.P.rows, p.first);
    if (r == out.Q.rows.size()) out.Q.rows.emplace_back();
    out.Q.rows[r].push_back(p.second);
  }
  return out;
}

Permutation comparison_permutation(std::span<const Point> points) {
  const std::size_t n = points.size();
  std::vector<std::size_t> by_z(n), by_y(n);
  std::iota(by_z.begin(), by_z.end(), std::size_t{0});
  std::iota(by_y.begin(), by_y.end(), std::size_t{0});
  std::sort(by_z.begin(), by_z.end(),
            [&](std::size_t a, std::size_t b) { return points[a].second < points[b].second; });
  std::sort(by_y.begin(), by_y.end(),
            [&](std::size_t a, std::size_t b) { return points[a].first < points[b].first; });
  std::vector<int> y_rank(n);
  for (std::size_t r = 0; r < n; ++r) y_rank[by_y[r]] = static_cast<int>(r + 1);
  Permutation sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = y_rank[by_z[i]];
  return sigma;
}

namespace {

// Best number of further elements (from position i on) that can be appended
// to k chains whose current tails are `tails` (0 = empty chain, kept sorted).
struct GreeneSearch {
  std::span<const int> sigma;
  std::map<std::pair<std::size_t, std::vector<int>>, int> memo;

  int best(std::size_t i, std::vector<int>& tails) {
    if (i == sigma.size()) return 0;
    auto key = std::make_pair(i, tails);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int result = best(i + 1, tails);  // leave sigma[i] out
    const int v = sigma[i];
    for (std::size_t c = 0; c < tails.size(); ++c) {
      if (tails[c] >= v) continue;
      if (c > 0 && tails[c] == tails[c - 1]) continue;  // identical chains
      const int saved = tails[c];
      std::vector<int> next = tails;
      next[c] = v;
      std::sort(next.begin(), next.end());
      result = std::max(result, 1 + best(i + 1, next));
      tails[c] = saved;
    }
    memo.emplace(std::move(key), result);
    return result;
  }
};

std::uint64_t count_backtrack(std::vector<int>& parts) {
  // Remove the largest entry, which must sit in a corner cell.
  int n = 0;
  for (int p : parts) n += p;
  if (n <= 1) return 1;
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (parts[r] == 0) continue;
    const bool corner = r + 1 == parts.size() || parts[r + 1] < parts[r];
    if (!corner) continue;
    --parts[r];
    total += count_backtrack(parts);
    ++parts[r];
  }
  return total;
}

std::uint64_t count_hook_length(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<int> conj(lambda[0], 0);
  for (int p : lambda.parts)
    for (int c = 0; c < p; ++c) ++conj[c];
  // n!/prod(hooks), dividing as we go to stay inside 64 bits.
  std::vector<int> hooks;
  for (int r = 0; r < lambda.rows(); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c)
      hooks.push_back((lambda.parts[r] - c - 1) + (conj[c] - r - 1) + 1);
  unsigned __int128 num = 1;
  for (int i = 2; i <= n; ++i) num *= static_cast<unsigned>(i);
  unsigned __int128 den = 1;
  for (int h : hooks) den *= static_cast<unsigned>(h);
  return static_cast<std::uint64_t>(num / den);
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int greene_bruteforce(std::span<const int> sigma, int k) {
  if (sigma.size() > 10) throw InvalidParameter("greene_bruteforce: oracle limited to N <= 10");
  if (k < 1) throw InvalidParameter("greene_bruteforce: k must be positive");
  if (!is_permutation(sigma)) throw InvalidInput("greene_bruteforce: not a permutation");
  GreeneSearch search{sigma, {}};
  std::vector<int> tails(static_cast<std::size_t>(std::min<std::size_t>(k, sigma.size() + 1)), 0);
  return search.best(0, tails);
}

std::uint64_t count_standard_tableaux_backtracking(const Partition& lambda) {
  if (!is_partition(lambda)) throw InvalidInput("count_standard_tableaux: not a partition");
  if (lambda.size() > 10) throw InvalidParameter("backtracking count limited to N <= 10");
  std::vector<int> parts = lambda.parts;
  return count_backtrack(parts);
}

std::uint64_t count_standard_tableaux(const Partition& lambda) {
  if (!is_partition(lambda)) throw InvalidInput("count_standard_tableaux: not a partition");
  const int n = lambda.size();
  if (n < 1 || n > 20) throw InvalidParameter("count_standard_tableaux: need 1 <= N <= 20");
  if (n <= 10) return count_standard_tableaux_backtracking(lambda);
  return count_hook_length(lambda);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Permutation random_permutation(int N, CounterRng& rng) {
  Permutation sigma(N);
  std::iota(sigma.begin(), sigma.end(), 1);
  for (int i = N - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(sigma[i], sigma[pick(rng)]);
  }
  return sigma;
}

Partition plancherel_sample(int N, Seed seed) {
  if (N < 1) throw InvalidParameter("plancherel_sample: N must be positive");
  CounterRng rng(seed);
  const Permutation sigma = random_permutation(N, rng);
  return rsk_shape(sigma);
}

template <class T>
void write_json(std::ostream& os, const Tableau<T>& t) {
  nlohmann::json j;
  j["shape"] = t.shape().parts;
  j["rows"] = t.rows;
  os << j.dump() << '\n';
}

template void write_json<int>(std::ostream&, const Tableau<int>&);
template void write_json<double>(std::ostream&, const Tableau<double>&);

void write_permutation_csv(std::ostream& os, std::span<const int> sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma[i];
  os << '\n';
}

Permutation read_permutation_csv(std::istream& is) {
  std::string line;
  while (std::getline(is, line) && (line.empty() || line[0] == '#')) {
  }
  Permutation sigma;
  std::istringstream row(line);
  std::string cell;
  while (std::getline(row, cell, ',')) {
    try {
      std::size_t used = 0;
      sigma.push_back(std::stoi(cell, &used));
      if (used != cell.size()) throw InvalidInput("permutation CSV: bad entry '" + cell + "'");
    } catch (const std::logic_error&) {
      throw InvalidInput("permutation CSV: bad entry '" + cell + "'");
    }
  }
  if (!is_permutation(sigma)) throw InvalidInput("permutation CSV: not a permutation of 1..N");
  return sigma;
}

}  // namespace kpzlab
