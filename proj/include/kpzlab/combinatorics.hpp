#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "kpzlab/errors.hpp"
#include "kpzlab/pointfield.hpp"
#include "kpzlab/rng.hpp"

namespace kpzlab {

/// One-line notation of a permutation of {1..N}.
using Permutation = std::vector<int>;

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int size() const;  ///< N = sum of parts
  int rows() const { return static_cast<int>(parts.size()); }
  int operator[](std::size_t i) const { return i < parts.size() ? parts[i] : 0; }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Row-major ragged tableau. Rows are strictly increasing; for a valid
/// tableau columns are strictly increasing too.
template <class T>
struct Tableau {
  std::vector<std::vector<T>> rows;

  Partition shape() const {
    Partition p;
    for (const auto& r : rows) p.parts.push_back(static_cast<int>(r.size()));
    return p;
  }
  bool empty() const { return rows.empty(); }
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

using StandardTableau = Tableau<int>;
using RealTableau = Tableau<double>;

template <class T>
struct TableauPair {
  Tableau<T> P;
  Tableau<T> Q;
};

bool is_permutation(std::span<const int> sigma);
bool is_partition(const Partition& lambda);
bool is_standard(const StandardTableau& t);

namespace detail {

/// Patience sorting on pile tops; no duplicate check.
template <class T>
int lis_unchecked(std::span<const T> seq) {
  std::vector<T> tops;
  tops.reserve(64);
  for (const T& v : seq) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v);
    if (it == tops.end())
      tops.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tops.size());
}

/// Row-inserts v into P; returns the row index of the new cell.
template <class T>
std::size_t row_insert(std::vector<std::vector<T>>& rows, T v) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({v});
      return r;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), v);
    if (it == row.end()) {
      row.push_back(v);
      return r;
    }
    std::swap(*it, v);
  }
}

}  // namespace detail

/// Length of the longest strictly increasing subsequence, O(n log n).
/// Throws InvalidInput on duplicate entries.
template <class T>
int lis_length(std::span<const T> seq) {
  std::vector<T> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("lis_length: entries must be pairwise distinct");
  return detail::lis_unchecked(seq);
}

inline int lis_length(const std::vector<double>& seq) { return lis_length<double>(seq); }
inline int lis_length(const std::vector<int>& seq) { return lis_length<int>(seq); }

/// Robinson-Schensted: P by row bumping, Q records cell creation order.
TableauPair<int> rsk(std::span<const int> sigma);

/// Shape of rsk(sigma) without building Q.
Partition rsk_shape(std::span<const int> sigma);

/// Inverse Robinson-Schensted by reverse bumping in decreasing Q order.
Permutation rsk_inverse(const StandardTableau& P, const StandardTableau& Q);

/// Real-valued RS: points are taken in increasing second coordinate (z);
/// P bumps the first coordinates (y), Q records z at each new cell.
TableauPair<double> rsk_real(std::span<const Point> points);

/// Order-isomorphic permutation of a point set: sort by second coordinate,
/// then record the ranks of the first coordinates.
Permutation comparison_permutation(std::span<const Point> points);

/// Maximal total length of k disjoint increasing subsequences, exhaustive.
/// Oracle only: refuses N > 10.
int greene_bruteforce(std::span<const int> sigma, int k);

/// Number of standard Young tableaux of shape lambda. Backtracking for N <= 10,
/// hook lengths (checked against the backtracking count in tests) up to 20.
std::uint64_t count_standard_tableaux(const Partition& lambda);
std::uint64_t count_standard_tableaux_backtracking(const Partition& lambda);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Uniform permutation of {1..N} by Fisher-Yates.
Permutation random_permutation(int N, CounterRng& rng);

/// Shape of RS applied to a uniform permutation (Plancherel measure).
Partition plancherel_sample(int N, Seed seed);

/// `{"shape":[...],"rows":[[...],...]}`
template <class T>
void write_json(std::ostream& os, const Tableau<T>& t);
void write_permutation_csv(std::ostream& os, std::span<const int> sigma);
Permutation read_permutation_csv(std::istream& is);

}  // namespace kpzlab
