#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <vector>

#include "barcode/interval.hpp"

namespace barcode {
namespace detail {

// Hopcroft-Karp maximum matching. Left vertices hold the adjacency lists.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int n_left, int n_right)
      : n_left_(n_left),
        adj_(n_left),
        match_left_(n_left, -1),
        match_right_(n_right, -1) {}

  void add_edge(int u, int v) { adj_[u].push_back(v); }

  int max_matching() {
    int matched = 0;
    while (bfs()) {
      for (int u = 0; u < n_left_; ++u)
        if (match_left_[u] < 0 && dfs(u)) ++matched;
    }
    return matched;
  }

 private:
  bool bfs() {
    std::queue<int> q;
    dist_.assign(n_left_, -1);
    for (int u = 0; u < n_left_; ++u)
      if (match_left_[u] < 0) {
        dist_[u] = 0;
        q.push(u);
      }
    bool found_free = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        int w = match_right_[v];
        if (w < 0)
          found_free = true;
        else if (dist_[w] < 0) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found_free;
  }

  bool dfs(int u) {
    for (int v : adj_[u]) {
      int w = match_right_[v];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = -1;
    return false;
  }

  int n_left_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_, match_right_;
  std::vector<int> dist_;
};

// Feasibility of a bottleneck value eps: a partial matching with per-pair
// distance <= eps whose leftovers all have length <= 2*eps. Reduced to a
// perfect matching by adjoining one diagonal slot per bar; a bar may pair
// with its own slot exactly when it is short enough to stay unmatched, and
// diagonal slots pair with each other freely.
inline bool matching_feasible(const std::vector<Interval>& a,
                              const std::vector<Interval>& b, double eps) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  BipartiteMatcher matcher(n + m, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (interval_distance(a[i], b[j]) <= eps) matcher.add_edge(i, j);
  for (int i = 0; i < n; ++i)
    if (!a[i].infinite() && a[i].length() <= 2 * eps) matcher.add_edge(i, m + i);
  for (int j = 0; j < m; ++j) {
    if (!b[j].infinite() && b[j].length() <= 2 * eps) matcher.add_edge(n + j, j);
    for (int i = 0; i < n; ++i) matcher.add_edge(n + j, m + i);
  }
  return matcher.max_matching() == n + m;
}

}  // namespace detail

// Bottleneck distance between two barcodes. The infimum is always attained at
// one of finitely many candidates: a pairwise interval distance, a half
// length, or 0. Candidates are scanned by binary search (feasibility is
// monotone in eps). Returns +infinity when the semi-infinite bar counts
// differ, since such bars can never be left unmatched.
inline double bottleneck_distance(const Barcode& b1, const Barcode& b2) {
  if (b1.infinite_count() != b2.infinite_count()) return kInfinity;
  const auto& a = b1.bars();
  const auto& b = b2.bars();
  if (a.empty() && b.empty()) return 0.0;

  std::vector<double> candidates{0.0};
  for (const auto& i : a)
    for (const auto& j : b) {
      double d = interval_distance(i, j);
      if (std::isfinite(d)) candidates.push_back(d);
    }
  for (const auto& i : a)
    if (!i.infinite()) candidates.push_back(i.length() / 2);
  for (const auto& j : b)
    if (!j.infinite()) candidates.push_back(j.length() / 2);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::size_t lo = 0, hi = candidates.size() - 1;
  if (!detail::matching_feasible(a, b, candidates[hi])) return kInfinity;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (detail::matching_feasible(a, b, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace barcode
