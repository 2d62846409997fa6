#pragma once

#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "barcode/action_graph.hpp"
#include "barcode/interval.hpp"

namespace barcode {

// A bar together with where it came from: emitting category, originating
// threshold, and the id of the witnessing block minimum or maximum.
struct CategorizedBar {
  Interval interval;
  int category;
  double threshold;
  std::string witness;
};

namespace detail {

// Vertex attaining the block minimum (or maximum), smallest id among ties.
inline std::string extremal_witness(const ActionGraph& g, const std::vector<int>& block,
                                    bool minimum) {
  double best = minimum ? l_value(g, block) : d_value(g, block);
  std::string w;
  for (int v : block)
    if (g.action(v) == best && (w.empty() || g.id(v) < w)) w = g.id(v);
  return w;
}

}  // namespace detail

// The two semi-infinite bars anchored at the global action extremes. They
// coincide when the graph is a single vertex.
inline std::vector<CategorizedBar> bars_category0(const ActionGraph& g) {
  std::vector<int> all(g.size());
  for (int v = 0; v < g.size(); ++v) all[v] = v;
  double lo = l_value(g, all), hi = d_value(g, all);
  return {{Interval(lo, kInfinity), 0, lo, detail::extremal_witness(g, all, true)},
          {Interval(hi, kInfinity), 0, hi, detail::extremal_witness(g, all, false)}};
}

// Sublevel merge bars at threshold t: each closed component that absorbs n>=1
// open components contributes n-1 bars (L(C_i), t], keeping the component of
// smallest L alive. Ties pick the block whose minimal vertex id is smallest;
// the emitted multiset does not depend on that choice.
inline std::vector<CategorizedBar> bars_category1(const ActionGraph& g, double t) {
  JMap jm = j_map(g, t, Side::sub);
  std::vector<CategorizedBar> out;
  for (std::size_t cb = 0; cb < jm.closed_parts.blocks.size(); ++cb) {
    std::vector<int> pre;
    for (std::size_t ob = 0; ob < jm.open_parts.blocks.size(); ++ob)
      if (jm.target[ob] == static_cast<int>(cb)) pre.push_back(static_cast<int>(ob));
    if (pre.size() <= 1) continue;
    int keep = pre.front();
    double keep_l = l_value(g, jm.open_parts.blocks[keep]);
    std::string keep_w = detail::extremal_witness(g, jm.open_parts.blocks[keep], true);
    for (int ob : pre) {
      double l = l_value(g, jm.open_parts.blocks[ob]);
      std::string w = detail::extremal_witness(g, jm.open_parts.blocks[ob], true);
      if (l < keep_l || (l == keep_l && w < keep_w)) {
        keep = ob;
        keep_l = l;
        keep_w = w;
      }
    }
    for (int ob : pre) {
      if (ob == keep) continue;
      out.push_back({Interval(l_value(g, jm.open_parts.blocks[ob]), t), 1, t,
                     detail::extremal_witness(g, jm.open_parts.blocks[ob], true)});
    }
  }
  return out;
}

// Superlevel mirror of category 1: bars (t, D(C'_i)], keeping the component
// of largest D.
inline std::vector<CategorizedBar> bars_category2(const ActionGraph& g, double t) {
  JMap jm = j_map(g, t, Side::super);
  std::vector<CategorizedBar> out;
  for (std::size_t cb = 0; cb < jm.closed_parts.blocks.size(); ++cb) {
    std::vector<int> pre;
    for (std::size_t ob = 0; ob < jm.open_parts.blocks.size(); ++ob)
      if (jm.target[ob] == static_cast<int>(cb)) pre.push_back(static_cast<int>(ob));
    if (pre.size() <= 1) continue;
    int keep = pre.front();
    double keep_d = d_value(g, jm.open_parts.blocks[keep]);
    std::string keep_w = detail::extremal_witness(g, jm.open_parts.blocks[keep], false);
    for (int ob : pre) {
      double d = d_value(g, jm.open_parts.blocks[ob]);
      std::string w = detail::extremal_witness(g, jm.open_parts.blocks[ob], false);
      if (d > keep_d || (d == keep_d && w < keep_w)) {
        keep = ob;
        keep_d = d;
        keep_w = w;
      }
    }
    for (int ob : pre) {
      if (ob == keep) continue;
      out.push_back({Interval(t, d_value(g, jm.open_parts.blocks[ob])), 2, t,
                     detail::extremal_witness(g, jm.open_parts.blocks[ob], false)});
    }
  }
  return out;
}

// Saddle index weight at threshold t.
inline int saddle_weight(const ActionGraph& g, double t) {
  int k = 0;
  for (int v = 0; v < g.size(); ++v)
    if (g.action(v) == t && g.classify(v) == VertexKind::saddle)
      k += std::abs(g.index(v));
  return k;
}

// Semi-infinite bars absorbing the saddle weight left over by categories 1
// and 2 at t. A negative leftover emits nothing.
inline std::vector<CategorizedBar> bars_category3(const ActionGraph& g, double t) {
  int k_prime = saddle_weight(g, t) - static_cast<int>(bars_category1(g, t).size()) -
                static_cast<int>(bars_category2(g, t).size());
  std::vector<CategorizedBar> out;
  for (int c = 0; c < k_prime; ++c)
    out.push_back({Interval(t, kInfinity), 3, t, ""});
  return out;
}

struct ThresholdDiagnostic {
  double t = 0.0;
  int k = 0;
  int k_prime = 0;  // may be negative; emission clamps at zero
  JMap sub;
  JMap super;
  std::vector<CategorizedBar> bars;
};

struct BetaResult {
  Barcode barcode;
  std::vector<CategorizedBar> categorized;
  std::vector<ThresholdDiagnostic> thresholds;
};

inline BetaResult compute_B_detailed(const ActionGraph& g) {
  BetaResult res;
  res.categorized = bars_category0(g);
  for (double t : g.action_values()) {
    ThresholdDiagnostic diag;
    diag.t = t;
    diag.sub = j_map(g, t, Side::sub);
    diag.super = j_map(g, t, Side::super);
    auto c1 = bars_category1(g, t);
    auto c2 = bars_category2(g, t);
    diag.k = saddle_weight(g, t);
    diag.k_prime = diag.k - static_cast<int>(c1.size()) - static_cast<int>(c2.size());
    diag.bars = c1;
    diag.bars.insert(diag.bars.end(), c2.begin(), c2.end());
    for (int c = 0; c < diag.k_prime; ++c)
      diag.bars.push_back({Interval(t, kInfinity), 3, t, ""});
    res.categorized.insert(res.categorized.end(), diag.bars.begin(), diag.bars.end());
    res.thresholds.push_back(std::move(diag));
  }
  std::vector<Interval> raw;
  for (const auto& cb : res.categorized) raw.push_back(cb.interval);
  res.barcode = Barcode(std::move(raw));
  return res;
}

// The barcode of (G, A, ind): categories 0-3 collected over all action
// values, then normalized.
inline Barcode compute_B(const ActionGraph& g) { return compute_B_detailed(g).barcode; }

struct SaddleCheck {
  std::string id;
  int index = 0;
  int sub_preimages = 0;
  int super_preimages = 0;
  bool holds = false;
};

// Counts the sublevel and superlevel components merged at an isolated saddle
// and tests them against |ind| + 2. The bound can fail on arbitrary graphs;
// the boolean is the finding, not an error.
inline SaddleCheck check_saddle_inequality(const ActionGraph& g, const std::string& id) {
  int v = g.find(id);
  if (g.classify(v) != VertexKind::saddle)
    throw std::invalid_argument("vertex " + id + " is not a saddle");
  double t = g.action(v);
  for (int w = 0; w < g.size(); ++w)
    if (w != v && g.action(w) == t)
      throw std::invalid_argument("action value of " + id + " is not unique");
  SaddleCheck res;
  res.id = id;
  res.index = g.index(v);
  JMap sub = j_map(g, t, Side::sub);
  res.sub_preimages = sub.preimage_count[sub.closed_parts.block_of.at(v)];
  JMap super = j_map(g, t, Side::super);
  res.super_preimages = super.preimage_count[super.closed_parts.block_of.at(v)];
  res.holds = res.sub_preimages + res.super_preimages <= std::abs(res.index) + 2;
  return res;
}

// --- cyclic cone combinatorics ---------------------------------------------

// Alternating cyclic arrangement of n stable and n unstable cone positions,
// with labels recording which component each cone feeds. Position k of the
// stable side sits between unstable positions k and k+1 (mod n).
struct ConeInstance {
  int n = 0;
  std::vector<int> omega;  // labels of the unstable positions
  std::vector<int> alpha;  // labels of the stable positions
};

inline bool cone_position_adjacent(const ConeInstance& c, int k, const std::vector<char>& in_j) {
  bool prev = in_j[k];
  bool next = in_j[(k + 1) % c.n];
  return prev != next;
}

// Hypothesis: every stable position adjacent to a label class of omega has a
// distinct companion, adjacent to the same class, carrying the same alpha
// label.
inline bool cone_hypothesis_holds(const ConeInstance& c) {
  int max_label = 0;
  for (int l : c.omega) max_label = std::max(max_label, l);
  for (int label = 0; label <= max_label; ++label) {
    std::vector<char> in_j(c.n, 0);
    bool any = false;
    for (int k = 0; k < c.n; ++k)
      if (c.omega[k] == label) {
        in_j[k] = 1;
        any = true;
      }
    if (!any) continue;
    for (int k = 0; k < c.n; ++k) {
      if (!cone_position_adjacent(c, k, in_j)) continue;
      bool companion = false;
      for (int k2 = 0; k2 < c.n && !companion; ++k2)
        if (k2 != k && cone_position_adjacent(c, k2, in_j) && c.alpha[k2] == c.alpha[k])
          companion = true;
      if (!companion) return false;
    }
  }
  return true;
}

inline int distinct_labels(const std::vector<int>& labels) {
  std::vector<int> v = labels;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return static_cast<int>(v.size());
}

inline bool cone_inequality_holds(const ConeInstance& c) {
  return distinct_labels(c.alpha) + distinct_labels(c.omega) <= c.n + 1;
}

namespace detail {

// All set partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(rgs);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

}  // namespace detail

// Exhaustively enumerates labelings up to relabeling (pairs of set
// partitions) for every cyclic cone size up to n_max, keeps those satisfying
// the hypothesis, and verifies the bound on each. Returns the first violating
// instance, or nothing.
inline std::optional<ConeInstance> check_cone_lemma(int n_max) {
  if (n_max < 1 || n_max > 6)
    throw std::invalid_argument("cone enumeration budget is 1..6");
  for (int n = 1; n <= n_max; ++n) {
    auto parts = detail::partitions(n);
    for (const auto& omega : parts)
      for (const auto& alpha : parts) {
        ConeInstance c{n, omega, alpha};
        if (!cone_hypothesis_holds(c)) continue;
        if (!cone_inequality_holds(c)) return c;
      }
  }
  return std::nullopt;
}

}  // namespace barcode
