#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "barcode/diagnostics.hpp"

namespace barcode {

enum class VertexKind { sink, source, saddle };
enum class Side { sub, super };
enum class Closure { open, closed };  // closed includes the vertices at t itself
enum class ValidateMode { lax, strict };

struct VertexSpec {
  std::string id;
  double action = 0.0;
  int index = 0;
};

struct GraphData {
  std::string name;
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;  // repeats = multiplicity
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Checks every structural invariant of the input universe: unique nonempty
// ids, declared edge endpoints, action strictly decreasing along edges,
// undirected connectivity. Strict mode additionally enforces the index
// profile used by the structure theorems (sinks and sources carry index 1,
// saddles a nonpositive index).
inline std::vector<Violation> validate(const GraphData& data,
                                       ValidateMode mode = ValidateMode::lax) {
  std::vector<Violation> out;
  if (data.vertices.empty()) {
    out.push_back({"empty-graph", "no vertices"});
    return out;
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < data.vertices.size(); ++i) {
    const auto& v = data.vertices[i];
    if (v.id.empty()) {
      out.push_back({"empty-id", "vertex at position " + std::to_string(i)});
      continue;
    }
    if (!std::isfinite(v.action))
      out.push_back({"non-finite-action", "vertex " + v.id});
    if (!index.emplace(v.id, static_cast<int>(i)).second)
      out.push_back({"duplicate-id", "vertex " + v.id});
  }
  detail::UnionFind uf(static_cast<int>(data.vertices.size()));
  std::vector<int> out_deg(data.vertices.size(), 0), in_deg(data.vertices.size(), 0);
  for (std::size_t k = 0; k < data.edges.size(); ++k) {
    const auto& [from, to] = data.edges[k];
    auto fit = index.find(from), tit = index.find(to);
    if (fit == index.end() || tit == index.end()) {
      out.push_back({"unknown-endpoint",
                     "edge " + std::to_string(k) + ": " + from + " -> " + to});
      continue;
    }
    const auto& u = data.vertices[fit->second];
    const auto& v = data.vertices[tit->second];
    if (!(u.action > v.action))
      out.push_back({"non-decreasing-edge",
                     from + " -> " + to + " (A=" + format_double(u.action) +
                         " vs A=" + format_double(v.action) + ")"});
    uf.unite(fit->second, tit->second);
    ++out_deg[fit->second];
    ++in_deg[tit->second];
  }
  if (data.vertices.size() > 1) {
    std::set<int> roots;
    for (std::size_t i = 0; i < data.vertices.size(); ++i)
      roots.insert(uf.find(static_cast<int>(i)));
    if (roots.size() > 1)
      out.push_back({"disconnected",
                     std::to_string(roots.size()) + " connected components"});
  }
  if (mode == ValidateMode::strict) {
    for (std::size_t i = 0; i < data.vertices.size(); ++i) {
      const auto& v = data.vertices[i];
      bool is_saddle = out_deg[i] > 0 && in_deg[i] > 0;
      if (is_saddle) {
        if (v.index > 0)
          out.push_back({"index-profile",
                         "saddle " + v.id + " has index " + std::to_string(v.index)});
      } else if (v.index != 1) {
        out.push_back({"index-profile", "sink/source " + v.id + " has index " +
                                            std::to_string(v.index)});
      }
    }
  }
  return out;
}

// Finite oriented multigraph with a real action (strictly decreasing along
// every edge) and an integer index at each vertex. Immutable once built; all
// queries are pure.
class ActionGraph {
 public:
  static ActionGraph from(const GraphData& data, ValidateMode mode = ValidateMode::lax) {
    auto violations = validate(data, mode);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    ActionGraph g;
    g.data_ = data;
    for (std::size_t i = 0; i < data.vertices.size(); ++i)
      g.index_of_[data.vertices[i].id] = static_cast<int>(i);
    g.out_adj_.resize(data.vertices.size());
    g.in_adj_.resize(data.vertices.size());
    for (const auto& [from, to] : data.edges) {
      int u = g.index_of_.at(from), v = g.index_of_.at(to);
      g.edges_.emplace_back(u, v);
      g.out_adj_[u].push_back(v);
      g.in_adj_[v].push_back(u);
    }
    for (auto& a : g.out_adj_) std::sort(a.begin(), a.end());
    for (auto& a : g.in_adj_) std::sort(a.begin(), a.end());
    return g;
  }

  int size() const { return static_cast<int>(data_.vertices.size()); }
  const GraphData& data() const { return data_; }

  int find(const std::string& id) const {
    auto it = index_of_.find(id);
    if (it == index_of_.end()) throw std::invalid_argument("unknown vertex id " + id);
    return it->second;
  }
  bool contains(const std::string& id) const { return index_of_.count(id) > 0; }

  const std::string& id(int v) const { return data_.vertices[v].id; }
  double action(int v) const { return data_.vertices[v].action; }
  int index(int v) const { return data_.vertices[v].index; }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& out_neighbors(int v) const { return out_adj_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_adj_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_adj_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_adj_[v].size()); }

  // Out-degree zero is a sink, in-degree zero a source, anything else a
  // saddle. A single-vertex graph classifies as a sink by convention and is
  // reported through degenerate().
  VertexKind classify(int v) const {
    if (out_degree(v) == 0) return VertexKind::sink;
    if (in_degree(v) == 0) return VertexKind::source;
    return VertexKind::saddle;
  }
  bool degenerate() const { return size() == 1; }

  std::vector<double> action_values() const {
    std::vector<double> vs;
    for (const auto& v : data_.vertices) vs.push_back(v.action);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }
  bool has_action_value(double t) const {
    for (const auto& v : data_.vertices)
      if (v.action == t) return true;
    return false;
  }
  double min_action() const {
    double m = data_.vertices[0].action;
    for (const auto& v : data_.vertices) m = std::min(m, v.action);
    return m;
  }
  double max_action() const {
    double m = data_.vertices[0].action;
    for (const auto& v : data_.vertices) m = std::max(m, v.action);
    return m;
  }
  int index_sum() const {
    int s = 0;
    for (const auto& v : data_.vertices) s += v.index;
    return s;
  }

 private:
  ActionGraph() = default;
  GraphData data_;
  std::map<std::string, int> index_of_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> out_adj_, in_adj_;
};

// Induced subgraph of the vertices admitted by a threshold; vertex entries
// are indices into the parent graph.
struct Subgraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  double threshold = 0.0;
  Side side = Side::sub;
  Closure closure = Closure::open;
};

inline Subgraph induced(const ActionGraph& g, double t, Side side, Closure closure) {
  Subgraph s;
  s.threshold = t;
  s.side = side;
  s.closure = closure;
  auto admitted = [&](int v) {
    double a = g.action(v);
    if (side == Side::sub) return closure == Closure::open ? a < t : a <= t;
    return closure == Closure::open ? a > t : a >= t;
  };
  for (int v = 0; v < g.size(); ++v)
    if (admitted(v)) s.vertices.push_back(v);
  for (const auto& [u, v] : g.edges())
    if (admitted(u) && admitted(v)) s.edges.emplace_back(u, v);
  return s;
}

inline Subgraph sublevel(const ActionGraph& g, double t, Closure closure) {
  return induced(g, t, Side::sub, closure);
}
inline Subgraph superlevel(const ActionGraph& g, double t, Closure closure) {
  return induced(g, t, Side::super, closure);
}

// Connected components of a subgraph's underlying undirected graph. Blocks
// hold sorted parent-graph vertex indices and are ordered by first element.
struct ComponentPartition {
  std::vector<std::vector<int>> blocks;
  std::map<int, int> block_of;  // vertex -> block position
  double threshold = 0.0;
  Side side = Side::sub;
  Closure closure = Closure::open;

  friend bool operator==(const ComponentPartition& a, const ComponentPartition& b) {
    return a.blocks == b.blocks;
  }
};

inline ComponentPartition components(const Subgraph& sub) {
  ComponentPartition part;
  part.threshold = sub.threshold;
  part.side = sub.side;
  part.closure = sub.closure;
  std::map<int, int> pos;
  for (std::size_t i = 0; i < sub.vertices.size(); ++i)
    pos[sub.vertices[i]] = static_cast<int>(i);
  detail::UnionFind uf(static_cast<int>(sub.vertices.size()));
  for (const auto& [u, v] : sub.edges) uf.unite(pos[u], pos[v]);
  std::map<int, std::vector<int>> grouped;
  for (std::size_t i = 0; i < sub.vertices.size(); ++i)
    grouped[uf.find(static_cast<int>(i))].push_back(sub.vertices[i]);
  for (auto& [root, verts] : grouped) {
    (void)root;
    std::sort(verts.begin(), verts.end());
    part.blocks.push_back(std::move(verts));
  }
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t b = 0; b < part.blocks.size(); ++b)
    for (int v : part.blocks[b]) part.block_of[v] = static_cast<int>(b);
  return part;
}

inline double l_value(const ActionGraph& g, const std::vector<int>& block) {
  if (block.empty()) throw std::invalid_argument("L of an empty block");
  double m = g.action(block.front());
  for (int v : block) m = std::min(m, g.action(v));
  return m;
}

inline double d_value(const ActionGraph& g, const std::vector<int>& block) {
  if (block.empty()) throw std::invalid_argument("D of an empty block");
  double m = g.action(block.front());
  for (int v : block) m = std::max(m, g.action(v));
  return m;
}

// Inclusion-induced map from the components at threshold t (open) to the
// components at t (closed): target[b] is the closed block containing open
// block b, preimage_count[c] the number of open blocks inside closed block c.
struct JMap {
  ComponentPartition open_parts;
  ComponentPartition closed_parts;
  std::vector<int> target;
  std::vector<int> preimage_count;
};

inline JMap j_map(const ActionGraph& g, double t, Side side) {
  if (!g.has_action_value(t))
    throw std::invalid_argument("threshold " + format_double(t) +
                                " is not an action value");
  JMap jm;
  jm.open_parts = components(induced(g, t, side, Closure::open));
  jm.closed_parts = components(induced(g, t, side, Closure::closed));
  jm.preimage_count.assign(jm.closed_parts.blocks.size(), 0);
  for (const auto& block : jm.open_parts.blocks) {
    int cb = jm.closed_parts.block_of.at(block.front());
    jm.target.push_back(cb);
    ++jm.preimage_count[cb];
  }
  return jm;
}

// Genus from the index sum: 2 - 2g = sum of indices. Sums that are odd or
// exceed 2 are not realizable on a closed oriented surface.
inline int genus(const ActionGraph& g) {
  int sum = g.index_sum();
  if (sum % 2 != 0 || sum > 2)
    throw ValidationError({{"index-sum", "sum of indices is " + std::to_string(sum) +
                                             ", expected an even value <= 2"}});
  return (2 - sum) / 2;
}

}  // namespace barcode
