#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "barcode/action_graph.hpp"
#include "barcode/diagnostics.hpp"
#include "barcode/generic_complex.hpp"

namespace barcode {

// Polygon-gluing description of a gradient-like foliation: one polygon per
// source, listing the boundary of its repulsive basin as an alternating
// cyclic sequence sink0, saddle0, sink1, saddle1, ... Each saddle owns an
// ordered pair of unstable-leaf targets and fills exactly two polygon slots.
struct FoliationCode {
  std::vector<std::string> sinks, saddles, sources;
  std::map<std::string, std::pair<std::string, std::string>> unstable;
  std::map<std::string, std::vector<std::string>> polygons;
};

inline std::vector<Violation> validate_code(const FoliationCode& code) {
  std::vector<Violation> out;
  if (code.sinks.empty() || code.saddles.empty() || code.sources.empty()) {
    out.push_back({"empty-code", "a code needs at least one sink, saddle and source"});
    return out;
  }
  std::set<std::string> sinks(code.sinks.begin(), code.sinks.end());
  std::set<std::string> saddles(code.saddles.begin(), code.saddles.end());
  std::set<std::string> sources(code.sources.begin(), code.sources.end());
  if (sinks.size() != code.sinks.size() || saddles.size() != code.saddles.size() ||
      sources.size() != code.sources.size())
    out.push_back({"duplicate-id", "repeated id within a singularity class"});
  for (const auto& s : saddles)
    if (sinks.count(s) || sources.count(s))
      out.push_back({"duplicate-id", "id " + s + " appears in two classes"});
  for (const auto& s : sources)
    if (sinks.count(s)) out.push_back({"duplicate-id", "id " + s + " appears in two classes"});

  for (const auto& x : code.saddles)
    if (!code.unstable.count(x))
      out.push_back({"missing-unstable", "saddle " + x + " has no unstable pair"});
  for (const auto& [x, pair] : code.unstable) {
    if (!saddles.count(x))
      out.push_back({"unknown-saddle", "unstable pair for " + x});
    if (!sinks.count(pair.first) || !sinks.count(pair.second))
      out.push_back({"unknown-sink", "unstable targets of " + x});
  }

  std::map<std::string, int> slot_count;
  std::set<std::string> covered_sinks;
  for (const auto& z : code.sources)
    if (!code.polygons.count(z))
      out.push_back({"missing-polygon", "source " + z + " has no polygon"});
  for (const auto& [z, poly] : code.polygons) {
    if (!sources.count(z)) {
      out.push_back({"unknown-source", "polygon for " + z});
      continue;
    }
    if (poly.empty() || poly.size() % 2 != 0) {
      out.push_back({"polygon-shape", "polygon of " + z + " must alternate sink, saddle"});
      continue;
    }
    const int n = static_cast<int>(poly.size()) / 2;
    bool shape_ok = true;
    for (int k = 0; k < n; ++k) {
      if (!sinks.count(poly[2 * k]) || !saddles.count(poly[2 * k + 1])) {
        out.push_back({"polygon-shape", "polygon of " + z + " must alternate sink, saddle"});
        shape_ok = false;
        break;
      }
    }
    if (!shape_ok) continue;
    for (int k = 0; k < n; ++k) {
      const std::string& saddle = poly[2 * k + 1];
      ++slot_count[saddle];
      covered_sinks.insert(poly[2 * k]);
      auto it = code.unstable.find(saddle);
      if (it == code.unstable.end()) continue;
      std::multiset<std::string> flanks{poly[2 * k], poly[(2 * k + 2) % poly.size()]};
      std::multiset<std::string> pair{it->second.first, it->second.second};
      if (flanks != pair)
        out.push_back({"flank-mismatch",
                       "polygon of " + z + ": slot " + std::to_string(k) + " of " +
                           saddle + " is not flanked by its unstable pair"});
    }
  }
  for (const auto& x : code.saddles)
    if (slot_count[x] != 2)
      out.push_back({"saddle-slots", x + " fills " + std::to_string(slot_count[x]) +
                                         " polygon slots, expected 2"});
  for (const auto& y : code.sinks)
    if (!covered_sinks.count(y))
      out.push_back({"unused-sink", y + " appears in no polygon"});
  return out;
}

inline int euler_characteristic(const FoliationCode& code) {
  return static_cast<int>(code.sinks.size()) + static_cast<int>(code.sources.size()) -
         static_cast<int>(code.saddles.size());
}

// Graph induced by a code: one edge source -> saddle per polygon slot and the
// two unstable edges saddle -> sink, multiplicities preserved. Actions must
// be injective and strictly decreasing along every induced edge.
inline ActionGraph code_to_graph(const FoliationCode& code,
                                 const std::map<std::string, double>& actions) {
  auto violations = validate_code(code);
  std::set<double> seen;
  auto lookup = [&](const std::string& id) {
    auto it = actions.find(id);
    if (it == actions.end()) {
      violations.push_back({"missing-action", id});
      return 0.0;
    }
    return it->second;
  };
  GraphData data;
  for (const auto& y : code.sinks) data.vertices.push_back({y, lookup(y), 1});
  for (const auto& x : code.saddles) data.vertices.push_back({x, lookup(x), -1});
  for (const auto& z : code.sources) data.vertices.push_back({z, lookup(z), 1});
  for (const auto& v : data.vertices)
    if (!seen.insert(v.action).second)
      violations.push_back({"duplicate-action", "action " + format_double(v.action)});
  if (!violations.empty()) throw ValidationError(std::move(violations));
  for (const auto& [z, poly] : code.polygons)
    for (std::size_t k = 1; k < poly.size(); k += 2) data.edges.emplace_back(z, poly[k]);
  for (const auto& x : code.saddles) {
    const auto& pair = code.unstable.at(x);
    data.edges.emplace_back(x, pair.first);
    data.edges.emplace_back(x, pair.second);
  }
  return ActionGraph::from(data);
}

// Curated instances: the four-vertex graph with one saddle, the six-point
// sphere, and the degenerate two-point sphere.
inline ActionGraph paper_example(const std::string& name) {
  GraphData data;
  data.name = name;
  if (name == "section4") {
    data.vertices = {{"y2", 0, 1}, {"y1", 1, 1}, {"x", 2, -1}, {"z", 3, 1}};
    data.edges = {{"x", "y1"}, {"x", "y2"}, {"z", "x"}};
  } else if (name == "morse-sphere") {
    data.vertices = {{"p1", -2.5, 1}, {"p2", -2, 1}, {"x1", -1, -1},
                     {"x2", 1, -1},   {"s2", 2, 1},  {"s1", 2.5, 1}};
    data.edges = {{"x1", "p1"}, {"x1", "p2"}, {"x2", "p1"}, {"x2", "p2"},
                  {"s1", "x1"}, {"s1", "x2"}, {"s2", "x1"}, {"s2", "x2"}};
  } else if (name == "north-south") {
    data.vertices = {{"y", 0, 1}, {"z", 1, 1}};
    data.edges = {{"z", "y"}};
  } else {
    throw std::invalid_argument("unknown example " + name);
  }
  return ActionGraph::from(data);
}

// Injective action assignment on a DAG, strictly decreasing along every edge:
// a randomized topological order with unit-spaced jittered values.
inline std::map<std::string, double> assign_actions(
    const std::vector<std::string>& nodes,
    const std::vector<std::pair<std::string, std::string>>& edges, std::uint64_t seed) {
  const int n = static_cast<int>(nodes.size());
  std::map<std::string, int> pos;
  for (int i = 0; i < n; ++i) pos[nodes[i]] = i;
  std::vector<std::vector<int>> adj(n);
  std::vector<int> indeg(n, 0);
  for (const auto& [u, v] : edges) {
    adj[pos.at(u)].push_back(pos.at(v));
    ++indeg[pos.at(v)];
  }
  std::mt19937_64 rng(seed);
  std::vector<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::vector<int> order;
  while (!ready.empty()) {
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
    int v = ready[pick];
    ready[pick] = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : adj[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("cycle detected in action assignment");
  std::map<std::string, double> actions;
  std::uniform_real_distribution<double> jitter(0.0, 0.5);
  for (int rank = 0; rank < n; ++rank)
    actions[nodes[order[rank]]] = static_cast<double>(n - 1 - rank) + jitter(rng);
  return actions;
}

struct GeneratorParams {
  int target_genus = 0;
  int n_sources = 1;
  std::uint64_t rng_seed = 0;
  int max_attempts = 10000;
};

struct GeneratedInstance {
  FoliationCode code;
  std::map<std::string, double> actions;
  GenericInstance instance;
  int genus = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
};

namespace detail {

template <typename Rng>
int draw_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename Rng>
void shuffle_ints(std::vector<int>& v, Rng& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
    std::swap(v[i], v[draw_int(rng, 0, i)]);
}

}  // namespace detail

// Rejection-samples realizable codes by drawing the surface gluing itself.
// Each attempt draws a saddle count, splits the 2S polygon slots into
// n_sources cyclic polygons, and matches slots into saddles at random. With
// every polygon positively oriented, the orientation-coherent way to glue a
// saddle's four boundary sides into its two unstable leaves is forced, and
// the sinks are the corner classes of that gluing. The result is a closed
// oriented surface by construction; the attempt is kept when the sink count
// hits the Euler-characteristic target 2 - 2*target_genus and the induced
// graph is connected. Deterministic per seed.
inline GeneratedInstance generate(const GeneratorParams& params) {
  if (params.target_genus < 0) throw std::invalid_argument("target_genus must be >= 0");
  if (params.n_sources < 1) throw std::invalid_argument("n_sources must be positive");
  if (params.max_attempts < 1)
    throw GenerationError("max_attempts exhausted: no attempts allowed");

  std::mt19937_64 rng(params.rng_seed);
  const int P = params.n_sources;
  const int G = params.target_genus;
  const int s_min = std::max(1, P + 2 * G - 1);
  const int s_cap = 19 + G;  // keeps sinks + saddles + sources within 40
  if (s_min > s_cap)
    throw std::invalid_argument("n_sources too large for the singularity budget");

  int best_score = -1;
  std::string best_miss;
  auto record_miss = [&](int attempt, int score, const std::string& what) {
    if (best_score < 0 || score < best_score) {
      best_score = score;
      best_miss = "attempt " + std::to_string(attempt) + ": " + what;
    }
  };

  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    // Low genus needs few vertex-merging identifications, which gets rare as
    // the gluing grows; take the min of two draws to bias the size down.
    const int window = std::min(s_cap, s_min + 6) - s_min;
    const int S = s_min + std::min(detail::draw_int(rng, 0, window),
                                   detail::draw_int(rng, 0, window));
    const int K = 2 - 2 * G + S - P;
    const int n_slots = 2 * S;
    if (n_slots < P) continue;

    // Random composition of the 2S slots into P nonempty polygons.
    std::vector<int> gaps(n_slots - 1);
    for (int i = 0; i < n_slots - 1; ++i) gaps[i] = i + 1;
    detail::shuffle_ints(gaps, rng);
    std::vector<int> cuts(gaps.begin(), gaps.begin() + (P - 1));
    cuts.push_back(0);
    cuts.push_back(n_slots);
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> first_slot(P), slot_count(P);
    for (int p = 0; p < P; ++p) {
      first_slot[p] = cuts[p];
      slot_count[p] = cuts[p + 1] - cuts[p];
    }
    std::vector<int> polygon_of(n_slots), pos_of(n_slots);
    for (int p = 0; p < P; ++p)
      for (int k = 0; k < slot_count[p]; ++k) {
        polygon_of[first_slot[p] + k] = p;
        pos_of[first_slot[p] + k] = k;
      }
    // Corner k of a polygon is the sink corner preceding slot k; corners use
    // the same global indexing as slots.
    auto corner = [&](int p, int k) { return first_slot[p] + (k % slot_count[p]); };

    // Random perfect matching on slots: matched slots form one saddle.
    std::vector<int> perm(n_slots);
    for (int i = 0; i < n_slots; ++i) perm[i] = i;
    detail::shuffle_ints(perm, rng);

    // Glue the two slots of each saddle: with all polygons oriented the same
    // way, the side before one slot joins the side after the other. The
    // gluing identifies the sink corners at the joined side ends.
    detail::UnionFind classes(n_slots);
    for (int i = 0; i < S; ++i) {
      int a = perm[2 * i], b = perm[2 * i + 1];
      int pa = polygon_of[a], ka = pos_of[a];
      int pb = polygon_of[b], kb = pos_of[b];
      classes.unite(corner(pa, ka), corner(pb, kb + 1));
      classes.unite(corner(pa, ka + 1), corner(pb, kb));
    }
    std::map<int, int> class_id;  // union-find root -> sink number
    for (int c = 0; c < n_slots; ++c) {
      int root = classes.find(c);
      if (!class_id.count(root)) class_id[root] = static_cast<int>(class_id.size());
    }
    if (static_cast<int>(class_id.size()) != K) {
      record_miss(attempt,
                  10 * std::abs(static_cast<int>(class_id.size()) - K),
                  std::to_string(class_id.size()) + " sinks (target " +
                      std::to_string(K) + ")");
      continue;
    }

    std::vector<int> saddle_of(n_slots);
    for (int i = 0; i < S; ++i) saddle_of[perm[2 * i]] = saddle_of[perm[2 * i + 1]] = i;
    auto sink_at = [&](int p, int k) { return class_id.at(classes.find(corner(p, k))); };

    FoliationCode code;
    for (int i = 0; i < K; ++i) code.sinks.push_back("y" + std::to_string(i));
    for (int i = 0; i < S; ++i) code.saddles.push_back("x" + std::to_string(i));
    for (int i = 0; i < P; ++i) code.sources.push_back("z" + std::to_string(i));
    for (int i = 0; i < S; ++i) {
      int a = perm[2 * i];
      int pa = polygon_of[a], ka = pos_of[a];
      code.unstable[code.saddles[i]] = {code.sinks[sink_at(pa, ka)],
                                        code.sinks[sink_at(pa, ka + 1)]};
    }
    for (int p = 0; p < P; ++p) {
      std::vector<std::string> poly;
      for (int k = 0; k < slot_count[p]; ++k) {
        poly.push_back(code.sinks[sink_at(p, k)]);
        poly.push_back(code.saddles[saddle_of[first_slot[p] + k]]);
      }
      code.polygons[code.sources[p]] = std::move(poly);
    }
    auto code_violations = validate_code(code);
    if (!code_violations.empty())
      throw std::logic_error("generated code violates its invariants: " +
                             join_violations(code_violations));

    GraphData shape;
    for (const auto& y : code.sinks) shape.vertices.push_back({y, 0, 1});
    for (const auto& x : code.saddles) shape.vertices.push_back({x, 0, -1});
    for (const auto& z : code.sources) shape.vertices.push_back({z, 0, 1});
    for (const auto& [z, poly] : code.polygons)
      for (std::size_t k = 1; k < poly.size(); k += 2) shape.edges.emplace_back(z, poly[k]);
    for (const auto& x : code.saddles) {
      const auto& pair = code.unstable.at(x);
      shape.edges.emplace_back(x, pair.first);
      shape.edges.emplace_back(x, pair.second);
    }

    std::vector<std::string> nodes;
    for (const auto& v : shape.vertices) nodes.push_back(v.id);
    auto actions = assign_actions(nodes, shape.edges, rng());
    for (auto& v : shape.vertices) v.action = actions.at(v.id);

    auto graph_violations = validate(shape);
    bool disconnected = false;
    for (const auto& v : graph_violations)
      if (v.code == "disconnected") disconnected = true;
    if (disconnected) {
      record_miss(attempt, 100, "induced graph is disconnected");
      continue;
    }
    if (!graph_violations.empty())
      throw std::logic_error("generated graph violates its invariants: " +
                             join_violations(graph_violations));

    ActionGraph graph = ActionGraph::from(shape);
    auto generic = validate_generic(graph);
    if (!generic.ok())
      throw std::logic_error("generated graph fails the generic hypotheses: " +
                             join_violations(generic.violations));
    FilteredComplex fc = build_complex(*generic.instance);
    if (!check_d_squared(fc))
      throw std::logic_error("generated complex has nonzero boundary of boundary");

    return GeneratedInstance{std::move(code), std::move(actions),
                             std::move(*generic.instance), G, params.rng_seed, attempt};
  }
  throw GenerationError("no instance after " + std::to_string(params.max_attempts) +
                        " attempts; closest miss: " +
                        (best_miss.empty() ? "none" : best_miss));
}

}  // namespace barcode
