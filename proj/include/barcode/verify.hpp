#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "barcode/action_graph.hpp"
#include "barcode/beta_map.hpp"
#include "barcode/bottleneck.hpp"
#include "barcode/foliation.hpp"
#include "barcode/generic_complex.hpp"
#include "barcode/interval.hpp"
#include "barcode/json_io.hpp"
#include "barcode/persistence.hpp"

namespace barcode {
namespace checks {

// Each check returns a failure description, or nothing when it holds.

inline std::optional<std::string> d_squared_zero(const GenericInstance& gi) {
  auto offenders = build_complex(gi).d_squared_offenders();
  if (offenders.empty()) return std::nullopt;
  return "boundary of boundary nonzero at " + offenders.front();
}

inline std::optional<std::string> pipelines_equal(const Barcode& b, const Barcode& b_gen) {
  if (b == b_gen) return std::nullopt;
  return "chain-complex barcode (" + std::to_string(b_gen.size()) +
         " bars) differs from merge barcode (" + std::to_string(b.size()) + " bars)";
}

inline std::optional<std::string> semi_infinite_count(const ActionGraph& g,
                                                      const Barcode& b,
                                                      const Barcode& b_gen) {
  std::size_t expected = static_cast<std::size_t>(4 - g.index_sum());
  if (b.infinite_count() != expected)
    return "merge barcode has " + std::to_string(b.infinite_count()) +
           " semi-infinite bars, expected " + std::to_string(expected);
  if (b_gen.infinite_count() != expected)
    return "chain-complex barcode has " + std::to_string(b_gen.infinite_count()) +
           " semi-infinite bars, expected " + std::to_string(expected);
  return std::nullopt;
}

// With injective actions, each saddle value ends |ind| bars and each sink or
// source value exactly one; sinks above the minimum must open a finite bar
// and sources below the maximum must close one.
inline std::optional<std::string> bar_counts(const ActionGraph& g, const Barcode& b) {
  for (int v = 0; v < g.size(); ++v)
    for (int w = v + 1; w < g.size(); ++w)
      if (g.action(v) == g.action(w)) return "actions are not injective";
  for (int v = 0; v < g.size(); ++v) {
    double t = g.action(v);
    int endpoints = 0, finite_births = 0, finite_deaths = 0;
    for (const auto& bar : b.bars()) {
      if (bar.birth() == t) {
        ++endpoints;
        if (!bar.infinite()) ++finite_births;
      }
      if (!bar.infinite() && bar.death() == t) {
        ++endpoints;
        ++finite_deaths;
      }
    }
    bool saddle = g.classify(v) == VertexKind::saddle;
    int expected = saddle ? std::abs(g.index(v)) : 1;
    if (endpoints != expected)
      return "value of " + g.id(v) + " ends " + std::to_string(endpoints) +
             " bars, expected " + std::to_string(expected);
    if (!saddle) {
      if (g.classify(v) == VertexKind::sink && t > g.min_action() && finite_births == 0)
        return "sink " + g.id(v) + " does not open a finite bar";
      if (g.classify(v) == VertexKind::source && t < g.max_action() && finite_deaths == 0)
        return "source " + g.id(v) + " does not close a finite bar";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> saddle_inequalities(const ActionGraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    if (g.classify(v) != VertexKind::saddle) continue;
    auto check = check_saddle_inequality(g, g.id(v));
    if (!check.holds)
      return "saddle " + check.id + ": " + std::to_string(check.sub_preimages) + " + " +
             std::to_string(check.super_preimages) + " > |" +
             std::to_string(check.index) + "| + 2";
  }
  return std::nullopt;
}

// Replacing the action with any order-preserving perturbation within eps
// moves the barcode by at most eps in bottleneck distance.
inline std::optional<std::string> order_stability(const ActionGraph& g, const Barcode& b,
                                                  std::uint64_t seed) {
  double gap = kInfinity;
  for (int v = 0; v < g.size(); ++v)
    for (int w = v + 1; w < g.size(); ++w)
      gap = std::min(gap, std::abs(g.action(v) - g.action(w)));
  if (!std::isfinite(gap) || gap <= 0.0) return std::nullopt;
  std::mt19937_64 rng(seed);
  double eps = 0.1 * gap * std::uniform_real_distribution<double>(0.1, 1.0)(rng);
  GraphData data = g.data();
  std::uniform_real_distribution<double> shift(-eps, eps);
  for (auto& v : data.vertices) v.action += shift(rng);
  Barcode perturbed = compute_B(ActionGraph::from(data));
  double d = bottleneck_distance(b, perturbed);
  if (d <= eps + 1e-12) return std::nullopt;
  return "perturbation within " + format_double(eps) + " moved the barcode by " +
         format_double(d);
}

namespace detail {

inline std::vector<ComponentPartition> all_partitions(const ActionGraph& g) {
  std::vector<ComponentPartition> out;
  for (double t : g.action_values())
    for (Side side : {Side::sub, Side::super})
      for (Closure closure : {Closure::open, Closure::closed})
        out.push_back(components(induced(g, t, side, closure)));
  return out;
}

}  // namespace detail

// Adding an edge that changes no component partition at any threshold, side
// or closure leaves the barcode untouched. A parallel copy of an existing
// edge always qualifies; a few random action-compatible pairs are probed too.
inline std::optional<std::string> partition_insensitivity(const ActionGraph& g,
                                                          const Barcode& b,
                                                          std::uint64_t seed) {
  if (g.edges().empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  auto base_partitions = detail::all_partitions(g);
  std::vector<std::pair<std::string, std::string>> candidates;
  const auto& edges = g.data().edges;
  candidates.push_back(edges[std::uniform_int_distribution<std::size_t>(
      0, edges.size() - 1)(rng)]);
  std::uniform_int_distribution<int> pick(0, g.size() - 1);
  for (int tries = 0; tries < 12; ++tries) {
    int u = pick(rng), v = pick(rng);
    if (g.action(u) > g.action(v)) candidates.emplace_back(g.id(u), g.id(v));
  }
  for (const auto& edge : candidates) {
    GraphData data = g.data();
    data.edges.push_back(edge);
    ActionGraph extended = ActionGraph::from(data);
    if (detail::all_partitions(extended) != base_partitions) continue;
    Barcode extended_b = compute_B(extended);
    if (extended_b != b)
      return "adding partition-neutral edge " + edge.first + " -> " + edge.second +
             " changed the barcode";
  }
  return std::nullopt;
}

inline std::optional<std::string> oracle_agreement(const GenericInstance& gi) {
  FilteredComplex fc = build_complex(gi);
  if (compute_barcode(fc) == barcode_via_ranks(fc)) return std::nullopt;
  return "column reduction and rank formula disagree";
}

}  // namespace checks

struct VerifyOptions {
  int seeds = 100;
  int genus_max = 2;
  std::uint64_t base_seed = 1;
  int max_attempts = 50000;
};

struct InvariantOutcome {
  std::string name;
  int checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

struct VerifyReport {
  std::vector<InvariantOutcome> invariants;
  int instances = 0;
  bool all_pass() const {
    for (const auto& inv : invariants)
      if (!inv.pass()) return false;
    return true;
  }
  std::string to_text() const {
    std::string out = "verified " + std::to_string(instances) + " generated instances\n";
    for (const auto& inv : invariants) {
      std::string name = inv.name;
      name.resize(28, ' ');
      out += std::string(inv.pass() ? "[PASS] " : "[FAIL] ") + name +
             std::to_string(inv.checked - static_cast<int>(inv.failures.size())) + "/" +
             std::to_string(inv.checked) + "\n";
      for (const auto& f : inv.failures) out += "       " + f + "\n";
    }
    return out;
  }
};

// Generates `seeds` instances per genus in 0..genus_max and runs the full
// invariant suite on each, collecting counterexample dumps per invariant.
inline VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport report;
  std::vector<std::string> names = {
      "generation",      "d-squared",       "equality-of-pipelines",
      "semi-infinite",   "bar-counts",      "saddle-inequality",
      "order-stability", "partition-edges", "oracle-agreement"};
  for (const auto& n : names) report.invariants.push_back({n, 0, {}});
  auto outcome = [&](const std::string& name) -> InvariantOutcome& {
    for (auto& inv : report.invariants)
      if (inv.name == name) return inv;
    throw std::logic_error("unknown invariant " + name);
  };
  auto run = [&](const std::string& name, const std::string& context,
                 const std::optional<std::string>& failure) {
    auto& inv = outcome(name);
    ++inv.checked;
    if (failure) inv.failures.push_back(context + ": " + *failure);
  };

  for (int g = 0; g <= opts.genus_max; ++g) {
    for (int s = 0; s < opts.seeds; ++s) {
      GeneratorParams params;
      params.target_genus = g;
      params.n_sources = 1 + (s % 3);
      params.rng_seed = opts.base_seed + 0x9E3779B97F4A7C15ull * (g * 1000003ull + s);
      params.max_attempts = opts.max_attempts;
      std::string context = "genus " + std::to_string(g) + " seed " + std::to_string(s);
      auto& generation = outcome("generation");
      ++generation.checked;
      std::optional<GeneratedInstance> gen;
      try {
        gen = generate(params);
      } catch (const GenerationError& ex) {
        generation.failures.push_back(context + ": " + ex.what());
        continue;
      }
      ++report.instances;
      const ActionGraph& graph = gen->instance.graph;
      std::string dump_suffix =
          context + " " + instance_json(graph.data()).dump();
      Barcode b = compute_B(graph);
      Barcode b_gen = compute_B_gen(gen->instance);

      run("d-squared", dump_suffix, checks::d_squared_zero(gen->instance));
      run("equality-of-pipelines", dump_suffix, checks::pipelines_equal(b, b_gen));
      run("semi-infinite", dump_suffix, checks::semi_infinite_count(graph, b, b_gen));
      run("bar-counts", dump_suffix, checks::bar_counts(graph, b));
      run("saddle-inequality", dump_suffix, checks::saddle_inequalities(graph));
      run("order-stability", dump_suffix,
          checks::order_stability(graph, b, params.rng_seed ^ 0xABCDEF));
      run("partition-edges", dump_suffix,
          checks::partition_insensitivity(graph, b, params.rng_seed ^ 0x123456));
      run("oracle-agreement", dump_suffix, checks::oracle_agreement(gen->instance));
    }
  }
  return report;
}

}  // namespace barcode
