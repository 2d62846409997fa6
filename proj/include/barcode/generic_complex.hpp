#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barcode/action_graph.hpp"
#include "barcode/interval.hpp"
#include "barcode/persistence.hpp"

namespace barcode {

// A graph certified to satisfy the generic hypotheses, together with its
// grading: 0 for sinks, 1 for saddles, 2 for sources.
struct GenericInstance {
  ActionGraph graph;
  std::map<std::string, int> grading;
};

struct GenericCheck {
  std::vector<Violation> violations;
  std::optional<GenericInstance> instance;
  bool ok() const { return violations.empty(); }
};

// Generic hypotheses: injective actions; index +1 at sinks and sources, -1 at
// saddles; every edge drops the grading by exactly one (so saddle-saddle and
// source-sink edges are out); every saddle has exactly two outgoing and two
// incoming edges counted with multiplicity.
inline GenericCheck validate_generic(const ActionGraph& g) {
  GenericCheck res;
  std::map<double, std::string> seen_actions;
  for (int v = 0; v < g.size(); ++v) {
    auto [it, fresh] = seen_actions.emplace(g.action(v), g.id(v));
    if (!fresh)
      res.violations.push_back({"duplicate-action",
                                g.id(v) + " and " + it->second + " share action " +
                                    format_double(g.action(v))});
  }
  std::map<std::string, int> grading;
  for (int v = 0; v < g.size(); ++v) {
    switch (g.classify(v)) {
      case VertexKind::sink:
        grading[g.id(v)] = 0;
        if (g.index(v) != 1)
          res.violations.push_back({"index-profile", "sink " + g.id(v) + " has index " +
                                                         std::to_string(g.index(v))});
        break;
      case VertexKind::saddle:
        grading[g.id(v)] = 1;
        if (g.index(v) != -1)
          res.violations.push_back({"index-profile", "saddle " + g.id(v) +
                                                         " has index " +
                                                         std::to_string(g.index(v))});
        if (g.out_degree(v) != 2)
          res.violations.push_back({"saddle-out-degree",
                                    g.id(v) + " has " + std::to_string(g.out_degree(v)) +
                                        " outgoing edges, expected 2"});
        if (g.in_degree(v) != 2)
          res.violations.push_back({"saddle-in-degree",
                                    g.id(v) + " has " + std::to_string(g.in_degree(v)) +
                                        " incoming edges, expected 2"});
        break;
      case VertexKind::source:
        grading[g.id(v)] = 2;
        if (g.index(v) != 1)
          res.violations.push_back({"index-profile", "source " + g.id(v) +
                                                         " has index " +
                                                         std::to_string(g.index(v))});
        break;
    }
  }
  for (const auto& [u, v] : g.edges())
    if (grading.at(g.id(u)) != grading.at(g.id(v)) + 1)
      res.violations.push_back({"edge-grading",
                                g.id(u) + " -> " + g.id(v) + " joins gradings " +
                                    std::to_string(grading.at(g.id(u))) + " and " +
                                    std::to_string(grading.at(g.id(v)))});
  if (res.ok()) res.instance = GenericInstance{g, std::move(grading)};
  return res;
}

// Chain complex of a graded graph: cells are the vertices at their action
// values, the boundary of a cell is the mod-2 multiset of its edge targets.
// Double edges cancel.
inline FilteredComplex build_complex(const ActionGraph& g,
                                     const std::map<std::string, int>& grading) {
  std::vector<CellSpec> cells;
  std::map<std::string, std::vector<std::string>> boundary;
  for (int v = 0; v < g.size(); ++v) {
    cells.push_back({g.id(v), grading.at(g.id(v)), g.action(v)});
    std::vector<std::string> faces;
    for (int w : g.out_neighbors(v)) faces.push_back(g.id(w));
    if (!faces.empty()) boundary[g.id(v)] = std::move(faces);
  }
  return FilteredComplex::build(std::move(cells), boundary);
}

inline FilteredComplex build_complex(const GenericInstance& gi) {
  return build_complex(gi.graph, gi.grading);
}

inline bool check_d_squared(const FilteredComplex& fc) {
  return fc.d_squared_offenders().empty();
}

// Barcode of the filtered homology of the generic chain complex. A nonzero
// boundary-of-boundary signals a non-realizable instance and is an error
// naming each offending source.
inline Barcode compute_B_gen(const GenericInstance& gi) {
  FilteredComplex fc = build_complex(gi);
  auto offenders = fc.d_squared_offenders();
  if (!offenders.empty()) {
    std::vector<Violation> vs;
    for (const auto& id : offenders)
      vs.push_back({"d-squared", "boundary of boundary of source " + id + " is nonzero"});
    throw ValidationError(std::move(vs));
  }
  return compute_barcode(fc);
}

}  // namespace barcode
