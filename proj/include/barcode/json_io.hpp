#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "barcode/action_graph.hpp"
#include "barcode/beta_map.hpp"
#include "barcode/diagnostics.hpp"
#include "barcode/foliation.hpp"
#include "barcode/interval.hpp"

namespace barcode {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("cannot write " + path);
}

// --- instances ---------------------------------------------------------------

inline GraphData instance_from_json(const json& j) {
  try {
    GraphData data;
    if (j.contains("name") && !j.at("name").is_null())
      data.name = j.at("name").get<std::string>();
    for (const auto& v : j.at("vertices"))
      data.vertices.push_back({v.at("id").get<std::string>(),
                               v.at("action").get<double>(), v.at("index").get<int>()});
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("edge entries must be [from, to] pairs");
      data.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    return data;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("instance: ") + ex.what());
  }
}

inline GraphData parse_instance_text(const std::string& text) {
  try {
    return instance_from_json(json::parse(text));
  } catch (const json::parse_error& ex) {
    throw ParseError(ex.what());
  }
}

inline GraphData parse_instance_file(const std::string& path) {
  return parse_instance_text(read_file(path));
}

inline ojson instance_json(const GraphData& data) {
  ojson out;
  if (!data.name.empty()) out["name"] = data.name;
  ojson vertices = ojson::array();
  for (const auto& v : data.vertices) {
    ojson jv;
    jv["id"] = v.id;
    jv["action"] = v.action;
    jv["index"] = v.index;
    vertices.push_back(std::move(jv));
  }
  out["vertices"] = std::move(vertices);
  ojson edges = ojson::array();
  for (const auto& [from, to] : data.edges) edges.push_back(ojson::array({from, to}));
  out["edges"] = std::move(edges);
  return out;
}

// --- barcodes ----------------------------------------------------------------

inline ojson barcode_json(const Barcode& b) {
  ojson bars = ojson::array();
  for (const auto& bar : b.bars()) {
    ojson jb;
    jb["birth"] = bar.birth();
    if (bar.infinite())
      jb["death"] = nullptr;
    else
      jb["death"] = bar.death();
    bars.push_back(std::move(jb));
  }
  ojson out;
  out["bars"] = std::move(bars);
  return out;
}

inline Barcode barcode_from_json(const json& j) {
  try {
    std::vector<Interval> raw;
    for (const auto& jb : j.at("bars")) {
      double birth = jb.at("birth").get<double>();
      double death = jb.at("death").is_null() ? kInfinity : jb.at("death").get<double>();
      raw.emplace_back(birth, death);
    }
    return Barcode(std::move(raw));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("barcode: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("barcode: ") + ex.what());
  }
}

inline Barcode parse_barcode_text(const std::string& text) {
  try {
    return barcode_from_json(json::parse(text));
  } catch (const json::parse_error& ex) {
    throw ParseError(ex.what());
  }
}

inline Barcode parse_barcode_file(const std::string& path) {
  return parse_barcode_text(read_file(path));
}

// --- generator provenance ------------------------------------------------------

inline ojson code_json(const FoliationCode& code) {
  ojson out;
  out["sinks"] = code.sinks;
  out["saddles"] = code.saddles;
  out["sources"] = code.sources;
  ojson unstable;
  for (const auto& [x, pair] : code.unstable)
    unstable[x] = ojson::array({pair.first, pair.second});
  out["unstable"] = std::move(unstable);
  ojson polygons;
  for (const auto& [z, poly] : code.polygons) polygons[z] = poly;
  out["polygons"] = std::move(polygons);
  return out;
}

inline ojson provenance_json(const GeneratedInstance& gen) {
  ojson out;
  out["code"] = code_json(gen.code);
  out["seed"] = gen.seed;
  out["genus"] = gen.genus;
  out["attempts"] = gen.attempts;
  return out;
}

// --- diagnostics ---------------------------------------------------------------

inline ojson block_ids(const ActionGraph& g, const std::vector<int>& block) {
  ojson out = ojson::array();
  for (int v : block) out.push_back(g.id(v));
  return out;
}

inline ojson jmap_json(const ActionGraph& g, const JMap& jm) {
  ojson blocks = ojson::array();
  for (std::size_t cb = 0; cb < jm.closed_parts.blocks.size(); ++cb) {
    ojson jb;
    jb["vertices"] = block_ids(g, jm.closed_parts.blocks[cb]);
    jb["preimage_count"] = jm.preimage_count[cb];
    ojson pre = ojson::array();
    for (std::size_t ob = 0; ob < jm.open_parts.blocks.size(); ++ob)
      if (jm.target[ob] == static_cast<int>(cb))
        pre.push_back(block_ids(g, jm.open_parts.blocks[ob]));
    jb["preimages"] = std::move(pre);
    blocks.push_back(std::move(jb));
  }
  ojson out;
  out["blocks"] = std::move(blocks);
  return out;
}

inline ojson categorized_bar_json(const CategorizedBar& cb) {
  ojson jb;
  jb["birth"] = cb.interval.birth();
  if (cb.interval.infinite())
    jb["death"] = nullptr;
  else
    jb["death"] = cb.interval.death();
  jb["category"] = cb.category;
  if (!cb.witness.empty()) jb["witness"] = cb.witness;
  return jb;
}

// Barcode plus the per-threshold record behind it, for --explain.
inline ojson explain_json(const ActionGraph& g, const BetaResult& res) {
  ojson out = barcode_json(res.barcode);
  ojson thresholds = ojson::array();
  for (const auto& diag : res.thresholds) {
    ojson jt;
    jt["t"] = diag.t;
    jt["k"] = diag.k;
    jt["k_prime"] = diag.k_prime;
    jt["sublevel"] = jmap_json(g, diag.sub);
    jt["superlevel"] = jmap_json(g, diag.super);
    ojson bars = ojson::array();
    for (const auto& cb : diag.bars) bars.push_back(categorized_bar_json(cb));
    jt["bars"] = std::move(bars);
    thresholds.push_back(std::move(jt));
  }
  ojson explain;
  explain["thresholds"] = std::move(thresholds);
  out["explain"] = std::move(explain);
  return out;
}

inline std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace barcode
