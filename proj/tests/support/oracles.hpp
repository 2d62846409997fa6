#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "barcode/gf2.hpp"
#include "barcode/interval.hpp"
#include "barcode/persistence.hpp"

namespace testing_support {

using barcode::Barcode;
using barcode::Interval;
using barcode::kInfinity;

// Exhaustive minimization over all partial bijections: the cost of an
// assignment is the max of its pair distances and the half-lengths of
// everything left unmatched. Independent of the matching-based search it
// checks.
inline double brute_force_bottleneck(const Barcode& b1, const Barcode& b2) {
  if (b1.infinite_count() != b2.infinite_count()) return kInfinity;
  const auto& a = b1.bars();
  const auto& b = b2.bars();
  double best = kInfinity;
  std::vector<char> used(b.size(), 0);

  auto drop_cost = [](const Interval& i) {
    return i.infinite() ? kInfinity : i.length() / 2;
  };

  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double current) {
    if (current >= best) return;
    if (i == a.size()) {
      double total = current;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!used[j]) total = std::max(total, drop_cost(b[j]));
      best = std::min(best, total);
      return;
    }
    rec(i + 1, std::max(current, drop_cost(a[i])));
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      double d = barcode::interval_distance(a[i], b[j]);
      if (std::max(current, d) >= best) continue;
      used[j] = 1;
      rec(i + 1, std::max(current, d));
      used[j] = 0;
    }
  };
  rec(0, 0.0);
  return best;
}

// Random barcode on a half-integer lattice so expected values stay exact.
inline Barcode random_barcode(std::mt19937_64& rng, int max_bars,
                              bool allow_infinite = true) {
  std::uniform_int_distribution<int> n_bars(0, max_bars);
  std::uniform_int_distribution<int> birth_grid(-20, 20);
  std::uniform_int_distribution<int> len_grid(1, 20);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<Interval> bars;
  int n = n_bars(rng);
  for (int i = 0; i < n; ++i) {
    double birth = birth_grid(rng) * 0.5;
    if (allow_infinite && coin(rng) == 0)
      bars.emplace_back(birth, kInfinity);
    else
      bars.emplace_back(birth, birth + len_grid(rng) * 0.5);
  }
  return Barcode(std::move(bars));
}

// Random valid filtered complex: degree-0 and degree-1 cells are free (their
// boundary-of-boundary vanishes trivially), degree-2 boundaries are drawn
// from the kernel of the degree-1 boundary restricted below the cell's value.
inline barcode::FilteredComplex random_complex(std::mt19937_64& rng, int max_cells) {
  std::uniform_int_distribution<int> grid(0, 40);
  auto value = [&]() { return grid(rng) * 0.5; };

  int total = std::uniform_int_distribution<int>(1, max_cells)(rng);
  int n0 = std::uniform_int_distribution<int>(1, total)(rng);
  int n1 = total > n0 ? std::uniform_int_distribution<int>(0, total - n0)(rng) : 0;
  int n2 = total - n0 - n1;

  std::vector<barcode::CellSpec> cells;
  std::map<std::string, std::vector<std::string>> boundary;
  std::vector<std::pair<std::string, double>> deg0, deg1;

  for (int i = 0; i < n0; ++i) {
    std::string id = "a" + std::to_string(i);
    double v = value();
    deg0.emplace_back(id, v);
    cells.push_back({id, 0, v});
  }
  for (int i = 0; i < n1; ++i) {
    std::string id = "b" + std::to_string(i);
    double v = value();
    std::vector<std::string> below;
    for (const auto& [fid, fv] : deg0)
      if (fv < v) below.push_back(fid);
    std::vector<std::string> faces;
    for (const auto& f : below)
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) faces.push_back(f);
    if (faces.size() > 4) faces.resize(4);
    deg1.emplace_back(id, v);
    cells.push_back({id, 1, v});
    if (!faces.empty()) boundary[id] = faces;
  }
  // Index deg-0 cells for kernel computations.
  std::map<std::string, int> row;
  for (std::size_t i = 0; i < deg0.size(); ++i) row[deg0[i].first] = static_cast<int>(i);
  for (int i = 0; i < n2; ++i) {
    std::string id = "c" + std::to_string(i);
    double v = value();
    std::vector<int> candidates;
    for (std::size_t j = 0; j < deg1.size(); ++j)
      if (deg1[j].second < v) candidates.push_back(static_cast<int>(j));
    barcode::gf2::Matrix m(static_cast<int>(deg0.size()));
    for (int c : candidates) {
      std::vector<int> support;
      auto it = boundary.find(deg1[c].first);
      if (it != boundary.end())
        for (const auto& f : it->second) support.push_back(row[f]);
      std::sort(support.begin(), support.end());
      m.add_column(support);
    }
    auto kernel = m.kernel_basis();
    std::set<int> chosen;  // symmetric difference of random kernel vectors
    for (const auto& kv : kernel)
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
        for (int pos : kv) {
          if (chosen.count(pos))
            chosen.erase(pos);
          else
            chosen.insert(pos);
        }
    std::vector<std::string> faces;
    for (int pos : chosen) faces.push_back(deg1[candidates[pos]].first);
    cells.push_back({id, 2, v});
    if (!faces.empty()) boundary[id] = faces;
  }
  return barcode::FilteredComplex::build(std::move(cells), boundary);
}

}  // namespace testing_support
