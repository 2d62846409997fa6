#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "barcode/diagnostics.hpp"
#include "barcode/gf2.hpp"
#include "barcode/interval.hpp"

namespace barcode {

struct CellSpec {
  std::string id;
  int degree = 0;
  double value = 0.0;
};

// Graded cell complex over Z/2 filtered by value. Cells are kept sorted by
// (value, degree, id); boundaries are stored mod 2 as indices into that
// order. Structural impossibilities (duplicate ids, unknown or wrong-degree
// faces) are rejected at build time; the chain-complex invariants (faces
// strictly below their cell, boundary-of-boundary zero) are reported by
// validate() and enforced by the algorithms that need them.
class FilteredComplex {
 public:
  static FilteredComplex build(
      std::vector<CellSpec> cells,
      const std::map<std::string, std::vector<std::string>>& boundary) {
    std::vector<Violation> violations;
    std::sort(cells.begin(), cells.end(), [](const CellSpec& a, const CellSpec& b) {
      if (a.value != b.value) return a.value < b.value;
      if (a.degree != b.degree) return a.degree < b.degree;
      return a.id < b.id;
    });
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].id.empty())
        violations.push_back({"empty-id", "cell at position " + std::to_string(i)});
      if (!index.emplace(cells[i].id, static_cast<int>(i)).second)
        violations.push_back({"duplicate-id", "cell " + cells[i].id});
    }
    FilteredComplex fc;
    fc.cells_ = std::move(cells);
    fc.boundary_.resize(fc.cells_.size());
    for (const auto& [id, faces] : boundary) {
      auto it = index.find(id);
      if (it == index.end()) {
        violations.push_back({"unknown-cell", "boundary of " + id});
        continue;
      }
      int cell = it->second;
      std::map<int, int> mult;
      for (const auto& face_id : faces) {
        auto fit = index.find(face_id);
        if (fit == index.end()) {
          violations.push_back({"unknown-face", id + " -> " + face_id});
          continue;
        }
        if (fc.cells_[fit->second].degree != fc.cells_[cell].degree - 1) {
          violations.push_back({"face-degree", id + " -> " + face_id});
          continue;
        }
        ++mult[fit->second];
      }
      for (const auto& [face, count] : mult)
        if (count % 2 == 1) fc.boundary_[cell].push_back(face);
    }
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return fc;
  }

  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<CellSpec>& cells() const { return cells_; }
  const std::string& id(int i) const { return cells_[i].id; }
  int degree(int i) const { return cells_[i].degree; }
  double value(int i) const { return cells_[i].value; }
  const std::vector<int>& boundary(int i) const { return boundary_[i]; }

  int max_degree() const {
    int d = 0;
    for (const auto& c : cells_) d = std::max(d, c.degree);
    return d;
  }

  // Sorted distinct filtration values.
  std::vector<double> critical_values() const {
    std::vector<double> vs;
    for (const auto& c : cells_) vs.push_back(c.value);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  // Top cells whose boundary-of-boundary is nonzero over Z/2.
  std::vector<std::string> d_squared_offenders() const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i) {
      if (cells_[i].degree < 2) continue;
      std::map<int, int> mult;
      for (int face : boundary_[i])
        for (int ff : boundary_[face]) ++mult[ff];
      for (const auto& [cell, count] : mult) {
        (void)cell;
        if (count % 2 == 1) {
          out.push_back(cells_[i].id);
          break;
        }
      }
    }
    return out;
  }

  std::vector<Violation> validate() const {
    std::vector<Violation> out;
    for (int i = 0; i < size(); ++i)
      for (int face : boundary_[i])
        if (cells_[face].value >= cells_[i].value)
          out.push_back({"face-value",
                         cells_[i].id + " -> " + cells_[face].id + " (face value " +
                             format_double(cells_[face].value) + " >= " +
                             format_double(cells_[i].value) + ")"});
    for (const auto& id : d_squared_offenders())
      out.push_back({"d-squared", "boundary of boundary of " + id + " is nonzero"});
    return out;
  }

 private:
  FilteredComplex() = default;
  std::vector<CellSpec> cells_;
  std::vector<std::vector<int>> boundary_;
};

namespace detail {

inline void require_valid(const FilteredComplex& fc) {
  auto violations = fc.validate();
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

inline void xor_sorted(std::vector<int>& dst, const std::vector<int>& src) {
  std::vector<int> out;
  out.reserve(dst.size() + src.size());
  std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
                                std::back_inserter(out));
  dst = std::move(out);
}

}  // namespace detail

// Number of bars of b containing t, i.e. bars (a,d] with a < t <= d.
inline int q_dimension(const Barcode& b, double t) {
  int n = 0;
  for (const auto& bar : b.bars())
    if (bar.birth() < t && (bar.infinite() || t <= bar.death())) ++n;
  return n;
}

// Barcode of the filtered homology via standard column reduction over Z/2.
// Paired columns give finite bars (value of the pivot cell, value of the
// reducing cell]; cells that neither die nor kill give semi-infinite bars.
inline Barcode compute_barcode(const FilteredComplex& fc) {
  detail::require_valid(fc);
  const int n = fc.size();
  std::vector<std::vector<int>> reduced(n);
  std::vector<int> pivot_owner(n, -1);
  std::vector<char> is_destroyer(n, 0);
  std::vector<Interval> bars;
  for (int j = 0; j < n; ++j) {
    std::vector<int> col = fc.boundary(j);
    while (!col.empty() && pivot_owner[col.back()] >= 0)
      detail::xor_sorted(col, reduced[pivot_owner[col.back()]]);
    if (!col.empty()) {
      int p = col.back();
      pivot_owner[p] = j;
      is_destroyer[j] = 1;
      bars.emplace_back(fc.value(p), fc.value(j));
      reduced[j] = std::move(col);
    }
  }
  for (int i = 0; i < n; ++i)
    if (!is_destroyer[i] && pivot_owner[i] < 0)
      bars.emplace_back(fc.value(i), kInfinity);
  return Barcode(std::move(bars));
}

// Rank of the map induced on degree-d homology by the inclusion of the strict
// sublevel complex at s into the one at t, by explicit elimination:
// rank = dim(Z_s + B_t) - dim(B_t).
inline int rank_map(const FilteredComplex& fc, double s, double t, int degree) {
  if (s > t) throw std::invalid_argument("rank_map requires s <= t");
  detail::require_valid(fc);
  const int n = fc.size();

  std::vector<int> cycle_cols;  // degree-d cells below s
  gf2::Matrix boundary_s(n);
  for (int i = 0; i < n; ++i)
    if (fc.degree(i) == degree && fc.value(i) < s) {
      boundary_s.add_column(fc.boundary(i));
      cycle_cols.push_back(i);
    }
  auto kernel = boundary_s.kernel_basis();

  gf2::Matrix boundaries_t(n);
  for (int i = 0; i < n; ++i)
    if (fc.degree(i) == degree + 1 && fc.value(i) < t)
      boundaries_t.add_column(fc.boundary(i));
  int dim_b = boundaries_t.rank();

  gf2::Matrix joint(n);
  for (const auto& kv : kernel) {
    std::vector<int> support;
    for (int pos : kv) support.push_back(cycle_cols[pos]);
    joint.add_column(support);
  }
  for (int i = 0; i < n; ++i)
    if (fc.degree(i) == degree + 1 && fc.value(i) < t)
      joint.add_column(fc.boundary(i));
  return joint.rank() - dim_b;
}

// Independent realization of the barcode through the rank function: the
// multiplicity of (v_i, v_j] is the inclusion-exclusion of ranks at points
// straddling v_i and v_j, with straddle points taken as midpoints between
// consecutive critical values and one unit beyond the extremes.
inline Barcode barcode_via_ranks(const FilteredComplex& fc) {
  detail::require_valid(fc);
  auto values = fc.critical_values();
  const int k = static_cast<int>(values.size());
  if (k == 0) return Barcode{};
  std::vector<double> mids(k + 1);
  mids[0] = values.front() - 1.0;
  for (int i = 1; i < k; ++i) mids[i] = (values[i - 1] + values[i]) / 2.0;
  mids[k] = values.back() + 1.0;

  std::vector<Interval> bars;
  for (int degree = 0; degree <= fc.max_degree(); ++degree) {
    std::vector<std::vector<int>> r(k + 1, std::vector<int>(k + 1, 0));
    for (int a = 0; a <= k; ++a)
      for (int b = a; b <= k; ++b) r[a][b] = rank_map(fc, mids[a], mids[b], degree);
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        int mult = r[i][j - 1] - r[i - 1][j - 1] - r[i][j] + r[i - 1][j];
        if (mult < 0) throw std::logic_error("negative bar multiplicity from ranks");
        for (int c = 0; c < mult; ++c) bars.emplace_back(values[i - 1], values[j - 1]);
      }
      int mult_inf = r[i][k] - r[i - 1][k];
      if (mult_inf < 0) throw std::logic_error("negative bar multiplicity from ranks");
      for (int c = 0; c < mult_inf; ++c) bars.emplace_back(values[i - 1], kInfinity);
    }
  }
  return Barcode(std::move(bars));
}

// The interval-sum complex realizing a barcode as a filtered homology: one
// degree-0 creator per bar plus one degree-1 destroyer per finite bar.
// compute_barcode of the result recovers the barcode exactly.
inline FilteredComplex interval_sum_complex(const Barcode& b) {
  std::vector<CellSpec> cells;
  std::map<std::string, std::vector<std::string>> boundary;
  int k = 0;
  for (const auto& bar : b.bars()) {
    std::string creator = "b" + std::to_string(k);
    cells.push_back({creator, 0, bar.birth()});
    if (!bar.infinite()) {
      std::string destroyer = "d" + std::to_string(k);
      cells.push_back({destroyer, 1, bar.death()});
      boundary[destroyer] = {creator};
    }
    ++k;
  }
  return FilteredComplex::build(std::move(cells), boundary);
}

}  // namespace barcode
