#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace barcode::gf2 {

using Word = std::uint64_t;
using Column = std::vector<Word>;

inline int lowest_bit(const Column& c) {
  for (std::size_t w = 0; w < c.size(); ++w)
    if (c[w]) return static_cast<int>(w * 64) + __builtin_ctzll(c[w]);
  return -1;
}

inline void xor_into(Column& dst, const Column& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

inline bool is_zero(const Column& c) {
  for (Word w : c)
    if (w) return false;
  return true;
}

// Column-major matrix over GF(2), rows packed into 64-bit words.
class Matrix {
 public:
  explicit Matrix(int rows) : rows_(rows), words_((rows + 63) / 64) {
    if (words_ == 0) words_ = 1;
  }

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }

  void add_column(const std::vector<int>& support) {
    Column col(words_, 0);
    for (int r : support) col[r >> 6] ^= (Word{1} << (r & 63));
    cols_.push_back(std::move(col));
  }

  int rank() const {
    std::vector<Column> reduced;
    std::map<int, int> pivot_owner;  // pivot row -> index into reduced
    for (Column col : cols_) {
      int p;
      while ((p = lowest_bit(col)) >= 0 && pivot_owner.count(p))
        xor_into(col, reduced[pivot_owner[p]]);
      if (p >= 0) {
        pivot_owner[p] = static_cast<int>(reduced.size());
        reduced.push_back(std::move(col));
      }
    }
    return static_cast<int>(reduced.size());
  }

  // Basis of the null space; each kernel vector is returned as the sorted
  // list of column indices with coefficient 1.
  std::vector<std::vector<int>> kernel_basis() const {
    const int c = cols();
    const std::size_t combo_words = static_cast<std::size_t>((c + 63) / 64) + 1;
    std::vector<Column> reduced, combos;
    std::map<int, int> pivot_owner;
    std::vector<std::vector<int>> kernel;
    for (int j = 0; j < c; ++j) {
      Column col = cols_[j];
      Column combo(combo_words, 0);
      combo[j >> 6] ^= (Word{1} << (j & 63));
      int p;
      while ((p = lowest_bit(col)) >= 0 && pivot_owner.count(p)) {
        int k = pivot_owner[p];
        xor_into(col, reduced[k]);
        xor_into(combo, combos[k]);
      }
      if (p < 0) {
        std::vector<int> support;
        for (int i = 0; i < c; ++i)
          if (combo[i >> 6] & (Word{1} << (i & 63))) support.push_back(i);
        kernel.push_back(std::move(support));
      } else {
        pivot_owner[p] = static_cast<int>(reduced.size());
        reduced.push_back(std::move(col));
        combos.push_back(std::move(combo));
      }
    }
    return kernel;
  }

 private:
  int rows_;
  std::size_t words_;
  std::vector<Column> cols_;
};

}  // namespace barcode::gf2
