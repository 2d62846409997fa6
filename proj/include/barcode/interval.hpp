#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace barcode {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Half-open persistence bar (birth, death], death possibly +infinity.
// Birth is always finite. Trivial bars (birth == death) are representable in
// raw form but dropped by Barcode normalization.
class Interval {
 public:
  Interval(double birth, double death) : birth_(birth), death_(death) {
    if (!std::isfinite(birth_))
      throw std::invalid_argument("interval birth must be finite");
    if (std::isnan(death_) || death_ == -kInfinity)
      throw std::invalid_argument("interval death must be real or +infinity");
    if (death_ < birth_)
      throw std::invalid_argument("interval death precedes birth");
  }

  double birth() const { return birth_; }
  double death() const { return death_; }
  bool infinite() const { return std::isinf(death_); }
  bool trivial() const { return birth_ == death_; }
  double length() const { return death_ - birth_; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.birth_ == b.birth_ && a.death_ == b.death_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

  // Sort key: birth, then finite deaths before +infinity, then death.
  friend bool operator<(const Interval& a, const Interval& b) {
    if (a.birth_ != b.birth_) return a.birth_ < b.birth_;
    if (a.infinite() != b.infinite()) return !a.infinite();
    return a.death_ < b.death_;
  }

 private:
  double birth_;
  double death_;
};

// d((a,b],(c,d]) = max{|c-a|, |d-b|} with the convention |inf-inf| = 0.
inline double interval_distance(const Interval& a, const Interval& b) {
  double births = std::abs(b.birth() - a.birth());
  double deaths;
  if (a.infinite() && b.infinite())
    deaths = 0.0;
  else if (a.infinite() || b.infinite())
    deaths = kInfinity;
  else
    deaths = std::abs(b.death() - a.death());
  return std::max(births, deaths);
}

// Finite multiset of nontrivial bars, kept sorted for multiset comparison and
// reproducible serialization.
class Barcode {
 public:
  Barcode() = default;
  explicit Barcode(std::vector<Interval> raw) : bars_(std::move(raw)) {
    bars_.erase(std::remove_if(bars_.begin(), bars_.end(),
                               [](const Interval& i) { return i.trivial(); }),
                bars_.end());
    std::sort(bars_.begin(), bars_.end());
  }

  const std::vector<Interval>& bars() const { return bars_; }
  std::size_t size() const { return bars_.size(); }
  bool empty() const { return bars_.empty(); }

  std::size_t infinite_count() const {
    return static_cast<std::size_t>(std::count_if(
        bars_.begin(), bars_.end(), [](const Interval& i) { return i.infinite(); }));
  }

  friend bool operator==(const Barcode& a, const Barcode& b) { return a.bars_ == b.bars_; }
  friend bool operator!=(const Barcode& a, const Barcode& b) { return !(a == b); }

 private:
  std::vector<Interval> bars_;
};

inline Barcode normalize(std::vector<Interval> raw) { return Barcode(std::move(raw)); }

inline bool barcode_equal(const Barcode& a, const Barcode& b) { return a == b; }

}  // namespace barcode
