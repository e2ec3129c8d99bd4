#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tabloids/common.hpp"

namespace tabloids {

// An integer partition, i.e. a weakly decreasing sequence of positive
// parts. The empty partition (zero boxes) is allowed. Parts equal to zero
// are rejected rather than stripped, so every partition has exactly one
// representation.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        fail(Errc::non_positive_part,
             "part " + std::to_string(i + 1) + " is " +
                 std::to_string(parts_[i]));
      if (i > 0 && parts_[i] > parts_[i - 1])
        fail(Errc::not_weakly_decreasing,
             "part " + std::to_string(i + 1) + " exceeds its predecessor");
      boxes_ += parts_[i];
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int boxes() const { return boxes_; }
  int row_count() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  bool empty() const { return parts_.empty(); }

  // Multiplicity of each part value.
  std::map<int, int> multiplicities() const {
    std::map<int, int> mult;
    for (int p : parts_) ++mult[p];
    return mult;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int boxes_ = 0;
};

inline Partition validate_partition(std::vector<int> parts) {
  return Partition(std::move(parts));
}

// True iff every part multiplicity is divisible by l, so the rows group
// into blocks of l equal-length rows.
inline bool is_l_partition(const Partition& p, int l) {
  if (l <= 0) fail(Errc::non_positive_part, "period must be positive");
  if (l == 1) return true;
  for (const auto& [part, mult] : p.multiplicities())
    if (mult % l != 0) return false;
  return true;
}

// All partitions of n, largest-first lexicographic order:
// (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace tabloids
