#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tabloids/common.hpp"
#include "tabloids/partition.hpp"

namespace tabloids {

namespace detail {

// Flattened row layout shared by every tabloid on one instance. Rows are
// listed component by component, top to bottom; a tabloid is stored as the
// concatenation of its rows ("word"), each row sorted ascending.
struct Shape {
  struct Row {
    int begin;  // offset of the row in the word
    int len;
    int comp;   // owning component, 0-based
    int local;  // row index within the component, 0-based

    friend bool operator==(const Row&, const Row&) = default;
  };

  int total = 0;  // number of boxes
  int lcm = 1;    // order of the block-shift generator
  std::vector<int> periods;
  std::vector<Row> rows;
  std::vector<int> comp_first_row;  // first global row per component, +sentinel

  int row_count() const { return static_cast<int>(rows.size()); }

  // Row whose content lands in global row r after acting on the right by
  // the i-th power of the block shift: within each block of l_h rows, row
  // offset o takes its content from offset o+i (mod l_h).
  int shift_source(int r, long long i) const {
    const Row& row = rows[static_cast<std::size_t>(r)];
    const int lh = periods[static_cast<std::size_t>(row.comp)];
    const int block = row.local / lh;
    const int off = row.local % lh;
    const int s = static_cast<int>(((i % lh) + lh) % lh);
    const int src_local = block * lh + (off + s) % lh;
    return comp_first_row[static_cast<std::size_t>(row.comp)] + src_local;
  }

  std::vector<int> shift_table(long long i) const {
    std::vector<int> t(rows.size());
    for (int r = 0; r < row_count(); ++r)
      t[static_cast<std::size_t>(r)] = shift_source(r, i);
    return t;
  }
};

}  // namespace detail

// A tuple of Young diagrams with one period per component: component h must
// be an l_h-partition (every part multiplicity divisible by l_h), so its
// rows group into blocks of l_h equal-length rows. Components are nonempty;
// the empty tuple (zero boxes) is allowed.
class Instance {
 public:
  Instance() : Instance(std::vector<Partition>{}, std::vector<int>{}) {}

  Instance(std::vector<Partition> components, std::vector<int> periods)
      : components_(std::move(components)), periods_(std::move(periods)) {
    if (components_.size() != periods_.size())
      fail(Errc::length_mismatch,
           std::to_string(components_.size()) + " components but " +
               std::to_string(periods_.size()) + " periods");
    auto shape = std::make_shared<detail::Shape>();
    shape->periods = periods_;
    for (std::size_t h = 0; h < components_.size(); ++h) {
      const Partition& mu = components_[h];
      const int lh = periods_[h];
      if (lh <= 0)
        fail(Errc::non_positive_part,
             "period of component " + std::to_string(h + 1));
      if (mu.empty())
        fail(Errc::empty_component, "component " + std::to_string(h + 1));
      if (!is_l_partition(mu, lh))
        fail(Errc::not_l_partition,
             "component " + std::to_string(h + 1) +
                 " has a part multiplicity not divisible by " +
                 std::to_string(lh));
      // Multiplicities divisible by l_h force equal lengths inside each
      // block of l_h consecutive rows; double-check.
      for (int r = 0; r < mu.row_count(); ++r)
        if (mu.part(r) != mu.part(r - r % lh))
          fail(Errc::not_l_partition,
               "unequal row lengths inside a block of component " +
                   std::to_string(h + 1));
      shape->comp_first_row.push_back(shape->row_count());
      for (int r = 0; r < mu.row_count(); ++r) {
        shape->rows.push_back({shape->total, mu.part(r),
                               static_cast<int>(h), r});
        shape->total += mu.part(r);
      }
      shape->lcm = static_cast<int>(
          std::lcm(static_cast<long long>(shape->lcm),
                   static_cast<long long>(lh)));
    }
    shape->comp_first_row.push_back(shape->row_count());
    shape_ = std::move(shape);
  }

  int total_boxes() const { return shape_->total; }
  int period_lcm() const { return shape_->lcm; }
  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(int h) const {
    return components_[static_cast<std::size_t>(h)];
  }
  const std::vector<int>& periods() const { return periods_; }
  int period(int h) const { return periods_[static_cast<std::size_t>(h)]; }

  const detail::Shape& shape() const { return *shape_; }
  const std::shared_ptr<const detail::Shape>& shape_ptr() const {
    return shape_;
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.components_ == b.components_ && a.periods_ == b.periods_;
  }

 private:
  std::vector<Partition> components_;
  std::vector<int> periods_;
  std::shared_ptr<const detail::Shape> shape_;
};

inline Instance validate_instance(const std::vector<std::vector<int>>& parts,
                                  const std::vector<int>& periods) {
  std::vector<Partition> components;
  components.reserve(parts.size());
  for (const auto& p : parts) components.emplace_back(p);
  return Instance(std::move(components), periods);
}

// All rows of all components sorted descending: the plain partition whose
// Young subgroup matches the instance's row stabilizer.
inline Partition flatten_sort(const Instance& inst) {
  std::vector<int> all;
  for (const Partition& mu : inst.components())
    all.insert(all.end(), mu.parts().begin(), mu.parts().end());
  std::sort(all.begin(), all.end(), std::greater<int>());
  return Partition(std::move(all));
}

}  // namespace tabloids
