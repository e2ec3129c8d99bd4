#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tabloids/common.hpp"
#include "tabloids/instance.hpp"
#include "tabloids/permutation.hpp"

namespace tabloids {

namespace detail {

inline void sort_row(int* first, int n) {
  for (int i = 1; i < n; ++i) {
    int v = first[i];
    int j = i - 1;
    while (j >= 0 && first[j] > v) {
      first[j + 1] = first[j];
      --j;
    }
    first[j + 1] = v;
  }
}

// out := entries of `in` relabelled through lookup (lookup[v] = image of v),
// each row re-sorted.
inline void apply_left_word(const Shape& sh, const std::vector<int>& lookup,
                            const std::vector<int>& in,
                            std::vector<int>& out) {
  out.resize(in.size());
  for (std::size_t p = 0; p < in.size(); ++p)
    out[p] = lookup[static_cast<std::size_t>(in[p])];
  for (const Shape::Row& row : sh.rows)
    sort_row(out.data() + row.begin, row.len);
}

// Does u equal w shifted by the table (row r of the shifted word is row
// table[r] of w)? Both words must be row-sorted.
inline bool equals_shifted(const Shape& sh, const std::vector<int>& u,
                           const std::vector<int>& w,
                           const std::vector<int>& table) {
  for (int r = 0; r < sh.row_count(); ++r) {
    const Shape::Row& dst = sh.rows[static_cast<std::size_t>(r)];
    const Shape::Row& src = sh.rows[static_cast<std::size_t>(
        table[static_cast<std::size_t>(r)])];
    for (int i = 0; i < dst.len; ++i)
      if (u[static_cast<std::size_t>(dst.begin + i)] !=
          w[static_cast<std::size_t>(src.begin + i)])
        return false;
  }
  return true;
}

// Lexicographic comparison of two shifted views of row-sorted words, read
// in row order: view row r of x is row tx[r] of x.
inline int compare_shifted(const Shape& sh, const std::vector<int>& x,
                           const std::vector<int>& tx,
                           const std::vector<int>& y,
                           const std::vector<int>& ty) {
  for (int r = 0; r < sh.row_count(); ++r) {
    const Shape::Row& rx = sh.rows[static_cast<std::size_t>(
        tx[static_cast<std::size_t>(r)])];
    const Shape::Row& ry = sh.rows[static_cast<std::size_t>(
        ty[static_cast<std::size_t>(r)])];
    for (int i = 0; i < rx.len; ++i) {
      const int a = x[static_cast<std::size_t>(rx.begin + i)];
      const int b = y[static_cast<std::size_t>(ry.begin + i)];
      if (a != b) return a < b ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace detail

// A numbering: per component, rows of labels forming a bijection onto
// {1..m}. Entries are in box order, no sorting implied.
class Numbering {
 public:
  Numbering(const Instance& inst,
            std::vector<std::vector<std::vector<int>>> rows)
      : shape_(inst.shape_ptr()), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != inst.component_count())
      fail(Errc::size_mismatch, "component count mismatch");
    std::vector<char> seen(static_cast<std::size_t>(inst.total_boxes()) + 1,
                           0);
    for (int h = 0; h < inst.component_count(); ++h) {
      const Partition& mu = inst.component(h);
      const auto& comp = rows_[static_cast<std::size_t>(h)];
      if (static_cast<int>(comp.size()) != mu.row_count())
        fail(Errc::size_mismatch,
             "row count mismatch in component " + std::to_string(h + 1));
      for (int r = 0; r < mu.row_count(); ++r) {
        if (static_cast<int>(comp[static_cast<std::size_t>(r)].size()) !=
            mu.part(r))
          fail(Errc::size_mismatch,
               "row length mismatch in component " + std::to_string(h + 1));
        for (int v : comp[static_cast<std::size_t>(r)]) {
          if (v < 1 || v > inst.total_boxes() ||
              seen[static_cast<std::size_t>(v)])
            fail(Errc::validation_error,
                 "entries are not a bijection onto 1.." +
                     std::to_string(inst.total_boxes()));
          seen[static_cast<std::size_t>(v)] = 1;
        }
      }
    }
  }

  const std::vector<std::vector<std::vector<int>>>& rows() const {
    return rows_;
  }
  const std::shared_ptr<const detail::Shape>& shape_ptr() const {
    return shape_;
  }

  std::vector<int> word() const {
    std::vector<int> w;
    for (const auto& comp : rows_)
      for (const auto& row : comp) w.insert(w.end(), row.begin(), row.end());
    return w;
  }

 private:
  std::shared_ptr<const detail::Shape> shape_;
  std::vector<std::vector<std::vector<int>>> rows_;
};

// The canonical representative of a row-equivalence class of numberings:
// every row sorted ascending. Stored flat in row-reading order.
class Tabloid {
 public:
  static Tabloid from_word(std::shared_ptr<const detail::Shape> shape,
                           std::vector<int> word) {
    Tabloid t;
    t.shape_ = std::move(shape);
    t.word_ = std::move(word);
    return t;
  }

  const std::vector<int>& word() const { return word_; }
  const detail::Shape& shape() const { return *shape_; }
  const std::shared_ptr<const detail::Shape>& shape_ptr() const {
    return shape_;
  }

  std::span<const int> row(int r) const {
    const detail::Shape::Row& row = shape_->rows[static_cast<std::size_t>(r)];
    return {word_.data() + row.begin, static_cast<std::size_t>(row.len)};
  }

  std::vector<std::vector<std::vector<int>>> rows() const {
    std::vector<std::vector<std::vector<int>>> out(
        shape_->comp_first_row.size() - 1);
    for (int r = 0; r < shape_->row_count(); ++r) {
      const detail::Shape::Row& row =
          shape_->rows[static_cast<std::size_t>(r)];
      out[static_cast<std::size_t>(row.comp)].emplace_back(
          word_.begin() + row.begin, word_.begin() + row.begin + row.len);
    }
    return out;
  }

  friend bool operator==(const Tabloid& a, const Tabloid& b) {
    if (a.word_ != b.word_) return false;
    return a.shape_ == b.shape_ || a.shape_->rows == b.shape_->rows;
  }
  friend auto operator<=>(const Tabloid& a, const Tabloid& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::shared_ptr<const detail::Shape> shape_;
  std::vector<int> word_;
};

inline Tabloid canonicalize(const Numbering& n) {
  auto shape = n.shape_ptr();
  std::vector<int> w = n.word();
  for (const detail::Shape::Row& row : shape->rows)
    detail::sort_row(w.data() + row.begin, row.len);
  return Tabloid::from_word(std::move(shape), std::move(w));
}

inline Tabloid make_tabloid(const Instance& inst,
                            std::vector<std::vector<std::vector<int>>> rows) {
  return canonicalize(Numbering(inst, std::move(rows)));
}

// Row-reading numbering: 1..m left to right, top to bottom, component by
// component.
inline Numbering canonical_numbering(const Instance& inst) {
  std::vector<std::vector<std::vector<int>>> rows(
      static_cast<std::size_t>(inst.component_count()));
  int next = 1;
  for (int h = 0; h < inst.component_count(); ++h) {
    const Partition& mu = inst.component(h);
    for (int r = 0; r < mu.row_count(); ++r) {
      std::vector<int> row(static_cast<std::size_t>(mu.part(r)));
      std::iota(row.begin(), row.end(), next);
      next += mu.part(r);
      rows[static_cast<std::size_t>(h)].push_back(std::move(row));
    }
  }
  return Numbering(inst, std::move(rows));
}

// The unique permutation carrying the row-reading numbering to T.
inline Permutation numbering_to_permutation(const Numbering& n) {
  return Permutation::from_images(n.word());
}

// The block-shift generator: for each component with period l_h, the
// product over blocks and columns of the downward cycles of length l_h on
// the row-reading numbering. Periods equal to 1 contribute nothing.
inline Permutation block_shift(const Instance& inst) {
  const Numbering t = canonical_numbering(inst);
  std::vector<int> images(static_cast<std::size_t>(inst.total_boxes()));
  std::iota(images.begin(), images.end(), 1);
  for (int h = 0; h < inst.component_count(); ++h) {
    const int lh = inst.period(h);
    if (lh == 1) continue;
    const auto& comp = t.rows()[static_cast<std::size_t>(h)];
    for (std::size_t top = 0; top < comp.size(); top += static_cast<std::size_t>(lh))
      for (std::size_t col = 0; col < comp[top].size(); ++col)
        for (int s = 0; s < lh; ++s) {
          const int from = comp[top + static_cast<std::size_t>(s)][col];
          const int to = comp[top + static_cast<std::size_t>((s + 1) % lh)][col];
          images[static_cast<std::size_t>(from) - 1] = to;
        }
  }
  return Permutation::from_images(std::move(images));
}

// Left action: relabel every entry through sigma, then restore ascending
// rows.
inline Tabloid left_act(const Permutation& sigma, const Tabloid& t) {
  const detail::Shape& sh = t.shape();
  if (sigma.degree() != sh.total)
    fail(Errc::size_mismatch, "permutation degree != box count");
  std::vector<int> lookup(static_cast<std::size_t>(sh.total) + 1);
  for (int v = 1; v <= sh.total; ++v)
    lookup[static_cast<std::size_t>(v)] = sigma(v);
  std::vector<int> out;
  detail::apply_left_word(sh, lookup, t.word(), out);
  return Tabloid::from_word(t.shape_ptr(), std::move(out));
}

// Right action by the i-th power of the block shift: row r of the result
// is row r+i (wrapped inside its block of l_h rows) of the input. Negative
// and large i reduce per component.
inline Tabloid right_act(const Tabloid& t, long long i) {
  const detail::Shape& sh = t.shape();
  std::vector<int> out(t.word().size());
  for (int r = 0; r < sh.row_count(); ++r) {
    const detail::Shape::Row& dst = sh.rows[static_cast<std::size_t>(r)];
    const detail::Shape::Row& src =
        sh.rows[static_cast<std::size_t>(sh.shift_source(r, i))];
    std::copy_n(t.word().begin() + src.begin, src.len,
                out.begin() + dst.begin);
  }
  return Tabloid::from_word(t.shape_ptr(), std::move(out));
}

// m! / prod of row factorials, computed exactly.
inline Count tabloid_count(const Instance& inst) {
  unsigned __int128 res = 1;
  int n = 0;
  for (const Partition& mu : inst.components())
    for (int p : mu.parts())
      for (int t = 1; t <= p; ++t) {
        res = res * static_cast<unsigned>(++n) / static_cast<unsigned>(t);
        if (res > static_cast<unsigned __int128>(UINT64_MAX))
          fail(Errc::cap_exceeded, "tabloid count exceeds 64 bits");
      }
  return static_cast<Count>(res);
}

// Visit every tabloid exactly once, in lexicographic order of the
// row-reading word. The callback receives the word of the current tabloid;
// it must not retain the reference.
template <class F>
void for_each_tabloid(const Instance& inst, F&& fn,
                      int cap = kDefaultEnumerationCap) {
  const detail::Shape& sh = inst.shape();
  if (sh.total > cap)
    fail(Errc::cap_exceeded, std::to_string(sh.total) +
                                 " boxes exceeds enumeration cap " +
                                 std::to_string(cap));
  std::vector<int> word(static_cast<std::size_t>(sh.total));
  const std::uint64_t all =
      sh.total == 0 ? 0 : (~std::uint64_t{0} >> (64 - sh.total));
  // Rows take ascending label subsets; recursing row by row in word order
  // yields global lexicographic order.
  auto pick = [&](auto&& self, int r, int slot, std::uint64_t avail,
                  std::uint64_t candidates) -> void {
    if (r == sh.row_count()) {
      fn(std::as_const(word));
      return;
    }
    const detail::Shape::Row& row = sh.rows[static_cast<std::size_t>(r)];
    if (slot == row.len) {
      self(self, r + 1, 0, avail, avail);
      return;
    }
    std::uint64_t c = candidates;
    while (c) {
      const int bit = std::countr_zero(c);
      c &= c - 1;
      word[static_cast<std::size_t>(row.begin + slot)] = bit + 1;
      self(self, r, slot + 1, avail & ~(std::uint64_t{1} << bit), c);
    }
  };
  pick(pick, 0, 0, all, all);
}

inline std::vector<Tabloid> enumerate_tabloids(
    const Instance& inst, int cap = kDefaultEnumerationCap) {
  std::vector<Tabloid> out;
  out.reserve(static_cast<std::size_t>(
      std::min<Count>(tabloid_count(inst), 1 << 20)));
  for_each_tabloid(
      inst,
      [&](const std::vector<int>& w) {
        out.push_back(Tabloid::from_word(inst.shape_ptr(), w));
      },
      cap);
  return out;
}

// counts[j] = number of tabloids with sigma acting on the left equal to
// the j-th block-shift power acting on the right.
struct FixedPointProfile {
  std::vector<Count> counts;
  Permutation sigma;
};

namespace detail {

struct EigenHarvest {
  std::vector<Count> counts;
  std::vector<std::vector<std::vector<int>>> words;  // per exponent, optional
};

template <bool KeepWords>
EigenHarvest harvest_eigen(const Instance& inst, const Permutation& sigma,
                           int cap) {
  const Shape& sh = inst.shape();
  if (sigma.degree() != sh.total)
    fail(Errc::size_mismatch, "permutation degree != box count");
  const int l = sh.lcm;
  EigenHarvest h;
  h.counts.assign(static_cast<std::size_t>(l), 0);
  if constexpr (KeepWords) h.words.resize(static_cast<std::size_t>(l));
  std::vector<std::vector<int>> tables;
  for (int j = 0; j < l; ++j) tables.push_back(sh.shift_table(j));
  std::vector<int> lookup(static_cast<std::size_t>(sh.total) + 1);
  for (int v = 1; v <= sh.total; ++v)
    lookup[static_cast<std::size_t>(v)] = sigma(v);
  std::vector<int> u;
  for_each_tabloid(
      inst,
      [&](const std::vector<int>& w) {
        apply_left_word(sh, lookup, w, u);
        for (int j = 0; j < l; ++j)
          if (equals_shifted(sh, u, w, tables[static_cast<std::size_t>(j)])) {
            ++h.counts[static_cast<std::size_t>(j)];
            if constexpr (KeepWords)
              h.words[static_cast<std::size_t>(j)].push_back(w);
            break;  // at most one exponent can match (free action)
          }
      },
      cap);
  return h;
}

// True iff w is the lexicographically least member of its shift orbit.
inline bool is_orbit_least(const Shape& sh, const std::vector<int>& w,
                           const std::vector<std::vector<int>>& tables) {
  for (std::size_t s = 1; s < tables.size(); ++s)
    if (compare_shifted(sh, w, tables[s], w, tables[0]) < 0) return false;
  return true;
}

}  // namespace detail

inline FixedPointProfile fixed_point_profile(
    const Instance& inst, const Permutation& sigma,
    int cap = kDefaultEnumerationCap) {
  auto h = detail::harvest_eigen<false>(inst, sigma, cap);
  return {std::move(h.counts), sigma};
}

// One tabloid per orbit of the right shift action: the lexicographically
// least member, emitted in enumeration order.
inline std::vector<Tabloid> orbit_representatives(
    const Instance& inst, int cap = kDefaultEnumerationCap) {
  const detail::Shape& sh = inst.shape();
  std::vector<std::vector<int>> tables;
  for (int j = 0; j < sh.lcm; ++j) tables.push_back(sh.shift_table(j));
  std::vector<Tabloid> out;
  for_each_tabloid(
      inst,
      [&](const std::vector<int>& w) {
        if (detail::is_orbit_least(sh, w, tables))
          out.push_back(Tabloid::from_word(inst.shape_ptr(), w));
      },
      cap);
  return out;
}

}  // namespace tabloids
