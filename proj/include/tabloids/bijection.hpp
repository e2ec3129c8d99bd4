#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tabloids/character.hpp"
#include "tabloids/common.hpp"
#include "tabloids/cycle_tabloid.hpp"
#include "tabloids/instance.hpp"
#include "tabloids/permutation.hpp"
#include "tabloids/root_sum.hpp"
#include "tabloids/tabloid.hpp"

namespace tabloids {

// Rebuild the instance a tabloid lives on from its row layout.
inline Instance instance_of(const Tabloid& t) {
  const detail::Shape& sh = t.shape();
  std::vector<Partition> components;
  for (std::size_t h = 0; h + 1 < sh.comp_first_row.size(); ++h) {
    std::vector<int> parts;
    for (int r = sh.comp_first_row[h]; r < sh.comp_first_row[h + 1]; ++r)
      parts.push_back(sh.rows[static_cast<std::size_t>(r)].len);
    components.emplace_back(std::move(parts));
  }
  return Instance(std::move(components), sh.periods);
}

inline std::vector<int> gamma_for(const Instance& inst, long long j) {
  std::vector<int> gamma;
  gamma.reserve(static_cast<std::size_t>(inst.component_count()));
  for (int h = 0; h < inst.component_count(); ++h)
    gamma.push_back(power_order(inst.period(h), j));
  return gamma;
}

// The explicit correspondence from marked tabloids to eigen-tabloids.
// Label i receives the letters of the i-th canonical cycle: the first
// letter lands in the marked row of its rectangle, and each following
// letter moves j rows up (wrapped inside the block of l_h rows, staying on
// the rectangle's rows). Rows are then sorted ascending. The result T
// satisfies sigma_rho * T == T shifted by -j.
inline Tabloid eigen_from_marked(const MarkedCycleTabloid& mt, long long j) {
  const CycleTabloid& y = mt.y();
  const Instance& inst = y.instance();
  if (y.gamma() != gamma_for(inst, j))
    fail(Errc::gamma_mismatch,
         "marked tabloid gamma does not match the order of the j-th shift");
  const detail::Shape& sh = inst.shape();
  const Partition& rho = y.rho();
  std::vector<int> word(static_cast<std::size_t>(sh.total));
  std::vector<int> cursor(static_cast<std::size_t>(sh.row_count()), 0);
  for (int i = 1; i <= y.label_count(); ++i) {
    const CycleTabloid::Region& reg = y.region(i);
    const int lh = inst.period(reg.comp);
    const int first = sh.comp_first_row[static_cast<std::size_t>(reg.comp)];
    const int block_base = (reg.top / lh) * lh;
    const int start_off = reg.row_at(mt.mark(i) - 1) % lh;
    const int n0 = cycle_start(rho, i);
    const long long jm = ((j % lh) + lh) % lh;
    for (int s = 0; s < rho.part(i - 1); ++s) {
      const int off = static_cast<int>(
          ((start_off - static_cast<long long>(s) * jm) % lh + lh) % lh);
      const int r = first + block_base + off;
      const detail::Shape::Row& row = sh.rows[static_cast<std::size_t>(r)];
      word[static_cast<std::size_t>(
          row.begin + cursor[static_cast<std::size_t>(r)]++)] = n0 + s;
    }
  }
  for (const detail::Shape::Row& row : sh.rows)
    detail::sort_row(word.data() + row.begin, row.len);
  return Tabloid::from_word(inst.shape_ptr(), std::move(word));
}

// Inverse of eigen_from_marked, defined exactly on tabloids satisfying
// sigma_rho * T == T shifted by -j: collapse each canonical cycle interval
// to its label, and mark the rectangle row holding the interval's first
// letter.
inline MarkedCycleTabloid marked_from_eigen(const Tabloid& t,
                                            const Partition& rho,
                                            long long j) {
  const Instance inst = instance_of(t);
  if (rho.boxes() != inst.total_boxes())
    fail(Errc::size_mismatch, "cycle type does not sum to the box count");
  const Permutation sigma = canonical_permutation(rho);
  if (!(left_act(sigma, t) == right_act(t, -j)))
    fail(Errc::not_eigen_tabloid,
         "tabloid is not an eigen-tabloid for this cycle type and weight");
  // label_of[v] = index of the canonical cycle containing v.
  std::vector<int> label_of(static_cast<std::size_t>(inst.total_boxes()) + 1);
  for (int k = 1; k <= rho.row_count(); ++k) {
    const int n0 = cycle_start(rho, k);
    for (int s = 0; s < rho.part(k - 1); ++s)
      label_of[static_cast<std::size_t>(n0 + s)] = k;
  }
  const detail::Shape& sh = inst.shape();
  std::vector<std::vector<std::vector<int>>> labels(
      static_cast<std::size_t>(inst.component_count()));
  for (int r = 0; r < sh.row_count(); ++r) {
    const detail::Shape::Row& row = sh.rows[static_cast<std::size_t>(r)];
    std::vector<int> lab(static_cast<std::size_t>(row.len));
    for (int i = 0; i < row.len; ++i)
      lab[static_cast<std::size_t>(i)] = label_of[static_cast<std::size_t>(
          t.word()[static_cast<std::size_t>(row.begin + i)])];
    labels[static_cast<std::size_t>(row.comp)].push_back(std::move(lab));
  }
  CycleTabloid y =
      validate_cycle_tabloid(labels, rho, gamma_for(inst, j), inst);
  std::vector<int> marks(static_cast<std::size_t>(rho.row_count()));
  for (int k = 1; k <= rho.row_count(); ++k) {
    const int n0 = cycle_start(rho, k);
    int local = -1;
    const CycleTabloid::Region& reg = y.region(k);
    const int first = sh.comp_first_row[static_cast<std::size_t>(reg.comp)];
    for (int tr = 0; tr < reg.rows && local < 0; ++tr) {
      const detail::Shape::Row& row = sh.rows[static_cast<std::size_t>(
          first + reg.row_at(tr))];
      for (int i = 0; i < row.len; ++i)
        if (t.word()[static_cast<std::size_t>(row.begin + i)] == n0) {
          local = tr;
          break;
        }
    }
    if (local < 0)
      throw std::logic_error("cycle start letter not found in its rectangle");
    marks[static_cast<std::size_t>(k) - 1] = local + 1;
  }
  return MarkedCycleTabloid(std::move(y), std::move(marks));
}

// The set of tabloids moved by sigma to their own (-j)-th shift, stored in
// ascending word order.
struct EigenSet {
  Instance instance;
  Permutation sigma;
  long long j = 0;
  std::vector<Tabloid> members;
};

inline std::vector<Tabloid> eigen_tabloids_brute(
    const Instance& inst, const Permutation& sigma, long long j,
    int cap = kDefaultEnumerationCap) {
  auto h = detail::harvest_eigen<true>(inst, sigma, cap);
  const int l = inst.period_lcm();
  const int e = static_cast<int>(((-j) % l + l) % l);
  std::vector<Tabloid> out;
  for (auto& w : h.words[static_cast<std::size_t>(e)])
    out.push_back(Tabloid::from_word(inst.shape_ptr(), std::move(w)));
  return out;
}

// Constructs the eigen set by translating the correspondence through a
// conjugating permutation. When the instance is under the cap (and verify
// is set) the result is checked against direct enumeration.
inline EigenSet eigen_tabloids(const Instance& inst, const Permutation& sigma,
                               long long j, bool verify = true,
                               int cap = kDefaultEnumerationCap) {
  if (sigma.degree() != inst.total_boxes())
    fail(Errc::size_mismatch, "permutation degree != box count");
  const Partition rho = cycle_type(sigma);
  const Permutation tau = conjugating_permutation(sigma);
  EigenSet set{inst, sigma, j, {}};
  for_each_marked(inst, rho, gamma_for(inst, j),
                  [&](const MarkedCycleTabloid& mt) {
                    set.members.push_back(
                        left_act(tau, eigen_from_marked(mt, j)));
                  });
  std::sort(set.members.begin(), set.members.end());
  for (std::size_t i = 0; i + 1 < set.members.size(); ++i)
    if (set.members[i] == set.members[i + 1])
      throw std::logic_error("correspondence is not injective");
  if (verify && inst.total_boxes() <= cap) {
    const std::vector<Tabloid> brute =
        eigen_tabloids_brute(inst, sigma, j, cap);
    if (brute != set.members)
      throw std::logic_error(
          "constructed eigen set differs from direct enumeration");
  }
  return set;
}

}  // namespace tabloids
