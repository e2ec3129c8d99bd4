#pragma once

// Slow, obviously-correct reference implementations used only by the test
// suite. Everything here works on nested row vectors and brute force so it
// shares no code path with the library's flat-word engine.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "tabloids/instance.hpp"
#include "tabloids/partition.hpp"
#include "tabloids/permutation.hpp"

namespace tabloids::testref {

using Grid = std::vector<std::vector<std::vector<int>>>;

inline Grid grid_from_word(const Instance& inst, const std::vector<int>& w) {
  Grid g(static_cast<std::size_t>(inst.component_count()));
  std::size_t p = 0;
  for (int h = 0; h < inst.component_count(); ++h)
    for (int part : inst.component(h).parts()) {
      g[static_cast<std::size_t>(h)].emplace_back(w.begin() + static_cast<long>(p),
                                                  w.begin() + static_cast<long>(p + static_cast<std::size_t>(part)));
      p += static_cast<std::size_t>(part);
    }
  return g;
}

inline Grid canonical(Grid g) {
  for (auto& comp : g)
    for (auto& row : comp) std::sort(row.begin(), row.end());
  return g;
}

// Every tabloid, via all m! words and dedup.
inline std::set<Grid> all_tabloids(const Instance& inst) {
  std::vector<int> word(static_cast<std::size_t>(inst.total_boxes()));
  std::iota(word.begin(), word.end(), 1);
  std::set<Grid> out;
  do {
    out.insert(canonical(grid_from_word(inst, word)));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

inline Grid left_act(const Permutation& sigma, const Grid& g) {
  Grid out = g;
  for (auto& comp : out)
    for (auto& row : comp)
      for (auto& v : row) v = sigma(v);
  return canonical(out);
}

// Row shift: row r of the result is row r+i of the input, wrapped inside
// each component's blocks of l_h rows.
inline Grid right_act(const Instance& inst, const Grid& g, long long i) {
  Grid out = g;
  for (int h = 0; h < inst.component_count(); ++h) {
    const int lh = inst.period(h);
    auto& comp = out[static_cast<std::size_t>(h)];
    const auto& src = g[static_cast<std::size_t>(h)];
    for (std::size_t r = 0; r < comp.size(); ++r) {
      const std::size_t block = r / static_cast<std::size_t>(lh);
      const long long off = static_cast<long long>(r % static_cast<std::size_t>(lh));
      const std::size_t from =
          block * static_cast<std::size_t>(lh) +
          static_cast<std::size_t>(((off + i) % lh + lh) % lh);
      comp[r] = src[from];
    }
  }
  return out;
}

// Raw validity predicate for a labelling, straight from the defining
// conditions (single component, equal-width rows at spacing l_h/gamma_h
// with one column range, weakly increasing rows). No alignment assumption.
inline bool valid_labelling(const Instance& inst, const Grid& labels,
                            const Partition& rho,
                            const std::vector<int>& gamma) {
  const int nlabels = rho.row_count();
  std::vector<std::vector<std::array<int, 3>>> boxes(
      static_cast<std::size_t>(nlabels));
  for (int h = 0; h < inst.component_count(); ++h)
    for (std::size_t r = 0; r < labels[static_cast<std::size_t>(h)].size(); ++r) {
      const auto& row = labels[static_cast<std::size_t>(h)][r];
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] < 1 || row[c] > nlabels) return false;
        if (c > 0 && row[c - 1] > row[c]) return false;
        boxes[static_cast<std::size_t>(row[c]) - 1].push_back(
            {h, static_cast<int>(r), static_cast<int>(c)});
      }
    }
  for (int k = 1; k <= nlabels; ++k) {
    const auto& bs = boxes[static_cast<std::size_t>(k) - 1];
    if (static_cast<int>(bs.size()) != rho.part(k - 1)) return false;
    const int h = bs.front()[0];
    const int g = gamma[static_cast<std::size_t>(h)];
    const int d = inst.period(h) / g;
    if (rho.part(k - 1) % g != 0) return false;
    const int w = rho.part(k - 1) / g;
    std::set<int> rows;
    for (const auto& b : bs) {
      if (b[0] != h) return false;
      rows.insert(b[1]);
    }
    if (static_cast<int>(rows.size()) != g) return false;
    std::vector<int> rs(rows.begin(), rows.end());
    for (int t = 0; t < g; ++t)
      if (rs[static_cast<std::size_t>(t)] != rs.front() + t * d) return false;
    std::set<int> cols0;
    for (int t = 0; t < g; ++t) {
      std::set<int> cols;
      for (const auto& b : bs)
        if (b[1] == rs[static_cast<std::size_t>(t)]) cols.insert(b[2]);
      if (static_cast<int>(cols.size()) != w) return false;
      if (*cols.rbegin() - *cols.begin() + 1 != w) return false;
      cols0.insert(*cols.begin());
    }
    if (cols0.size() != 1) return false;
  }
  return true;
}

// Every valid labelling by filtering all arrangements of the label word.
inline std::set<Grid> all_labellings(const Instance& inst,
                                     const Partition& rho,
                                     const std::vector<int>& gamma) {
  std::set<Grid> out;
  if (rho.boxes() != inst.total_boxes()) return out;
  std::vector<int> word;
  for (int k = 1; k <= rho.row_count(); ++k)
    word.insert(word.end(), static_cast<std::size_t>(rho.part(k - 1)), k);
  std::sort(word.begin(), word.end());
  do {
    Grid g = grid_from_word(inst, word);
    if (valid_labelling(inst, g, rho, gamma)) out.insert(g);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace tabloids::testref
