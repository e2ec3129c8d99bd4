#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tabloids/common.hpp"
#include "tabloids/instance.hpp"
#include "tabloids/partition.hpp"
#include "tabloids/tabloid.hpp"

namespace tabloids {

// A labelling Y of the boxes of an instance: label k fills a gamma_h-row
// rectangle of width rho_k/gamma_h inside one component, its rows spaced
// l_h/gamma_h apart with a common column range, and every row of the
// diagram weakly increases. The case gamma = periods has contiguous
// rectangles.
class CycleTabloid {
 public:
  struct Region {
    int comp;     // 0-based component
    int top;      // 0-based local index of the first row
    int spacing;  // l_h / gamma_h
    int rows;     // gamma_h
    int col0;     // 0-based first column
    int width;    // rho_k / gamma_h

    int row_at(int t) const { return top + t * spacing; }
    friend bool operator==(const Region&, const Region&) = default;
  };

  CycleTabloid(Instance inst, Partition rho, std::vector<int> gamma,
               std::vector<std::vector<std::vector<int>>> labels,
               std::vector<Region> regions)
      : instance_(std::move(inst)),
        rho_(std::move(rho)),
        gamma_(std::move(gamma)),
        labels_(std::move(labels)),
        regions_(std::move(regions)) {}

  const Instance& instance() const { return instance_; }
  const Partition& rho() const { return rho_; }
  const std::vector<int>& gamma() const { return gamma_; }
  int gamma_of_label(int k) const {
    return regions_[static_cast<std::size_t>(k) - 1].rows;
  }
  const std::vector<std::vector<std::vector<int>>>& labels() const {
    return labels_;
  }
  // Rectangle of label k (1-based).
  const Region& region(int k) const {
    return regions_[static_cast<std::size_t>(k) - 1];
  }
  int label_count() const { return static_cast<int>(regions_.size()); }

  friend bool operator==(const CycleTabloid& a, const CycleTabloid& b) {
    return a.instance_ == b.instance_ && a.rho_ == b.rho_ &&
           a.gamma_ == b.gamma_ && a.labels_ == b.labels_;
  }

 private:
  Instance instance_;
  Partition rho_;
  std::vector<int> gamma_;
  std::vector<std::vector<std::vector<int>>> labels_;
  std::vector<Region> regions_;  // indexed by label-1
};

// A cycle tabloid plus one chosen row per label: marks[k-1] picks a row of
// label k's rectangle (1-based, top to bottom).
class MarkedCycleTabloid {
 public:
  MarkedCycleTabloid(CycleTabloid y, std::vector<int> marks)
      : y_(std::move(y)), marks_(std::move(marks)) {
    if (static_cast<int>(marks_.size()) != y_.label_count())
      fail(Errc::invalid_marked, "one mark required per label");
    for (int k = 1; k <= y_.label_count(); ++k) {
      const int c = marks_[static_cast<std::size_t>(k) - 1];
      if (c < 1 || c > y_.region(k).rows)
        fail(Errc::invalid_marked,
             "mark of label " + std::to_string(k) + " out of range");
    }
  }

  const CycleTabloid& y() const { return y_; }
  const std::vector<int>& marks() const { return marks_; }
  int mark(int k) const { return marks_[static_cast<std::size_t>(k) - 1]; }

  friend bool operator==(const MarkedCycleTabloid&,
                         const MarkedCycleTabloid&) = default;

 private:
  CycleTabloid y_;
  std::vector<int> marks_;
};

namespace detail {

inline void check_gamma(const Instance& inst, const std::vector<int>& gamma) {
  if (static_cast<int>(gamma.size()) != inst.component_count())
    fail(Errc::length_mismatch, "gamma tuple length != component count");
  for (int h = 0; h < inst.component_count(); ++h) {
    const int g = gamma[static_cast<std::size_t>(h)];
    if (g < 1 || inst.period(h) % g != 0)
      fail(Errc::gamma_mismatch,
           "gamma of component " + std::to_string(h + 1) +
               " must divide its period");
  }
}

}  // namespace detail

inline CycleTabloid validate_cycle_tabloid(
    const std::vector<std::vector<std::vector<int>>>& labels,
    const Partition& rho, const std::vector<int>& gamma,
    const Instance& inst) {
  detail::check_gamma(inst, gamma);
  if (static_cast<int>(labels.size()) != inst.component_count())
    fail(Errc::size_mismatch, "component count mismatch");
  const int nlabels = rho.row_count();
  // Gather the boxes of every label.
  std::vector<std::vector<std::array<int, 3>>> boxes(
      static_cast<std::size_t>(nlabels));  // (comp, row, col)
  for (int h = 0; h < inst.component_count(); ++h) {
    const Partition& mu = inst.component(h);
    const auto& comp = labels[static_cast<std::size_t>(h)];
    if (static_cast<int>(comp.size()) != mu.row_count())
      fail(Errc::size_mismatch,
           "row count mismatch in component " + std::to_string(h + 1));
    for (int r = 0; r < mu.row_count(); ++r) {
      const auto& row = comp[static_cast<std::size_t>(r)];
      if (static_cast<int>(row.size()) != mu.part(r))
        fail(Errc::size_mismatch,
             "row length mismatch in component " + std::to_string(h + 1));
      for (int c = 0; c < static_cast<int>(row.size()); ++c) {
        const int k = row[static_cast<std::size_t>(c)];
        if (k < 1 || k > nlabels)
          fail(Errc::wrong_label_count,
               "label " + std::to_string(k) + " out of range");
        if (c > 0 && row[static_cast<std::size_t>(c) - 1] > k)
          fail(Errc::row_not_weakly_increasing,
               "component " + std::to_string(h + 1) + ", row " +
                   std::to_string(r + 1));
        boxes[static_cast<std::size_t>(k) - 1].push_back({h, r, c});
      }
    }
  }
  std::vector<CycleTabloid::Region> regions;
  for (int k = 1; k <= nlabels; ++k) {
    const auto& bs = boxes[static_cast<std::size_t>(k) - 1];
    if (static_cast<int>(bs.size()) != rho.part(k - 1))
      fail(Errc::wrong_label_count,
           "label " + std::to_string(k) + " occupies " +
               std::to_string(bs.size()) + " boxes, expected " +
               std::to_string(rho.part(k - 1)));
    const int h = bs.front()[0];
    const int g = gamma[static_cast<std::size_t>(h)];
    const int d = inst.period(h) / g;
    auto bad = [&] {
      fail(Errc::not_rectangle_with_spacing, "label " + std::to_string(k));
    };
    for (const auto& b : bs)
      if (b[0] != h) bad();
    if (rho.part(k - 1) % g != 0) bad();
    const int w = rho.part(k - 1) / g;
    // Expect g rows spaced d apart, identical column interval in each.
    std::vector<int> rows;
    std::vector<int> mincol(static_cast<std::size_t>(g), -1);
    for (const auto& b : bs)
      if (rows.empty() || rows.back() != b[1]) rows.push_back(b[1]);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    if (static_cast<int>(rows.size()) != g) bad();
    for (int t = 0; t < g; ++t)
      if (rows[static_cast<std::size_t>(t)] != rows.front() + t * d) bad();
    int col0 = -1;
    for (int t = 0; t < g; ++t) {
      std::vector<int> cols;
      for (const auto& b : bs)
        if (b[1] == rows[static_cast<std::size_t>(t)]) cols.push_back(b[2]);
      std::sort(cols.begin(), cols.end());
      if (static_cast<int>(cols.size()) != w) bad();
      for (int i = 0; i + 1 < w; ++i)
        if (cols[static_cast<std::size_t>(i)] + 1 !=
            cols[static_cast<std::size_t>(i) + 1])
          bad();
      if (t == 0)
        col0 = cols.front();
      else if (cols.front() != col0)
        bad();
    }
    regions.push_back({h, rows.front(), d, g, col0, w});
  }
  return CycleTabloid(inst, rho, gamma, labels, std::move(regions));
}

namespace detail {

// Backtracking placement of labels 1,2,... into rectangles. Weak row
// increase means the boxes holding labels <= k form a prefix of every row,
// so each candidate rectangle starts exactly at the current fill level of
// its rows; a rectangle in a completed labelling never crosses a block
// boundary, so top rows scan only the first l_h/gamma_h offsets of each
// block.
template <class EmitFn>
void place_labels(const Instance& inst, const Partition& rho,
                  const std::vector<int>& gamma, EmitFn&& emit) {
  check_gamma(inst, gamma);
  if (rho.boxes() != inst.total_boxes()) return;  // no complete labelling
  const int nlabels = rho.row_count();
  const Shape& sh = inst.shape();
  std::vector<int> fill(static_cast<std::size_t>(sh.row_count()), 0);
  std::vector<CycleTabloid::Region> regions(
      static_cast<std::size_t>(nlabels));
  auto rec = [&](auto&& self, int k) -> void {
    if (k > nlabels) {
      emit(regions);
      return;
    }
    const int need = rho.part(k - 1);
    for (int h = 0; h < inst.component_count(); ++h) {
      const int g = gamma[static_cast<std::size_t>(h)];
      if (need % g != 0) continue;
      const int w = need / g;
      const int lh = inst.period(h);
      const int d = lh / g;
      const Partition& mu = inst.component(h);
      const int first = sh.comp_first_row[static_cast<std::size_t>(h)];
      for (int top = 0; top < mu.row_count(); ++top) {
        if (top % lh >= d) continue;  // keep the rectangle inside one block
        if (w > mu.part(top)) continue;
        const int c0 = fill[static_cast<std::size_t>(first + top)];
        if (c0 + w > mu.part(top)) continue;
        bool ok = true;
        for (int t = 1; t < g; ++t)
          if (fill[static_cast<std::size_t>(first + top + t * d)] != c0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (int t = 0; t < g; ++t)
          fill[static_cast<std::size_t>(first + top + t * d)] += w;
        regions[static_cast<std::size_t>(k) - 1] = {h, top, d, g, c0, w};
        self(self, k + 1);
        for (int t = 0; t < g; ++t)
          fill[static_cast<std::size_t>(first + top + t * d)] -= w;
      }
    }
  };
  rec(rec, 1);
}

inline std::vector<std::vector<std::vector<int>>> labels_from_regions(
    const Instance& inst, const std::vector<CycleTabloid::Region>& regions) {
  std::vector<std::vector<std::vector<int>>> labels(
      static_cast<std::size_t>(inst.component_count()));
  for (int h = 0; h < inst.component_count(); ++h) {
    const Partition& mu = inst.component(h);
    for (int r = 0; r < mu.row_count(); ++r)
      labels[static_cast<std::size_t>(h)].emplace_back(
          static_cast<std::size_t>(mu.part(r)), 0);
  }
  for (int k = 1; k <= static_cast<int>(regions.size()); ++k) {
    const CycleTabloid::Region& reg =
        regions[static_cast<std::size_t>(k) - 1];
    for (int t = 0; t < reg.rows; ++t)
      for (int i = 0; i < reg.width; ++i)
        labels[static_cast<std::size_t>(reg.comp)]
              [static_cast<std::size_t>(reg.row_at(t))]
              [static_cast<std::size_t>(reg.col0 + i)] = k;
  }
  return labels;
}

}  // namespace detail

// All cycle tabloids, exactly once, in deterministic order: labels are
// placed in increasing order, candidate rectangles scanned by component
// then by top row.
template <class F>
void for_each_cycle_tabloid(const Instance& inst, const Partition& rho,
                            const std::vector<int>& gamma, F&& fn) {
  detail::place_labels(inst, rho, gamma,
                       [&](const std::vector<CycleTabloid::Region>& regions) {
                         fn(CycleTabloid(
                             inst, rho, gamma,
                             detail::labels_from_regions(inst, regions),
                             regions));
                       });
}

inline std::vector<CycleTabloid> enumerate_cycle_tabloids(
    const Instance& inst, const Partition& rho,
    const std::vector<int>& gamma) {
  std::vector<CycleTabloid> out;
  for_each_cycle_tabloid(inst, rho, gamma,
                         [&](const CycleTabloid& y) { out.push_back(y); });
  return out;
}

// Marked tabloids: every Y expanded with all mark vectors, marks in
// lexicographic order with the mark of label 1 most significant.
template <class F>
void for_each_marked(const Instance& inst, const Partition& rho,
                     const std::vector<int>& gamma, F&& fn) {
  for_each_cycle_tabloid(inst, rho, gamma, [&](const CycleTabloid& y) {
    const int n = y.label_count();
    std::vector<int> marks(static_cast<std::size_t>(n), 1);
    for (;;) {
      fn(MarkedCycleTabloid(y, marks));
      int pos = n - 1;
      while (pos >= 0 &&
             marks[static_cast<std::size_t>(pos)] ==
                 y.region(pos + 1).rows)
        marks[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++marks[static_cast<std::size_t>(pos)];
    }
  });
}

inline std::vector<MarkedCycleTabloid> enumerate_marked(
    const Instance& inst, const Partition& rho,
    const std::vector<int>& gamma) {
  std::vector<MarkedCycleTabloid> out;
  for_each_marked(inst, rho, gamma,
                  [&](const MarkedCycleTabloid& mt) { out.push_back(mt); });
  return out;
}

// Number of marked tabloids: sum over Y of the product of gamma over the
// labels' components.
inline Count count_marked(const Instance& inst, const Partition& rho,
                          const std::vector<int>& gamma) {
  Count total = 0;
  detail::place_labels(inst, rho, gamma,
                       [&](const std::vector<CycleTabloid::Region>& regions) {
                         Count prod = 1;
                         for (const auto& reg : regions)
                           prod *= static_cast<Count>(reg.rows);
                         total += prod;
                       });
  return total;
}

// Row reindexing realizing the count identity: inside each block of l_h
// rows, rows are stably re-sorted by their residue class mod l_h/gamma_h,
// which makes every spaced rectangle contiguous. The result is a valid
// cycle tabloid on the same diagrams with periods gamma, and the map is a
// bijection between the two enumerated sets.
inline CycleTabloid compress(const CycleTabloid& y) {
  const Instance& inst = y.instance();
  Instance target(inst.components(), y.gamma());
  std::vector<std::vector<std::vector<int>>> labels(
      static_cast<std::size_t>(inst.component_count()));
  std::vector<CycleTabloid::Region> regions(
      static_cast<std::size_t>(y.label_count()));
  for (int h = 0; h < inst.component_count(); ++h) {
    const Partition& mu = inst.component(h);
    const int lh = inst.period(h);
    const int g = y.gamma()[static_cast<std::size_t>(h)];
    const int d = lh / g;
    auto& comp = labels[static_cast<std::size_t>(h)];
    comp.resize(static_cast<std::size_t>(mu.row_count()));
    for (int r = 0; r < mu.row_count(); ++r) {
      const int block = r / lh, off = r % lh;
      const int phase = off % d, q = off / d;
      comp[static_cast<std::size_t>(block * lh + phase * g + q)] =
          y.labels()[static_cast<std::size_t>(h)][static_cast<std::size_t>(r)];
    }
  }
  for (int k = 1; k <= y.label_count(); ++k) {
    const CycleTabloid::Region& reg = y.region(k);
    const int lh = inst.period(reg.comp);
    const int g = y.gamma()[static_cast<std::size_t>(reg.comp)];
    const int block = reg.top / lh, phase = reg.top % lh;
    // Aligned rectangles have phase < d and rows q = 0..g-1.
    regions[static_cast<std::size_t>(k) - 1] = {
        reg.comp, block * lh + phase * g, 1, g, reg.col0, reg.width};
  }
  return CycleTabloid(std::move(target), y.rho(), y.gamma(),
                      std::move(labels), std::move(regions));
}

inline MarkedCycleTabloid compress(const MarkedCycleTabloid& mt) {
  return MarkedCycleTabloid(compress(mt.y()), mt.marks());
}

// ---- ASCII rendering --------------------------------------------------
// One row per line, entries space-separated, components separated by one
// blank line; a marked entry carries a '*' suffix on the left-most box of
// its chosen row.

namespace detail {

inline std::string render_grid(
    const std::vector<std::vector<std::vector<int>>>& comps,
    const std::vector<std::pair<std::pair<int, int>, int>>* stars) {
  // stars: ((comp,row) -> col) entries with a '*'.
  std::ostringstream out;
  for (std::size_t h = 0; h < comps.size(); ++h) {
    if (h > 0) out << "\n";
    for (std::size_t r = 0; r < comps[h].size(); ++r) {
      for (std::size_t c = 0; c < comps[h][r].size(); ++c) {
        if (c > 0) out << ' ';
        out << comps[h][r][c];
        if (stars)
          for (const auto& s : *stars)
            if (s.first.first == static_cast<int>(h) &&
                s.first.second == static_cast<int>(r) &&
                s.second == static_cast<int>(c))
              out << '*';
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace detail

inline std::string render(const CycleTabloid& y) {
  return detail::render_grid(y.labels(), nullptr);
}

inline std::string render(const MarkedCycleTabloid& mt) {
  std::vector<std::pair<std::pair<int, int>, int>> stars;
  for (int k = 1; k <= mt.y().label_count(); ++k) {
    const CycleTabloid::Region& reg = mt.y().region(k);
    stars.push_back(
        {{reg.comp, reg.row_at(mt.mark(k) - 1)}, reg.col0});
  }
  return detail::render_grid(mt.y().labels(), &stars);
}

inline std::string render(const Tabloid& t) {
  return detail::render_grid(t.rows(), nullptr);
}

// Inverse of render(MarkedCycleTabloid): the label spectrum determines
// rho, the rectangles determine gamma (every component hosts at least one
// label), the stars determine the marks.
inline MarkedCycleTabloid parse_marked(const std::string& text,
                                       const Instance& inst) {
  std::vector<std::vector<std::vector<int>>> labels(1);
  std::vector<std::pair<std::pair<int, int>, int>> stars;
  std::istringstream in(text);
  std::string line;
  bool previous_blank = false;
  while (std::getline(in, line)) {
    if (line.empty()) {
      if (!previous_blank && !labels.back().empty()) labels.emplace_back();
      previous_blank = true;
      continue;
    }
    previous_blank = false;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      bool starred = false;
      if (!tok.empty() && tok.back() == '*') {
        starred = true;
        tok.pop_back();
      }
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        fail(Errc::parse_error, "bad token '" + tok + "'");
      }
      if (used != tok.size() || v < 1)
        fail(Errc::parse_error, "bad token '" + tok + "'");
      if (starred)
        stars.push_back({{static_cast<int>(labels.size()) - 1,
                          static_cast<int>(labels.back().size())},
                         static_cast<int>(row.size())});
      row.push_back(v);
    }
    labels.back().push_back(std::move(row));
  }
  if (labels.size() == 1 && labels.back().empty()) labels.clear();
  if (static_cast<int>(labels.size()) != inst.component_count())
    fail(Errc::parse_error, "component count mismatch");
  // rho from label occurrence counts.
  int maxlabel = 0;
  std::map<int, int> occurrences;
  for (const auto& comp : labels)
    for (const auto& row : comp)
      for (int v : row) {
        ++occurrences[v];
        maxlabel = std::max(maxlabel, v);
      }
  std::vector<int> rho_parts;
  for (int k = 1; k <= maxlabel; ++k) {
    auto it = occurrences.find(k);
    if (it == occurrences.end())
      fail(Errc::parse_error, "label " + std::to_string(k) + " missing");
    rho_parts.push_back(it->second);
  }
  for (std::size_t i = 0; i + 1 < rho_parts.size(); ++i)
    if (rho_parts[i] < rho_parts[i + 1])
      fail(Errc::parse_error, "label sizes are not weakly decreasing");
  Partition rho{rho_parts};
  // gamma per component from the rectangle of the first label seen there.
  std::vector<int> gamma(static_cast<std::size_t>(inst.component_count()), 0);
  for (int k = 1; k <= maxlabel; ++k) {
    int comp = -1;
    std::vector<int> rows;
    for (int h = 0; h < static_cast<int>(labels.size()); ++h)
      for (int r = 0; r < static_cast<int>(labels[static_cast<std::size_t>(h)].size()); ++r)
        for (int v : labels[static_cast<std::size_t>(h)][static_cast<std::size_t>(r)])
          if (v == k) {
            comp = h;
            if (rows.empty() || rows.back() != r) rows.push_back(r);
            break;
          }
    if (comp >= 0 && gamma[static_cast<std::size_t>(comp)] == 0)
      gamma[static_cast<std::size_t>(comp)] = static_cast<int>(rows.size());
  }
  for (int h = 0; h < inst.component_count(); ++h)
    if (gamma[static_cast<std::size_t>(h)] == 0)
      gamma[static_cast<std::size_t>(h)] = inst.period(h);
  CycleTabloid y = validate_cycle_tabloid(labels, rho, gamma, inst);
  // Marks from the stars: exactly one per label, on the left-most box of
  // one of its rows.
  std::vector<int> marks(static_cast<std::size_t>(maxlabel), 0);
  for (const auto& s : stars) {
    const int h = s.first.first, r = s.first.second, c = s.second;
    const int k = labels[static_cast<std::size_t>(h)]
                        [static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(c)];
    const CycleTabloid::Region& reg = y.region(k);
    if (c != reg.col0 || (r - reg.top) % reg.spacing != 0)
      fail(Errc::parse_error,
           "mark of label " + std::to_string(k) +
               " is not on the left-most box of one of its rows");
    if (marks[static_cast<std::size_t>(k) - 1] != 0)
      fail(Errc::parse_error, "label " + std::to_string(k) + " marked twice");
    marks[static_cast<std::size_t>(k) - 1] = (r - reg.top) / reg.spacing + 1;
  }
  for (int k = 1; k <= maxlabel; ++k)
    if (marks[static_cast<std::size_t>(k) - 1] == 0)
      fail(Errc::parse_error, "label " + std::to_string(k) + " unmarked");
  return MarkedCycleTabloid(std::move(y), std::move(marks));
}

}  // namespace tabloids
