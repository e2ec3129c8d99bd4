#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "tabloids/common.hpp"
#include "tabloids/partition.hpp"

namespace tabloids {

// A bijection of {1,...,m}. Labels are 1-based throughout.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int m) {
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(m));
    std::iota(p.images_.begin(), p.images_.end(), 1);
    return p;
  }

  static Permutation from_images(std::vector<int> images) {
    const int m = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : images) {
      if (v < 1 || v > m)
        fail(Errc::validation_error,
             "image " + std::to_string(v) + " outside 1.." + std::to_string(m));
      if (seen[static_cast<std::size_t>(v)])
        fail(Errc::validation_error,
             "image " + std::to_string(v) + " repeated");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // Cycles use the convention (a,b,c): a -> b -> c -> a. Entries must be
  // disjoint and within 1..m; fixed points may be omitted.
  static Permutation from_cycles(int m,
                                 const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(m));
    std::iota(images.begin(), images.end(), 1);
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& cyc : cycles) {
      for (int v : cyc) {
        if (v < 1 || v > m)
          fail(Errc::validation_error, "cycle entry " + std::to_string(v) +
                                           " outside 1.." + std::to_string(m));
        if (seen[static_cast<std::size_t>(v)])
          fail(Errc::validation_error,
               "cycle entry " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v)] = 1;
      }
      const int n = static_cast<int>(cyc.size());
      for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(cyc[i]) - 1] = cyc[(i + 1) % n];
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const {
    return images_[static_cast<std::size_t>(i) - 1];
  }

  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (int i = 1; i <= degree(); ++i)
      p.images_[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return p;
  }

  // (a*b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      fail(Errc::size_mismatch, "composing permutations of unequal degree");
    Permutation p;
    p.images_.resize(a.images_.size());
    for (int i = 1; i <= a.degree(); ++i)
      p.images_[static_cast<std::size_t>(i) - 1] = a(b(i));
    return p;
  }

  // Disjoint cycles including fixed points, each rotated to start at its
  // minimal element, listed by minimal element ascending.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v = 1; v <= degree(); ++v) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      std::vector<int> cyc;
      int x = v;
      do {
        seen[static_cast<std::size_t>(x)] = 1;
        cyc.push_back(x);
        x = (*this)(x);
      } while (x != v);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Multiset of cycle lengths (fixed points included), sorted descending.
inline Partition cycle_type(const Permutation& sigma) {
  std::vector<int> lens;
  for (const auto& cyc : sigma.cycles())
    lens.push_back(static_cast<int>(cyc.size()));
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return Partition(std::move(lens));
}

// First letter of the i-th canonical cycle (i is 1-based):
// 1 + rho_1 + ... + rho_{i-1}.
inline int cycle_start(const Partition& rho, int i) {
  int n = 1;
  for (int t = 0; t < i - 1; ++t) n += rho.part(t);
  return n;
}

// The canonical permutation of cycle type rho: the product of the cycles
// (n_i, n_i+1, ..., n_i+rho_i-1) on consecutive intervals.
inline Permutation canonical_permutation(const Partition& rho) {
  std::vector<int> images(static_cast<std::size_t>(rho.boxes()));
  std::iota(images.begin(), images.end(), 1);
  int n = 1;
  for (int p : rho.parts()) {
    for (int t = 0; t + 1 < p; ++t)
      images[static_cast<std::size_t>(n + t) - 1] = n + t + 1;
    images[static_cast<std::size_t>(n + p - 1) - 1] = n;
    n += p;
  }
  return Permutation::from_images(std::move(images));
}

// A deterministic tau with tau * canonical_permutation(cycle_type(sigma))
// * tau^{-1} == sigma. Cycles of sigma are taken sorted by length
// descending then by minimal element ascending, each starting at its
// minimal element; tau sends the canonical letters to those entries in
// order. In particular sigma == sigma_rho yields the identity.
inline Permutation conjugating_permutation(const Permutation& sigma) {
  auto cycs = sigma.cycles();
  std::stable_sort(cycs.begin(), cycs.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
  std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
  int n = 1;
  for (const auto& cyc : cycs)
    for (int v : cyc) images[static_cast<std::size_t>(n++) - 1] = v;
  return Permutation::from_images(std::move(images));
}

}  // namespace tabloids
