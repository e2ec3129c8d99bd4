#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tabloids/bijection.hpp"
#include "tabloids/character.hpp"
#include "tabloids/common.hpp"
#include "tabloids/cycle_tabloid.hpp"
#include "tabloids/instance.hpp"
#include "tabloids/partition.hpp"
#include "tabloids/permutation.hpp"
#include "tabloids/tabloid.hpp"

namespace tabloids {

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string instance_key(const Instance& inst) {
  std::string s = "mu=";
  for (const Partition& mu : inst.components()) {
    s += '[';
    for (int p : mu.parts()) s += std::to_string(p) + ',';
    s += ']';
  }
  s += ";l=";
  for (int p : inst.periods()) s += std::to_string(p) + ',';
  return s;
}

// Uniform permutation of {1..m} from the given engine (hand-rolled so the
// draw sequence does not depend on the standard library).
inline Permutation random_permutation(std::mt19937_64& rng, int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  for (int i = m - 1; i > 0; --i) {
    const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(images[static_cast<std::size_t>(i)],
              images[static_cast<std::size_t>(k)]);
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace detail

// Outcome of checking one (instance, rho, j) triple: the weighted
// character sum (computed as a fixed-point count), the marked-tabloid
// count on the instance's periods, the marked count after compressing the
// periods to gamma, and the correspondence checks.
struct VerificationReport {
  Instance instance;
  Partition rho;
  long long j = 0;
  Count lhs = 0;             // fixed-point count
  Count rhs_marked = 0;      // marked tabloids, periods kept
  Count rhs_compressed = 0;  // marked tabloids, periods replaced by gamma
  bool bijection_ok = true;
  std::chrono::duration<double> elapsed{0};

  bool pass() const {
    return lhs == rhs_marked && lhs == rhs_compressed && bijection_ok;
  }
};

struct CatalogOptions {
  std::vector<int> periods = {1, 2, 3, 4};
  int max_components = 2;
  int cap = kDefaultEnumerationCap;
  bool check_bijection = true;
};

// Every instance with 1..max_components components, total boxes 1..max_m,
// and component periods drawn from options.periods (kept only where the
// component is a valid l_h-partition). Deterministic order: by total box
// count, then component count, then the first component's size, then
// partition and period order.
inline std::vector<Instance> instance_catalog(int max_m,
                                              const CatalogOptions& options =
                                                  {}) {
  std::vector<int> periods = options.periods;
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
  // (partition, period) choices per box count.
  std::vector<std::vector<std::pair<Partition, int>>> choices(
      static_cast<std::size_t>(max_m) + 1);
  for (int n = 1; n <= max_m; ++n)
    for (const Partition& p : partitions_of(n))
      for (int l : periods)
        if (is_l_partition(p, l))
          choices[static_cast<std::size_t>(n)].push_back({p, l});
  std::vector<Instance> out;
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& [p, l] : choices[static_cast<std::size_t>(m)])
      out.push_back(Instance({p}, {l}));
    if (options.max_components >= 2)
      for (int m1 = 1; m1 < m; ++m1)
        for (const auto& [p1, l1] : choices[static_cast<std::size_t>(m1)])
          for (const auto& [p2, l2] :
               choices[static_cast<std::size_t>(m - m1)])
            out.push_back(Instance({p1, p2}, {l1, l2}));
  }
  return out;
}

namespace detail {

// Checks all weights of one (instance, rho) pair with two enumeration
// passes: one for the canonical permutation of type rho, one for a seeded
// random conjugate.
inline std::vector<VerificationReport> verify_pair(const Instance& inst,
                                                   const Partition& rho,
                                                   bool check_bijection,
                                                   int cap) {
  const auto start = std::chrono::steady_clock::now();
  const int l = inst.period_lcm();
  const Permutation sigma = canonical_permutation(rho);
  const auto harvest = harvest_eigen<true>(inst, sigma, cap);

  Permutation tau_rand = Permutation::identity(inst.total_boxes());
  EigenHarvest conj_harvest;
  if (check_bijection) {
    std::string key = instance_key(inst) + ";rho=";
    for (int p : rho.parts()) key += std::to_string(p) + ',';
    std::mt19937_64 rng(fnv1a(key));
    tau_rand = random_permutation(rng, inst.total_boxes());
    conj_harvest = harvest_eigen<true>(
        inst, tau_rand * sigma * tau_rand.inverse(), cap);
  }

  std::vector<VerificationReport> reports;
  for (int j = 0; j < l; ++j) {
    VerificationReport rep;
    rep.instance = inst;
    rep.rho = rho;
    rep.j = j;
    const int e = ((-j) % l + l) % l;
    rep.lhs = harvest.counts[static_cast<std::size_t>(e)];
    const std::vector<int> gamma = gamma_for(inst, j);
    rep.rhs_marked = count_marked(inst, rho, gamma);
    rep.rhs_compressed =
        count_marked(Instance(inst.components(), gamma), rho, gamma);
    if (check_bijection) {
      bool ok = true;
      std::vector<Tabloid> image;
      for_each_marked(inst, rho, gamma, [&](const MarkedCycleTabloid& mt) {
        const Tabloid t = eigen_from_marked(mt, j);
        if (!(left_act(sigma, t) == right_act(t, -j))) ok = false;
        if (!(marked_from_eigen(t, rho, j) == mt)) ok = false;
        image.push_back(t);
      });
      std::sort(image.begin(), image.end());
      for (std::size_t i = 0; i + 1 < image.size(); ++i)
        if (image[i] == image[i + 1]) ok = false;  // not injective
      const auto& brute = harvest.words[static_cast<std::size_t>(e)];
      if (image.size() != brute.size()) ok = false;
      for (std::size_t i = 0; ok && i < image.size(); ++i)
        if (image[i].word() != brute[i]) ok = false;
      // Conjugated parameterization: translating the image through a
      // random tau must give the eigen set of the conjugated permutation.
      std::vector<Tabloid> translated;
      translated.reserve(image.size());
      for (const Tabloid& t : image) translated.push_back(left_act(tau_rand, t));
      std::sort(translated.begin(), translated.end());
      const auto& conj_brute = conj_harvest.words[static_cast<std::size_t>(e)];
      if (translated.size() != conj_brute.size()) ok = false;
      for (std::size_t i = 0; ok && i < translated.size(); ++i)
        if (translated[i].word() != conj_brute[i]) ok = false;
      rep.bijection_ok = ok;
    }
    reports.push_back(std::move(rep));
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  for (auto& rep : reports) rep.elapsed = elapsed / l;
  return reports;
}

}  // namespace detail

// Weighted character sum against both marked-tabloid counts for one
// weight. The correspondence is not exercised here; see verify_bijection.
inline VerificationReport verify_character_identity(const Instance& inst,
                                              long long j,
                                              const Partition& rho,
                                              int cap =
                                                  kDefaultEnumerationCap) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.instance = inst;
  rep.rho = rho;
  rep.j = j;
  rep.lhs = weighted_character_sum(inst, j, canonical_permutation(rho), cap);
  const std::vector<int> gamma = gamma_for(inst, j);
  rep.rhs_marked = count_marked(inst, rho, gamma);
  rep.rhs_compressed =
      count_marked(Instance(inst.components(), gamma), rho, gamma);
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

// Full correspondence check for one weight: injectivity, round trips,
// eigen membership, set equality against enumeration, and the conjugated
// variant for a seeded random conjugator.
inline VerificationReport verify_bijection(const Instance& inst, long long j,
                                           const Partition& rho,
                                           int cap = kDefaultEnumerationCap) {
  const int l = inst.period_lcm();
  const long long jm = ((j % l) + l) % l;
  auto reports = detail::verify_pair(inst, rho, true, cap);
  VerificationReport rep = reports[static_cast<std::size_t>(jm)];
  rep.j = j;
  return rep;
}

struct CatalogSummary {
  std::vector<VerificationReport> reports;
  Count checked = 0;
  Count passed = 0;

  bool all_pass() const { return checked == passed; }
};

// Runs every (instance, rho, j) triple of the built-in catalog: instances
// from instance_catalog, rho over all partitions of the instance's box
// count, j over 0..l-1. Nothing is skipped; each triple appears exactly
// once.
inline CatalogSummary verify_catalog(int max_m,
                                     const CatalogOptions& options = {}) {
  CatalogSummary summary;
  for (const Instance& inst : instance_catalog(max_m, options)) {
    for (const Partition& rho : partitions_of(inst.total_boxes())) {
      auto reports = detail::verify_pair(inst, rho, options.check_bijection,
                                         options.cap);
      for (auto& rep : reports) {
        ++summary.checked;
        if (rep.pass()) ++summary.passed;
        summary.reports.push_back(std::move(rep));
      }
    }
  }
  return summary;
}

}  // namespace tabloids
