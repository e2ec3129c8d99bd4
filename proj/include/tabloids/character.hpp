#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "tabloids/common.hpp"
#include "tabloids/instance.hpp"
#include "tabloids/permutation.hpp"
#include "tabloids/root_sum.hpp"
#include "tabloids/tabloid.hpp"

namespace tabloids {

// One quotient module of the tabloid permutation module: the block shift
// acts as the scalar zeta_l^k. The quotient is never materialized; the
// rewriting rule on orbit representatives is the computational semantics.
struct ModuleSpec {
  Instance instance;
  int k = 0;

  ModuleSpec(Instance inst, int k_) : instance(std::move(inst)), k(k_) {
    if (k < 0 || k >= instance.period_lcm())
      fail(Errc::validation_error,
           "k must lie in 0.." + std::to_string(instance.period_lcm() - 1));
  }
};

// Character value from a fixed-point profile: multiplicity counts[j]/l at
// exponent k*j mod l.
inline RootSum character_from_profile(const FixedPointProfile& profile,
                                      int k) {
  const int l = static_cast<int>(profile.counts.size());
  RootSum value(l);
  for (int j = 0; j < l; ++j) {
    const Count c = profile.counts[static_cast<std::size_t>(j)];
    if (c % static_cast<Count>(l) != 0)
      throw std::logic_error("fixed-point count not divisible by the order");
    value.add_at((k * j) % l, c / static_cast<Count>(l));
  }
  return value;
}

inline RootSum character(const ModuleSpec& spec, const Permutation& sigma,
                         int cap = kDefaultEnumerationCap) {
  return character_from_profile(fixed_point_profile(spec.instance, sigma, cap),
                                spec.k);
}

// diag[i] = number of orbit representatives T whose image sigma*T lands
// back on T up to the i-th power of the block shift. This is the diagonal
// structure of the monomial representation matrix; it determines the trace
// in every quotient at once.
inline std::vector<Count> monomial_diagonal(const Instance& inst,
                                            const Permutation& sigma,
                                            int cap = kDefaultOracleCap) {
  const detail::Shape& sh = inst.shape();
  if (sigma.degree() != sh.total)
    fail(Errc::size_mismatch, "permutation degree != box count");
  const int l = sh.lcm;
  std::vector<std::vector<int>> tables;
  for (int j = 0; j < l; ++j) tables.push_back(sh.shift_table(j));
  std::vector<int> lookup(static_cast<std::size_t>(sh.total) + 1);
  for (int v = 1; v <= sh.total; ++v)
    lookup[static_cast<std::size_t>(v)] = sigma(v);
  std::vector<Count> diag(static_cast<std::size_t>(l), 0);
  std::vector<int> u;
  for_each_tabloid(
      inst,
      [&](const std::vector<int>& w) {
        if (!detail::is_orbit_least(sh, w, tables)) return;
        detail::apply_left_word(sh, lookup, w, u);
        // Representative of the orbit of u: the least shift of u.
        int best = 0;
        for (int s = 1; s < l; ++s)
          if (detail::compare_shifted(sh, u, tables[static_cast<std::size_t>(s)],
                                      u,
                                      tables[static_cast<std::size_t>(best)]) <
              0)
            best = s;
        // u == rep * a^i with i = -best; diagonal entry iff rep == w.
        bool diagonal = true;
        for (int r = 0; r < sh.row_count() && diagonal; ++r) {
          const detail::Shape::Row& src = sh.rows[static_cast<std::size_t>(
              tables[static_cast<std::size_t>(best)]
                    [static_cast<std::size_t>(r)])];
          const detail::Shape::Row& dst =
              sh.rows[static_cast<std::size_t>(r)];
          for (int i = 0; i < dst.len; ++i)
            if (u[static_cast<std::size_t>(src.begin + i)] !=
                w[static_cast<std::size_t>(dst.begin + i)]) {
              diagonal = false;
              break;
            }
        }
        if (diagonal) ++diag[static_cast<std::size_t>((l - best) % l)];
      },
      cap);
  return diag;
}

// Independent route to the character: the exact trace of the explicit
// monomial matrix on orbit representatives. Must agree with character().
inline RootSum character_trace_oracle(const ModuleSpec& spec,
                                      const Permutation& sigma,
                                      int cap = kDefaultOracleCap) {
  const int l = spec.instance.period_lcm();
  const std::vector<Count> diag = monomial_diagonal(spec.instance, sigma, cap);
  RootSum value(l);
  for (int i = 0; i < l; ++i)
    value.add_at((spec.k * i) % l, diag[static_cast<std::size_t>(i)]);
  return value;
}

// The weighted character sum at weight j: exactly the number of tabloids
// carried by sigma to their own (-j)-th shift. Returned as the exact
// integer from the fixed-point profile; the summed-character route is the
// float diagnostic below.
inline Count weighted_character_sum(const Instance& inst, long long j,
                                    const Permutation& sigma,
                                    int cap = kDefaultEnumerationCap) {
  const FixedPointProfile profile = fixed_point_profile(inst, sigma, cap);
  const int l = inst.period_lcm();
  const int e = static_cast<int>(((-j) % l + l) % l);
  return profile.counts[static_cast<std::size_t>(e)];
}

inline std::complex<double> weighted_sum_diagnostic(
    const Instance& inst, long long j, const Permutation& sigma,
    int cap = kDefaultEnumerationCap) {
  const FixedPointProfile profile = fixed_point_profile(inst, sigma, cap);
  const int l = inst.period_lcm();
  const long long jm = ((j % l) + l) % l;
  std::complex<double> acc = 0.0;
  const double step = 2.0 * M_PI / l;
  for (int k = 0; k < l; ++k) {
    const double ang = step * static_cast<double>((jm * k) % l);
    acc += std::complex<double>(std::cos(ang), std::sin(ang)) *
           character_from_profile(profile, k).eval();
  }
  return acc;
}

// tabloid_count / l; identical for every k.
inline Count module_dimension(const Instance& inst) {
  const Count n = tabloid_count(inst);
  const Count l = static_cast<Count>(inst.period_lcm());
  if (n % l != 0)
    throw std::logic_error("tabloid count not divisible by the shift order");
  return n / l;
}

}  // namespace tabloids
