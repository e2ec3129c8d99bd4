#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tabloids/character.hpp"
#include "tabloids/verify.hpp"

using namespace tabloids;

namespace {

const Instance kRunning = validate_instance({{2, 2}, {4}}, {2, 1});
const Permutation kSigmaStar =
    Permutation::from_cycles(8, {{1, 2, 3, 4}, {5, 6}, {7, 8}});

}  // namespace

TEST_CASE("character values on the running example") {
  CHECK(character(ModuleSpec(kRunning, 0), kSigmaStar) == RootSum(2, {4, 0}));
  CHECK(character(ModuleSpec(kRunning, 1), kSigmaStar) == RootSum(2, {1, 3}));
  CHECK(character(ModuleSpec(kRunning, 0), Permutation::identity(8)) ==
        RootSum(2, {210, 0}));
  CHECK(character(ModuleSpec(kRunning, 1), Permutation::identity(8)) ==
        RootSum(2, {210, 0}));
  CHECK_THROWS_AS(ModuleSpec(kRunning, 2), Error);
  CHECK_THROWS_AS(ModuleSpec(kRunning, -1), Error);
}

TEST_CASE("trace oracle on hand-checked cases") {
  CHECK(character_trace_oracle(ModuleSpec(kRunning, 1), kSigmaStar) ==
        RootSum(2, {1, 3}));
  CHECK(character_trace_oracle(ModuleSpec(kRunning, 0), Permutation::identity(8)) ==
        RootSum(2, {210, 0}));
  // Smallest nontrivial quotient: single column of two boxes, period 2.
  const Instance ones = validate_instance({{1, 1}}, {2});
  CHECK(character_trace_oracle(ModuleSpec(ones, 1),
                               Permutation::from_cycles(2, {{1, 2}})) ==
        RootSum(2, {0, 1}));
}

TEST_CASE("both character routes agree") {
  std::mt19937_64 rng(2718);
  for (const Instance& inst : instance_catalog(6)) {
    const int m = inst.total_boxes();
    std::vector<Permutation> sigmas;
    for (const Partition& rho : partitions_of(m))
      sigmas.push_back(canonical_permutation(rho));
    for (int trial = 0; trial < 3; ++trial)
      sigmas.push_back(detail::random_permutation(rng, m));
    for (const Permutation& sigma : sigmas) {
      const FixedPointProfile profile = fixed_point_profile(inst, sigma);
      const std::vector<Count> diag = monomial_diagonal(inst, sigma);
      for (int k = 0; k < inst.period_lcm(); ++k) {
        const ModuleSpec spec(inst, k);
        RootSum from_trace(inst.period_lcm());
        for (int i = 0; i < inst.period_lcm(); ++i)
          from_trace.add_at((k * i) % inst.period_lcm(),
                            diag[static_cast<std::size_t>(i)]);
        CHECK(character_from_profile(profile, k) == from_trace);
      }
    }
  }
}

TEST_CASE("weighted character sums") {
  CHECK(weighted_character_sum(kRunning, 1, kSigmaStar) == 6);
  CHECK(weighted_character_sum(kRunning, 2, kSigmaStar) == 2);
  CHECK(weighted_character_sum(kRunning, 0, Permutation::identity(8)) == 420);

  // Periodicity in the weight.
  for (long long j = -3; j <= 5; ++j)
    CHECK(weighted_character_sum(kRunning, j, kSigmaStar) ==
          weighted_character_sum(kRunning, ((j % 2) + 2) % 2, kSigmaStar));

  // The float diagnostic agrees with the exact integer.
  const auto z = weighted_sum_diagnostic(kRunning, 1, kSigmaStar);
  CHECK(std::abs(z - std::complex<double>(6.0, 0.0)) < 1e-9);
}

TEST_CASE("module dimension") {
  CHECK(module_dimension(kRunning) == 210);
  CHECK(module_dimension(validate_instance({{6}}, {1})) == 1);
  CHECK(module_dimension(validate_instance({{2, 2, 1, 1}}, {2})) == 90);
}

TEST_CASE("weighted sums collapse the periods") {
  // Replacing the periods by the orders gamma(j) and the weight by 1
  // leaves every weighted sum unchanged.
  std::mt19937_64 rng(1618);
  for (const Instance& inst : instance_catalog(6)) {
    const int m = inst.total_boxes();
    const Permutation sigma = detail::random_permutation(rng, m);
    for (int j = 0; j < inst.period_lcm(); ++j) {
      const Instance collapsed(inst.components(), gamma_for(inst, j));
      CHECK(weighted_character_sum(inst, j, sigma) ==
            weighted_character_sum(collapsed, 1, sigma));
    }
  }
}
