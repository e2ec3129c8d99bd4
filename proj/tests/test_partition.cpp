#include <catch2/catch_amalgamated.hpp>

#include "tabloids/partition.hpp"

using namespace tabloids;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::validation_error;
}

}  // namespace

TEST_CASE("partition validation") {
  const Partition p = validate_partition({2, 2, 1});
  CHECK(p.boxes() == 5);
  CHECK(p.row_count() == 3);

  CHECK(validate_partition({}).boxes() == 0);

  CHECK(code_of([] { validate_partition({1, 2}); }) ==
        Errc::not_weakly_decreasing);
  CHECK(code_of([] { validate_partition({2, 0}); }) ==
        Errc::non_positive_part);
  CHECK(code_of([] { validate_partition({-1}); }) == Errc::non_positive_part);
}

TEST_CASE("l-partition predicate") {
  CHECK(is_l_partition(Partition({2, 2, 1, 1}), 2));
  CHECK_FALSE(is_l_partition(Partition({2, 2, 1}), 2));
  CHECK(is_l_partition(Partition({5, 3, 3, 1}), 1));
  CHECK(is_l_partition(Partition({}), 7));
  CHECK(is_l_partition(Partition({4, 4, 4, 4}), 4));
  CHECK_FALSE(is_l_partition(Partition({4, 4, 4, 4}), 3));
}

TEST_CASE("partition generation") {
  const auto p5 = partitions_of(5);
  CHECK(p5.size() == 7);
  CHECK(p5.front() == Partition({5}));
  CHECK(p5.back() == Partition({1, 1, 1, 1, 1}));
  for (const Partition& p : p5) CHECK(p.boxes() == 5);

  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0).front().empty());
  CHECK(partitions_of(8).size() == 22);
}
