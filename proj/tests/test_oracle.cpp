#include <catch_amalgamated.hpp>

#include <vector>

#include "oracle/bounded_set.hpp"

using oracle::Int;
using V = std::vector<Int>;

TEST_CASE("oracle power ideals") {
  CHECK(oracle::apery(oracle::power_ideal({5, 6, 7}, 2, 30), 5) == V{10, 11, 12, 13, 14});
  CHECK(oracle::apery(oracle::power_ideal({5, 6, 9}, 3, 40), 5) == V{15, 16, 17, 18, 19});
  CHECK_THROWS_AS(oracle::power_ideal({5, 6, 9}, 3, 20), oracle::BoundTooSmall);
  CHECK_THROWS_AS(oracle::frobenius({5, 6, 9}, 10), oracle::BoundTooSmall);
}

TEST_CASE("oracle Apery set agrees with the set-difference form") {
  for (Int n = 0; n <= 4; ++n) {
    const auto s = oracle::power_ideal({5, 6, 13}, n, 120);
    CHECK(oracle::apery(s, 5) == oracle::apery_by_difference(s, 5));
  }
}

TEST_CASE("oracle basics") {
  CHECK(oracle::frobenius({5, 6, 7}, 100) == 9);
  CHECK(oracle::genus({5, 6, 7}, 100) == 6);
  CHECK(oracle::frobenius({1}, 10) == -1);
  const auto m = oracle::power_ideal({5, 6, 7}, 1, 60);
  const auto m2 = oracle::power_ideal({5, 6, 7}, 2, 60);
  CHECK(oracle::length(m, m2) == 3);
  CHECK(oracle::set_union(m, m2) == m);
  CHECK(oracle::set_intersect(m, m2) == m2);
  CHECK(oracle::apery(oracle::principal({5, 6, 7}, 5, 60), 5) == V{5, 11, 12, 18, 19});
}

TEST_CASE("oracle genus counts") {
  CHECK(oracle::enumerate_by_genus(12) == V{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592});
}
