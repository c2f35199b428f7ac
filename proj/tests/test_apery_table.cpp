#include <catch_amalgamated.hpp>

#include <vector>

#include "apery/apery.hpp"
#include "worked_examples.hpp"

using namespace apery;
using V = std::vector<Int>;

TEST_CASE("tables of the worked examples") {
  for (const auto& ex : worked::examples()) {
    INFO("<" << join_ints(ex.generators, ",") << ">");
    const auto t = build_table(from_generators(ex.generators));
    CHECK(t.reduction_number() == ex.r);
    CHECK(table_rows(t) == ex.rows);
  }
}

TEST_CASE("degenerate tables") {
  const auto one = build_table(from_generators({1}));
  CHECK(one.reduction_number() == 0);
  CHECK(table_rows(one) == std::vector<V>{{0}});
  CHECK(render_table_text(one) == "+---+\n| 0 |\n+---+\n");

  CHECK(reduction_number(from_generators({2, 3})) == 1);
  CHECK(reduction_number(from_generators({5, 6, 7, 8, 9})) == 1);
  CHECK(reduction_number(from_generators({7, 8})) == 6);
}

TEST_CASE("powers past the reduction number are x-shifts of the last row") {
  const auto t = build_table(from_generators({5, 6, 13}));
  const auto p5 = t.power(5);
  CHECK(V(p5.apery().begin(), p5.apery().end()) == V{25, 26, 27, 28, 29});
  CHECK(t.power(7) == t.power(4).times_x(3));
  CHECK(t.column(3) == V{13, 13, 18, 18, 23});
}

TEST_CASE("landing decomposition") {
  SECTION("<5,6,9> column 3 is one landing across the whole table") {
    const auto col = decompose_column(build_table(from_generators({5, 6, 9})), 3);
    CHECK(col.landings == std::vector<Landing>{{0, 3}});
    CHECK(col.b == 3);
    CHECK(col.d == 3);
    CHECK(col.a == 3);
    CHECK(col.torsion.empty());
  }
  SECTION("<5,6,13> column 3 has one true landing") {
    const auto col = decompose_column(build_table(from_generators({5, 6, 13})), 3);
    CHECK(col.landings == std::vector<Landing>{{0, 1}, {2, 3}});
    CHECK(col.b == 1);
    CHECK(col.d == 3);
    CHECK(col.a == 2);
    CHECK(col.torsion == std::vector<TorsionSummand>{{1, 1}});
  }
  SECTION("<5,6,14> column 4 has a torsion summand of order 2") {
    const auto col = decompose_column(build_table(from_generators({5, 6, 14})), 4);
    CHECK(col.landings == std::vector<Landing>{{0, 1}, {3, 4}});
    CHECK(col.torsion == std::vector<TorsionSummand>{{1, 2}});
    CHECK(col.true_landing_length() == 1);
    CHECK(col.torsion_length() == 2);
  }
  SECTION("column index outside 1..e-1") {
    const auto t = build_table(from_generators({5, 6, 7}));
    CHECK_THROWS_AS(decompose_column(t, 0), Error);
    CHECK_THROWS_AS(decompose_column(t, 5), Error);
  }
}

TEST_CASE("landing ends stay within the table") {
  for (const auto& s : enumerate_by_genus(8)) {
    const auto t = build_table(s);
    for (const auto& col : decompose_all(t)) {
      CHECK(col.b >= 1);
      CHECK(col.b <= col.a);
      CHECK(col.a <= col.d);
      CHECK(col.d <= t.reduction_number());
    }
  }
}
