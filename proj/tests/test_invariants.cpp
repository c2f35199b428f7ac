#include <catch_amalgamated.hpp>

#include <vector>

#include "apery/apery.hpp"
#include "oracle/bounded_set.hpp"
#include "worked_examples.hpp"

using namespace apery;
using V = std::vector<Int>;

namespace {

AperyTable table_of(std::initializer_list<Int> gens) { return build_table(from_generators(gens)); }

V drop_first(const V& v) { return {v.begin() + 1, v.end()}; }

// Brute-force g_i = λ(C_{r-i} / (m^i + C_{r-i-1})) with C_k = (m^r : x^k)
// and C_{-1} = m^{r+1}.
Int oracle_g(const V& gens, Int r, Int i) {
  const Int e = oracle::smallest_generator(gens);
  const Int bound = 400;
  const Int common = bound - (r + 1) * e;
  const auto s = oracle::semigroup_set(gens, bound);
  const auto top = oracle::power_ideal(gens, r, bound);
  auto c = [&](Int k) {
    if (k < 0) return oracle::truncate(oracle::power_ideal(gens, r + 1, bound), common);
    return oracle::truncate(oracle::colon(s, top, k * e), common);
  };
  const auto mi = oracle::truncate(oracle::power_ideal(gens, i, bound), common);
  return oracle::length(c(r - i), oracle::set_union(mi, c(r - i - 1)));
}

}  // namespace

TEST_CASE("Hilbert function") {
  const auto t = table_of({5, 6, 7});
  CHECK(hilbert(t, 0) == 1);
  CHECK(hilbert(t, 1) == 3);
  CHECK(hilbert(t, 2) == 5);
  CHECK(hilbert(t, 9) == 5);
  CHECK(hilbert_function(table_of({5, 6, 13})) == V{1, 3, 4, 4, 5});
  CHECK(hilbert(table_of({1}), 0) == 1);
}

TEST_CASE("alpha from the table") {
  auto a = alpha_from_table(table_of({5, 6, 13}));
  CHECK(a.alpha == V{1, 1, 1, 1, 1});
  CHECK(a.torsion == PairCounts{{{1, 1}, 1}, {{2, 1}, 1}});

  a = alpha_from_table(table_of({5, 6, 9, 13}));
  CHECK(a.alpha == V{1, 2, 1, 1});
  CHECK(a.torsion == PairCounts{{{1, 1}, 1}});

  a = alpha_from_table(table_of({1}));
  CHECK(a.alpha == V{1});
  CHECK(a.torsion.empty());
}

TEST_CASE("alpha from colon lengths") {
  CHECK(drop_first(alpha_from_colon(table_of({5, 6, 7}))) == V{2, 2});
  CHECK(f_length(table_of({5, 6, 7}), 1, 1) == 0);
  CHECK(drop_first(alpha_from_colon(table_of({5, 6, 14}))) == V{1, 1, 1, 1});

  bool found = false;
  for (const auto& s : enumerate_by_genus(12, 6)) {
    if (s.embedding_dimension() != 5) continue;
    const auto t = build_table(s);
    if (t.reduction_number() != 3) continue;
    found = true;
    INFO("<" << join_ints({s.generators().begin(), s.generators().end()}, ",") << ">");
    CHECK(drop_first(alpha_from_colon(t)) == V{3, 1, 1});
  }
  CHECK(found);
}

TEST_CASE("colon lengths") {
  const auto t = table_of({5, 6, 13});
  CHECK(f_length(t, 1, 1) == 1);
  CHECK(f_length(t, 3, 1) == 0);
  CHECK(f_length(t, 0, 1) == 0);
  CHECK(f_length(t, 1, 9) == 0);
  CHECK(g_length(t, 0) == 0);
  CHECK(g_length(t, 4) == 0);
  CHECK_THROWS_AS(g_length(t, 5), Error);
  CHECK_THROWS_AS(nu_length(t, 0), Error);

  for (const auto& ex : worked::examples()) {
    const auto u = build_table(from_generators(ex.generators));
    for (Int i = 0; i <= ex.r; ++i) CHECK(g_length(u, i) == oracle_g(ex.generators, ex.r, i));
  }
}

TEST_CASE("f_{r-1,1} vanishes") {
  for (const auto& s : enumerate_by_genus(9)) {
    const auto t = build_table(s);
    CHECK(f_length(t, t.reduction_number() - 1, 1) == 0);
  }
}

TEST_CASE("blow-up") {
  auto b = blowup(table_of({5, 6, 7}));
  CHECK(b.blowup_semigroup == from_generators({1}));
  CHECK(b.micro == V{1, 1, 2, 2});

  b = blowup(table_of({5, 6, 9}));
  CHECK(b.blowup_semigroup == from_generators({1}));
  CHECK(b.micro == V{1, 2, 3, 1});

  const V gens{4, 6, 7};
  const auto t = build_table(from_generators(gens));
  b = blowup(t);
  CHECK(b.blowup_semigroup == from_generators({2, 3}));

  // Ap(S', e) from rM - re computed on explicit sets.
  const Int r = t.reduction_number();
  auto ap = oracle::apery(oracle::power_ideal(gens, r, 200), 4);
  for (auto& v : ap) v -= r * 4;
  CHECK(ap == b.apery_wrt_e);
  CHECK(oracle::apery(oracle::semigroup_set({2, 3}, 100), 4) == b.apery_wrt_e);
}

TEST_CASE("beta, gamma, rho and torsion on the worked examples") {
  for (const auto& ex : worked::examples()) {
    INFO("<" << join_ints(ex.generators, ",") << ">");
    const auto t = build_table(from_generators(ex.generators));
    CHECK(beta(t) == ex.beta);
    CHECK(gamma(t) == ex.gamma);
    if (ex.rho >= 0) CHECK(rho(t) == ex.rho);
  }
  CHECK(torsion_length(table_of({5, 6, 7})) == 0);
  CHECK(torsion_length(table_of({5, 6, 9})) == 0);
  CHECK(torsion_length(table_of({5, 6, 13})) == 2);
  CHECK(torsion_length(table_of({5, 6, 14})) == 2);
  for (Int e = 2; e <= 9; ++e) CHECK(rho(table_of({e, e + 1})) == e * (e - 1) / 2);
}

TEST_CASE("Cohen-Macaulay verdict") {
  auto v = is_cm(table_of({5, 6, 7}));
  CHECK(v.cohen_macaulay);
  CHECK(v.criteria.size() == 5);
  CHECK(v.unanimous());

  v = is_cm(table_of({5, 6, 13}));
  CHECK_FALSE(v.cohen_macaulay);
  CHECK(v.unanimous());

  v = is_cm(table_of({6, 7, 8, 9, 10, 11}));
  CHECK(v.cohen_macaulay);
  CHECK(gamma(table_of({6, 7, 8, 9, 10, 11})) == V{5});
}

TEST_CASE("identity suite") {
  for (const auto& ex : worked::examples()) {
    const auto rep = analyze(from_generators(ex.generators));
    INFO("<" << join_ints(ex.generators, ",") << ">");
    CHECK(rep.all_pass());
    CHECK(rep.first_failure() == nullptr);
  }

  const auto rep = analyze(from_generators({5, 6, 9, 13}));
  bool g_moves = false;
  for (Int i = 1; i <= rep.r; ++i) g_moves = g_moves || rep.g[i] != rep.g[i - 1];
  CHECK(g_moves);

  const auto trivial = analyze(from_generators({1}));
  CHECK(trivial.all_pass());
  CHECK(trivial.r == 0);
  for (const auto& id : trivial.identities)
    if (id.vacuous) CHECK(id.pass);
}
