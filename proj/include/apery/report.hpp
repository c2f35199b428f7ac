#pragma once

// Full invariant report for one semigroup, including the executable identity
// suite. analyze() never throws on a route disagreement; it records it as a
// failing identity so that a survey can name the offender.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "apery/apery_table.hpp"
#include "apery/invariants.hpp"
#include "apery/semigroup.hpp"

namespace apery {

enum class Relation { Equal, LessEqual, Holds };

inline std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::Equal: return "==";
    case Relation::LessEqual: return "<=";
    case Relation::Holds: return "holds";
  }
  return "?";
}

/// One evaluated identity. For Relation::Holds, lhs/rhs are 1/1 on success
/// and 1/0 on failure.
struct IdentityResult {
  std::string name;
  std::vector<Int> index;
  Int lhs = 0;
  Int rhs = 0;
  Relation relation = Relation::Equal;
  bool vacuous = false;
  bool pass = false;
};

struct InvariantReport {
  Int e = 0;
  Int b = 0;
  Int r = 0;
  Int rho = 0;
  Int frobenius = 0;
  Int genus = 0;
  std::vector<Int> hilbert;  ///< H(0..r)
  std::vector<Int> alpha;    ///< α_0..α_r
  PairCounts alpha_torsion;  ///< α_{i,j}, nonzero entries only
  std::vector<Int> beta;     ///< β_1..β_r
  std::vector<Int> gamma;    ///< γ_1..γ_r
  PairCounts f;              ///< f_{i,j} over 1 ≤ i ≤ r-1, 1 ≤ j ≤ r-i
  std::vector<Int> g;        ///< g_0..g_r
  std::vector<Int> nu;       ///< ν_1..ν_r
  Int torsion_length = 0;
  CmVerdict cm;
  std::vector<IdentityResult> identities;

  bool all_pass() const {
    return std::all_of(identities.begin(), identities.end(), [](const IdentityResult& r) { return r.pass; });
  }
  const IdentityResult* first_failure() const {
    for (const auto& id : identities)
      if (!id.pass) return &id;
    return nullptr;
  }
};

namespace detail {

class IdentityLog {
 public:
  void eq(std::string name, std::vector<Int> index, Int lhs, Int rhs) {
    out_.push_back({std::move(name), std::move(index), lhs, rhs, Relation::Equal, false, lhs == rhs});
  }
  void le(std::string name, std::vector<Int> index, Int lhs, Int rhs) {
    out_.push_back({std::move(name), std::move(index), lhs, rhs, Relation::LessEqual, false, lhs <= rhs});
  }
  void holds(std::string name, std::vector<Int> index, bool ok) {
    out_.push_back({std::move(name), std::move(index), 1, ok ? 1 : 0, Relation::Holds, false, ok});
  }
  void vacuous(std::string name) {
    out_.push_back({std::move(name), {}, 0, 0, Relation::Equal, true, true});
  }
  /// Per-index family over lo..hi; logs a vacuous pass when the range is empty.
  template <class F>
  void family(const std::string& name, Int lo, Int hi, F&& each) {
    if (lo > hi) {
      vacuous(name);
      return;
    }
    for (Int i = lo; i <= hi; ++i) each(i);
  }
  std::vector<IdentityResult> take() { return std::move(out_); }

 private:
  std::vector<IdentityResult> out_;
};

inline Int at1(const std::vector<Int>& one_based, Int i) { return one_based[static_cast<std::size_t>(i - 1)]; }
inline Int at0(const std::vector<Int>& zero_based, Int i) { return zero_based[static_cast<std::size_t>(i)]; }

inline Int torsion_row_sum(const PairCounts& torsion, Int i, Int j_max) {
  Int s = 0;
  for (Int j = 1; j <= j_max; ++j) {
    auto it = torsion.find({i, j});
    if (it != torsion.end()) s += it->second;
  }
  return s;
}

}  // namespace detail

inline InvariantReport analyze(const NumericalSemigroup& s) {
  const auto t = build_table(s);
  const Int e = s.multiplicity();
  const Int r = t.reduction_number();
  const auto columns = decompose_all(t);

  InvariantReport rep;
  rep.e = e;
  rep.b = s.embedding_dimension();
  rep.r = r;
  const auto fg = frobenius_and_genus(s);
  rep.frobenius = fg.frobenius;
  rep.genus = fg.genus;
  rep.hilbert = hilbert_function(t);

  const auto alpha_data = alpha_from_table(t);
  rep.alpha = alpha_data.alpha;
  rep.alpha_torsion = alpha_data.torsion;
  const auto a_routes = alpha_routes(t);
  const auto b_routes = beta_routes(t);
  const auto g_routes = gamma_routes(t);
  const auto rho_r = rho_routes(t);
  const auto tor_r = torsion_routes(t);
  rep.beta = b_routes.blowup;
  rep.gamma = g_routes.table;
  rep.rho = rho_r.micro;
  rep.torsion_length = tor_r.table;

  for (Int i = 1; i <= r - 1; ++i)
    for (Int j = 1; j <= r - i; ++j) rep.f[{i, j}] = f_length(t, i, j);
  for (Int i = 0; i <= r; ++i) rep.g.push_back(g_length(t, i));
  for (Int i = 1; i <= r; ++i) rep.nu.push_back(nu_length(t, i));

  rep.cm = detail::cm_criteria(t, rep.alpha, rep.beta, rep.gamma, rep.rho);
  const bool cm = rep.cm.cohen_macaulay;

  using detail::at0;
  using detail::at1;
  detail::IdentityLog log;
  const auto H = [&](Int n) { return hilbert(t, n); };
  const Int sum_i_alpha = [&] {
    Int v = 0;
    for (Int i = 1; i <= r; ++i) v += i * at0(rep.alpha, i);
    return v;
  }();
  const Int sum_i_beta = detail::weighted_sum(rep.beta);
  const Int sum_i_gamma = detail::weighted_sum(rep.gamma);

  // Route agreement.
  log.family("alpha_route_colon", 1, r, [&](Int i) { log.eq("alpha_route_colon", {i}, at0(a_routes.table, i), at0(a_routes.mu_f, i)); });
  log.family("alpha_route_quotient", 1, r, [&](Int i) { log.eq("alpha_route_quotient", {i}, at0(a_routes.table, i), at0(a_routes.quotient, i)); });
  log.family("alpha_route_difference", 1, r, [&](Int i) { log.eq("alpha_route_difference", {i}, at0(a_routes.table, i), at0(a_routes.difference, i)); });
  log.family("beta_route_landings", 1, r, [&](Int i) { log.eq("beta_route_landings", {i}, at1(b_routes.blowup, i), at1(b_routes.landings, i)); });
  log.family("beta_route_colon", 1, r, [&](Int i) { log.eq("beta_route_colon", {i}, at1(b_routes.blowup, i), at1(b_routes.colon, i)); });
  log.family("beta_route_definition", 1, r, [&](Int i) { log.eq("beta_route_definition", {i}, at1(b_routes.blowup, i), at1(b_routes.definition, i)); });
  log.family("beta_route_x_power", 1, r, [&](Int i) { log.eq("beta_route_x_power", {i}, at1(b_routes.blowup, i), at1(b_routes.elias, i)); });
  log.family("gamma_route_quotient", 1, r, [&](Int i) { log.eq("gamma_route_quotient", {i}, at1(g_routes.table, i), at1(g_routes.quotient, i)); });
  log.eq("rho_route_hilbert", {}, rho_r.micro, rho_r.hilbert);
  log.eq("rho_route_length", {}, rho_r.micro, rho_r.length);
  log.eq("torsion_route_colon", {}, tor_r.table, tor_r.colon);

  // Blow-up.
  const auto bl = detail::blowup_unchecked(t);
  log.holds("blowup_matches_generated", {}, bl.blowup_semigroup == detail::generated_blowup(s));
  log.holds("blowup_apery_set", {}, detail::is_apery_set_of(bl.blowup_semigroup, bl.apery_wrt_e, e));
  for (std::size_t c = 0; c < bl.micro.size(); ++c) {
    const Int idx = static_cast<Int>(c + 1);
    log.eq("micro_matches_column", {idx}, bl.micro[c], columns[c].a);
    log.le("micro_at_most_r", {idx}, bl.micro[c], r);
  }
  const auto a_prime = detail::blowup_ideal(t, bl);
  for (Int n = 0; n <= r; ++n) {
    const auto product = minkowski_sum(t.power(n), a_prime);
    log.holds("power_extends_to_x_power", {n}, product == a_prime.times_x(n));
    log.eq("blowup_quotient_length", {n}, length_quotient(a_prime, product), n * e);
  }
  log.holds("top_power_is_x_power_of_blowup", {}, t.power(r) == a_prime.times_x(r));

  // Landing bookkeeping against first-principles definitions.
  for (const auto& col : columns) {
    const auto w = t.column(col.column_index);
    Int b_def = 0;
    while (b_def + 1 <= r && w[b_def + 1] == w[0]) ++b_def;
    Int d_def = r;
    while (d_def > 0 && w[d_def] != w[d_def - 1]) --d_def;
    log.eq("landing_b_definition", {col.column_index}, col.b, b_def);
    log.eq("landing_d_definition", {col.column_index}, col.d, d_def);
    Int sum_c = 0, sum_k = 0;
    for (const auto& ts : col.torsion) sum_c += ts.order;
    for (std::size_t j = 1; j < col.landings.size(); ++j) sum_k += col.landings[j].length();
    log.eq("landing_d_is_a_plus_orders", {col.column_index}, col.d, col.a + sum_c);
    log.eq("landing_a_is_b_plus_lengths", {col.column_index}, col.a, col.b + sum_k);
  }

  // Sums.
  log.eq("alpha_zero", {}, at0(rep.alpha, 0), 1);
  log.eq("alpha_sum", {}, detail::sum(rep.alpha) - 1, e - 1);
  log.eq("beta_sum", {}, detail::sum(rep.beta), e - 1);
  log.eq("gamma_sum", {}, detail::sum(rep.gamma), e - 1);
  log.eq("beta_weighted_sum", {}, sum_i_beta, rep.rho);
  log.eq("alpha_weighted_sum", {}, sum_i_alpha, rep.rho + rep.torsion_length);
  Int overlap = 0;
  for (Int i = 1; i <= r - 1; ++i) overlap += x_overlap_length(t, i);
  log.eq("gamma_weighted_sum", {}, sum_i_gamma, rep.rho - overlap);
  Int landing_lengths = 0;
  for (const auto& col : columns) landing_lengths += col.true_landing_length();
  log.eq("true_landing_length_total", {}, landing_lengths, overlap);
  log.le("weighted_gamma_le_beta", {}, sum_i_gamma, sum_i_beta);
  log.le("weighted_beta_le_alpha", {}, sum_i_beta, sum_i_alpha);
  log.eq("weighted_gamma_beta_equal_iff_cm", {}, sum_i_gamma == sum_i_beta, cm);
  log.eq("weighted_beta_alpha_equal_iff_cm", {}, sum_i_beta == sum_i_alpha, cm);

  // Correction terms.
  log.eq("g_zero_vanishes", {}, at0(rep.g, 0), 0);
  log.eq("g_top_vanishes", {}, at0(rep.g, r), 0);
  log.family("beta_alpha_correction", 1, r, [&](Int i) {
    log.eq("beta_alpha_correction", {i}, at1(rep.beta, i) + at0(rep.g, i - 1), at0(rep.alpha, i) + at0(rep.g, i));
  });
  log.family("alpha_gamma_correction", 1, r, [&](Int i) {
    log.eq("alpha_gamma_correction", {i}, at0(rep.alpha, i) + detail::torsion_row_sum(rep.alpha_torsion, i, r - i - 1),
           at1(rep.gamma, i) + at1(rep.nu, i));
  });
  log.family("beta_gamma_correction", 1, r, [&](Int i) {
    log.eq("beta_gamma_correction", {i}, at1(rep.beta, i) + detail::torsion_row_sum(rep.alpha_torsion, i, r - i - 1),
           at1(rep.gamma, i) + at1(rep.nu, i) + at0(rep.g, i) - at0(rep.g, i - 1));
  });
  if (r >= 2) {
    for (Int k = 1; k <= r - 1; ++k) {
      for (Int l = 1; l <= r - k; ++l) {
        Int total = 0;
        for (Int i = 1; i <= k; ++i)
          for (Int j = k - i + 1; j <= k - i + l; ++j) {
            auto it = rep.alpha_torsion.find({i, j});
            if (it != rep.alpha_torsion.end()) total += it->second;
          }
        log.eq("f_counts_torsion", {k, l}, rep.f.at({k, l}), total);
      }
    }
    log.eq("f_last_vanishes", {}, rep.f.at({r - 1, 1}), 0);
  } else {
    log.vacuous("f_counts_torsion");
    log.vacuous("f_last_vanishes");
  }
  log.family("top_torsion_vanishes", 1, r - 1, [&](Int i) {
    auto it = rep.alpha_torsion.find({i, r - i});
    log.eq("top_torsion_vanishes", {i}, it == rep.alpha_torsion.end() ? 0 : it->second, 0);
  });
  bool torsion_in_range = true;
  for (const auto& [key, count] : rep.alpha_torsion)
    torsion_in_range = torsion_in_range && key.first >= 1 && key.second >= 1 && key.first + key.second <= r - 1;
  log.holds("torsion_summands_in_range", {}, torsion_in_range);

  // Hilbert function.
  log.family("hilbert_lower_bound", 0, r, [&](Int n) { log.le("hilbert_lower_bound", {n}, n + 1, H(n)); });
  log.eq("hilbert_at_r", {}, H(r), e);
  log.eq("hilbert_at_one", {}, H(1), rep.b);
  log.le("reduction_number_bound", {}, r, e - 1);
  log.eq("rho_from_x_quotients", {}, rep.rho, [&] {
    Int v = e - 1;
    for (Int i = 1; i <= r - 1; ++i) v += length_quotient(t.power(i + 1), t.power(i).times_x(1));
    return r == 0 ? 0 : v;
  }());

  // Cohen-Macaulay consequences.
  log.holds("cm_criteria_unanimous", {}, rep.cm.unanimous());
  log.eq("torsion_vanishes_iff_cm", {}, rep.torsion_length == 0, cm);
  if (r <= 2) log.holds("small_reduction_number_is_cm", {}, cm);
  if (cm) {
    log.family("cm_families_equal_hilbert_steps", 1, r, [&](Int i) {
      const Int step = H(i) - H(i - 1);
      log.eq("cm_alpha_is_hilbert_step", {i}, at0(rep.alpha, i), step);
      log.eq("cm_beta_is_hilbert_step", {i}, at1(rep.beta, i), step);
      log.eq("cm_gamma_is_hilbert_step", {i}, at1(rep.gamma, i), step);
      log.le("cm_alpha_positive", {i}, 1, at0(rep.alpha, i));
    });
    Int corrections = 0;
    for (const auto& [key, v] : rep.f) corrections += v;
    for (Int v : rep.g) corrections += v;
    for (Int v : rep.nu) corrections += v;
    log.eq("cm_corrections_vanish", {}, corrections, 0);
  }
  {
    auto matches_steps = [&](auto&& value) {
      for (Int i = 1; i <= r; ++i)
        if (value(i) != H(i) - H(i - 1)) return false;
      return true;
    };
    const bool a_mu = matches_steps([&](Int i) { return at0(rep.alpha, i); });
    const bool b_mu = matches_steps([&](Int i) { return at1(rep.beta, i); });
    const bool g_mu = matches_steps([&](Int i) { return at1(rep.gamma, i); });
    log.holds("alpha_hilbert_steps_imply_cm", {}, !a_mu || cm);
    log.holds("beta_hilbert_steps_imply_cm", {}, !b_mu || cm);
    log.holds("gamma_hilbert_steps_imply_cm", {}, !g_mu || cm);
  }

  // Closed forms for extremal embedding dimensions.
  if (e >= 2 && rep.b == 2) {
    log.eq("two_generator_reduction_number", {}, r, e - 1);
    log.eq("two_generator_rho", {}, rep.rho, e * (e - 1) / 2);
    log.holds("two_generator_cm", {}, cm);
    for (Int i = 1; i <= r; ++i) {
      log.eq("two_generator_alpha", {i}, at0(rep.alpha, i), 1);
      log.eq("two_generator_beta", {i}, at1(rep.beta, i), 1);
      log.eq("two_generator_gamma", {i}, at1(rep.gamma, i), 1);
    }
  }
  if (e >= 2 && rep.b == e) {
    log.eq("minimal_multiplicity_reduction_number", {}, r, 1);
    log.holds("minimal_multiplicity_cm", {}, cm);
    log.eq("minimal_multiplicity_gamma", {}, at1(rep.gamma, 1), e - 1);
    log.eq("minimal_multiplicity_beta", {}, at1(rep.beta, 1), e - 1);
    log.eq("minimal_multiplicity_alpha", {}, at0(rep.alpha, 1), e - 1);
    log.eq("minimal_multiplicity_rho", {}, rep.rho, e - 1);
  }
  if (e >= 3 && rep.b == e - 1) {
    log.le("almost_minimal_square_not_in_x", {}, 1, length_quotient(ideal_union(t.power(2), detail::x_ideal(t)), detail::x_ideal(t)));
    for (Int n = 1; n <= r + 1; ++n)
      log.eq("almost_minimal_hilbert", {n}, H(n), n < r ? rep.b : rep.b + 1);
    log.eq("almost_minimal_cm_iff_r2", {}, cm, r == 2);
    if (r == 2) {
      log.holds("almost_minimal_r2_tuples", {}, rep.alpha == std::vector<Int>{1, e - 2, 1} &&
                                                    rep.beta == std::vector<Int>{e - 2, 1} &&
                                                    rep.gamma == std::vector<Int>{e - 2, 1});
    }
    if (r == 3) {
      log.holds("almost_minimal_r3_alpha", {}, rep.alpha == std::vector<Int>{1, e - 3, 1, 1});
      log.holds("almost_minimal_r3_beta", {}, rep.beta == std::vector<Int>{e - 3, 2, 0});
      log.holds("almost_minimal_r3_gamma", {}, rep.gamma == std::vector<Int>{e - 2, 1, 0});
    }
    if (r >= 3) {
      std::vector<Int> expected_gamma(static_cast<std::size_t>(r), 0);
      expected_gamma[0] = e - 2;
      expected_gamma[1] = 1;
      log.holds("almost_minimal_gamma", {}, rep.gamma == expected_gamma);
      log.eq("almost_minimal_alpha_top", {}, at0(rep.alpha, r), 1);
      log.eq("almost_minimal_alpha_below_top", {}, at0(rep.alpha, r - 1), 1);
      log.eq("almost_minimal_beta_top", {}, at1(rep.beta, r), 0);
    }
  }

  rep.identities = log.take();
  return rep;
}

inline std::vector<IdentityResult> verify_identities(const NumericalSemigroup& s) { return analyze(s).identities; }

}  // namespace apery
