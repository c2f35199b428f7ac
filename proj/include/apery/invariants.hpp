#pragma once

// Tangent-cone invariants (alpha), micro-invariants (beta) and Apery
// invariants (gamma) of a numerical semigroup ring k[[S]], plus the colon
// lengths f, g, nu that measure how far the tangent cone is from being
// Cohen-Macaulay.
//
// Every ring-level ideal is realized by its value set: m^n by nM, xA by
// e + S, the first neighborhood ring A' by its value semigroup S'. Each
// invariant is computed along at least two independent routes; the public
// entry points throw ErrorKind::Inconsistent when routes disagree, while
// verify_identities() reports every comparison without throwing.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "apery/apery_table.hpp"
#include "apery/semigroup.hpp"

namespace apery {

/// (shift i, order j) -> multiplicity.
using PairCounts = std::map<std::pair<Int, Int>, Int>;

// ---------------------------------------------------------------------------
// Colon machinery shared by all routes.

namespace detail {

inline SemigroupIdeal x_ideal(const AperyTable& t) {
  return principal_ideal(t.semigroup(), t.multiplicity());
}

/// (m^r : x^k). Negative k multiplies instead: (m^r : x^{-1}) = x m^r.
inline SemigroupIdeal top_colon(const AperyTable& t, Int k) {
  const Int r = t.reduction_number();
  if (k < 0) return t.power(r - k);
  return colon_by_power(t.semigroup(), t.power(r), k);
}

inline Int sum(const std::vector<Int>& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

inline Int weighted_sum(const std::vector<Int>& one_based) {
  Int s = 0;
  for (std::size_t i = 0; i < one_based.size(); ++i) s += static_cast<Int>(i + 1) * one_based[i];
  return s;
}

/// Histogram of values in 1..r, returned one-based (index 0 holds value 1).
inline std::vector<Int> count_values(const std::vector<Int>& values, Int r) {
  std::vector<Int> out(static_cast<std::size_t>(r), 0);
  for (Int v : values) {
    if (v < 1 || v > r) throw Error(ErrorKind::Inconsistent, "column invariant " + std::to_string(v) + " outside 1..r");
    ++out[static_cast<std::size_t>(v - 1)];
  }
  return out;
}

inline void require_equal(const std::vector<Int>& a, const std::vector<Int>& b, const std::string& what) {
  if (a != b) throw Error(ErrorKind::Inconsistent, what + ": routes disagree");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hilbert function.

/// μ(m^n): the number of classes that step by e between rows n and n+1.
inline Int hilbert(const AperyTable& t, Int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative Hilbert index");
  const Int e = t.multiplicity();
  if (n > t.reduction_number()) return e;
  const auto lower = t.power(n);
  const auto upper = t.power(n + 1);
  Int steps = 0;
  for (Int c = 0; c < e; ++c) steps += upper.apery()[c] == lower.apery()[c] + e ? 1 : 0;
  return steps;
}

inline std::vector<Int> hilbert_function(const AperyTable& t) {
  std::vector<Int> out;
  for (Int n = 0; n <= t.reduction_number(); ++n) out.push_back(hilbert(t, n));
  return out;
}

// ---------------------------------------------------------------------------
// Colon lengths.

/// f_{i,j} = λ((m^i ∩ (m^{i+j+1} : x^j)) / m^{i+1}); zero outside
/// 1 ≤ i ≤ r-1, 1 ≤ j ≤ r-i.
inline Int f_length(const AperyTable& t, Int i, Int j) {
  const Int r = t.reduction_number();
  if (i < 1 || i > r - 1 || j < 1 || j > r - i) return 0;
  const auto inner = ideal_intersect(t.power(i), colon_by_power(t.semigroup(), t.power(i + j + 1), j));
  return length_quotient(inner, t.power(i + 1));
}

/// g_i = λ((m^r : x^{r-i}) / (m^i + (m^r : x^{r-i-1}))), 0 ≤ i ≤ r, m^0 = A.
inline Int g_length(const AperyTable& t, Int i) {
  const Int r = t.reduction_number();
  if (i < 0 || i > r) throw Error(ErrorKind::InvalidInput, "g index outside 0..r");
  const auto outer = detail::top_colon(t, r - i);
  const auto inner = ideal_union(t.power(i), detail::top_colon(t, r - i - 1));
  return length_quotient(outer, inner);
}

/// ν_i = λ((m^i ∩ xA + m^{i+1}) / (x m^{i-1} + m^{i+1})), 1 ≤ i ≤ r.
inline Int nu_length(const AperyTable& t, Int i) {
  const Int r = t.reduction_number();
  if (i < 1 || i > r) throw Error(ErrorKind::InvalidInput, "nu index outside 1..r");
  const auto next = t.power(i + 1);
  const auto outer = ideal_union(ideal_intersect(t.power(i), detail::x_ideal(t)), next);
  const auto inner = ideal_union(t.power(i - 1).times_x(1), next);
  return length_quotient(outer, inner);
}

/// λ((m^{i+1} ∩ xA) / x m^i).
inline Int x_overlap_length(const AperyTable& t, Int i) {
  return length_quotient(ideal_intersect(t.power(i + 1), detail::x_ideal(t)), t.power(i).times_x(1));
}

// ---------------------------------------------------------------------------
// Tangent-cone invariants.

struct AlphaData {
  std::vector<Int> alpha;  ///< α_0..α_r
  PairCounts torsion;      ///< α_{i,j}
};

/// Free-summand shifts d and torsion summands of every column.
inline AlphaData alpha_from_table(const AperyTable& t) {
  const Int r = t.reduction_number();
  AlphaData out;
  out.alpha.assign(static_cast<std::size_t>(r + 1), 0);
  out.alpha[0] = 1;
  for (const auto& col : decompose_all(t)) {
    ++out.alpha[static_cast<std::size_t>(col.d)];
    for (const auto& ts : col.torsion) ++out.torsion[{ts.shift, ts.order}];
  }
  return out;
}

struct AlphaRoutes {
  std::vector<Int> table;       ///< landing shifts
  std::vector<Int> mu_f;        ///< μ(m^i) − f_{i,r−i} − μ(m^{i−1}) + f_{i−1,r−i+1}
  std::vector<Int> quotient;    ///< λ(m^i / (m^i ∩ (m^r:x^{r−i−1}) + x m^{i−1}))
  std::vector<Int> difference;  ///< λ(m^i/(m^i ∩ C_{r−i−1})) − λ(m^{i−1}/(m^{i−1} ∩ C_{r−i}))
};

inline AlphaRoutes alpha_routes(const AperyTable& t) {
  const Int r = t.reduction_number();
  AlphaRoutes out;
  out.table = alpha_from_table(t).alpha;
  for (auto* v : {&out.mu_f, &out.quotient, &out.difference}) {
    v->assign(static_cast<std::size_t>(r + 1), 0);
    (*v)[0] = 1;
  }
  for (Int i = 1; i <= r; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (i == r) {
      const Int top = hilbert(t, r) - hilbert(t, r - 1);
      out.mu_f[ui] = top;
      out.quotient[ui] = length_quotient(t.power(r), t.power(r - 1).times_x(1));
      out.difference[ui] = top;
      continue;
    }
    out.mu_f[ui] = hilbert(t, i) - f_length(t, i, r - i) - hilbert(t, i - 1) + f_length(t, i - 1, r - i + 1);

    const auto mi = t.power(i);
    const auto below = ideal_intersect(mi, detail::top_colon(t, r - i - 1));
    out.quotient[ui] = length_quotient(mi, ideal_union(below, t.power(i - 1).times_x(1)));

    const auto prev = t.power(i - 1);
    out.difference[ui] = length_quotient(mi, below) -
                         length_quotient(prev, ideal_intersect(prev, detail::top_colon(t, r - i)));
  }
  return out;
}

/// α_0..α_r through the colon-length formula; checked against the table.
inline std::vector<Int> alpha_from_colon(const AperyTable& t) {
  auto routes = alpha_routes(t);
  detail::require_equal(routes.table, routes.mu_f, "alpha (table vs colon)");
  return routes.mu_f;
}

// ---------------------------------------------------------------------------
// Blow-up and micro-invariants.

struct BlowupData {
  NumericalSemigroup blowup_semigroup;  ///< S', value semigroup of A'
  std::vector<Int> apery_wrt_e;         ///< Ap(S', e) by class
  std::vector<Int> micro;               ///< a_1..a_{e-1}
};

namespace detail {

inline BlowupData blowup_unchecked(const AperyTable& t) {
  const Int e = t.multiplicity();
  const Int r = t.reduction_number();
  std::vector<Int> ap(t.row(r).begin(), t.row(r).end());
  for (auto& v : ap) v -= r * e;
  std::vector<Int> gens(ap.begin() + 1, ap.end());
  gens.push_back(e);
  BlowupData out{from_generators(gens), ap, {}};
  for (Int c = 1; c < e; ++c) out.micro.push_back((t.semigroup().kunz()[c] - ap[c]) / e);
  return out;
}

/// ⟨n_1, n_2 − n_1, …, n_b − n_1⟩.
inline NumericalSemigroup generated_blowup(const NumericalSemigroup& s) {
  const auto g = s.generators();
  std::vector<Int> gens{g[0]};
  for (std::size_t k = 1; k < g.size(); ++k) gens.push_back(g[k] - g[0]);
  return from_generators(gens);
}

/// A' as a relative ideal of S.
inline SemigroupIdeal blowup_ideal(const AperyTable& t, const BlowupData& b) {
  return SemigroupIdeal::from_apery(t.semigroup(), b.apery_wrt_e);
}

inline bool is_apery_set_of(const NumericalSemigroup& s, const std::vector<Int>& ap, Int e) {
  for (Int c = 0; c < e; ++c) {
    if (mod(ap[c], e) != c || !s.contains(ap[c]) || s.contains(ap[c] - e)) return false;
  }
  return true;
}

}  // namespace detail

/// A' from m^r = x^r A', cross-checked against the generated blow-up
/// semigroup and the table's per-column micro-invariants.
inline BlowupData blowup(const AperyTable& t) {
  auto out = detail::blowup_unchecked(t);
  if (!(out.blowup_semigroup == detail::generated_blowup(t.semigroup())))
    throw Error(ErrorKind::Inconsistent, "blow-up semigroup differs from <n1, n2-n1, ...>");
  if (!detail::is_apery_set_of(out.blowup_semigroup, out.apery_wrt_e, t.multiplicity()))
    throw Error(ErrorKind::Inconsistent, "shifted top row is not Ap(S', e)");
  std::vector<Int> from_columns;
  for (const auto& col : decompose_all(t)) from_columns.push_back(col.a);
  detail::require_equal(out.micro, from_columns, "micro-invariants (blow-up vs landings)");
  return out;
}

struct BetaRoutes {
  std::vector<Int> blowup;      ///< counts of a_i from S'
  std::vector<Int> landings;    ///< counts of a from the landing decomposition
  std::vector<Int> colon;       ///< lengths of successive (m^r : x^k)
  std::vector<Int> definition;  ///< λ((A + x^{i−1}A')/(A + x^iA')) differences
  std::vector<Int> elias;       ///< (x^r A + m^{r+i}) differences
};

inline BetaRoutes beta_routes(const AperyTable& t) {
  const Int r = t.reduction_number();
  const Int e = t.multiplicity();
  const auto& s = t.semigroup();
  BetaRoutes out;

  const auto b = detail::blowup_unchecked(t);
  out.blowup = detail::count_values(b.micro, r);
  std::vector<Int> column_a;
  for (const auto& col : decompose_all(t)) column_a.push_back(col.a);
  out.landings = detail::count_values(column_a, r);

  // A + x^k A' as a relative ideal of S.
  auto a_plus = [&](Int k) {
    std::vector<Int> v(static_cast<std::size_t>(e));
    for (Int c = 0; c < e; ++c) v[c] = std::min(s.kunz()[c], b.apery_wrt_e[c] + k * e);
    return SemigroupIdeal::from_apery(s, std::move(v));
  };
  auto step = [&](Int k) { return length_quotient(a_plus(k - 1), a_plus(k)); };

  const auto xr = principal_ideal(s, r * e);
  auto elias_step = [&](Int k) {
    return length_quotient(ideal_union(xr, t.power(r + k - 1)), ideal_union(xr, t.power(r + k)));
  };
  auto colon_step = [&](Int k) {
    return length_quotient(detail::top_colon(t, k), detail::top_colon(t, k - 1));
  };

  for (Int i = 1; i <= r; ++i) {
    out.definition.push_back(step(i) - step(i + 1));
    out.elias.push_back(elias_step(i) - elias_step(i + 1));
    if (i < r)
      out.colon.push_back(colon_step(r - i) - colon_step(r - i + 1));
    else
      out.colon.push_back(hilbert(t, r) - length_quotient(detail::top_colon(t, 1), t.power(r)));
  }
  return out;
}

/// β_1..β_r; all routes must agree.
inline std::vector<Int> beta(const AperyTable& t) {
  auto routes = beta_routes(t);
  detail::require_equal(routes.blowup, routes.landings, "beta (blow-up vs landings)");
  detail::require_equal(routes.blowup, routes.colon, "beta (blow-up vs colon)");
  detail::require_equal(routes.blowup, routes.definition, "beta (blow-up vs definition)");
  detail::require_equal(routes.blowup, routes.elias, "beta (blow-up vs x^r A)");
  return routes.blowup;
}

// ---------------------------------------------------------------------------
// Apery invariants.

struct GammaRoutes {
  std::vector<Int> table;     ///< counts of landing-0 ends b
  std::vector<Int> quotient;  ///< λ((m^i + xA)/(m^{i+1} + xA))
};

inline GammaRoutes gamma_routes(const AperyTable& t) {
  const Int r = t.reduction_number();
  GammaRoutes out;
  std::vector<Int> ends;
  for (const auto& col : decompose_all(t)) ends.push_back(col.b);
  out.table = detail::count_values(ends, r);
  if (r > 0) {
    const auto x = detail::x_ideal(t);
    for (Int i = 1; i <= r; ++i)
      out.quotient.push_back(length_quotient(ideal_union(t.power(i), x), ideal_union(t.power(i + 1), x)));
  }
  return out;
}

/// γ_1..γ_r; table and quotient routes must agree.
inline std::vector<Int> gamma(const AperyTable& t) {
  auto routes = gamma_routes(t);
  detail::require_equal(routes.table, routes.quotient, "gamma (table vs quotient)");
  return routes.table;
}

// ---------------------------------------------------------------------------
// ρ and torsion.

struct RhoRoutes {
  Int hilbert = 0;  ///< r μ(m^r) − Σ_{n<r} μ(m^n)
  Int micro = 0;    ///< Σ a_i
  Int length = 0;   ///< λ(A'/A)
};

inline RhoRoutes rho_routes(const AperyTable& t) {
  const Int r = t.reduction_number();
  RhoRoutes out;
  out.hilbert = r * hilbert(t, r);
  for (Int n = 0; n < r; ++n) out.hilbert -= hilbert(t, n);
  const auto b = detail::blowup_unchecked(t);
  out.micro = detail::sum(b.micro);
  out.length = length_quotient(detail::blowup_ideal(t, b), SemigroupIdeal::unit(t.semigroup()));
  return out;
}

inline Int rho(const AperyTable& t) {
  const auto routes = rho_routes(t);
  if (routes.hilbert != routes.micro || routes.micro != routes.length)
    throw Error(ErrorKind::Inconsistent, "rho routes disagree");
  return routes.hilbert;
}

struct TorsionRoutes {
  Int colon = 0;  ///< Σ_{i=1}^{r-1} λ((m^i ∩ (m^{r+1}:x^{r−i}))/m^{i+1})
  Int table = 0;  ///< Σ torsion orders over all true landings
};

inline TorsionRoutes torsion_routes(const AperyTable& t) {
  const Int r = t.reduction_number();
  TorsionRoutes out;
  for (Int i = 1; i <= r - 1; ++i) {
    const auto inner = ideal_intersect(t.power(i), colon_by_power(t.semigroup(), t.power(r + 1), r - i));
    out.colon += length_quotient(inner, t.power(i + 1));
  }
  for (const auto& col : decompose_all(t)) out.table += col.torsion_length();
  return out;
}

/// λ(T(G(m))), the length of the torsion of the tangent cone over F(x).
inline Int torsion_length(const AperyTable& t) {
  const auto routes = torsion_routes(t);
  if (routes.colon != routes.table) throw Error(ErrorKind::Inconsistent, "torsion length routes disagree");
  return routes.colon;
}

// ---------------------------------------------------------------------------
// Cohen-Macaulay verdict.

struct CmCriterion {
  std::string name;
  bool holds = false;
};

struct CmVerdict {
  bool cohen_macaulay = false;
  std::vector<CmCriterion> criteria;

  bool unanimous() const {
    return std::all_of(criteria.begin(), criteria.end(),
                       [&](const CmCriterion& c) { return c.holds == criteria.front().holds; });
  }
};

namespace detail {

inline CmVerdict cm_criteria(const AperyTable& t, const std::vector<Int>& alpha, const std::vector<Int>& beta,
                             const std::vector<Int>& gamma, Int rho_value) {
  const Int r = t.reduction_number();
  CmVerdict out;

  bool no_true_landing = true;
  for (const auto& col : decompose_all(t)) no_true_landing = no_true_landing && col.true_landings() == 0;
  out.criteria.push_back({"no_true_landing", no_true_landing});

  Int weighted = 0;
  for (Int i = 1; i <= r; ++i) weighted += i * alpha[static_cast<std::size_t>(i)];
  out.criteria.push_back({"weighted_alpha_equals_rho", weighted == rho_value});

  bool families_agree = true;
  for (Int i = 1; i <= r; ++i) {
    const auto u = static_cast<std::size_t>(i);
    families_agree = families_agree && alpha[u] == beta[u - 1] && beta[u - 1] == gamma[u - 1];
  }
  out.criteria.push_back({"alpha_beta_gamma_agree", families_agree});

  bool gamma_is_mu = true;
  for (Int i = 1; i <= r; ++i)
    gamma_is_mu = gamma_is_mu && gamma[static_cast<std::size_t>(i - 1)] == hilbert(t, i) - hilbert(t, i - 1);
  out.criteria.push_back({"gamma_equals_hilbert_differences", gamma_is_mu});

  bool colon_condition = true;
  for (Int i = 1; i <= r - 2; ++i)
    colon_condition = colon_condition && ideal_intersect(t.power(i), top_colon(t, r - i - 1)) == t.power(i + 1);
  out.criteria.push_back({"colon_intersection_condition", colon_condition});

  out.cohen_macaulay = out.criteria.front().holds;
  return out;
}

}  // namespace detail

/// Cohen-Macaulayness of the tangent cone, decided by five equivalent
/// criteria that must all agree.
inline CmVerdict is_cm(const AperyTable& t) {
  auto verdict = detail::cm_criteria(t, alpha_from_table(t).alpha, beta(t), gamma(t), rho(t));
  if (!verdict.unanimous()) throw Error(ErrorKind::Inconsistent, "Cohen-Macaulay criteria disagree");
  return verdict;
}

}  // namespace apery
