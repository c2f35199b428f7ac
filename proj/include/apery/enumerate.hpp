#pragma once

// Exhaustive enumeration of numerical semigroups by Kunz coordinates.
//
// A semigroup of multiplicity e is a vector k_1..k_{e-1} of positive
// integers with kunz[c] = k_c e + c satisfying the closure inequalities;
// its genus is Σ k_c. Coordinates are assigned in class order and every
// inequality is checked as soon as its three entries are known.

#include <algorithm>
#include <optional>
#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

namespace detail {

class KunzWalker {
 public:
  KunzWalker(Int e, Int budget, std::vector<std::vector<Int>>& out)
      : e_(e), budget_(budget), kunz_(static_cast<std::size_t>(e), 0), out_(out) {}

  void run() { assign(1, budget_); }

 private:
  bool closed_through(Int c) const {
    for (Int c1 = 1; c1 <= c; ++c1) {
      // pairs (c1, c) whose target is already assigned, and pairs landing on c
      const Int t = (c1 + c) % e_;
      if (t <= c && kunz_[c1] + kunz_[c] < kunz_[t]) return false;
      const Int c2 = mod(c - c1, e_);
      if (c2 >= 1 && c2 < c && c1 < c && kunz_[c1] + kunz_[c2] < kunz_[c]) return false;
    }
    return true;
  }

  void assign(Int c, Int remaining) {
    if (c == e_) {
      out_.push_back(kunz_);
      return;
    }
    // each later class needs at least one unit of genus
    const Int later = e_ - 1 - c;
    for (Int k = 1; k <= remaining - later; ++k) {
      kunz_[c] = k * e_ + c;
      if (closed_through(c)) assign(c + 1, remaining - k);
    }
    kunz_[c] = 0;
  }

  Int e_;
  Int budget_;
  std::vector<Int> kunz_;
  std::vector<std::vector<Int>>& out_;
};

}  // namespace detail

/// Every numerical semigroup of genus ≤ max_genus, optionally restricted to
/// one multiplicity, in lexicographic order of the Kunz vector.
inline std::vector<NumericalSemigroup> enumerate_by_genus(Int max_genus, std::optional<Int> multiplicity = {}) {
  if (max_genus < 0) throw Error(ErrorKind::InvalidInput, "negative genus bound");
  std::vector<std::vector<Int>> vectors;
  const Int lo = multiplicity.value_or(1);
  const Int hi = multiplicity.value_or(max_genus + 1);
  if (lo < 1) throw Error(ErrorKind::InvalidInput, "multiplicity must be positive");
  for (Int e = lo; e <= hi; ++e) {
    if (e == 1) {
      vectors.push_back({0});
      continue;
    }
    if (e - 1 > max_genus) continue;
    detail::KunzWalker(e, max_genus, vectors).run();
  }
  std::sort(vectors.begin(), vectors.end());
  std::vector<NumericalSemigroup> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(from_kunz(static_cast<Int>(v.size()), v));
  return out;
}

/// Number of semigroups of each genus 0..max_genus.
inline std::vector<Int> count_by_genus(Int max_genus) {
  std::vector<Int> counts(static_cast<std::size_t>(max_genus + 1), 0);
  for (const auto& s : enumerate_by_genus(max_genus)) ++counts[static_cast<std::size_t>(frobenius_and_genus(s).genus)];
  return counts;
}

}  // namespace apery
