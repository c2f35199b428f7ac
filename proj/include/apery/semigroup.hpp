#pragma once

// Numerical semigroups and their relative monomial ideals.
//
// Everything is stored as an Apery (Kunz) vector with respect to the
// multiplicity e: entry c is the smallest element of the set congruent to c
// modulo e. Every ideal of S is closed under +e, so those e integers pin the
// whole value set down and ideal arithmetic becomes min-plus arithmetic on
// short integer vectors.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apery/checked.hpp"
#include "apery/error.hpp"

namespace apery {

class NumericalSemigroup;
NumericalSemigroup from_generators(std::span<const Int> gens);
NumericalSemigroup from_kunz(Int e, std::span<const Int> kunz);

class NumericalSemigroup {
 public:
  /// Minimal generators n_1 < ... < n_b.
  std::span<const Int> generators() const { return data_->generators; }
  /// kunz()[c] is the smallest element of S congruent to c mod e.
  std::span<const Int> kunz() const { return data_->kunz; }

  Int multiplicity() const { return static_cast<Int>(data_->kunz.size()); }
  Int embedding_dimension() const { return static_cast<Int>(data_->generators.size()); }

  bool contains(Int n) const {
    return n >= 0 && data_->kunz[static_cast<std::size_t>(n % multiplicity())] <= n;
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.data_ == b.data_ || a.data_->kunz == b.data_->kunz;
  }

 private:
  struct Data {
    std::vector<Int> generators;
    std::vector<Int> kunz;
  };

  explicit NumericalSemigroup(std::vector<Int> kunz)
      : data_(std::make_shared<const Data>(Data{minimal_generators(kunz), std::move(kunz)})) {}

  // Apery elements that are not a sum of two nonzero Apery elements, plus e.
  static std::vector<Int> minimal_generators(const std::vector<Int>& kunz) {
    const auto e = static_cast<Int>(kunz.size());
    std::vector<Int> gens{e};
    for (Int c = 1; c < e; ++c) {
      bool decomposable = false;
      for (Int c1 = 1; c1 < e && !decomposable; ++c1) {
        const Int c2 = mod(c - c1, e);
        if (c2 == 0) continue;
        decomposable = kunz[c1] + kunz[c2] == kunz[c];
      }
      if (!decomposable) gens.push_back(kunz[c]);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
  }

  std::shared_ptr<const Data> data_;

  friend NumericalSemigroup from_generators(std::span<const Int> gens);
  friend NumericalSemigroup from_kunz(Int e, std::span<const Int> kunz);
};

/// Canonical semigroup generated by `gens` (any generating set, duplicates
/// allowed). The Kunz vector is a shortest-path computation on the residue
/// classes mod e.
inline NumericalSemigroup from_generators(std::span<const Int> gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "empty generator list");
  Int g = 0;
  for (Int n : gens) {
    if (n <= 0) throw Error(ErrorKind::InvalidInput, "generator " + std::to_string(n) + " is not positive");
    g = std::gcd(g, n);
  }
  if (g != 1) throw Error(ErrorKind::NotCoprime, "gcd of generators is " + std::to_string(g));

  const Int e = *std::min_element(gens.begin(), gens.end());
  const auto ue = static_cast<std::size_t>(e);

  // Only the smallest generator in each class matters as an edge weight.
  std::vector<Int> step(ue, -1);
  for (Int n : gens) {
    auto& s = step[static_cast<std::size_t>(n % e)];
    if (n % e != 0 && (s < 0 || n < s)) s = n;
  }

  std::vector<Int> dist(ue, -1);
  using Item = std::pair<Int, Int>;  // (distance, class)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, c] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(c)]) continue;
    for (Int r = 1; r < e; ++r) {
      const Int w = step[static_cast<std::size_t>(r)];
      if (w < 0) continue;
      const Int nd = checked::add(d, w);
      const auto target = static_cast<std::size_t>((c + r) % e);
      if (dist[target] < 0 || nd < dist[target]) {
        dist[target] = nd;
        queue.emplace(nd, static_cast<Int>(target));
      }
    }
  }
  return NumericalSemigroup(std::move(dist));
}

inline NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
  return from_generators(std::span<const Int>(gens.begin(), gens.size()));
}

/// Semigroup from its Kunz vector. Rejects vectors that are not the Apery set
/// of a numerical semigroup of multiplicity e.
inline NumericalSemigroup from_kunz(Int e, std::span<const Int> kunz) {
  if (e <= 0) throw Error(ErrorKind::InvalidInput, "multiplicity must be positive");
  if (static_cast<Int>(kunz.size()) != e)
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(e) + " Kunz entries, got " +
                                             std::to_string(kunz.size()));
  if (kunz[0] != 0) throw Error(ErrorKind::InvalidInput, "Kunz entry for class 0 must be 0");
  for (Int c = 1; c < e; ++c) {
    if (kunz[c] <= e || kunz[c] % e != c)
      throw Error(ErrorKind::InvalidInput,
                  "Kunz entry " + std::to_string(kunz[c]) + " is not a class-" + std::to_string(c) +
                      " value above " + std::to_string(e));
  }
  for (Int c1 = 1; c1 < e; ++c1) {
    for (Int c2 = c1; c2 < e; ++c2) {
      if (checked::add(kunz[c1], kunz[c2]) < kunz[(c1 + c2) % e])
        throw Error(ErrorKind::NotClosed, "closure fails for classes (" + std::to_string(c1) + ", " +
                                              std::to_string(c2) + ")");
    }
  }
  return NumericalSemigroup(std::vector<Int>(kunz.begin(), kunz.end()));
}

inline NumericalSemigroup from_kunz(Int e, std::initializer_list<Int> kunz) {
  return from_kunz(e, std::span<const Int>(kunz.begin(), kunz.size()));
}

inline bool contains(const NumericalSemigroup& s, Int n) { return s.contains(n); }

struct FrobeniusGenus {
  Int frobenius;
  Int genus;
  friend bool operator==(const FrobeniusGenus&, const FrobeniusGenus&) = default;
};

/// Largest gap (-1 when S is all of N) and number of gaps.
inline FrobeniusGenus frobenius_and_genus(const NumericalSemigroup& s) {
  const auto k = s.kunz();
  const Int e = s.multiplicity();
  Int genus = 0;
  for (Int c = 0; c < e; ++c) genus += (k[c] - c) / e;
  return {*std::max_element(k.begin(), k.end()) - e, genus};
}

/// A relative ideal I of S (I + S ⊆ I) stored by its Apery vector with
/// respect to e. The ambient semigroup is carried along so that every
/// constructed value is checked for S-closure.
class SemigroupIdeal {
 public:
  /// Validates residues, non-negativity and S-closure.
  static SemigroupIdeal from_apery(const NumericalSemigroup& s, std::vector<Int> apery) {
    const Int e = s.multiplicity();
    if (static_cast<Int>(apery.size()) != e)
      throw Error(ErrorKind::InvalidInput, "ideal vector has wrong length");
    for (Int c = 0; c < e; ++c) {
      if (apery[c] < 0 || apery[c] % e != c)
        throw Error(ErrorKind::InvalidInput, "ideal entry " + std::to_string(apery[c]) +
                                                 " is not a non-negative class-" + std::to_string(c) + " value");
    }
    for (Int g : s.generators()) {
      for (Int c = 0; c < e; ++c) {
        if (apery[(c + g) % e] > checked::add(apery[c], g))
          throw Error(ErrorKind::NotClosed, "ideal not closed under adding generator " + std::to_string(g));
      }
    }
    return SemigroupIdeal(s, std::move(apery));
  }

  /// S itself (the unit ideal).
  static SemigroupIdeal unit(const NumericalSemigroup& s) {
    return SemigroupIdeal(s, std::vector<Int>(s.kunz().begin(), s.kunz().end()));
  }

  /// M = S \ {0}.
  static SemigroupIdeal maximal(const NumericalSemigroup& s) {
    std::vector<Int> v(s.kunz().begin(), s.kunz().end());
    v[0] = s.multiplicity();
    return SemigroupIdeal(s, std::move(v));
  }

  const NumericalSemigroup& ambient() const { return ambient_; }
  Int modulus() const { return ambient_.multiplicity(); }
  std::span<const Int> apery() const { return apery_; }

  bool contains(Int n) const { return n >= 0 && apery_[static_cast<std::size_t>(n % modulus())] <= n; }

  /// x^k I, i.e. every element shifted by k*e.
  SemigroupIdeal times_x(Int k) const {
    std::vector<Int> v(apery_);
    const Int shift = checked::mul(k, modulus());
    for (auto& a : v) a = checked::add(a, shift);
    return from_apery(ambient_, std::move(v));
  }

  friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    return a.ambient_ == b.ambient_ && a.apery_ == b.apery_;
  }

 private:
  SemigroupIdeal(NumericalSemigroup s, std::vector<Int> apery)
      : ambient_(std::move(s)), apery_(std::move(apery)) {}

  NumericalSemigroup ambient_;
  std::vector<Int> apery_;
};

namespace detail {
inline void require_same_ambient(const SemigroupIdeal& i, const SemigroupIdeal& j) {
  if (!(i.ambient() == j.ambient()))
    throw Error(ErrorKind::ModulusMismatch, "ideals live over different semigroups");
}
}  // namespace detail

/// s + S for an element s of S.
inline SemigroupIdeal principal_ideal(const NumericalSemigroup& s, Int element) {
  if (!s.contains(element))
    throw Error(ErrorKind::NotMember, std::to_string(element) + " is not in the semigroup");
  const Int e = s.multiplicity();
  std::vector<Int> v(static_cast<std::size_t>(e));
  for (Int c = 0; c < e; ++c) v[(c + element) % e] = checked::add(s.kunz()[c], element);
  return SemigroupIdeal::from_apery(s, std::move(v));
}

/// I + J: min-plus cyclic convolution of the two Apery vectors.
inline SemigroupIdeal minkowski_sum(const SemigroupIdeal& i, const SemigroupIdeal& j) {
  detail::require_same_ambient(i, j);
  const Int e = i.modulus();
  const auto a = i.apery();
  const auto b = j.apery();
  std::vector<Int> out(static_cast<std::size_t>(e), -1);
  for (Int c1 = 0; c1 < e; ++c1) {
    for (Int c2 = 0; c2 < e; ++c2) {
      const Int v = checked::add(a[c1], b[c2]);
      auto& slot = out[(c1 + c2) % e];
      if (slot < 0 || v < slot) slot = v;
    }
  }
  return SemigroupIdeal::from_apery(i.ambient(), std::move(out));
}

/// Ideal sum (I, J) of monomial ideals: classwise minimum.
inline SemigroupIdeal ideal_union(const SemigroupIdeal& i, const SemigroupIdeal& j) {
  detail::require_same_ambient(i, j);
  std::vector<Int> out(i.apery().begin(), i.apery().end());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = std::min(out[c], j.apery()[c]);
  return SemigroupIdeal::from_apery(i.ambient(), std::move(out));
}

/// I ∩ J: classwise maximum.
inline SemigroupIdeal ideal_intersect(const SemigroupIdeal& i, const SemigroupIdeal& j) {
  detail::require_same_ambient(i, j);
  std::vector<Int> out(i.apery().begin(), i.apery().end());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = std::max(out[c], j.apery()[c]);
  return SemigroupIdeal::from_apery(i.ambient(), std::move(out));
}

/// (I :_A x^j) = {s in S : s + j*e in I}. Multiplication by x^j keeps
/// residue classes, so this is a classwise shift clamped below by S.
inline SemigroupIdeal colon_by_power(const NumericalSemigroup& s, const SemigroupIdeal& ideal, Int j) {
  if (!(ideal.ambient() == s))
    throw Error(ErrorKind::ModulusMismatch, "ideal lives over a different semigroup");
  if (j < 0) throw Error(ErrorKind::InvalidInput, "colon exponent must be non-negative");
  const Int shift = checked::mul(j, s.multiplicity());
  std::vector<Int> out(ideal.apery().begin(), ideal.apery().end());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = std::max(s.kunz()[c], checked::sub(out[c], shift));
  return SemigroupIdeal::from_apery(s, std::move(out));
}

/// J ⊆ I.
inline bool contains_ideal(const SemigroupIdeal& i, const SemigroupIdeal& j) {
  detail::require_same_ambient(i, j);
  for (std::size_t c = 0; c < i.apery().size(); ++c)
    if (i.apery()[c] > j.apery()[c]) return false;
  return true;
}

/// λ(I/J) for J ⊆ I: each class contributes its number of missing e-steps.
inline Int length_quotient(const SemigroupIdeal& i, const SemigroupIdeal& j) {
  if (!contains_ideal(i, j)) throw Error(ErrorKind::NotContained, "length of I/J requires J ⊆ I");
  Int total = 0;
  for (std::size_t c = 0; c < i.apery().size(); ++c) total += (j.apery()[c] - i.apery()[c]) / i.modulus();
  return total;
}

}  // namespace apery
