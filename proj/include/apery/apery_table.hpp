#pragma once

// The Apery table of the powers of the maximal ideal and the stair/landing
// analysis of its columns.

#include <cstddef>
#include <string>
#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

/// Rows Ap(nM) for n = 0..r, each ordered by residue class.
class AperyTable {
 public:
  const NumericalSemigroup& semigroup() const { return semigroup_; }
  Int multiplicity() const { return semigroup_.multiplicity(); }
  Int reduction_number() const { return static_cast<Int>(rows_.size()) - 1; }

  /// Stored rows, n = 0..r.
  const std::vector<SemigroupIdeal>& rows() const { return rows_; }
  std::span<const Int> row(Int n) const { return rows_.at(static_cast<std::size_t>(n)).apery(); }

  /// m^n for any n >= 0; rows past r are row r shifted by (n - r)e.
  SemigroupIdeal power(Int n) const {
    if (n < 0) throw Error(ErrorKind::InvalidInput, "negative power");
    const Int r = reduction_number();
    if (n <= r) return rows_[static_cast<std::size_t>(n)];
    return rows_.back().times_x(n - r);
  }

  /// Column of class c, rows 0..r.
  std::vector<Int> column(Int c) const {
    std::vector<Int> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row.apery()[static_cast<std::size_t>(c)]);
    return out;
  }

 private:
  AperyTable(NumericalSemigroup s, std::vector<SemigroupIdeal> rows)
      : semigroup_(std::move(s)), rows_(std::move(rows)) {}

  NumericalSemigroup semigroup_;
  std::vector<SemigroupIdeal> rows_;

  friend AperyTable build_table(const NumericalSemigroup& s);
};

/// Iterates nM = (n-1)M + M until the next power is the current one shifted
/// by e; that n is the reduction number.
inline AperyTable build_table(const NumericalSemigroup& s) {
  const Int e = s.multiplicity();
  const auto maximal = SemigroupIdeal::maximal(s);
  std::vector<SemigroupIdeal> rows{SemigroupIdeal::unit(s)};
  for (Int n = 0;; ++n) {
    if (n >= e) throw Error(ErrorKind::Inconsistent, "reduction number exceeds e - 1");
    auto next = n == 0 ? maximal : minkowski_sum(rows.back(), maximal);
    bool stable = true;
    for (Int c = 0; c < e && stable; ++c) stable = next.apery()[c] == rows.back().apery()[c] + e;
    if (stable) break;
    rows.push_back(std::move(next));
  }
  return AperyTable(s, std::move(rows));
}

inline Int reduction_number(const NumericalSemigroup& s) { return build_table(s).reduction_number(); }

/// A maximal run of at least two equal entries in a column, by row index.
struct Landing {
  Int start;
  Int end;
  Int length() const { return end - start; }
  friend bool operator==(const Landing&, const Landing&) = default;
};

/// Cyclic torsion summand F/(x*)^order shifted to degree `shift`.
struct TorsionSummand {
  Int shift;
  Int order;
  friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
};

struct LandingDecomposition {
  Int column_index = 0;
  std::vector<Landing> landings;
  Int b = 0;  ///< end of the landing starting at row 0
  Int d = 0;  ///< end of the last landing; shift of the free summand
  Int a = 0;  ///< micro-invariant of the column
  std::vector<TorsionSummand> torsion;

  /// Landings beyond the first one; each gives a torsion summand.
  Int true_landings() const { return static_cast<Int>(landings.size()) - 1; }
  /// Sum of true-landing lengths k_j.
  Int true_landing_length() const {
    Int total = 0;
    for (std::size_t j = 1; j < landings.size(); ++j) total += landings[j].length();
    return total;
  }
  /// Sum of torsion orders c_j; the column's share of λ(T(G(m))).
  Int torsion_length() const {
    Int total = 0;
    for (const auto& t : torsion) total += t.order;
    return total;
  }
};

inline LandingDecomposition decompose_column(const AperyTable& table, Int i) {
  const Int e = table.multiplicity();
  if (i < 1 || i >= e)
    throw Error(ErrorKind::InvalidInput, "column index " + std::to_string(i) + " outside 1.." + std::to_string(e - 1));
  const auto w = table.column(i);
  const Int last = static_cast<Int>(w.size()) - 1;

  LandingDecomposition out;
  out.column_index = i;
  for (Int n = 0; n <= last;) {
    Int m = n;
    while (m < last && w[m + 1] == w[n]) ++m;
    if (m > n) out.landings.push_back({n, m});
    n = m + 1;
  }
  if (out.landings.empty() || out.landings.front().start != 0)
    throw Error(ErrorKind::Inconsistent, "column " + std::to_string(i) + " does not open with a landing");

  out.b = out.landings.front().end;
  out.d = out.landings.back().end;
  out.a = out.b;
  for (std::size_t j = 1; j < out.landings.size(); ++j) {
    const Int previous_end = out.landings[j - 1].end;
    out.a += out.landings[j].length();
    out.torsion.push_back({previous_end, out.landings[j].start - previous_end});
  }
  return out;
}

inline std::vector<LandingDecomposition> decompose_all(const AperyTable& table) {
  std::vector<LandingDecomposition> out;
  for (Int i = 1; i < table.multiplicity(); ++i) out.push_back(decompose_column(table, i));
  return out;
}

}  // namespace apery
