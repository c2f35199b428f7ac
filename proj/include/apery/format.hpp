#pragma once

// Text and JSON renderings of tables and reports.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "apery/apery_table.hpp"
#include "apery/report.hpp"
#include "apery/survey.hpp"

namespace apery {

/// Boxed grid, one line per row, right-aligned fixed-width cells.
inline std::string render_rows_text(const std::vector<std::vector<Int>>& rows) {
  std::size_t width = 1;
  for (const auto& row : rows)
    for (Int v : row) width = std::max(width, std::to_string(v).size());
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();

  std::string rule = "+";
  for (std::size_t c = 0; c < cols; ++c) rule += std::string(width + 2, '-') + "+";
  rule += "\n";

  std::string out = rule;
  for (const auto& row : rows) {
    out += "|";
    for (Int v : row) {
      const auto s = std::to_string(v);
      out += " " + std::string(width - s.size(), ' ') + s + " |";
    }
    out += "\n" + rule;
  }
  return out;
}

inline std::vector<std::vector<Int>> table_rows(const AperyTable& t) {
  std::vector<std::vector<Int>> rows;
  for (const auto& row : t.rows()) rows.emplace_back(row.apery().begin(), row.apery().end());
  return rows;
}

inline std::string render_table_text(const AperyTable& t) { return render_rows_text(table_rows(t)); }

// JSON -----------------------------------------------------------------------

inline nlohmann::json semigroup_json(const NumericalSemigroup& s) {
  const auto fg = frobenius_and_genus(s);
  return {{"generators", std::vector<Int>(s.generators().begin(), s.generators().end())},
          {"multiplicity", s.multiplicity()},
          {"embedding_dimension", s.embedding_dimension()},
          {"kunz", std::vector<Int>(s.kunz().begin(), s.kunz().end())},
          {"frobenius", fg.frobenius},
          {"genus", fg.genus}};
}

inline nlohmann::json landing_json(const LandingDecomposition& col) {
  auto landings = nlohmann::json::array();
  for (const auto& l : col.landings) landings.push_back({l.start, l.end});
  auto torsion = nlohmann::json::array();
  for (const auto& ts : col.torsion) torsion.push_back({{"shift", ts.shift}, {"order", ts.order}});
  return {{"column", col.column_index}, {"landings", landings}, {"b", col.b},
          {"d", col.d},                 {"a", col.a},               {"torsion", torsion}};
}

inline nlohmann::json table_json(const AperyTable& t) {
  auto columns = nlohmann::json::array();
  for (const auto& col : decompose_all(t)) columns.push_back(landing_json(col));
  return {{"reduction_number", t.reduction_number()}, {"rows", table_rows(t)}, {"columns", columns}};
}

inline nlohmann::json pair_counts_json(const PairCounts& pc, const char* value_key) {
  auto out = nlohmann::json::array();
  for (const auto& [key, v] : pc) out.push_back({{"i", key.first}, {"j", key.second}, {value_key, v}});
  return out;
}

inline nlohmann::json invariants_json(const InvariantReport& rep) {
  return {{"e", rep.e},
          {"b", rep.b},
          {"r", rep.r},
          {"rho", rep.rho},
          {"hilbert", rep.hilbert},
          {"alpha", rep.alpha},
          {"alpha_torsion", pair_counts_json(rep.alpha_torsion, "count")},
          {"beta", rep.beta},
          {"gamma", rep.gamma},
          {"f", pair_counts_json(rep.f, "value")},
          {"g", rep.g},
          {"nu", rep.nu},
          {"torsion_length", rep.torsion_length}};
}

inline nlohmann::json identities_json(const std::vector<IdentityResult>& ids) {
  auto out = nlohmann::json::array();
  for (const auto& id : ids)
    out.push_back({{"name", id.name},
                   {"index", id.index},
                   {"lhs", id.lhs},
                   {"rhs", id.rhs},
                   {"relation", std::string(to_string(id.relation))},
                   {"vacuous", id.vacuous},
                   {"pass", id.pass}});
  return out;
}

inline nlohmann::json cm_json(const CmVerdict& cm) {
  auto criteria = nlohmann::json::array();
  for (const auto& c : cm.criteria) criteria.push_back({{"name", c.name}, {"holds", c.holds}});
  return {{"cohen_macaulay", cm.cohen_macaulay}, {"unanimous", cm.unanimous()}, {"criteria", criteria}};
}

/// Top-level document: {semigroup, table, invariants, identities, cm}.
inline nlohmann::json document_json(const NumericalSemigroup& s) {
  const auto rep = analyze(s);
  return {{"semigroup", semigroup_json(s)},
          {"table", table_json(build_table(s))},
          {"invariants", invariants_json(rep)},
          {"identities", identities_json(rep.identities)},
          {"cm", cm_json(rep.cm)}};
}

// Text -----------------------------------------------------------------------

inline std::string identity_label(const IdentityResult& id) {
  std::string out = id.name;
  if (!id.index.empty()) out += "[" + join_ints(id.index, ",") + "]";
  return out;
}

inline std::string render_info_text(const NumericalSemigroup& s, const InvariantReport& rep) {
  std::ostringstream os;
  os << "generators: " << join_ints({s.generators().begin(), s.generators().end()}, ",") << '\n'
     << "e=" << rep.e << " b=" << rep.b << " r=" << rep.r << " frobenius=" << rep.frobenius
     << " genus=" << rep.genus << " rho=" << rep.rho << '\n'
     << "hilbert: " << join_ints(rep.hilbert) << '\n'
     << "CM=" << (rep.cm.cohen_macaulay ? "yes" : "no") << '\n';
  if (rep.e == 1) os << "regular ring k[[t]]\n";
  return os.str();
}

inline std::string render_invariants_text(const InvariantReport& rep) {
  std::ostringstream os;
  os << "alpha: " << join_ints(rep.alpha) << '\n'
     << "alpha_torsion: " << torsion_triples(rep.alpha_torsion) << '\n'
     << "beta: " << join_ints(rep.beta) << '\n'
     << "gamma: " << join_ints(rep.gamma) << '\n'
     << "rho: " << rep.rho << '\n'
     << "hilbert: " << join_ints(rep.hilbert) << '\n'
     << "f:";
  for (const auto& [key, v] : rep.f) os << ' ' << key.first << ',' << key.second << '=' << v;
  os << '\n'
     << "g: " << join_ints(rep.g) << '\n'
     << "nu: " << join_ints(rep.nu) << '\n'
     << "torsion_length: " << rep.torsion_length << '\n'
     << "CM: " << (rep.cm.cohen_macaulay ? "yes" : "no") << '\n';
  return os.str();
}

inline std::string render_identities_text(const InvariantReport& rep) {
  std::ostringstream os;
  for (const auto& id : rep.identities) {
    os << (id.pass ? "PASS " : "FAIL ") << identity_label(id);
    if (id.vacuous)
      os << " (vacuous)";
    else if (id.relation != Relation::Holds)
      os << ": " << id.lhs << ' ' << to_string(id.relation) << ' ' << id.rhs;
    os << '\n';
  }
  for (const auto& c : rep.cm.criteria) os << "CM criterion " << c.name << ": " << (c.holds ? "true" : "false") << '\n';
  os << "CM criteria " << (rep.cm.unanimous() ? "unanimous " : "split ") << (rep.cm.cohen_macaulay ? "true" : "false")
     << '\n';
  return os.str();
}

}  // namespace apery
