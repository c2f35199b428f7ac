#pragma once

// Corpus survey: one record per semigroup, computed in parallel and emitted
// in a fixed order so output never depends on the worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "apery/report.hpp"

namespace apery {

struct SurveyRecord {
  std::vector<Int> generators;
  Int e = 0;
  Int b = 0;
  Int r = 0;
  Int genus = 0;
  Int frobenius = 0;
  std::vector<Int> alpha;
  PairCounts alpha_torsion;
  std::vector<Int> beta;
  std::vector<Int> gamma;
  Int rho = 0;
  Int torsion_length = 0;
  bool cm = false;
  bool identities_all_pass = false;

  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

inline SurveyRecord make_record(const NumericalSemigroup& s, const InvariantReport& rep) {
  SurveyRecord out;
  out.generators.assign(s.generators().begin(), s.generators().end());
  out.e = rep.e;
  out.b = rep.b;
  out.r = rep.r;
  out.genus = rep.genus;
  out.frobenius = rep.frobenius;
  out.alpha = rep.alpha;
  out.alpha_torsion = rep.alpha_torsion;
  out.beta = rep.beta;
  out.gamma = rep.gamma;
  out.rho = rep.rho;
  out.torsion_length = rep.torsion_length;
  out.cm = rep.cm.cohen_macaulay;
  out.identities_all_pass = rep.all_pass();
  return out;
}

inline SurveyRecord make_record(const NumericalSemigroup& s) { return make_record(s, analyze(s)); }

inline void to_json(nlohmann::json& j, const SurveyRecord& rec) {
  auto torsion = nlohmann::json::array();
  for (const auto& [key, count] : rec.alpha_torsion) torsion.push_back({{"i", key.first}, {"j", key.second}, {"count", count}});
  j = nlohmann::json{{"generators", rec.generators},
                     {"e", rec.e},
                     {"b", rec.b},
                     {"r", rec.r},
                     {"genus", rec.genus},
                     {"frobenius", rec.frobenius},
                     {"alpha", rec.alpha},
                     {"alpha_torsion", torsion},
                     {"beta", rec.beta},
                     {"gamma", rec.gamma},
                     {"rho", rec.rho},
                     {"torsion_length", rec.torsion_length},
                     {"cm", rec.cm},
                     {"identities_all_pass", rec.identities_all_pass}};
}

inline void from_json(const nlohmann::json& j, SurveyRecord& rec) {
  j.at("generators").get_to(rec.generators);
  j.at("e").get_to(rec.e);
  j.at("b").get_to(rec.b);
  j.at("r").get_to(rec.r);
  j.at("genus").get_to(rec.genus);
  j.at("frobenius").get_to(rec.frobenius);
  j.at("alpha").get_to(rec.alpha);
  rec.alpha_torsion.clear();
  for (const auto& t : j.at("alpha_torsion"))
    rec.alpha_torsion[{t.at("i").get<Int>(), t.at("j").get<Int>()}] = t.at("count").get<Int>();
  j.at("beta").get_to(rec.beta);
  j.at("gamma").get_to(rec.gamma);
  j.at("rho").get_to(rec.rho);
  j.at("torsion_length").get_to(rec.torsion_length);
  j.at("cm").get_to(rec.cm);
  j.at("identities_all_pass").get_to(rec.identities_all_pass);
}

// CSV ------------------------------------------------------------------------

inline constexpr const char* kSurveyCsvHeader = "generators;e;b;r;genus;frobenius;rho;alpha;beta;gamma;torsion;cm";

inline std::string join_ints(const std::vector<Int>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? sep : "") << v[k];
  return os.str();
}

/// Torsion summands as space-separated i:j:count triples.
inline std::string torsion_triples(const PairCounts& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, count] : t) {
    os << (first ? "" : " ") << key.first << ':' << key.second << ':' << count;
    first = false;
  }
  return os.str();
}

inline std::string to_csv_row(const SurveyRecord& rec) {
  std::ostringstream os;
  os << join_ints(rec.generators) << ';' << rec.e << ';' << rec.b << ';' << rec.r << ';' << rec.genus << ';'
     << rec.frobenius << ';' << rec.rho << ';' << join_ints(rec.alpha) << ';' << join_ints(rec.beta) << ';'
     << join_ints(rec.gamma) << ';' << torsion_triples(rec.alpha_torsion) << ';' << (rec.cm ? 1 : 0);
  return os.str();
}

// Survey run -----------------------------------------------------------------

struct SurveyStats {
  Int count = 0;
  Int cm_count = 0;
  std::map<Int, Int> reduction_histogram;
  std::map<Int, Int> torsion_histogram;  ///< keyed by Σ iα − ρ

  double cm_fraction() const { return count == 0 ? 0.0 : static_cast<double>(cm_count) / static_cast<double>(count); }
};

struct SurveyResult {
  std::vector<SurveyRecord> records;
  SurveyStats stats;
  /// Semigroup whose identity suite failed, with the first failing identity.
  std::optional<std::pair<SurveyRecord, IdentityResult>> failure;
};

inline SurveyStats aggregate(const std::vector<SurveyRecord>& records) {
  SurveyStats st;
  for (const auto& rec : records) {
    ++st.count;
    st.cm_count += rec.cm ? 1 : 0;
    ++st.reduction_histogram[rec.r];
    ++st.torsion_histogram[rec.torsion_length];
  }
  return st;
}

/// Analyzes every semigroup with `jobs` workers. Records keep the input
/// order; callers pass enumerate_by_genus() output, which is already sorted.
inline SurveyResult run_survey(const std::vector<NumericalSemigroup>& corpus, unsigned jobs = 1) {
  const std::size_t n = corpus.size();
  std::vector<SurveyRecord> records(n);
  std::vector<std::optional<IdentityResult>> failures(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        const auto rep = analyze(corpus[k]);
        records[k] = make_record(corpus[k], rep);
        if (const auto* bad = rep.first_failure()) failures[k] = *bad;
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
  }

  SurveyResult out;
  for (std::size_t k = 0; k < n; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    if (failures[k] && !out.failure) out.failure = std::make_pair(records[k], *failures[k]);
  }
  out.records = std::move(records);
  out.stats = aggregate(out.records);
  return out;
}

}  // namespace apery
