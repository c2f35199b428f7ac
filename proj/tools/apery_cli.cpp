// apery: command-line front end.
//
//   apery info        --gens 5,6,7
//   apery table       --gens 5,6,13 [--format text|json|csv]
//   apery invariants  --kunz 5:6,7,13,14
//   apery verify      --gens 5,6,19
//   apery survey      --max-genus 8 [--multiplicity 5] [--jobs 4]
//
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "apery/apery.hpp"

namespace {

using apery::Int;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr Int kDefaultGenusCap = 16;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t\r");
    if (first == std::string::npos) throw InputError("empty entry in list '" + text + "'");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw InputError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

// "e:w1,...,w_{e-1}" or "e:0,w1,...,w_{e-1}".
apery::NumericalSemigroup parse_kunz(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--kunz expects e:w1,w2,...");
  const Int e = parse_int_list(text.substr(0, colon)).at(0);
  if (e < 1) throw InputError("multiplicity must be positive");
  std::vector<Int> w;
  if (colon + 1 < text.size()) w = parse_int_list(text.substr(colon + 1));
  if (static_cast<Int>(w.size()) == e - 1) w.insert(w.begin(), 0);
  if (static_cast<Int>(w.size()) != e)
    throw InputError("--kunz needs e-1 or e entries, got " + std::to_string(w.size()));
  return apery::from_kunz(e, w);
}

struct InputOptions {
  std::string gens;
  std::string kunz;
  bool from_stdin = false;
  std::string format = "text";

  void attach(CLI::App* cmd, std::vector<std::string> formats) {
    auto* g = cmd->add_option("--gens", gens, "generators, comma separated");
    auto* k = cmd->add_option("--kunz", kunz, "e:w1,...,w_{e-1}");
    auto* s = cmd->add_flag("--stdin", from_stdin, "read one generator list per line");
    g->excludes(k)->excludes(s);
    k->excludes(s);
    cmd->add_option("--format", format)->check(CLI::IsMember(std::move(formats)));
  }

  std::vector<apery::NumericalSemigroup> semigroups() const {
    if (!gens.empty()) return {apery::from_generators(parse_int_list(gens))};
    if (!kunz.empty()) return {parse_kunz(kunz)};
    if (!from_stdin) throw InputError("one of --gens, --kunz, --stdin is required");
    std::vector<apery::NumericalSemigroup> out;
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(apery::from_generators(parse_int_list(line)));
    }
    return out;
  }
};

std::string csv_row(const apery::NumericalSemigroup& s, const apery::InvariantReport& rep) {
  return apery::to_csv_row(apery::make_record(s, rep));
}

int cmd_info(const InputOptions& in) {
  bool header = false;
  for (const auto& s : in.semigroups()) {
    const auto rep = apery::analyze(s);
    if (in.format == "json") {
      std::cout << apery::document_json(s).dump() << '\n';
    } else if (in.format == "csv") {
      if (!header) std::cout << apery::kSurveyCsvHeader << '\n';
      header = true;
      std::cout << csv_row(s, rep) << '\n';
    } else {
      std::cout << apery::render_info_text(s, rep);
    }
  }
  return kOk;
}

int cmd_table(const InputOptions& in) {
  for (const auto& s : in.semigroups()) {
    const auto t = apery::build_table(s);
    if (in.format == "json") {
      nlohmann::json doc = apery::table_json(t);
      doc["semigroup"] = apery::semigroup_json(s);
      std::cout << doc.dump() << '\n';
    } else if (in.format == "csv") {
      for (const auto& row : apery::table_rows(t)) std::cout << apery::join_ints(row, ";") << '\n';
    } else {
      std::cout << apery::render_table_text(t);
    }
  }
  return kOk;
}

int cmd_invariants(const InputOptions& in) {
  bool header = false;
  for (const auto& s : in.semigroups()) {
    const auto rep = apery::analyze(s);
    if (in.format == "json") {
      std::cout << apery::invariants_json(rep).dump() << '\n';
    } else if (in.format == "csv") {
      if (!header) std::cout << apery::kSurveyCsvHeader << '\n';
      header = true;
      std::cout << csv_row(s, rep) << '\n';
    } else {
      std::cout << apery::render_invariants_text(rep);
    }
  }
  return kOk;
}

int cmd_verify(const InputOptions& in) {
  int status = kOk;
  for (const auto& s : in.semigroups()) {
    const auto rep = apery::analyze(s);
    if (in.format == "json")
      std::cout << apery::document_json(s).dump() << '\n';
    else
      std::cout << apery::render_identities_text(rep);
    const auto* bad = rep.first_failure();
    const auto gens = apery::join_ints({s.generators().begin(), s.generators().end()}, ",");
    if (bad) {
      std::cerr << "verify <" << gens << ">: FAIL at " << apery::identity_label(*bad) << '\n';
      status = kVerifyFailed;
    } else if (!rep.cm.unanimous()) {
      std::cerr << "verify <" << gens << ">: FAIL, CM criteria split\n";
      status = kVerifyFailed;
    } else {
      std::cerr << "verify <" << gens << ">: pass (" << rep.identities.size() << " identities)\n";
    }
  }
  return status;
}

struct SurveyOptions {
  std::optional<Int> multiplicity;
  Int max_genus = 0;
  unsigned jobs = 1;
  std::string format = "csv";
};

Int genus_cap() {
  const char* env = std::getenv("APERY_MAX_GENUS");
  if (!env || !*env) return kDefaultGenusCap;
  try {
    return parse_int_list(env).at(0);
  } catch (const InputError&) {
    throw InputError(std::string("APERY_MAX_GENUS is not an integer: '") + env + "'");
  }
}

void write_stats(std::ostream& os, const apery::SurveyStats& st) {
  os << "count: " << st.count << '\n' << "cm: " << st.cm_count << " (" << st.cm_fraction() << ")\n" << "r:";
  for (const auto& [r, n] : st.reduction_histogram) os << ' ' << r << '=' << n;
  os << "\ntorsion:";
  for (const auto& [t, n] : st.torsion_histogram) os << ' ' << t << '=' << n;
  os << '\n';
}

nlohmann::json stats_json(const apery::SurveyStats& st) {
  nlohmann::json r = nlohmann::json::object();
  for (const auto& [k, n] : st.reduction_histogram) r[std::to_string(k)] = n;
  nlohmann::json t = nlohmann::json::object();
  for (const auto& [k, n] : st.torsion_histogram) t[std::to_string(k)] = n;
  return {{"count", st.count},
          {"cm_count", st.cm_count},
          {"cm_fraction", st.cm_fraction()},
          {"reduction_histogram", r},
          {"torsion_histogram", t}};
}

int cmd_survey(const SurveyOptions& opt) {
  const Int cap = genus_cap();
  if (opt.max_genus > cap)
    throw InputError("--max-genus " + std::to_string(opt.max_genus) + " exceeds cap " + std::to_string(cap) +
                     " (set APERY_MAX_GENUS to raise it)");
  if (opt.max_genus < 0) throw InputError("--max-genus must be non-negative");
  if (opt.multiplicity && *opt.multiplicity < 1) throw InputError("--multiplicity must be positive");

  const auto corpus = apery::enumerate_by_genus(opt.max_genus, opt.multiplicity);
  const auto result = apery::run_survey(corpus, opt.jobs);

  if (opt.format == "json") {
    nlohmann::json doc = {{"records", result.records}, {"stats", stats_json(result.stats)}};
    std::cout << doc.dump() << '\n';
  } else if (opt.format == "text") {
    for (const auto& rec : result.records)
      std::cout << '<' << apery::join_ints(rec.generators, ",") << "> e=" << rec.e << " r=" << rec.r
                << " genus=" << rec.genus << " rho=" << rec.rho << " CM=" << (rec.cm ? "yes" : "no") << '\n';
    write_stats(std::cout, result.stats);
  } else {
    std::cout << apery::kSurveyCsvHeader << '\n';
    for (const auto& rec : result.records) std::cout << apery::to_csv_row(rec) << '\n';
    write_stats(std::cerr, result.stats);
  }

  if (result.failure) {
    const auto& [rec, id] = *result.failure;
    std::cerr << "survey aborted: <" << apery::join_ints(rec.generators, ",")
              << "> fails " << apery::identity_label(id) << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apery tables and tangent-cone invariants of numerical semigroup rings"};
  app.require_subcommand(1);

  InputOptions info_in, table_in, inv_in, verify_in;
  auto* info = app.add_subcommand("info", "multiplicity, reduction number, Hilbert function, CM verdict");
  info_in.attach(info, {"text", "json", "csv"});
  auto* table = app.add_subcommand("table", "Apery table Ap(nM), n = 0..r");
  table_in.attach(table, {"text", "json", "csv"});
  auto* inv = app.add_subcommand("invariants", "alpha, beta, gamma, rho and correction lengths");
  inv_in.attach(inv, {"text", "json", "csv"});
  auto* verify = app.add_subcommand("verify", "evaluate every identity and the CM criteria");
  verify_in.attach(verify, {"text", "json"});

  SurveyOptions survey_opt;
  auto* survey = app.add_subcommand("survey", "analyze every semigroup up to a genus bound");
  survey->add_option("--multiplicity", survey_opt.multiplicity);
  survey->add_option("--max-genus", survey_opt.max_genus)->required();
  survey->add_option("--jobs", survey_opt.jobs)->check(CLI::PositiveNumber);
  survey->add_option("--format", survey_opt.format)->check(CLI::IsMember({"csv", "json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*info) return cmd_info(info_in);
    if (*table) return cmd_table(table_in);
    if (*inv) return cmd_invariants(inv_in);
    if (*verify) return cmd_verify(verify_in);
    if (*survey) return cmd_survey(survey_opt);
  } catch (const apery::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
