#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "nsgff/classify.hpp"
#include "nsgff/enumerate.hpp"
#include "nsgff/expression.hpp"
#include "nsgff/report_json.hpp"
#include "nsgff/rohrbach.hpp"
#include "nsgff/semigroup.hpp"

namespace nsgff::cli {

inline constexpr std::string_view kSchemaVersion = "1.0";

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

struct Output {
  int exit_code = kOk;
  std::string text;
};

/// Comma-separated integers, e.g. "7,8,11,17,20".
inline std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    Int value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) {
      throw Error(ErrorCode::input_too_large,
                  "integer out of range in '" + std::string(text) + "'");
    }
    if (ec != std::errc() || ptr == begin) {
      throw Error(ErrorCode::invalid_input,
                  "expected comma-separated integers, got '" +
                      std::string(text) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw Error(ErrorCode::invalid_input,
                  "unexpected character '" + std::string(1, text[pos]) +
                      "' in '" + std::string(text) + "'");
    }
    ++pos;
  }
  return out;
}

namespace detail {

struct Envelope {
  std::string command;
  Json input = Json::object();
  Json result;
  std::optional<Json> error;
  int exit_code = kOk;
};

inline Json error_json(std::string_view code, const std::string& message) {
  return Json{{"code", code}, {"message", message}};
}

inline std::string render_pretty(const Envelope& env);

inline Output finish(Envelope env, bool pretty, std::int64_t elapsed_ms) {
  Output out;
  out.exit_code = env.exit_code;
  if (pretty) {
    out.text = render_pretty(env);
    return out;
  }
  Json doc{{"schema_version", kSchemaVersion},
           {"command", env.command},
           {"input", env.input},
           {"timing_ms", elapsed_ms}};
  if (!env.result.is_null()) doc["result"] = env.result;
  if (env.error) doc["error"] = *env.error;
  out.text = doc.dump(2) + "\n";
  return out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join(const Json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    s += arr[i].dump();
  }
  return s;
}

inline void render_report(std::ostringstream& os, const Json& r) {
  os << "semigroup        <" << join(r["min_gens"]) << ">\n"
     << "multiplicity e   " << r["multiplicity"] << "\n"
     << "embedding dim v  " << r["embdim"] << "\n"
     << "type r           " << r["type"] << "\n"
     << "genus g          " << r["genus"] << "\n"
     << "Frobenius F      " << r["frobenius"] << "\n"
     << "PF               {" << join(r["pf"]) << "}\n"
     << "trace            {" << join(r["trace"]["gens"]) << "}+H, tail from "
     << r["trace"]["tail_start"] << "\n"
     << "valuations       {" << join(r["valuations"]) << "}\n";
  const auto& f = r["flags"];
  os << "far-flung        " << yes_no(f["ffg"].get<bool>()) << "\n"
     << "nearly Gor.      " << yes_no(f["nearly_gorenstein"].get<bool>()) << "\n"
     << "Gorenstein       " << yes_no(f["gorenstein"].get<bool>()) << "\n"
     << "minimal mult.    " << yes_no(f["minimal_multiplicity"].get<bool>())
     << "\n";
  const auto& b = r["bounds"];
  os << "r+1 <= e         " << b["type_plus_one_le_e"].get<std::string>() << "\n"
     << "e <= C(r+1,2)    " << b["e_le_binom"].get<std::string>() << "\n"
     << "e <= nbar(r)     " << b["e_le_rohrbach"].get<std::string>() << "\n";
}

inline std::string render_pretty(const Envelope& env) {
  std::ostringstream os;
  if (env.error) {
    os << "error [" << (*env.error)["code"].get<std::string>() << "]: "
       << (*env.error)["message"].get<std::string>() << "\n";
  }
  const Json& r = env.result;
  if (r.is_null()) return os.str();
  if (env.command == "info") {
    if (r.is_array()) {
      os << std::left;
      os << "semigroup                       e   r   F   ffg  NG   Gor\n";
      for (const auto& rep : r) {
        std::string name = "<" + join(rep["min_gens"]) + ">";
        name.resize(std::max<std::size_t>(name.size(), 30), ' ');
        const auto& f = rep["flags"];
        os << name << "  " << rep["multiplicity"] << "   " << rep["type"]
           << "   " << rep["frobenius"] << "   "
           << yes_no(f["ffg"].get<bool>()) << "  "
           << yes_no(f["nearly_gorenstein"].get<bool>()) << "  "
           << yes_no(f["gorenstein"].get<bool>()) << "\n";
      }
    } else {
      render_report(os, r);
    }
  } else if (env.command == "ideal") {
    os << "generators   {" << join(r["gens"]) << "}+H\n"
       << "min          " << r["min"] << "\n"
       << "tail from    " << r["tail_start"] << "\n"
       << "members      {" << join(r["members_preview"]) << "} then all >= "
       << r["stability_bound"] << "\n";
  } else if (env.command == "rohrbach") {
    os << "r        " << r["r"] << "\n"
       << "mode     " << r["mode"].get<std::string>() << "\n"
       << "value    " << r["value"] << (r["exact"].get<bool>() ? "" : " (lower bound)")
       << "\n";
    if (!r["witness"].is_null()) os << "witness  {" << join(r["witness"]) << "}\n";
  } else if (env.command == "verify") {
    os << "campaign      " << r["campaign"].get<std::string>() << "\n"
       << "result        " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n"
       << "corpus        " << r["corpus_size"] << "\n"
       << "checked       " << r["checked"] << "\n"
       << "violations    " << r["counterexample_total"] << "\n";
    for (const auto& c : r["counterexamples"]) {
      os << "  <" << join(c["report"]["min_gens"]) << ">  "
         << c["reason"].get<std::string>() << "\n";
    }
    for (const auto& c : r["exceptions"]) {
      os << "  exception <" << join(c["report"]["min_gens"]) << ">  "
         << c["reason"].get<std::string>() << "\n";
    }
  } else if (env.command == "explore") {
    os << "type " << r["type"] << ", genus <= " << r["max_genus"] << "\n";
    os << "multiplicity  witness\n";
    for (const auto& w : r["witnesses"]) {
      os << "  " << w["multiplicity"] << "  <" << join(w["min_gens"]) << ">\n";
    }
    os << r["disclaimer"].get<std::string>() << "\n";
  }
  return os.str();
}

inline Json ideal_payload(const std::string& expr, const RelativeIdeal& e) {
  auto j = to_json(e);
  j["expression"] = expr;
  j["members_preview"] = e.members_below_bound();
  return j;
}

inline void cmd_info(Envelope& env, const std::string& gens_text,
                     bool batch, std::istream& in) {
  if (!batch) {
    const auto gens = parse_int_list(gens_text);
    env.input = Json{{"generators", gens}};
    env.result = to_json(classify(NumericalSemigroup::from_generators(gens)));
    return;
  }
  Json lines = Json::array();
  Json reports = Json::array();
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    try {
      const auto gens = parse_int_list(line);
      lines.push_back(gens);
      reports.push_back(
          to_json(classify(NumericalSemigroup::from_generators(gens))));
    } catch (const Error& err) {
      throw Error(err.code(),
                  "line " + std::to_string(number) + ": " + err.what());
    }
  }
  env.input = Json{{"batch", lines}};
  env.result = reports;
}

inline void cmd_ideal(Envelope& env, const std::string& gens_text,
                      const std::string& expr) {
  const auto gens = parse_int_list(gens_text);
  env.input = Json{{"generators", gens}, {"expression", expr}};
  const auto h = NumericalSemigroup::from_generators(gens);
  env.result = ideal_payload(expr, evaluate_ideal_expression(h, expr));
}

inline void cmd_rohrbach(Envelope& env, Int r, bool table,
                         std::uint64_t budget) {
  env.input = Json{{"r", r},
                   {"mode", table ? "table" : "exact"},
                   {"budget", budget}};
  if (table) {
    env.result = Json{{"r", r},
                      {"mode", "table"},
                      {"value", known_table(r)},
                      {"exact", true},
                      {"witness", nullptr},
                      {"nodes", 0}};
    return;
  }
  try {
    auto res = to_json(rohrbach_max(r, budget));
    res["r"] = r;
    res["mode"] = "exact";
    env.result = res;
  } catch (const BudgetExceeded& ex) {
    auto res = to_json(ex.best());
    res["r"] = r;
    res["mode"] = "exact";
    env.result = res;
    env.error = error_json(to_string(ex.code()), ex.what());
    env.exit_code = kBudgetExceeded;
  }
}

struct VerifyOptions {
  std::string campaign;
  std::optional<Int> max_genus;
  Int max_m = 5;
  std::size_t samples = 200;
  std::size_t ideals = 50;
  std::size_t semigroups = 50;
  std::uint64_t seed = 1;
};

inline const std::vector<std::string>& campaigns() {
  static const std::vector<std::string> names = {
      "type2", "type3", "interval", "bounds", "endo",
      "thm41", "bidual", "routes", "valuations"};
  return names;
}

inline void cmd_verify(Envelope& env, const VerifyOptions& o) {
  const auto& c = o.campaign;
  auto genus_or = [&](Int fallback) { return o.max_genus.value_or(fallback); };
  VerificationResult res;
  Json input{{"campaign", c}};
  if (c == "type2") {
    input["max_genus"] = genus_or(20);
    res = verify_type2_classification(genus_or(20));
  } else if (c == "type3") {
    input["max_m"] = o.max_m;
    res = verify_type3_classification(o.max_m);
  } else if (c == "interval") {
    input["max_genus"] = genus_or(20);
    res = verify_interval_characterization(genus_or(20));
  } else if (c == "bounds") {
    input["max_genus"] = genus_or(18);
    res = verify_bounds(genus_or(18));
  } else if (c == "endo") {
    input["max_genus"] = genus_or(15);
    res = verify_endomorphism(genus_or(15));
  } else if (c == "routes") {
    input["max_genus"] = genus_or(18);
    res = verify_routes(genus_or(18));
  } else if (c == "valuations") {
    input["max_genus"] = genus_or(18);
    res = verify_valuations(genus_or(18));
  } else if (c == "thm41") {
    input["max_genus"] = genus_or(15);
    input["samples"] = o.samples;
    input["ideals"] = o.ideals;
    input["seed"] = o.seed;
    res = verify_theorem41(genus_or(15), o.samples, o.ideals, o.seed);
  } else if (c == "bidual") {
    input["semigroups"] = o.semigroups;
    input["ideals"] = o.ideals;
    input["seed"] = o.seed;
    res = verify_bidual(o.semigroups, o.ideals, o.seed);
  } else {
    throw Error(ErrorCode::invalid_input, "unknown campaign '" + c + "'");
  }
  env.input = input;
  env.result = to_json(res);
  env.exit_code = res.pass ? kOk : kVerificationFailed;
}

inline void cmd_explore(Envelope& env, Int type_r, Int max_genus) {
  env.input = Json{{"type", type_r}, {"max_genus", max_genus}};
  if (type_r < 1) throw Error(ErrorCode::invalid_input, "type must be >= 1");
  const auto range = multiplicity_range(type_r, max_genus);
  Json mults = Json::array();
  Json witnesses = Json::array();
  for (const auto& w : range) {
    mults.push_back(w.multiplicity);
    witnesses.push_back(
        Json{{"multiplicity", w.multiplicity}, {"min_gens", w.witness.min_gens()}});
  }
  Json result{{"type", type_r},
              {"max_genus", max_genus},
              {"multiplicities", mults},
              {"witnesses", witnesses},
              {"lower_data_only", true},
              {"disclaimer",
               "lower-data-only: multiplicities observed among far-flung "
               "semigroups of this type up to the genus bound; not a "
               "statement about the full range"}};
  if (type_r <= static_cast<Int>(kRohrbachTable.size())) {
    result["rohrbach_bound"] = known_table(type_r);
    result["binomial_bound"] = type_r * (type_r + 1) / 2;
  } else {
    result["rohrbach_bound"] = nullptr;
    result["binomial_bound"] = type_r * (type_r + 1) / 2;
  }
  if (type_r == 1) {
    result["note"] =
        "type 1 is Gorenstein; the trace is H, which equals the conductor "
        "only for N0 (reported far-flung by convention)";
  }
  env.result = result;
}

inline Int check_threads_env() {
  if (const char* env = std::getenv("NSGFF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
      throw Error(ErrorCode::invalid_input,
                  "NSGFF_THREADS must be a positive integer");
    }
  }
  return static_cast<Int>(thread_count());
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline Output run(const std::vector<std::string>& args, std::istream& in) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Numerical semigroup invariants and far-flung Gorenstein tools",
               "nsgff"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  std::string gens_text;
  bool batch = false;
  auto* info = app.add_subcommand("info", "Invariants and classification");
  info->add_option("generators", gens_text, "Comma-separated generators");
  info->add_flag("--stdin-batch", batch,
                 "Read one generator list per line from stdin");
  info->add_flag("--pretty", pretty, "Human-readable output");

  std::string ideal_gens;
  std::string expr;
  auto* ideal = app.add_subcommand("ideal", "Evaluate a relative-ideal expression");
  ideal->add_option("generators", ideal_gens, "Comma-separated generators")
      ->required();
  ideal->add_option("expression", expr,
                    "Atoms H C K N {g,...}; operators * and :; parentheses")
      ->required();
  ideal->add_flag("--pretty", pretty, "Human-readable output");

  Int r = 0;
  bool exact = false;
  bool table = false;
  std::uint64_t budget = kDefaultRohrbachBudget;
  auto* rohr = app.add_subcommand("rohrbach", "Extremal additive 2-bases");
  rohr->add_option("r", r, "Set size")->required();
  auto* exact_flag = rohr->add_flag("--exact", exact, "Exhaustive search (default)");
  auto* table_flag = rohr->add_flag("--table", table, "Published table, r <= 25");
  exact_flag->excludes(table_flag);
  rohr->add_option("--budget", budget, "Search node limit");
  rohr->add_flag("--pretty", pretty, "Human-readable output");

  detail::VerifyOptions vo;
  Int max_genus_opt = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("campaign", vo.campaign, "Campaign name")
      ->required()
      ->check(CLI::IsMember(detail::campaigns()));
  auto* max_genus_flag =
      verify->add_option("--max-genus", max_genus_opt, "Genus bound");
  verify->add_option("--max-m", vo.max_m, "Family parameter bound (type3)");
  verify->add_option("--samples", vo.samples, "Semigroup sample size (thm41)");
  verify->add_option("--ideals", vo.ideals,
                     "Ideals per semigroup (thm41) or in total (bidual)");
  verify->add_option("--semigroups", vo.semigroups,
                     "Random semigroups (bidual)");
  verify->add_option("--seed", vo.seed, "Random seed");
  verify->add_flag("--pretty", pretty, "Human-readable output");

  Int explore_type = 0;
  Int explore_genus = 20;
  auto* explore = app.add_subcommand("explore", "Multiplicities of far-flung semigroups by type");
  explore->add_option("type", explore_type, "Type r")->required();
  explore->add_option("--max-genus", explore_genus, "Genus bound");
  explore->add_flag("--pretty", pretty, "Human-readable output");

  detail::Envelope env;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    return Output{kOk, app.help(sub == &app ? "" : sub->get_name())};
  } catch (const CLI::CallForAllHelp&) {
    return Output{kOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    env.command = app.get_subcommands().empty()
                      ? "" : app.get_subcommands().front()->get_name();
    env.error = detail::error_json("UsageError", e.what());
    env.exit_code = kInputError;
    return detail::finish(std::move(env), false, 0);
  }

  env.command = app.get_subcommands().front()->get_name();
  try {
    detail::check_threads_env();
    if (env.command == "info") {
      if (!batch && gens_text.empty()) {
        throw Error(ErrorCode::invalid_input, "generators are required");
      }
      detail::cmd_info(env, gens_text, batch, in);
    } else if (env.command == "ideal") {
      detail::cmd_ideal(env, ideal_gens, expr);
    } else if (env.command == "rohrbach") {
      detail::cmd_rohrbach(env, r, table, budget);
    } else if (env.command == "verify") {
      if (max_genus_flag->count() > 0) vo.max_genus = max_genus_opt;
      detail::cmd_verify(env, vo);
    } else if (env.command == "explore") {
      detail::cmd_explore(env, explore_type, explore_genus);
    }
  } catch (const ExpressionError& e) {
    env.result = nullptr;
    auto err = detail::error_json(to_string(e.code()), e.what());
    err["position"] = e.position();
    env.error = err;
    env.exit_code = kInputError;
  } catch (const Error& e) {
    env.result = nullptr;
    env.error = detail::error_json(to_string(e.code()), e.what());
    env.exit_code = kInputError;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return detail::finish(std::move(env), pretty, elapsed);
}

}  // namespace nsgff::cli
