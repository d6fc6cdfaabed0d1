// Copyright 2026 The Sylvester Sums Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file cli.hpp
 * @brief The `sylvester` command line front end, runnable in-process.
 *
 * Exit codes: 0 success, 1 verify found a disagreement, 2 invalid input,
 * 3 a closed form's hypotheses failed, 4 zero divisor in a reducible field.
 * Errors go to the error stream as one JSON object per line.
 */

#ifndef SYLVESTER_CLI_HPP
#define SYLVESTER_CLI_HPP

#include <charconv>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sylvester/errors.hpp"
#include "sylvester/format.hpp"
#include "sylvester/lambda.hpp"
#include "sylvester/oracle.hpp"
#include "sylvester/semigroup.hpp"
#include "sylvester/sums.hpp"

namespace sylvester::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kSuccess = 0,
  kDisagreement = 1,
  kInvalidInput = 2,
  kPrecondition = 3,
  kZeroDivisor = 4,
};

constexpr int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDivisor:
      return kZeroDivisor;
    case ErrorKind::PreconditionViolated:
    case ErrorKind::ConditionNotMet:
    case ErrorKind::DivideByZero:
      return kPrecondition;
    default:
      return kInvalidInput;
  }
}

/// One command's JSON output. `result` holds the exact value serialization.
struct OutputEnvelope {
  std::string command;
  Json inputs = Json::object();
  Json result;
  std::optional<std::string> formula_used;
  std::optional<std::uint64_t> pivot;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const OutputEnvelope&, const OutputEnvelope&) = default;
};

inline Json to_json(const OutputEnvelope& env) {
  Json j;
  j["command"] = env.command;
  j["inputs"] = env.inputs;
  j["result"] = env.result;
  j["formula_used"] = env.formula_used ? Json(*env.formula_used) : Json(nullptr);
  j["pivot"] = env.pivot ? Json(*env.pivot) : Json(nullptr);
  j["elapsed_ms"] = env.elapsed_ms;
  return j;
}

inline OutputEnvelope envelope_from_json(const Json& j) {
  OutputEnvelope env;
  env.command = j.at("command").get<std::string>();
  env.inputs = j.at("inputs");
  env.result = j.at("result");
  if (!j.at("formula_used").is_null()) env.formula_used = j.at("formula_used").get<std::string>();
  if (!j.at("pivot").is_null()) env.pivot = j.at("pivot").get<std::uint64_t>();
  env.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return env;
}

struct CommandOutput {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// "3,11,17" -> {3, 11, 17}, order preserved.
inline std::vector<std::int64_t> parse_integer_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::size_t lo = start;
    std::size_t hi = end;
    while (lo < hi && text[lo] == ' ') ++lo;
    while (hi > lo && text[hi - 1] == ' ') --hi;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + lo, text.data() + hi, value);
    if (lo == hi || ec != std::errc() || ptr != text.data() + hi)
      throw ParseError(lo, "expected an integer at position " + std::to_string(lo) + " of '" + text + "'");
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

namespace detail {

inline std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

inline Json error_record(const std::string& kind, const std::string& message, int code) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = code;
  return j;
}

struct Options {
  std::string gens;
  std::uint64_t pivot = 0;
  unsigned mu = 1;
  std::string lambda;
  std::string force_formula;
  std::string format = "text";
  bool quiet = false;
};

class Runner {
 public:
  Runner(const Options& options, std::ostream& out) : opt_(options), out_(out) {}

  int run(const std::string& command) {
    const auto start = std::chrono::steady_clock::now();
    env_.command = command;
    int code = kSuccess;
    if (command == "apery")
      apery();
    else if (command == "frobenius")
      frobenius();
    else if (command == "genus")
      genus();
    else if (command == "gaps")
      gaps();
    else if (command == "sum")
      sum();
    else if (command == "verify")
      code = verify();
    else if (command == "closed3")
      closed3();
    env_.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (opt_.format == "json") {
      out_ << to_json(env_).dump() << "\n";
    } else {
      out_ << primary_ << "\n";
      if (!opt_.quiet)
        for (const auto& line : details_) out_ << line << "\n";
    }
    return code;
  }

 private:
  GeneratorSet gens() {
    const auto raw = parse_integer_list(opt_.gens);
    GeneratorSet g = validate_generators(raw);
    env_.inputs["gens"] = g.values();
    return g;
  }

  LambdaSpec lambda() {
    LambdaSpec spec = parse_lambda(opt_.lambda);
    env_.inputs["lambda"] = to_string(spec);
    return spec;
  }

  void set_value(const FieldElement& value) {
    env_.result = element_to_json(value);
    primary_ = canonical_text(value);
    if (const auto pretty = pretty_text(value); pretty && *pretty != primary_)
      details_.push_back("pretty: " + *pretty);
  }

  void set_formula(Formula f, std::optional<std::uint64_t> pivot) {
    env_.formula_used = std::string(to_string(f));
    env_.pivot = pivot;
    details_.push_back("formula: " + *env_.formula_used);
    details_.push_back("pivot: " + (pivot ? std::to_string(*pivot) : std::string("none")));
  }

  void apery() {
    const GeneratorSet g = gens();
    const std::uint64_t pivot = opt_.pivot == 0 ? g.min() : opt_.pivot;
    env_.inputs["pivot"] = pivot;
    const AperySet a = apery_set(g, pivot);
    env_.result = a.m;
    env_.pivot = pivot;
    primary_ = join(a.m);
    details_.push_back("pivot: " + std::to_string(pivot));
  }

  void frobenius() {
    const auto g = frobenius_number(gens());
    env_.result = g ? Json(*g) : Json(nullptr);
    primary_ = g ? std::to_string(*g) : "undefined";
  }

  void genus() {
    const BigInt n = sylvester_number(gens());
    env_.result = static_cast<std::uint64_t>(n);
    primary_ = n.str();
  }

  void gaps() {
    const GapSet list = gap_set(gens());
    env_.result = list;
    primary_ = join(list);
    details_.push_back("count: " + std::to_string(list.size()));
  }

  SumRequest request() {
    GeneratorSet g = gens();
    env_.inputs["mu"] = opt_.mu;
    LambdaSpec spec = lambda();
    return {std::move(g), opt_.mu, std::move(spec.resolved)};
  }

  void sum() {
    const SumRequest req = request();
    std::optional<Formula> forced;
    if (!opt_.force_formula.empty()) {
      forced = formula_from_string(opt_.force_formula);
      if (!forced) throw Error(ErrorKind::ParseError, "unknown formula '" + opt_.force_formula + "'");
      env_.inputs["force_formula"] = opt_.force_formula;
    }
    if (forced == Formula::oracle) {
      set_value(brute_force_weighted_sum(req.gens, req.mu, req.lambda));
      set_formula(Formula::oracle, std::nullopt);
      return;
    }
    const SumResult result = forced ? evaluate_formula(req, *forced) : dispatch_sum(req);
    set_value(result.value);
    set_formula(result.formula_used, result.pivot_used);
  }

  int verify() {
    const SumRequest req = request();
    const VerificationReport report = cross_validate(req);
    Json j;
    j["agrees"] = report.agrees;
    j["formula_value"] = report.formula_value ? element_to_json(*report.formula_value) : Json(nullptr);
    j["oracle_value"] = element_to_json(report.oracle_value);
    j["gap_count"] = report.gap_count;
    j["annotation"] = report.annotation;
    env_.result = j;
    if (report.formula_used) env_.formula_used = std::string(to_string(*report.formula_used));
    env_.pivot = report.pivot_used;

    primary_ = report.agrees ? "agrees" : "disagrees";
    details_.push_back("formula value: " +
                       (report.formula_value ? canonical_text(*report.formula_value) : std::string("none")));
    details_.push_back("oracle value: " + canonical_text(report.oracle_value));
    if (env_.formula_used) details_.push_back("formula: " + *env_.formula_used);
    details_.push_back("pivot: " + (report.pivot_used ? std::to_string(*report.pivot_used) : std::string("none")));
    details_.push_back("gaps: " + std::to_string(report.gap_count));
    if (!report.annotation.empty()) details_.push_back("note: " + report.annotation);
    return report.agrees ? kSuccess : kDisagreement;
  }

  void closed3() {
    const auto raw = parse_integer_list(opt_.gens);
    if (raw.size() != 3) throw Error(ErrorKind::ParseError, "closed3 needs exactly three generators a,b,c");
    for (const auto v : raw)
      if (v <= 0) throw Error(ErrorKind::NonPositive, "generators must be positive");
    env_.inputs["gens"] = raw;
    const auto a = static_cast<std::uint64_t>(raw[0]);
    const auto b = static_cast<std::uint64_t>(raw[1]);
    const auto c = static_cast<std::uint64_t>(raw[2]);
    const ThreeVarContext ctx = ThreeVarContext::make(a, b, c);
    const FieldElement lam = lambda().resolved;

    SumResult result{FieldElement::zero(lam.field())};
    if (lam.pow(c).is_one())
      result = closed_three_var_degenerate(ctx, lam);
    else if (lam.pow(b).is_one())
      result = closed_three_var_degenerate(ThreeVarContext::make(a, c, b), lam);
    else
      result = closed_three_var(ctx, lam);
    set_value(result.value);
    set_formula(result.formula_used, result.pivot_used);
  }

  const Options& opt_;
  std::ostream& out_;
  OutputEnvelope env_;
  std::string primary_;
  std::vector<std::string> details_;
};

}  // namespace detail

/// Runs one command line (without the program name) and captures its streams.
inline CommandOutput run_command(const std::vector<std::string>& args) {
  detail::Options opt;
  CLI::App app{"Exact weighted sums over the gaps of numerical semigroups", "sylvester"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", opt.quiet, "Print only the result value");

  const auto add_gens = [&](CLI::App* sub) { sub->add_option("--gens", opt.gens, "Generators, comma separated")->required(); };
  const auto add_sum_options = [&](CLI::App* sub) {
    add_gens(sub);
    sub->add_option("--mu", opt.mu, "Exponent mu >= 0")->required();
    sub->add_option("--lambda", opt.lambda, "Weight, e.g. -2, zeta(8)^1, q(5; 0, -1/5)")->required();
  };

  auto* apery = app.add_subcommand("apery", "Apéry set with respect to a pivot generator");
  add_gens(apery);
  apery->add_option("--pivot", opt.pivot, "Pivot generator (default: smallest)");
  add_gens(app.add_subcommand("frobenius", "Largest gap"));
  add_gens(app.add_subcommand("genus", "Number of gaps"));
  add_gens(app.add_subcommand("gaps", "All gaps, ascending"));
  auto* sum = app.add_subcommand("sum", "Weighted power sum over the gaps");
  add_sum_options(sum);
  sum->add_option("--force-formula", opt.force_formula, "Evaluate with one specific closed form");
  add_sum_options(app.add_subcommand("verify", "Compare the closed form against brute force"));
  auto* closed3 = app.add_subcommand("closed3", "Three-generator closed form, a | lcm(b, c)");
  closed3->add_option("--gens", opt.gens, "a,b,c in role order")->required();
  closed3->add_option("--lambda", opt.lambda, "Weight")->required();

  for (auto* sub : {apery, sum, closed3, app.get_subcommand("frobenius"), app.get_subcommand("genus"),
                    app.get_subcommand("gaps"), app.get_subcommand("verify")}) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--quiet", opt.quiet, "Print only the result value");
  }

  std::ostringstream out;
  std::ostringstream err;
  CommandOutput result;

  std::vector<std::string> storage{"sylvester"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {kSuccess, out.str(), err.str()};
  } catch (const CLI::ParseError& e) {
    return {kInvalidInput, "", detail::error_record("ParseError", e.what(), kInvalidInput).dump() + "\n"};
  }

  try {
    detail::Runner runner(opt, out);
    result.exit_code = runner.run(app.get_subcommands().front()->get_name());
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    return {code, "", detail::error_record(std::string(to_string(e.kind())), e.what(), code).dump() + "\n"};
  } catch (const std::exception& e) {
    return {kInvalidInput, "", detail::error_record("InvalidInput", e.what(), kInvalidInput).dump() + "\n"};
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace sylvester::cli

#endif  // SYLVESTER_CLI_HPP
