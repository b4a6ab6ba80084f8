#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <stdexcept>

#include "cherednik/errors.hpp"
#include "cherednik/expr.hpp"
#include "cherednik/isomorphism.hpp"
#include "cherednik/report.hpp"
#include "cherednik/reps.hpp"
#include "cherednik/twist.hpp"

namespace cherednik::cli {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int m = 2;
  int p = 1;
  int n = 2;
  int max_degree = 2;
  int samples = 100;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string size_limit_text;
  long long size_limit = kDefaultSizeLimit;
  std::string kind = "rational";
  bool timings = false;
};

long long parse_size_limit(const std::string& text, const std::string& origin) {
  double value = 0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw ConfigError(origin + ": not a number: " + text);
  }
  if (!(value >= 1) || value > 1e12 || value != std::floor(value))
    throw ConfigError(origin + ": size limit must be a positive integer");
  return static_cast<long long>(value);
}

// flag > CHEREDNIK_SIZE_LIMIT > default
void resolve_size_limit(RunConfig& cfg) {
  if (!cfg.size_limit_text.empty()) {
    cfg.size_limit = parse_size_limit(cfg.size_limit_text, "--size-limit");
  } else if (const char* env = std::getenv("CHEREDNIK_SIZE_LIMIT"); env && *env) {
    cfg.size_limit = parse_size_limit(env, "CHEREDNIK_SIZE_LIMIT");
  }
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--m", cfg.m, "conductor m")->capture_default_str();
  app->add_option("--p", cfg.p, "p, a divisor of m")->capture_default_str();
  app->add_option("--n", cfg.n, "rank n")->capture_default_str();
  app->add_option("--max-degree", cfg.max_degree, "degree bound for sampled elements")->capture_default_str();
  app->add_option("--samples", cfg.samples, "number of random samples")->capture_default_str();
  app->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app->add_option("--size-limit", cfg.size_limit_text, "largest group to enumerate (default 1e5)");
  app->add_flag("--timings", cfg.timings, "include elapsed_ms in JSON output");
}

GroupSpec base_spec(const RunConfig& cfg) {
  if (cfg.max_degree < 0) throw ConfigError("--max-degree must be >= 0");
  if (cfg.samples < 0) throw ConfigError("--samples must be >= 0");
  GroupSpec spec{cfg.m, cfg.p, cfg.n};
  try {
    spec.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (spec.order() > cfg.size_limit)
    throw ConfigError("|G| = " + std::to_string(spec.order()) + " exceeds the size limit " +
                      std::to_string(cfg.size_limit));
  return spec;
}

void require_even(const GroupSpec& spec, const std::string& what) {
  if (spec.m % 2 != 0) throw ConfigError(what + " needs m even");
}

void require_admissible(const GroupSpec& spec) {
  if (!spec.algebra_admissible()) throw ConfigError("algebras need n >= 3, or n = 2 with p odd");
}

AlgebraKind parse_kind(const std::string& kind) {
  if (kind == "rational") return AlgebraKind::rational;
  if (kind == "braided") return AlgebraKind::braided;
  throw ConfigError("--kind must be rational or braided");
}

using Reports = std::vector<CheckReport>;

void append(Reports& out, Reports more) {
  for (auto& r : more) out.push_back(std::move(r));
}

Reports suite_groups(const GroupSpec& spec, const RunConfig& cfg) {
  return verify_groups(spec, cfg.size_limit, cfg.seed);
}

Reports suite_presentation(const GroupSpec& spec, const RunConfig& cfg) {
  return {verify_presentation(spec, cfg.size_limit)};
}

Reports suite_twist_axioms(const GroupSpec& spec, const RunConfig&) { return qt_axioms_check(spec.n); }

Reports suite_star(const GroupSpec& spec, const RunConfig& cfg) {
  const AlgebraPtr alg = Algebra::create(spec, AlgebraKind::rational, 1, cfg.size_limit);
  const SampleConfig sc{cfg.samples, cfg.max_degree, cfg.seed};
  return {verify_star_oracle(alg, sc),     verify_s_au(alg, sc),   verify_torus_star(alg, sc),
          verify_star_braid(alg),         verify_star_associative(alg, sc), verify_f_order(alg, sc)};
}

Reports suite_iso(const GroupSpec& spec, const RunConfig& cfg) {
  const PhiContext ctx(spec, cfg.size_limit);
  IsoConfig ic;
  ic.samples = cfg.samples;
  ic.max_degree = cfg.max_degree;
  ic.seed = cfg.seed;
  Reports out{verify_sigma_table(ctx), verify_theta(ctx)};
  append(out, verify_main_theorem(ctx, ic));
  out.push_back(verify_basis_correspondence(ctx, cfg.max_degree));
  return out;
}

Reports suite_reps(const GroupSpec& spec, const RunConfig& cfg) { return verify_reps(spec, cfg.size_limit); }

Reports run_suite(const std::string& suite, const RunConfig& cfg) {
  const GroupSpec spec = base_spec(cfg);
  if (suite == "groups") return suite_groups(spec, cfg);
  if (suite == "presentation") {
    require_even(spec, "mu(G)");
    return suite_presentation(spec, cfg);
  }
  if (suite == "twist-axioms") return suite_twist_axioms(spec, cfg);
  if (suite == "star") {
    require_even(spec, "the twist");
    require_admissible(spec);
    return suite_star(spec, cfg);
  }
  if (suite == "iso") {
    require_even(spec, "phi");
    require_admissible(spec);
    return suite_iso(spec, cfg);
  }
  if (suite == "reps") {
    require_admissible(spec);
    return suite_reps(spec, cfg);
  }
  if (suite == "all") {
    Reports out = suite_groups(spec, cfg);
    const bool even = spec.m % 2 == 0, admissible = spec.algebra_admissible();
    auto skipped = [&](const std::string& name, const std::string& why) {
      CheckReport r;
      r.name = name;
      r.params = {{"m", std::to_string(spec.m)}, {"p", std::to_string(spec.p)}, {"n", std::to_string(spec.n)}};
      r.skip(why);
      return r;
    };
    if (even) {
      append(out, suite_presentation(spec, cfg));
      append(out, suite_twist_axioms(spec, cfg));
    } else {
      out.push_back(skipped("presentation", "m odd"));
      out.push_back(skipped("twist-axioms", "m odd"));
    }
    if (admissible) {
      if (even) {
        append(out, suite_star(spec, cfg));
        append(out, suite_iso(spec, cfg));
      } else {
        out.push_back(skipped("star", "m odd"));
        out.push_back(skipped("iso", "m odd"));
      }
      append(out, suite_reps(spec, cfg));
    } else {
      out.push_back(skipped("algebra suites", "n = 2 with p even"));
    }
    return out;
  }
  throw ConfigError("unknown suite " + suite);
}

nlohmann::json config_json(const RunConfig& cfg) {
  return {{"m", cfg.m},         {"p", cfg.p},         {"n", cfg.n},
          {"max_degree", cfg.max_degree}, {"samples", cfg.samples}, {"seed", cfg.seed},
          {"size_limit", cfg.size_limit}};
}

int emit_reports(const std::string& suite, Reports reports, const RunConfig& cfg, std::ostream& out) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  const bool ok = all_passed(reports);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["suite"] = suite;
    j["config"] = config_json(cfg);
    j["status"] = ok ? "pass" : "fail";
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r, cfg.timings));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r) << "\n";
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.status == Status::fail;
    out << (ok ? "PASS" : "FAIL") << ": " << reports.size() - failed << "/" << reports.size() << " checks passed\n";
  }
  return ok ? kExitPass : kExitFail;
}

void emit_value(const std::string& command, const RunConfig& cfg, const AlgebraPtr& alg,
                const std::vector<std::pair<std::string, std::string>>& inputs, const std::string& result,
                std::optional<bool> check, std::ostream& out) {
  if (cfg.format == "json") {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = command;
    j["algebra"] = alg->name();
    j["config"] = config_json(cfg);
    for (const auto& [k, v] : inputs) j["input"][k] = v;
    j["result"] = result;
    if (check) j["check"] = *check ? "pass" : "fail";
    out << j.dump(2) << "\n";
  } else {
    out << result << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational and braided Cherednik algebras of G(m,p,n): checks and calculator", "cherednik"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "groups|presentation|twist-axioms|star|iso|reps|all")
      ->required()
      ->check(CLI::IsMember({"groups", "presentation", "twist-axioms", "star", "iso", "reps", "all"}));
  add_common(verify, cfg);

  std::string expr;
  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", expr, "expression")->required();
  nf->add_option("--kind", cfg.kind, "rational or braided")->capture_default_str();
  add_common(nf, cfg);

  std::string lhs, rhs;
  bool oracle = false, check = false;
  auto* star_cmd = app.add_subcommand("star", "twisted product a * b in the rational algebra");
  star_cmd->add_option("a", lhs, "left factor")->required();
  star_cmd->add_option("b", rhs, "right factor")->required();
  star_cmd->add_flag("--oracle", oracle, "use the direct F-action");
  star_cmd->add_flag("--check", check, "compute both ways and compare");
  star_cmd->add_option("--kind", cfg.kind, "must be rational")->capture_default_str();
  add_common(star_cmd, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    resolve_size_limit(cfg);
    if (verify->parsed()) return emit_reports(suite, run_suite(suite, cfg), cfg, out);

    const GroupSpec spec = base_spec(cfg);
    const AlgebraKind kind = parse_kind(cfg.kind);
    if (kind == AlgebraKind::braided) require_even(spec, "the braided kind");
    require_admissible(spec);

    if (nf->parsed()) {
      const AlgebraPtr alg = Algebra::create(spec, kind, 1, cfg.size_limit);
      const PBWElement value = parse_expression(alg, expr);
      emit_value("nf", cfg, alg, {{"expr", expr}, {"kind", kind_name(kind)}}, value.to_string(), std::nullopt, out);
      return kExitPass;
    }
    if (star_cmd->parsed()) {
      if (kind != AlgebraKind::rational) throw ConfigError("star lives on the rational kind");
      require_even(spec, "the star product");
      const AlgebraPtr alg = Algebra::create(spec, AlgebraKind::rational, 1, cfg.size_limit);
      const PBWElement a = parse_expression(alg, lhs), b = parse_expression(alg, rhs);
      const PBWElement value = oracle ? star_oracle(a, b) : star(a, b);
      std::optional<bool> agreed;
      if (check) {
        const PBWElement other = oracle ? star(a, b) : star_oracle(a, b);
        agreed = other == value;
        if (!*agreed) err << "star and star_oracle differ: " << value << " vs " << other << "\n";
      }
      emit_value("star", cfg, alg, {{"a", lhs}, {"b", rhs}, {"path", oracle ? "oracle" : "sign-rule"}},
                 value.to_string(), agreed, out);
      return agreed.value_or(true) ? kExitPass : kExitFail;
    }
  } catch (const ConfigError& e) {
    err << "cherednik: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "cherednik: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace cherednik::cli
