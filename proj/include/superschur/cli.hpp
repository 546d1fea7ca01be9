#pragma once

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superschur/charkron.hpp"
#include "superschur/poincare.hpp"
#include "superschur/residue.hpp"
#include "superschur/verify.hpp"

namespace superschur::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string subcommand;
  std::string suite;
  std::string lambda_text;
  std::string hook_text = "1,1";
  std::vector<std::string> hooks_text;
  std::string route = "residue";
  std::string mode = "prime";
  std::string format = "text";
  std::string cache_path;
  int n = 1;
  int m = 0;
  int degree = 10;
  int max_size = 4;
  int jobs = 1;
  bool dump_poly = false;
};

inline std::vector<Hook> parse_hook_list(const std::vector<std::string>& items) {
  std::vector<Hook> out;
  for (const auto& item : items) {
    std::string token;
    std::string norm = item;
    std::replace(norm.begin(), norm.end(), ';', ' ');
    std::istringstream is(norm);
    while (is >> token) out.push_back(Hook::parse(token));
  }
  return out;
}

inline Route parse_route(const std::string& s) {
  if (s == "residue") return Route::Residue;
  if (s == "char" || s == "character") return Route::Character;
  throw InvalidArgument("unknown route '" + s + "'");
}

inline SeriesMode parse_mode(const std::string& s) {
  if (s == "plain") return SeriesMode::Plain;
  if (s == "prime") return SeriesMode::Prime;
  if (s == "bar") return SeriesMode::Bar;
  if (s == "barprime" || s == "bar_prime") return SeriesMode::BarPrime;
  throw InvalidArgument("unknown series mode '" + s + "'");
}

namespace detail {

inline void print_value(std::ostream& out, const RunConfig& cfg, const char* key, const Partition& lambda, Hook h,
                        const Integer& value) {
  if (cfg.format == "json") {
    out << "{\"lambda\":[" << lambda.str() << "],\"k\":" << h.k << ",\"l\":" << h.l << ",\"" << key
        << "\":" << value << "}\n";
  } else if (cfg.format == "csv") {
    out << "lambda,k,l," << key << "\n\"" << lambda.str() << "\"," << h.k << "," << h.l << "," << value << "\n";
  } else {
    out << value << "\n";
  }
}

inline void print_series(std::ostream& out, const RunConfig& cfg, const MultiSeries& s) {
  const auto& table = *s.poly.table();
  if (cfg.format == "json") {
    if (s.n + s.m == 1) {
      out << superschur::detail::series_json(s.univariate()) << "\n";
      return;
    }
    out << "[";
    bool first = true;
    for (const auto& [mono, c] : s.poly.sorted_terms()) {
      out << (first ? "" : ",") << "{\"exp\":[";
      for (std::size_t v = 0; v < table.size(); ++v) out << (v ? "," : "") << mono[v];
      out << "],\"coeff\":" << c << "}";
      first = false;
    }
    out << "]\n";
  } else if (cfg.format == "csv") {
    for (const auto& name : table.names()) out << name << ",";
    out << "coeff\n";
    for (const auto& [mono, c] : s.poly.sorted_terms()) {
      for (std::size_t v = 0; v < table.size(); ++v) out << mono[v] << ",";
      out << c << "\n";
    }
  } else {
    out << s.poly.to_string() << "\n";
  }
}

inline void print_suite(std::ostream& out, const RunConfig& cfg, const SuiteReport& r) {
  if (cfg.format == "csv") {
    out << "suite,cases,passed,failed,pass\n"
        << r.suite << "," << r.cases.size() << "," << r.passed() << "," << r.cases.size() - r.passed() << ","
        << (r.all_pass() ? "true" : "false") << "\n";
    out << "case,pass\n";
    for (const auto& c : r.cases) out << "\"" << c.name << "\"," << (c.pass ? "true" : "false") << "\n";
    return;
  }
  out << r.summary_json() << "\n";
  for (const auto& c : r.cases) {
    if (cfg.format == "json") {
      out << c.detail << "\n";
    } else {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    }
  }
}

}  // namespace detail

/// Executes one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Exact multiplicities and Poincare series for hook-type superalgebra invariants", "superschur"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for per-partition sweeps")->check(CLI::PositiveNumber);
  app.add_option("--cache", cfg.cache_path, "Character/Kronecker cache file (SUPERSCHUR_CACHE overrides)");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* mlambda = app.add_subcommand("mlambda", "m_lambda(k,l) by the character route");
  mlambda->add_option("--lambda", cfg.lambda_text, "Partition, e.g. 3,2,1")->required();
  mlambda->add_option("--hook", cfg.hook_text, "Hook K,L");
  add_common(mlambda);

  auto* mprime = app.add_subcommand("mprime", "m'_lambda(k,l) by the residue or character route");
  mprime->add_option("--lambda", cfg.lambda_text, "Partition")->required();
  mprime->add_option("--hook", cfg.hook_text, "Hook K,L");
  mprime->add_option("--route", cfg.route, "residue or char")->check(CLI::IsMember({"residue", "char", "character"}));
  mprime->add_flag("--dump-poly", cfg.dump_poly, "Also print the integrand HS_lambda(Z0;Z1)");
  add_common(mprime);

  auto* mbar = app.add_subcommand("mbar", "barred multiplicities; --route selects m-bar' by residue or character");
  mbar->add_option("--lambda", cfg.lambda_text, "Partition")->required();
  mbar->add_option("--hook", cfg.hook_text, "Hook K,L");
  mbar->add_option("--route", cfg.route, "residue or char")->check(CLI::IsMember({"residue", "char", "character"}));
  add_common(mbar);

  auto* series = app.add_subcommand("series", "Poincare series through a total degree");
  series->add_option("--mode", cfg.mode, "plain, prime, bar or barprime")
      ->check(CLI::IsMember({"plain", "prime", "bar", "barprime", "bar_prime"}));
  series->add_option("--hook", cfg.hook_text, "Hook K,L");
  series->add_option("--n", cfg.n, "Number of even variables t")->check(CLI::NonNegativeNumber);
  series->add_option("--m", cfg.m, "Number of odd variables u")->check(CLI::NonNegativeNumber);
  series->add_option("--degree", cfg.degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  series->add_option("--route", cfg.route, "Route for primed modes")
      ->check(CLI::IsMember({"residue", "char", "character"}));
  add_common(series);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "budzik, lemmas or qidentities")
      ->required()
      ->check(CLI::IsMember({"budzik", "lemmas", "qidentities"}));
  verify->add_option("--max-size", cfg.max_size, "Largest |lambda|")->check(CLI::NonNegativeNumber);
  verify->add_option("--hooks", cfg.hooks_text, "Hooks, e.g. \"1,1;2,1\"");
  verify->add_option("--degree", cfg.degree, "Series degree for qidentities")->check(CLI::PositiveNumber);
  add_common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (const char* env = std::getenv("SUPERSCHUR_CACHE"); env && *env) cfg.cache_path = env;

  try {
    KroneckerCache cache;
    if (!cfg.cache_path.empty()) cache.load(cfg.cache_path);
    ResidueEngines engines;
    Multiplicities mult(cache, engines);
    int code = kOk;
    const Hook hook = Hook::parse(cfg.hook_text);

    if (mlambda->parsed()) {
      const auto lambda = Partition::parse(cfg.lambda_text);
      detail::print_value(out, cfg, "m", lambda, hook, mult.m(lambda, hook));
    } else if (mprime->parsed()) {
      const auto lambda = Partition::parse(cfg.lambda_text);
      const Route route = parse_route(cfg.route);
      if (route == Route::Residue && hook.k + hook.l < 1) throw InvalidArgument("mprime: need k + l >= 1");
      if (cfg.dump_poly && route == Route::Residue) {
        out << "poly: " << engines.get(hook).integrand(lambda).to_string() << "\n";
      }
      detail::print_value(out, cfg, "m_prime", lambda, hook, mult.value(SeriesMode::Prime, route, lambda, hook));
    } else if (mbar->parsed()) {
      const auto lambda = Partition::parse(cfg.lambda_text);
      const Route route = parse_route(cfg.route);
      if (cfg.format == "json") {
        out << "{\"lambda\":[" << lambda.str() << "],\"k\":" << hook.k << ",\"l\":" << hook.l
            << ",\"m_bar\":" << mult.m_bar(lambda, hook)
            << ",\"m_bar_prime\":" << mult.value(SeriesMode::BarPrime, route, lambda, hook) << "}\n";
      } else {
        detail::print_value(out, cfg, "m_bar_prime", lambda, hook,
                            mult.value(SeriesMode::BarPrime, route, lambda, hook));
      }
    } else if (series->parsed()) {
      if (cfg.n + cfg.m < 1) throw InvalidArgument("series: need n + m >= 1");
      const auto s = p_series(mult, parse_mode(cfg.mode), hook, cfg.n, cfg.m, cfg.degree, parse_route(cfg.route),
                              cfg.jobs);
      detail::print_series(out, cfg, s);
    } else if (verify->parsed()) {
      auto hooks = parse_hook_list(cfg.hooks_text);
      if (hooks.empty()) hooks = {{1, 1}};
      SuiteReport report;
      if (cfg.suite == "budzik") {
        report = budzik_suite(mult, cfg.max_size, hooks, cfg.jobs);
      } else if (cfg.suite == "lemmas") {
        report = lemma_suite(mult, cfg.max_size, hooks, cfg.jobs);
      } else {
        report = qidentity_suite(mult, cfg.degree, hooks, 2, cfg.jobs);
      }
      detail::print_suite(out, cfg, report);
      if (!report.all_pass()) code = kVerificationFailed;
    }
    if (!cfg.cache_path.empty()) cache.save(cfg.cache_path);
    return code;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace superschur::cli
