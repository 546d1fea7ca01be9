#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "superschur/poincare.hpp"
#include "superschur/qseries.hpp"

namespace superschur {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;  ///< one JSON object
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.pass;
    return n;
  }
  bool all_pass() const { return passed() == cases.size(); }

  /// {"suite":..., "cases":N, "passed":N, "failed":N, "pass":bool}
  std::string summary_json() const {
    std::ostringstream os;
    os << "{\"suite\":\"" << suite << "\",\"cases\":" << cases.size() << ",\"passed\":" << passed()
       << ",\"failed\":" << cases.size() - passed() << ",\"pass\":" << (all_pass() ? "true" : "false") << "}";
    return os.str();
  }
};

namespace detail {

inline std::string json_bool(bool b) { return b ? "true" : "false"; }

inline std::string series_json(const std::vector<Integer>& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i].str();
  }
  return out + "]";
}

inline std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    for (auto& p : enumerate(n)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

/// Residue route against character route for every |lambda| <= max_size and hook.
inline SuiteReport budzik_suite(Multiplicities& mult, int max_size, const std::vector<Hook>& hooks, int jobs = 1) {
  SuiteReport report{"budzik", {}};
  const auto lambdas = detail::partitions_up_to(max_size);
  for (Hook h : hooks) {
    std::vector<BudzikReport> rows(lambdas.size());
    parallel_for(lambdas.size(), jobs, [&](std::size_t i) { rows[i] = verify_budzik(mult, lambdas[i], h); });
    for (const auto& r : rows) {
      report.cases.push_back({"lambda=(" + r.lambda.str() + ") hook=(" + h.str() + ")", r.pass, r.to_json()});
    }
  }
  return report;
}

/// Orthogonality of hook Schur functions, the barred multiplicity theorem, and the two
/// derivative relations between plain and barred series.
inline SuiteReport lemma_suite(Multiplicities& mult, int max_size, const std::vector<Hook>& hooks, int jobs = 1) {
  SuiteReport report{"lemmas", {}};
  const auto lambdas = detail::partitions_up_to(max_size);
  for (Hook h : hooks) {
    const ResidueEngine& engine = mult.engines().get(h);
    const HookSchurEvaluator hs(engine.x(), engine.y());
    std::vector<LaurentPoly> polys(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) polys[i] = hs(lambdas[i]);
    for (std::size_t a = 0; a < lambdas.size(); ++a) {
      for (std::size_t b = 0; b < lambdas.size(); ++b) {
        const Integer got = engine.inner_product(polys[a], polys[b], mult.policy());
        const int want = (a == b && is_typical(lambdas[a], h)) ? 1 : 0;
        std::ostringstream d;
        d << "{\"mu\":[" << lambdas[a].str() << "],\"nu\":[" << lambdas[b].str() << "],\"k\":" << h.k
          << ",\"l\":" << h.l << ",\"inner\":" << got << ",\"expected\":" << want << "}";
        report.cases.push_back({"orthogonality mu=(" + lambdas[a].str() + ") nu=(" + lambdas[b].str() +
                                    ") hook=(" + h.str() + ")",
                                got == want, d.str()});
      }
    }
    std::vector<std::pair<Integer, Integer>> bar(lambdas.size());
    parallel_for(lambdas.size(), jobs, [&](std::size_t i) {
      bar[i] = {mult.m_bar_prime_residue(lambdas[i], h), mult.m_bar_prime_char(lambdas[i], h)};
    });
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      std::ostringstream d;
      d << "{\"lambda\":[" << lambdas[i].str() << "],\"k\":" << h.k << ",\"l\":" << h.l
        << ",\"lhs\":" << bar[i].first << ",\"rhs\":" << bar[i].second
        << ",\"pass\":" << detail::json_bool(bar[i].first == bar[i].second) << "}";
      report.cases.push_back({"barred lambda=(" + lambdas[i].str() + ") hook=(" + h.str() + ")",
                              bar[i].first == bar[i].second, d.str()});
    }
    for (bool primed : {false, true}) {
      const int degree = std::max(1, std::min(max_size, 4));
      const auto check = check_derivative_relation(mult, h, 1, degree, primed, Route::Residue, jobs);
      std::ostringstream d;
      d << "{\"k\":" << h.k << ",\"l\":" << h.l << ",\"n\":1,\"degree\":" << degree
        << ",\"primed\":" << detail::json_bool(primed) << ",\"pass\":" << detail::json_bool(check.holds) << "}";
      report.cases.push_back({std::string(primed ? "derivative primed" : "derivative plain") + " hook=(" +
                                  h.str() + ")",
                              check.holds, d.str()});
    }
  }
  return report;
}

/// Generating-function identities for one even / one odd generic element, and the limit identities.
/// Residue values are used for hooks with k, l <= residue_limit, character values otherwise.
inline SuiteReport qidentity_suite(Multiplicities& mult, int degree, const std::vector<Hook>& hooks,
                                   int residue_limit = 2, int jobs = 1) {
  SuiteReport report{"qidentities", {}};
  for (Hook h : hooks) {
    const Route route = (h.k <= residue_limit && h.l <= residue_limit) ? Route::Residue : Route::Character;
    {
      const auto series = p_series(mult, SeriesMode::Prime, h, 1, 0, degree, route, jobs).univariate();
      const auto closed = closed_form_series(ClosedForm::TracesOneEven, h, degree).coefficients();
      const auto counted = gf_partitions(PartitionConstraints::typical_in(h), degree).coefficients();
      const bool ok = series == closed && series == counted;
      std::ostringstream d;
      d << "{\"k\":" << h.k << ",\"l\":" << h.l << ",\"route\":\"" << route_name(route)
        << "\",\"series\":" << detail::series_json(series) << ",\"closed_form\":" << detail::series_json(closed)
        << ",\"pass\":" << detail::json_bool(ok) << "}";
      report.cases.push_back({"one even element hook=(" + h.str() + ")", ok, d.str()});
    }
    if (h.k >= h.l) {
      const auto series = p_series(mult, SeriesMode::Prime, h, 0, 1, degree, route, jobs).univariate();
      const auto closed = closed_form_series(ClosedForm::SupertracesOneOdd, h, degree).coefficients();
      auto counted = gf_partitions(PartitionConstraints::within(h, true), degree);
      if (h.has_smaller()) counted -= gf_partitions(PartitionConstraints::within(h.shrink(), true), degree);
      const bool ok = series == closed && series == counted.coefficients();
      std::ostringstream d;
      d << "{\"k\":" << h.k << ",\"l\":" << h.l << ",\"route\":\"" << route_name(route)
        << "\",\"series\":" << detail::series_json(series) << ",\"closed_form\":" << detail::series_json(closed)
        << ",\"pass\":" << detail::json_bool(ok) << "}";
      report.cases.push_back({"one odd element hook=(" + h.str() + ")", ok, d.str()});
    }
  }
  const int limit_degree = std::max(degree, 1);
  for (auto [which, shift, name] : {std::tuple{LimitIdentity::SelfConjugateSum, 0, "self-conjugate sum"},
                                    std::tuple{LimitIdentity::ShiftedSum, 1, "shifted sum n=1"},
                                    std::tuple{LimitIdentity::ShiftedSum, 2, "shifted sum n=2"}}) {
    const auto check = check_limit_identity(which, limit_degree, shift);
    std::ostringstream d;
    d << "{\"identity\":\"" << name << "\",\"degree\":" << limit_degree
      << ",\"first_discrepancy\":" << (check.first_discrepancy ? std::to_string(*check.first_discrepancy) : "null")
      << ",\"pass\":" << detail::json_bool(check.holds) << "}";
    report.cases.push_back({std::string("limit identity ") + name, check.holds, d.str()});
  }
  return report;
}

}  // namespace superschur
