#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "superschur/charkron.hpp"
#include "superschur/hookschur.hpp"
#include "superschur/partition.hpp"
#include "superschur/residue.hpp"

namespace superschur {

enum class SeriesMode { Plain, Prime, Bar, BarPrime };

inline const char* mode_name(SeriesMode m) {
  switch (m) {
    case SeriesMode::Plain: return "plain";
    case SeriesMode::Prime: return "prime";
    case SeriesMode::Bar: return "bar";
    case SeriesMode::BarPrime: return "barprime";
  }
  return "?";
}

/// Runs f(0..count-1) on up to `jobs` threads. Results must be written to per-index slots.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// Every multiplicity by every route, memoized. Shares a Kronecker cache and residue engines.
class Multiplicities {
 public:
  explicit Multiplicities(KroneckerCache& cache = default_cache(), ResidueEngines& engines = default_engines(),
                          TruncationPolicy policy = {})
      : cache_(cache), engines_(engines), policy_(policy) {}

  KroneckerCache& cache() { return cache_; }
  ResidueEngines& engines() { return engines_; }
  TruncationPolicy policy() const { return policy_; }

  /// m_lambda(k, l); H(0, 0) = {empty}.
  Integer m(const Partition& lambda, Hook h) { return m_lambda(cache_, lambda, h); }

  /// m_lambda(k, l) - m_lambda(k-1, l-1); the subtrahend is 0 when min(k, l) = 0.
  Integer m_prime_char(const Partition& lambda, Hook h) {
    Integer v = m(lambda, h);
    if (h.has_smaller()) v -= m(lambda, h.shrink());
    return v;
  }

  Integer m_bar(const Partition& lambda, Hook h) { return m_bar_lambda(cache_, lambda, h); }

  Integer m_bar_prime_char(const Partition& lambda, Hook h) {
    Integer v = m_bar(lambda, h);
    if (h.has_smaller()) v -= m_bar(lambda, h.shrink());
    return v;
  }

  Integer m_prime_residue(const Partition& lambda, Hook h) {
    return memo(lambda, h, false, [&] { return engines_.get(h).m_prime(lambda, policy_); });
  }

  Integer m_bar_prime_residue(const Partition& lambda, Hook h) {
    return memo(lambda, h, true, [&] { return engines_.get(h).m_bar_prime(lambda, policy_); });
  }

  /// The multiplicity attached to `mode`; `route` only matters for the primed modes.
  Integer value(SeriesMode mode, Route route, const Partition& lambda, Hook h) {
    switch (mode) {
      case SeriesMode::Plain: return m(lambda, h);
      case SeriesMode::Bar: return m_bar(lambda, h);
      case SeriesMode::Prime:
        return route == Route::Residue ? m_prime_residue(lambda, h) : m_prime_char(lambda, h);
      case SeriesMode::BarPrime:
        return route == Route::Residue ? m_bar_prime_residue(lambda, h) : m_bar_prime_char(lambda, h);
    }
    throw InvalidArgument("unknown series mode");
  }

  MultiplicityRecord record(const Partition& lambda, Hook h, Route route) {
    MultiplicityRecord r{lambda, h, m(lambda, h), std::nullopt, m_bar(lambda, h), std::nullopt, route};
    r.m_prime = value(SeriesMode::Prime, route, lambda, h);
    r.m_bar_prime = value(SeriesMode::BarPrime, route, lambda, h);
    return r;
  }

 private:
  template <typename F>
  Integer memo(const Partition& lambda, Hook h, bool bar, F compute) {
    auto key = std::make_tuple(lambda, h, bar);
    {
      std::lock_guard lock(mutex_);
      if (auto it = residues_.find(key); it != residues_.end()) return it->second;
    }
    Integer v = compute();
    std::lock_guard lock(mutex_);
    residues_.emplace(key, v);
    return v;
  }

  KroneckerCache& cache_;
  ResidueEngines& engines_;
  TruncationPolicy policy_;
  std::mutex mutex_;
  std::map<std::tuple<Partition, Hook, bool>, Integer> residues_;
};

/// Table t1..tn, u1..um.
inline VarTablePtr tu_table(int n, int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  for (int j = 1; j <= m; ++j) names.push_back("u" + std::to_string(j));
  return make_table(std::move(names));
}

/// A multigraded series in t1..tn, u1..um known through total degree `degree`.
struct MultiSeries {
  int n = 0;
  int m = 0;
  int degree = 0;
  LaurentPoly poly;

  /// Dense coefficient list when there is exactly one variable.
  std::vector<Integer> univariate() const {
    if (n + m != 1) throw InvalidArgument("MultiSeries::univariate: series has several variables");
    std::vector<Integer> out(static_cast<std::size_t>(degree) + 1);
    for (const auto& [mono, c] : poly.terms()) out.at(static_cast<std::size_t>(mono[0])) = c;
    return out;
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.n == b.n && a.m == b.m && a.degree == b.degree && a.poly == b.poly;
  }
};

/// sum_{|lambda| <= D} multiplicity(lambda) HS_lambda(T; U). Partitions outside H(n, m)
/// are skipped since their hook Schur function vanishes.
inline MultiSeries p_series(Multiplicities& mult, SeriesMode mode, Hook h, int n, int m, int degree,
                            Route route = Route::Residue, int jobs = 1) {
  if (n < 0 || m < 0 || n + m < 1) throw InvalidArgument("p_series: need n + m >= 1");
  if (degree < 0) throw InvalidArgument("p_series: negative degree");
  if (h.k < 0 || h.l < 0) throw InvalidArgument("p_series: negative hook");
  const VarTablePtr table = tu_table(n, m);
  std::vector<std::string> tn, un;
  for (int i = 0; i < n; ++i) tn.push_back(table->name(static_cast<std::size_t>(i)));
  for (int j = 0; j < m; ++j) un.push_back(table->name(static_cast<std::size_t>(n + j)));
  const HookSchurEvaluator hs(Alphabet::variables(table, tn), Alphabet::variables(table, un));

  std::vector<Partition> lambdas;
  for (int d = 0; d <= degree; ++d) {
    for (auto& p : enumerate(d, PartitionConstraints::within({n, m}))) lambdas.push_back(std::move(p));
  }
  std::vector<LaurentPoly> contributions(lambdas.size());
  parallel_for(lambdas.size(), jobs, [&](std::size_t i) {
    const Integer c = mult.value(mode, route, lambdas[i], h);
    contributions[i] = c == 0 ? LaurentPoly(table) : hs(lambdas[i]) * c;
  });
  MultiSeries out{n, m, degree, LaurentPoly(table)};
  for (const auto& c : contributions) out.poly += c;
  return out;
}

/// Diagonal sum over (k-i, l-i), i = 0..min(k, l), of the primed series.
inline MultiSeries diagonal_prime_sum(Multiplicities& mult, Hook h, int n, int m, int degree,
                                      Route route = Route::Residue, int jobs = 1) {
  MultiSeries total{n, m, degree, LaurentPoly(tu_table(n, m))};
  for (int i = 0; i <= std::min(h.k, h.l); ++i) {
    total.poly += p_series(mult, SeriesMode::Prime, {h.k - i, h.l - i}, n, m, degree, route, jobs).poly;
  }
  return total;
}

struct BudzikReport {
  Partition lambda;
  Hook hook;
  Integer lhs;  ///< residue route
  Integer rhs;  ///< character route m(k,l) - m(k-1,l-1)
  Integer diagonal_sum;  ///< sum_i of residue values on (k-i, l-i)
  Integer m;             ///< m_lambda(k, l)
  bool pass = false;     ///< lhs == rhs and diagonal_sum == m

  /// {"lambda":[...], "k":int, "l":int, "lhs":int, "rhs":int, "pass":bool}
  std::string to_json() const {
    std::ostringstream os;
    os << "{\"lambda\":[" << lambda.str() << "],\"k\":" << hook.k << ",\"l\":" << hook.l
       << ",\"lhs\":" << lhs << ",\"rhs\":" << rhs << ",\"pass\":" << (pass ? "true" : "false") << "}";
    return os.str();
  }
};

/// Residue route against character route for one (lambda, hook), plus the diagonal-sum form.
inline BudzikReport verify_budzik(Multiplicities& mult, const Partition& lambda, Hook h) {
  BudzikReport r{lambda, h, mult.m_prime_residue(lambda, h), mult.m_prime_char(lambda, h), 0,
                 mult.m(lambda, h)};
  for (int i = 0; i <= std::min(h.k, h.l); ++i) {
    r.diagonal_sum += mult.m_prime_residue(lambda, {h.k - i, h.l - i});
  }
  r.pass = r.lhs == r.rhs && r.diagonal_sum == r.m;
  return r;
}

struct DerivativeCheck {
  bool holds = false;
  std::string report;
};

/// Takes the part of the (n+1)-variable series linear in t_{n+1}, divides out t_{n+1},
/// and compares with the barred n-variable series through degree D - 1.
inline DerivativeCheck check_derivative_relation(Multiplicities& mult, Hook h, int n, int degree, bool primed,
                                                 Route route = Route::Residue, int jobs = 1) {
  if (degree < 1) throw InvalidArgument("check_derivative_relation: degree must be >= 1");
  const MultiSeries full =
      p_series(mult, primed ? SeriesMode::Prime : SeriesMode::Plain, h, n + 1, 0, degree, route, jobs);
  const LaurentPoly linear = slice(full.poly, static_cast<std::size_t>(n), 1);
  const MultiSeries bar =
      p_series(mult, primed ? SeriesMode::BarPrime : SeriesMode::Bar, h, n, 0, degree - 1, route, jobs);
  const LaurentPoly derived = rebase(linear, bar.poly.table());
  DerivativeCheck out;
  out.holds = derived == bar.poly;
  out.report = "d/dt" + std::to_string(n + 1) + " at 0: " + derived.to_string() + " ; barred series: " +
               bar.poly.to_string();
  return out;
}

}  // namespace superschur
