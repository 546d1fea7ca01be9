#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "superschur/hookschur.hpp"
#include "superschur/laurent.hpp"
#include "superschur/partition.hpp"

namespace superschur {

/// Variable table x1..xk, y1..yl shared by every residue computation for hook (k, l).
inline VarTablePtr xy_table(Hook h) {
  std::vector<std::string> names;
  for (int i = 1; i <= h.k; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= h.l; ++j) names.push_back("y" + std::to_string(j));
  return make_table(std::move(names));
}

inline std::size_t x_index(Hook, int i) { return static_cast<std::size_t>(i); }
inline std::size_t y_index(Hook h, int j) { return static_cast<std::size_t>(h.k + j); }

inline Alphabet x_alphabet(const VarTablePtr& t, Hook h) {
  std::vector<SignedMonomial> letters;
  for (int i = 0; i < h.k; ++i) letters.push_back({1, Monomial::unit(x_index(h, i))});
  return {t, std::move(letters)};
}

inline Alphabet y_alphabet(const VarTablePtr& t, Hook h) {
  std::vector<SignedMonomial> letters;
  for (int j = 0; j < h.l; ++j) letters.push_back({1, Monomial::unit(y_index(h, j))});
  return {t, std::move(letters)};
}

/// Even alphabet {x_i/x_j} u {y_i/y_j} over all ordered pairs, diagonal included:
/// k^2 + l^2 letters, k + l of which are 1.
inline Alphabet even_alphabet(const VarTablePtr& t, Hook h) {
  std::vector<SignedMonomial> letters;
  for (int i = 0; i < h.k; ++i) {
    for (int j = 0; j < h.k; ++j) {
      letters.push_back({1, Monomial::unit(x_index(h, i)) - Monomial::unit(x_index(h, j))});
    }
  }
  for (int i = 0; i < h.l; ++i) {
    for (int j = 0; j < h.l; ++j) {
      letters.push_back({1, Monomial::unit(y_index(h, i)) - Monomial::unit(y_index(h, j))});
    }
  }
  return {t, std::move(letters)};
}

/// Odd alphabet {x_i/y_j} u {y_j/x_i}: 2kl letters.
inline Alphabet odd_alphabet(const VarTablePtr& t, Hook h) {
  std::vector<SignedMonomial> letters;
  for (int i = 0; i < h.k; ++i) {
    for (int j = 0; j < h.l; ++j) {
      letters.push_back({1, Monomial::unit(x_index(h, i)) - Monomial::unit(y_index(h, j))});
    }
  }
  for (int i = 0; i < h.k; ++i) {
    for (int j = 0; j < h.l; ++j) {
      letters.push_back({1, Monomial::unit(y_index(h, j)) - Monomial::unit(x_index(h, i))});
    }
  }
  return {t, std::move(letters)};
}

/// The integration kernel
///
///   prod_{i!=j}(1 - x_i/x_j) prod_{i!=j}(1 - y_i/y_j) / prod_{i,j}(1 + x_i/y_j)(1 + y_j/x_i)
///
/// expanded for |x_i| > |y_j|. Each denominator pair equals
/// (y_j/x_i) * sum_{m>=0} (m+1)(-y_j/x_i)^m, so the kernel is the finite part
/// (numerator times prod_i x_i^{-l} prod_j y_j^{k}) times one such series per (i, j).
struct DeltaKernel {
  Hook hook;
  VarTablePtr table;
  LaurentPoly finite_part;
  std::vector<std::pair<int, int>> series_factors;  ///< (i, j), grouped by i then j

  static DeltaKernel build(Hook h, VarTablePtr t = nullptr) {
    if (!t) t = xy_table(h);
    LaurentPoly num = LaurentPoly::constant(t, 1);
    auto ratio_factor = [&](std::size_t a, std::size_t b) {
      return LaurentPoly::constant(t, 1) - LaurentPoly::term(t, Monomial::unit(a) - Monomial::unit(b));
    };
    for (int i = 0; i < h.k; ++i) {
      for (int j = 0; j < h.k; ++j) {
        if (i != j) num *= ratio_factor(x_index(h, i), x_index(h, j));
      }
    }
    for (int i = 0; i < h.l; ++i) {
      for (int j = 0; j < h.l; ++j) {
        if (i != j) num *= ratio_factor(y_index(h, i), y_index(h, j));
      }
    }
    Monomial prefactor;
    for (int i = 0; i < h.k; ++i) prefactor[x_index(h, i)] = static_cast<std::int16_t>(-h.l);
    for (int j = 0; j < h.l; ++j) prefactor[y_index(h, j)] = static_cast<std::int16_t>(h.k);
    DeltaKernel d{h, t, num.shifted(prefactor), {}};
    for (int i = 0; i < h.k; ++i) {
      for (int j = 0; j < h.l; ++j) d.series_factors.emplace_back(i, j);
    }
    return d;
  }

  /// The numerator prod_{i!=j}(1 - x_i/x_j) prod_{i!=j}(1 - y_i/y_j) alone.
  LaurentPoly numerator() const {
    Monomial prefactor;
    for (int i = 0; i < hook.k; ++i) prefactor[x_index(hook, i)] = static_cast<std::int16_t>(hook.l);
    for (int j = 0; j < hook.l; ++j) prefactor[y_index(hook, j)] = static_cast<std::int16_t>(-hook.k);
    return finite_part.shifted(prefactor);
  }

  /// The kernel with every series factor cut after the (y/x)^order term.
  LaurentPoly expand(int order) const {
    LaurentPoly out = finite_part;
    for (auto [i, j] : series_factors) out *= series_factor(i, j, order);
    return out;
  }

  /// sum_{m=0}^{order} (m+1)(-y_j/x_i)^m
  LaurentPoly series_factor(int i, int j, int order) const {
    LaurentPoly s(table);
    const Monomial step = Monomial::unit(y_index(hook, j)) - Monomial::unit(x_index(hook, i));
    Monomial cur;
    for (int m = 0; m <= order; ++m) {
      s.add_term(cur, Integer(m % 2 ? -(m + 1) : (m + 1)));
      cur += step;
    }
    return s;
  }

  /// prod_{i,j} (1 + x_i/y_j)(1 + y_j/x_i), the kernel's denominator.
  LaurentPoly denominator() const {
    LaurentPoly out = LaurentPoly::constant(table, 1);
    for (auto [i, j] : series_factors) {
      const Monomial r = Monomial::unit(x_index(hook, i)) - Monomial::unit(y_index(hook, j));
      LaurentPoly one = LaurentPoly::constant(table, 1);
      out *= (one + LaurentPoly::term(table, r)) * (one + LaurentPoly::term(table, r.inverse()));
    }
    return out;
  }
};

/// How far each series factor of the kernel is expanded.
struct TruncationPolicy {
  enum class Strategy {
    /// Per-term bound: a term with x_i-degree a and y_j-degree b takes m <= min(a, -b).
    /// Terms with negative x-degree or positive y-degree are dropped as soon as they appear,
    /// since later factors only lower x-degrees and raise y-degrees.
    PerTerm,
    /// Factor (i, j) is cut at the current maximum x_i-degree of the accumulated product
    /// plus `slack`. Terms are dropped only once every factor touching x_i is absorbed,
    /// and y-degrees are filtered only at the end.
    MaxDegree,
  };
  Strategy strategy = Strategy::PerTerm;
  int slack = 0;

  static TruncationPolicy fast() { return {}; }
  static TruncationPolicy max_degree(int slack = 0) { return {Strategy::MaxDegree, slack}; }
};

namespace detail {

inline void check_xy_table(const LaurentPoly& f, Hook h, const VarTablePtr& expected) {
  if (f.table() && !(*f.table() == *expected)) {
    throw InvalidArgument("residue: polynomial is not over x1..x" + std::to_string(h.k) + ", y1..y" +
                          std::to_string(h.l));
  }
}

}  // namespace detail

/// Constant term of f * Delta (not yet divided by k! l!). f must be over xy_table(hook).
inline Integer constant_term_with_kernel(const LaurentPoly& f, const DeltaKernel& kernel,
                                         TruncationPolicy policy = {}) {
  const Hook h = kernel.hook;
  detail::check_xy_table(f, h, kernel.table);
  if (f.is_zero()) return 0;
  LaurentPoly acc = f * kernel.finite_part;
  const bool per_term = policy.strategy == TruncationPolicy::Strategy::PerTerm;
  auto x_of = [&](int i) { return x_index(h, i); };
  auto y_of = [&](int j) { return y_index(h, j); };

  if (per_term) {
    acc.retain([&](const Monomial& m) {
      for (int i = 0; i < h.k; ++i) {
        if (m[x_of(i)] < 0) return false;
      }
      for (int j = 0; j < h.l; ++j) {
        if (m[y_of(j)] > 0) return false;
      }
      return true;
    });
  }

  std::vector<Integer> weights;
  for (int i = 0; i < h.k; ++i) {
    for (int j = 0; j < h.l; ++j) {
      const std::size_t xv = x_of(i), yv = y_of(j);
      int bound = 0;
      if (!per_term) {
        int top = 0;
        for (const auto& [m, c] : acc.terms()) top = std::max(top, m[xv]);
        bound = top + policy.slack;
      }
      LaurentPoly next(acc.table());
      next.reserve(acc.term_count() * 2);
      for (const auto& [m, c] : acc.terms()) {
        const int limit = per_term ? std::min(m[xv] + policy.slack, -m[yv] + policy.slack) : bound;
        Monomial cur = m;
        for (int s = 0; s <= limit; ++s) {
          if (per_term && (cur[xv] < 0 || cur[yv] > 0)) break;
          next.add_term(cur, s % 2 ? Integer(-(s + 1) * c) : Integer((s + 1) * c));
          cur[xv] = static_cast<std::int16_t>(cur[xv] - 1);
          cur[yv] = static_cast<std::int16_t>(cur[yv] + 1);
        }
      }
      acc = std::move(next);
    }
    // Nothing left can change the x_i-degree.
    acc.retain([&](const Monomial& m) { return m[x_of(i)] == 0; });
  }
  return acc.constant_term();
}

/// Exact constant-term realization of the contour integrals for one hook.
///
/// Holds the kernel, the even/odd alphabets and a memoized hook Schur evaluator over
/// them. Safe to share between threads.
class ResidueEngine {
 public:
  explicit ResidueEngine(Hook h)
      : hook_(h),
        table_(xy_table(h)),
        kernel_(DeltaKernel::build(h, table_)),
        even_(even_alphabet(table_, h)),
        odd_(odd_alphabet(table_, h)),
        integrand_(even_, odd_) {
    if (h.k < 0 || h.l < 0) throw InvalidArgument("ResidueEngine: negative hook");
    if (h.k + h.l > static_cast<int>(kMaxVariables)) throw InvalidArgument("ResidueEngine: hook too large");
  }

  Hook hook() const { return hook_; }
  const VarTablePtr& table() const { return table_; }
  const DeltaKernel& kernel() const { return kernel_; }
  const Alphabet& even() const { return even_; }
  const Alphabet& odd() const { return odd_; }
  Alphabet x() const { return x_alphabet(table_, hook_); }
  Alphabet y() const { return y_alphabet(table_, hook_); }

  /// HS_lambda(Z0; Z1).
  LaurentPoly integrand(const Partition& lambda) const { return integrand_(lambda); }

  /// (k! l!)^{-1} CT(f * Delta); the division must be exact.
  Integer normalized_constant_term(const LaurentPoly& f, TruncationPolicy policy = {}) const {
    const Integer raw = constant_term_with_kernel(f, kernel_, policy);
    return divide_exact(raw, factorial(hook_.k) * factorial(hook_.l), "residue normalization");
  }

  /// <f, g> = (k! l!)^{-1} CT(f(X;Y) g(X^-1;Y^-1) Delta).
  Integer inner_product(const LaurentPoly& f, const LaurentPoly& g, TruncationPolicy policy = {}) const {
    detail::check_xy_table(f, hook_, table_);
    detail::check_xy_table(g, hook_, table_);
    LaurentPoly fr = f.table() ? f : LaurentPoly(table_);
    LaurentPoly gr = g.table() ? invert_variables(g) : LaurentPoly(table_);
    return normalized_constant_term(fr * gr, policy);
  }

  /// m'_lambda(k, l) = <HS_lambda(Z0; Z1), 1>.
  Integer m_prime(const Partition& lambda, TruncationPolicy policy = {}) const {
    return normalized_constant_term(integrand(lambda), policy);
  }

  /// The concomitant analogue: <HS_lambda(Z0; Z1) * sum_{z in Z0 u Z1} z, 1>.
  Integer m_bar_prime(const Partition& lambda, TruncationPolicy policy = {}) const {
    return normalized_constant_term(integrand(lambda) * (even_ + odd_).sum(), policy);
  }

 private:
  Hook hook_;
  VarTablePtr table_;
  DeltaKernel kernel_;
  Alphabet even_, odd_;
  HookSchurEvaluator integrand_;
};

/// Engines keyed by hook, created on first use and kept for the cache's lifetime.
class ResidueEngines {
 public:
  const ResidueEngine& get(Hook h) {
    std::lock_guard lock(mutex_);
    auto it = engines_.find(h);
    if (it == engines_.end()) it = engines_.emplace(h, std::make_unique<ResidueEngine>(h)).first;
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::map<Hook, std::unique_ptr<ResidueEngine>> engines_;
};

inline ResidueEngines& default_engines() {
  static ResidueEngines engines;
  return engines;
}

inline Integer inner_product(const LaurentPoly& f, const LaurentPoly& g, Hook h, TruncationPolicy policy = {}) {
  return default_engines().get(h).inner_product(f, g, policy);
}

inline Integer m_prime_residue(const Partition& lambda, Hook h, TruncationPolicy policy = {}) {
  return default_engines().get(h).m_prime(lambda, policy);
}

inline Integer m_bar_prime_residue(const Partition& lambda, Hook h, TruncationPolicy policy = {}) {
  return default_engines().get(h).m_bar_prime(lambda, policy);
}

}  // namespace superschur
