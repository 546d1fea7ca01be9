#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "superschur/laurent.hpp"
#include "superschur/partition.hpp"

namespace superschur {

/// Ordered multiset of signed Laurent monomials over one VarTable.
///
/// Repeats and the constant monomial are allowed, so alphabets such as
/// {x1/x1, x1/x2, ...} can be written down literally.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(VarTablePtr table, std::vector<SignedMonomial> letters)
      : table_(std::move(table)), letters_(std::move(letters)) {}

  /// One letter per named variable, each with coefficient +1.
  static Alphabet variables(const VarTablePtr& table, const std::vector<std::string>& names) {
    std::vector<SignedMonomial> letters;
    for (const auto& n : names) letters.push_back({1, Monomial::unit(table->index_of(n))});
    return {table, std::move(letters)};
  }
  static Alphabet none(const VarTablePtr& table) { return {table, {}}; }

  const VarTablePtr& table() const { return table_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<SignedMonomial>& letters() const { return letters_; }
  LaurentPoly letter(std::size_t i) const { return LaurentPoly::from(table_, letters_.at(i)); }

  LaurentPoly sum() const {
    LaurentPoly s(table_);
    for (const auto& l : letters_) s.add_term(l.mono, l.sign);
    return s;
  }

  /// Multiset union.
  friend Alphabet operator+(const Alphabet& a, const Alphabet& b) {
    std::vector<SignedMonomial> all = a.letters_;
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return {a.table_ ? a.table_ : b.table_, std::move(all)};
  }

  /// Every letter negated: HS(X; -Y) is the super Schur function s(X/Y).
  Alphabet negated() const {
    Alphabet r = *this;
    for (auto& l : r.letters_) l.sign = -l.sign;
    return r;
  }

  /// Variable index of each letter if every letter is a distinct bare variable with sign +1.
  std::optional<std::vector<std::size_t>> plain_variables() const {
    std::vector<std::size_t> idx;
    for (const auto& l : letters_) {
      if (l.sign != 1) return std::nullopt;
      std::optional<std::size_t> var;
      for (std::size_t v = 0; v < kMaxVariables; ++v) {
        if (l.mono[v] == 0) continue;
        if (l.mono[v] != 1 || var) return std::nullopt;
        var = v;
      }
      if (!var || std::find(idx.begin(), idx.end(), *var) != idx.end()) return std::nullopt;
      idx.push_back(*var);
    }
    return idx;
  }

 private:
  VarTablePtr table_;
  std::vector<SignedMonomial> letters_;
};

namespace detail {

inline void check_same_table(const Alphabet& a, const Alphabet& b) {
  if (a.table() && b.table() && !(*a.table() == *b.table())) {
    throw InvalidArgument("alphabets live over different variable tables");
  }
}

inline VarTablePtr table_of(const Alphabet& a, const Alphabet& b) { return a.table() ? a.table() : b.table(); }

// Multiplies the series sum_n g[n] t^n by 1/(1 - z t) in place.
inline void absorb_complete(std::vector<LaurentPoly>& g, const SignedMonomial& z) {
  for (std::size_t n = 1; n < g.size(); ++n) g[n] += g[n - 1].shifted(z.mono, z.sign);
}

// Multiplies by (1 + z t) in place.
inline void absorb_elementary(std::vector<LaurentPoly>& g, const SignedMonomial& z) {
  for (std::size_t n = g.size(); n-- > 1;) g[n] += g[n - 1].shifted(z.mono, z.sign);
}

inline std::vector<LaurentPoly> unit_series(const VarTablePtr& table, int max_degree) {
  std::vector<LaurentPoly> g(static_cast<std::size_t>(max_degree) + 1, LaurentPoly(table));
  g[0] = LaurentPoly::constant(table, 1);
  return g;
}

}  // namespace detail

/// h_0..h_max of the super alphabet (A; B): coefficients of prod (1 + b t) / prod (1 - a t).
inline std::vector<LaurentPoly> super_complete(const Alphabet& a, const Alphabet& b, int max_degree) {
  detail::check_same_table(a, b);
  auto g = detail::unit_series(detail::table_of(a, b), max_degree);
  for (const auto& z : a.letters()) detail::absorb_complete(g, z);
  for (const auto& z : b.letters()) detail::absorb_elementary(g, z);
  return g;
}

/// e_0..e_max of the super alphabet (A; B): coefficients of prod (1 + a t) / prod (1 - b t).
inline std::vector<LaurentPoly> super_elementary(const Alphabet& a, const Alphabet& b, int max_degree) {
  detail::check_same_table(a, b);
  auto g = detail::unit_series(detail::table_of(a, b), max_degree);
  for (const auto& z : a.letters()) detail::absorb_elementary(g, z);
  for (const auto& z : b.letters()) detail::absorb_complete(g, z);
  return g;
}

inline std::vector<LaurentPoly> complete_homogeneous(const Alphabet& a, int max_degree) {
  return super_complete(a, Alphabet::none(a.table()), max_degree);
}
inline std::vector<LaurentPoly> elementary(const Alphabet& a, int max_degree) {
  return super_elementary(a, Alphabet::none(a.table()), max_degree);
}

/// Determinant by first-row Laplace expansion, memoized on the set of used columns.
inline LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m, const VarTablePtr& table) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(table, 1);
  if (n > 24) throw InvalidArgument("determinant: matrix too large");
  std::unordered_map<std::uint32_t, LaurentPoly> memo;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::function<LaurentPoly(std::uint32_t)> minor = [&](std::uint32_t used) -> LaurentPoly {
    if (used == full) return LaurentPoly::constant(table, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    const auto row = static_cast<std::size_t>(std::popcount(used));
    LaurentPoly acc(table);
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (std::uint32_t{1} << c)) continue;
      const LaurentPoly& entry = m[row][c];
      if (!entry.is_zero()) {
        LaurentPoly sub = minor(used | (std::uint32_t{1} << c));
        if (!sub.is_zero()) {
          LaurentPoly term = entry * sub;
          if (position % 2) term *= Integer(-1);
          acc += term;
        }
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0);
}

/// det(g_{outer_i - inner_j - i + j}) for a graded sequence g (g_0 = 1, g_{<0} = 0).
inline LaurentPoly jacobi_trudi(const Partition& outer, const Partition& inner,
                                const std::vector<LaurentPoly>& g, const VarTablePtr& table) {
  const int rows = outer.length();
  std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) {
      const int d = outer.at(i) - inner.at(j) - i + j;
      if (d < 0) {
        m[static_cast<std::size_t>(i)].emplace_back(table);
      } else if (static_cast<std::size_t>(d) >= g.size()) {
        throw InvalidArgument("jacobi_trudi: graded sequence too short");
      } else {
        m[static_cast<std::size_t>(i)].push_back(g[static_cast<std::size_t>(d)]);
      }
    }
  }
  return determinant(m, table);
}

/// s_{lambda/mu}(A) by Jacobi-Trudi, using whichever of the h- or e-forms is smaller.
inline LaurentPoly skew_schur_eval(const Partition& lambda, const Partition& mu, const Alphabet& a) {
  if (!lambda.contains(mu)) {
    throw InvalidArgument("skew_schur_eval: (" + mu.str() + ") is not contained in (" + lambda.str() + ")");
  }
  // Entries reach degree lambda_1 + length - 1, which can exceed |lambda/mu|.
  const int n = lambda.first() + lambda.length();
  if (lambda.length() <= lambda.first()) {
    return jacobi_trudi(lambda, mu, complete_homogeneous(a, n), a.table());
  }
  return jacobi_trudi(conjugate(lambda), conjugate(mu), elementary(a, n), a.table());
}

inline LaurentPoly schur_eval(const Partition& lambda, const Alphabet& a) {
  if (static_cast<std::size_t>(lambda.length()) > a.size()) return LaurentPoly(a.table());
  return skew_schur_eval(lambda, {}, a);
}

/// s_{lambda/mu}(A) as a sum over semistandard tableaux. Exponential; used as an oracle.
inline LaurentPoly skew_schur_tableaux(const Partition& lambda, const Partition& mu, const Alphabet& a) {
  if (!lambda.contains(mu)) throw InvalidArgument("skew_schur_tableaux: mu not contained in lambda");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = mu.at(i); j < lambda.at(i); ++j) cells.emplace_back(i, j);
  }
  const int letters = static_cast<int>(a.size());
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(lambda.length()),
                                     std::vector<int>(static_cast<std::size_t>(lambda.first()), -1));
  LaurentPoly out(a.table());
  std::function<void(std::size_t, Monomial, int)> rec = [&](std::size_t idx, Monomial m, int sign) {
    if (idx == cells.size()) {
      out.add_term(m, sign);
      return;
    }
    auto [i, j] = cells[idx];
    int lo = 0;
    if (j > mu.at(i)) lo = std::max(lo, fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
    if (i > 0 && j >= mu.at(i - 1)) {
      lo = std::max(lo, fill[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
    }
    for (int v = lo; v < letters; ++v) {
      fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      const auto& z = a.letters()[static_cast<std::size_t>(v)];
      rec(idx + 1, m + z.mono, sign * z.sign);
    }
    fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
  };
  rec(0, Monomial{}, 1);
  return out;
}

/// Every partition mu contained in lambda.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int cap) {
    if (row == lambda.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(cap, lambda.at(row)); p >= 0; --p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, lambda.first());
  return out;
}

/// HS_lambda(X; Y) = sum_{mu in lambda} s_mu(X) s_{lambda'/mu'}(Y), straight from the definition.
inline LaurentPoly hook_schur_def(const Partition& lambda, const Alphabet& x, const Alphabet& y) {
  detail::check_same_table(x, y);
  const Partition lc = conjugate(lambda);
  LaurentPoly out(detail::table_of(x, y));
  for (const Partition& mu : subpartitions(lambda)) {
    if (static_cast<std::size_t>(mu.length()) > x.size()) continue;
    LaurentPoly sx = schur_eval(mu, x);
    if (sx.is_zero()) continue;
    LaurentPoly sy = skew_schur_eval(lc, conjugate(mu), y);
    if (sy.is_zero()) continue;
    out += sx * sy;
  }
  return out;
}

/// Evaluates HS_lambda(X; Y) for many lambda by Jacobi-Trudi over the super h_n / e_n,
/// which are computed once and grown on demand. Thread-safe.
class HookSchurEvaluator {
 public:
  HookSchurEvaluator(Alphabet x, Alphabet y) : x_(std::move(x)), y_(std::move(y)) {
    detail::check_same_table(x_, y_);
  }

  const Alphabet& x() const { return x_; }
  const Alphabet& y() const { return y_; }
  VarTablePtr table() const { return detail::table_of(x_, y_); }

  LaurentPoly operator()(const Partition& lambda) const {
    if (!in_hook(lambda, {static_cast<int>(x_.size()), static_cast<int>(y_.size())})) {
      return LaurentPoly(table());
    }
    const bool rows = lambda.length() <= lambda.first();
    const int n = lambda.size();
    std::vector<LaurentPoly> g;
    {
      std::lock_guard lock(mutex_);
      auto& cache = rows ? complete_ : elementary_;
      if (static_cast<int>(cache.size()) <= n) {
        cache = rows ? super_complete(x_, y_, n) : super_elementary(x_, y_, n);
      }
      g.assign(cache.begin(), cache.begin() + n + 1);
    }
    return rows ? jacobi_trudi(lambda, {}, g, table()) : jacobi_trudi(conjugate(lambda), {}, g, table());
  }

 private:
  Alphabet x_, y_;
  mutable std::mutex mutex_;
  mutable std::vector<LaurentPoly> complete_, elementary_;
};

/// HS_lambda(X; Y) via the supersymmetric Jacobi-Trudi determinant.
inline LaurentPoly hook_schur(const Partition& lambda, const Alphabet& x, const Alphabet& y) {
  return HookSchurEvaluator(x, y)(lambda);
}

/// prod over boxes (i, j) of lambda of (x_i + y_j), where x_i = 0 for i > |X| and y_j = 0 for j > |Y|.
inline LaurentPoly f_lambda(const Partition& lambda, Hook h, const Alphabet& x, const Alphabet& y) {
  if (x.size() != static_cast<std::size_t>(h.k) || y.size() != static_cast<std::size_t>(h.l)) {
    throw InvalidArgument("f_lambda: alphabet sizes must match the hook");
  }
  const VarTablePtr table = detail::table_of(x, y);
  LaurentPoly out = LaurentPoly::constant(table, 1);
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.at(i); ++j) {
      LaurentPoly factor(table);
      if (i < h.k) factor += x.letter(static_cast<std::size_t>(i));
      if (j < h.l) factor += y.letter(static_cast<std::size_t>(j));
      if (factor.is_zero()) return LaurentPoly(table);
      out *= factor;
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> permutations_with_sign(std::size_t n, std::vector<int>& signs) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    signs.push_back(inversions % 2 ? -1 : 1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

/// HS_lambda(X; Y) as the symmetrization over S_k x S_l of f_lambda / (prod (1 - x_j/x_i) prod (1 - y_j/y_i)).
///
/// Each summand is rewritten over the common denominator V(X) V(Y) (Vandermonde products),
/// the signed numerators are summed, and the total is divided exactly.
inline LaurentPoly hook_schur_jp(const Partition& lambda, const Alphabet& x, const Alphabet& y) {
  detail::check_same_table(x, y);
  auto xv = x.plain_variables();
  auto yv = y.plain_variables();
  if (!xv || !yv) throw InvalidArgument("hook_schur_jp: alphabets must be distinct plain variables");
  for (std::size_t v : *xv) {
    if (std::find(yv->begin(), yv->end(), v) != yv->end()) {
      throw InvalidArgument("hook_schur_jp: X and Y share a variable");
    }
  }
  const VarTablePtr table = detail::table_of(x, y);
  const std::size_t k = xv->size(), l = yv->size();
  const Hook h{static_cast<int>(k), static_cast<int>(l)};

  // f * x^delta * y^delta with delta = (k-1, ..., 0); 1/prod_{i<j}(1 - x_j/x_i) = x^delta / V(X).
  LaurentPoly base = f_lambda(lambda, h, x, y);
  Monomial delta;
  for (std::size_t i = 0; i < k; ++i) delta[(*xv)[i]] = static_cast<std::int16_t>(k - 1 - i);
  for (std::size_t j = 0; j < l; ++j) delta[(*yv)[j]] = static_cast<std::int16_t>(l - 1 - j);
  base = base.shifted(delta);

  std::vector<int> xs, ys;
  const auto xperms = detail::permutations_with_sign(k, xs);
  const auto yperms = detail::permutations_with_sign(l, ys);
  LaurentPoly numerator(table);
  std::vector<SignedMonomial> images(table->size());
  for (std::size_t a = 0; a < xperms.size(); ++a) {
    for (std::size_t b = 0; b < yperms.size(); ++b) {
      for (std::size_t v = 0; v < table->size(); ++v) images[v] = {1, Monomial::unit(v)};
      for (std::size_t i = 0; i < k; ++i) images[(*xv)[i]] = {1, Monomial::unit((*xv)[xperms[a][i]])};
      for (std::size_t j = 0; j < l; ++j) images[(*yv)[j]] = {1, Monomial::unit((*yv)[yperms[b][j]])};
      LaurentPoly term = substitute(base, table, std::span<const SignedMonomial>(images));
      if (xs[a] * ys[b] < 0) term *= Integer(-1);
      numerator += term;
    }
  }
  LaurentPoly result = numerator;
  auto divide_vandermonde = [&](const std::vector<std::size_t>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        LaurentPoly d = LaurentPoly::variable(table, vars[i]) - LaurentPoly::variable(table, vars[j]);
        result = divide_exact(result, d);
      }
    }
  };
  divide_vandermonde(*xv);
  divide_vandermonde(*yv);
  return result;
}

/// prod_{i,j} (x_i + y_j) s_mu(X) s_nu(Y) with (mu, nu) the typical split of lambda.
inline LaurentPoly hook_schur_factorized(const Partition& lambda, Hook h, const Alphabet& x,
                                         const Alphabet& y) {
  if (x.size() != static_cast<std::size_t>(h.k) || y.size() != static_cast<std::size_t>(h.l)) {
    throw InvalidArgument("hook_schur_factorized: alphabet sizes must match the hook");
  }
  auto [mu, nu] = typical_split(lambda, h);
  const VarTablePtr table = detail::table_of(x, y);
  LaurentPoly out = LaurentPoly::constant(table, 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out *= x.letter(i) + y.letter(j);
  }
  return out * schur_eval(mu, x) * schur_eval(nu, y);
}

}  // namespace superschur
