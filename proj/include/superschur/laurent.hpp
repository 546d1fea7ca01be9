#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superschur/integer.hpp"

namespace superschur {

inline constexpr std::size_t kMaxVariables = 16;

/// Ordered list of distinct variable names. Shared by every polynomial built over it.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVariables) {
      throw InvalidArgument("VarTable: at most " + std::to_string(kMaxVariables) + " variables");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw InvalidArgument("VarTable: duplicate variable " + names_[i]);
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    throw InvalidArgument("VarTable: unknown variable " + name);
  }
  bool has(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
  }

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_table(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

/// Dense exponent vector, one slot per table variable; unused slots stay zero.
struct Monomial {
  std::array<std::int16_t, kMaxVariables> exp{};

  int operator[](std::size_t i) const { return exp[i]; }
  std::int16_t& operator[](std::size_t i) { return exp[i]; }

  Monomial& operator+=(const Monomial& o) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) exp[i] = static_cast<std::int16_t>(exp[i] + o.exp[i]);
    return *this;
  }
  friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }
  friend Monomial operator-(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) a.exp[i] = static_cast<std::int16_t>(a.exp[i] - b.exp[i]);
    return a;
  }
  Monomial inverse() const { return Monomial{} - *this; }
  bool is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](std::int16_t e) { return e == 0; });
  }
  int total_degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  static Monomial unit(std::size_t var, int power = 1) {
    Monomial m;
    m.exp[var] = static_cast<std::int16_t>(power);
    return m;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::int16_t e : m.exp) {
      h ^= static_cast<std::uint16_t>(e);
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Graded-lexicographic order: higher total degree first, then lexicographically larger first.
inline bool graded_lex_before(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.exp > b.exp;
}

/// A Laurent monomial with a sign, e.g. -x1^-1 y2. Letters of alphabets and substitution images.
struct SignedMonomial {
  int sign = 1;
  Monomial mono;
};

/// Sparse Laurent polynomial with exact integer coefficients over a VarTable.
///
/// Terms with zero coefficient are never stored.
class LaurentPoly {
 public:
  using TermMap = std::unordered_map<Monomial, Integer, MonomialHash>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarTablePtr table) : table_(std::move(table)) {}

  static LaurentPoly constant(VarTablePtr table, const Integer& c) {
    LaurentPoly p(std::move(table));
    p.add_term(Monomial{}, c);
    return p;
  }
  static LaurentPoly term(VarTablePtr table, const Monomial& m, const Integer& c = 1) {
    LaurentPoly p(std::move(table));
    p.add_term(m, c);
    return p;
  }
  static LaurentPoly variable(VarTablePtr table, std::size_t var, int power = 1) {
    if (var >= table->size()) throw InvalidArgument("LaurentPoly::variable: index out of range");
    return term(std::move(table), Monomial::unit(var, power));
  }
  static LaurentPoly variable(const VarTablePtr& table, const std::string& name, int power = 1) {
    return variable(table, table->index_of(name), power);
  }
  static LaurentPoly from(const VarTablePtr& table, const SignedMonomial& s) {
    return term(table, s.mono, s.sign);
  }

  const VarTablePtr& table() const { return table_; }
  std::size_t variable_count() const { return table_ ? table_->size() : 0; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void reserve(std::size_t n) { terms_.reserve(n); }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  Integer constant_term() const { return coefficient(Monomial{}); }

  /// (min, max) exponent of `var` over all terms.
  std::pair<int, int> degree_range(std::size_t var) const {
    if (is_zero()) throw InvalidArgument("degree_range: zero polynomial");
    int lo = terms_.begin()->first[var], hi = lo;
    for (const auto& [m, c] : terms_) {
      lo = std::min(lo, m[var]);
      hi = std::max(hi, m[var]);
    }
    return {lo, hi};
  }

  /// Terms in graded-lexicographic order; the order used for all serialization.
  std::vector<std::pair<Monomial, Integer>> sorted_terms() const {
    std::vector<std::pair<Monomial, Integer>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return graded_lex_before(a.first, b.first); });
    return out;
  }

  /// Keeps only the terms for which `keep(monomial)` holds.
  template <typename Pred>
  void retain(Pred keep) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = keep(it->first) ? std::next(it) : terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    adopt_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    adopt_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& s) { return a *= s; }
  friend LaurentPoly operator*(const Integer& s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) { return multiply(f, g); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = multiply(*this, o); }

  /// Multiplies every term by a signed monomial.
  LaurentPoly shifted(const Monomial& m, int sign = 1) const {
    LaurentPoly r(table_);
    r.terms_.reserve(terms_.size());
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono + m, sign < 0 ? Integer(-c) : c);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return same_table(a, b) && a.terms_ == b.terms_;
  }

  static bool same_table(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.table_ == b.table_) return true;
    return a.table_ && b.table_ && *a.table_ == *b.table_;
  }

  /// Exact product, accumulated in a hash map.
  static LaurentPoly multiply(const LaurentPoly& f, const LaurentPoly& g) {
    check_tables(f, g, "multiply");
    LaurentPoly r(f.table_ ? f.table_ : g.table_);
    if (f.is_zero() || g.is_zero()) return r;
    const LaurentPoly& big = f.term_count() >= g.term_count() ? f : g;
    const LaurentPoly& small = &big == &f ? g : f;
    r.terms_.reserve(big.term_count() * std::min<std::size_t>(small.term_count(), 8));
    Integer prod;
    for (const auto& [ms, cs] : small.terms_) {
      for (const auto& [mb, cb] : big.terms_) {
        prod = cs;
        prod *= cb;
        r.add_term(ms + mb, prod);
      }
    }
    return r;
  }

  /// "c * x1^a1 * y1^b1 + ..." in graded-lex order; "0" for the zero polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
      if (!first) out += " + ";
      first = false;
      out += c.str();
      for (std::size_t v = 0; v < variable_count(); ++v) {
        if (m[v] != 0) out += " * " + table_->name(v) + "^" + std::to_string(m[v]);
      }
    }
    return out;
  }

 private:
  static void check_tables(const LaurentPoly& f, const LaurentPoly& g, const char* op) {
    if (f.table_ && g.table_ && !same_table(f, g)) {
      throw InvalidArgument(std::string(op) + ": variable tables differ");
    }
  }
  void adopt_table(const LaurentPoly& o) {
    check_tables(*this, o, "add");
    if (!table_) table_ = o.table_;
  }

  VarTablePtr table_;
  TermMap terms_;
};

inline LaurentPoly pow(const LaurentPoly& f, int e) {
  if (e < 0) throw InvalidArgument("pow: negative exponent");
  LaurentPoly r = LaurentPoly::constant(f.table(), 1);
  for (int i = 0; i < e; ++i) r *= f;
  return r;
}

/// Image of f under variables -> signed monomials of `target`. `images[i]` is the image of variable i.
inline LaurentPoly substitute(const LaurentPoly& f, const VarTablePtr& target,
                              std::span<const SignedMonomial> images) {
  if (images.size() != f.variable_count()) {
    throw InvalidArgument("substitute: need one image per source variable");
  }
  for (const auto& img : images) {
    if (img.sign != 1 && img.sign != -1) throw InvalidArgument("substitute: image must be a signed monomial");
  }
  LaurentPoly r(target);
  r.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    Monomial out;
    int sign = 1;
    for (std::size_t v = 0; v < images.size(); ++v) {
      const int e = m[v];
      if (e == 0) continue;
      for (std::size_t t = 0; t < kMaxVariables; ++t) {
        out[t] = static_cast<std::int16_t>(out[t] + e * images[v].mono[t]);
      }
      if (images[v].sign < 0 && (e % 2 != 0)) sign = -sign;
    }
    r.add_term(out, sign < 0 ? Integer(-c) : c);
  }
  return r;
}

/// Image of f under arbitrary polynomial substitutions; only monomial images are supported.
inline LaurentPoly substitute(const LaurentPoly& f, const VarTablePtr& target,
                              std::span<const LaurentPoly> images) {
  std::vector<SignedMonomial> mono;
  for (const auto& img : images) {
    if (img.term_count() != 1) throw InvalidArgument("substitute: non-monomial image");
    const auto& [m, c] = *img.terms().begin();
    if (c != 1 && c != -1) throw InvalidArgument("substitute: image coefficient must be +1 or -1");
    mono.push_back({c > 0 ? 1 : -1, m});
  }
  return substitute(f, target, std::span<const SignedMonomial>(mono));
}

/// f with every variable inverted.
inline LaurentPoly invert_variables(const LaurentPoly& f) {
  LaurentPoly r(f.table());
  r.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) r.add_term(m.inverse(), c);
  return r;
}

/// Re-expresses f over `target`, matching variables by name. Variables absent from
/// `target` must not occur in f.
inline LaurentPoly rebase(const LaurentPoly& f, const VarTablePtr& target) {
  std::vector<std::ptrdiff_t> where(f.variable_count(), -1);
  for (std::size_t v = 0; v < f.variable_count(); ++v) {
    if (target->has(f.table()->name(v))) {
      where[v] = static_cast<std::ptrdiff_t>(target->index_of(f.table()->name(v)));
    }
  }
  LaurentPoly r(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial out;
    for (std::size_t v = 0; v < f.variable_count(); ++v) {
      if (m[v] == 0) continue;
      if (where[v] < 0) {
        throw InvalidArgument("rebase: variable " + f.table()->name(v) + " missing from target");
      }
      out[static_cast<std::size_t>(where[v])] = static_cast<std::int16_t>(m[v]);
    }
    r.add_term(out, c);
  }
  return r;
}

/// The coefficient of var^power, as a polynomial with var's exponent set to 0.
inline LaurentPoly slice(const LaurentPoly& f, std::size_t var, int power) {
  LaurentPoly r(f.table());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == power) {
      Monomial out = m;
      out[var] = 0;
      r.add_term(out, c);
    }
  }
  return r;
}

/// Drops terms whose summed degree over `vars` exceeds `max_degree`.
inline LaurentPoly truncate_degree(LaurentPoly f, std::span<const std::size_t> vars, int max_degree) {
  f.retain([&](const Monomial& m) {
    int d = 0;
    for (std::size_t v : vars) d += m[v];
    return d <= max_degree;
  });
  return f;
}

/// Exact quotient f / d, found by repeatedly cancelling lexicographic leading terms.
/// Throws InternalError when d does not divide f.
inline LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& d) {
  if (d.is_zero()) throw InvalidArgument("divide_exact: division by zero polynomial");
  LaurentPoly q(f.table() ? f.table() : d.table());
  if (f.is_zero()) return q;
  const std::size_t nv = std::max(f.variable_count(), d.variable_count());
  auto lex_leading = [](const LaurentPoly& p) {
    auto it = std::max_element(p.terms().begin(), p.terms().end(),
                               [](const auto& a, const auto& b) { return a.first.exp < b.first.exp; });
    return *it;
  };
  // Any quotient exponent must lie in the box [min(f) - min(d), max(f) - max(d)].
  std::vector<std::pair<int, int>> box(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto [flo, fhi] = f.degree_range(v);
    auto [dlo, dhi] = d.degree_range(v);
    box[v] = {flo - dlo, fhi - dhi};
  }
  const auto [dm, dc] = lex_leading(d);
  LaurentPoly rem = f;
  while (!rem.is_zero()) {
    const auto [rm, rc] = lex_leading(rem);
    const Monomial qm = rm - dm;
    for (std::size_t v = 0; v < nv; ++v) {
      if (qm[v] < box[v].first || qm[v] > box[v].second) {
        throw InternalError("divide_exact: divisor does not divide dividend");
      }
    }
    const Integer qc = superschur::divide_exact(rc, dc, "divide_exact");
    q.add_term(qm, qc);
    rem -= d.shifted(qm) * qc;
  }
  return q;
}

}  // namespace superschur
