#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superschur/integer.hpp"
#include "superschur/partition.hpp"

namespace superschur {

/// Univariate integer power series known through degree `degree()` inclusive.
class TruncatedSeries {
 public:
  TruncatedSeries(int degree, std::string var = "u") : var_(std::move(var)), coeffs_(checked(degree) + 1) {}

  static TruncatedSeries one(int degree, std::string var = "u") {
    TruncatedSeries s(degree, std::move(var));
    s.coeffs_[0] = 1;
    return s;
  }
  /// var^power, or zero when power exceeds the degree.
  static TruncatedSeries monomial(int power, int degree, std::string var = "u") {
    TruncatedSeries s(degree, std::move(var));
    if (power < 0) throw InvalidArgument("TruncatedSeries: negative power");
    if (power <= degree) s.coeffs_[static_cast<std::size_t>(power)] = 1;
    return s;
  }
  static TruncatedSeries from_coefficients(std::vector<Integer> c, std::string var = "u") {
    if (c.empty()) throw InvalidArgument("TruncatedSeries: empty coefficient list");
    TruncatedSeries s(static_cast<int>(c.size()) - 1, std::move(var));
    s.coeffs_ = std::move(c);
    return s;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::string& variable() const { return var_; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Integer& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  /// Smallest exponent with a nonzero coefficient, or nullopt for the zero series.
  std::optional<int> valuation() const {
    for (int i = 0; i <= degree(); ++i) {
      if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
    }
    return std::nullopt;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    TruncatedSeries r(a.degree(), a.var_);
    const int d = a.degree();
    for (int i = 0; i <= d; ++i) {
      if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= d; ++j) {
        r.coeffs_[static_cast<std::size_t>(i + j)] +=
            a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// Multiply by var^n, discarding what falls beyond the degree.
  TruncatedSeries shifted(int n) const {
    TruncatedSeries r(degree(), var_);
    for (int i = 0; i + n <= degree(); ++i) r.coeffs_[static_cast<std::size_t>(i + n)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
  }

  /// Multiplicative inverse; the constant term must be +1 or -1.
  TruncatedSeries inverse() const {
    const Integer& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1) throw InvalidArgument("TruncatedSeries::inverse: constant term not a unit");
    TruncatedSeries r(degree(), var_);
    r.coeffs_[0] = c0;
    for (int n = 1; n <= degree(); ++n) {
      Integer acc = 0;
      for (int i = 1; i <= n; ++i) {
        acc += coeffs_[static_cast<std::size_t>(i)] * r.coeffs_[static_cast<std::size_t>(n - i)];
      }
      r.coeffs_[static_cast<std::size_t>(n)] = -acc * c0;
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "[c0,c1,...]"
  std::string to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ",";
      out += coeffs_[i].str();
    }
    return out + "]";
  }

 private:
  static int checked(int degree) {
    if (degree < 0) throw InvalidArgument("TruncatedSeries: negative degree");
    return degree;
  }
  void check(const TruncatedSeries& o) const {
    if (o.degree() != degree()) throw InvalidArgument("TruncatedSeries: truncation degrees differ");
  }

  std::string var_;
  std::vector<Integer> coeffs_;
};

/// The factor (1 + sign * u^exponent)^power, power in {+1, -1}.
struct ProductFactor {
  int sign = -1;
  int exponent = 1;
  int power = 1;
};

/// u^shift * prod (1 +- u^a)^{+-1} through degree D.
inline TruncatedSeries expand_product(const std::vector<ProductFactor>& factors, int shift, int degree) {
  if (shift < 0) throw InvalidArgument("expand_product: negative shift");
  TruncatedSeries s = TruncatedSeries::one(degree);
  for (const auto& f : factors) {
    if (f.sign != 1 && f.sign != -1) throw InvalidArgument("expand_product: sign must be +1 or -1");
    if (f.power != 1 && f.power != -1) throw InvalidArgument("expand_product: power must be +1 or -1");
    if (f.exponent < 0) throw InvalidArgument("expand_product: negative exponent");
    if (f.power == -1 && f.exponent == 0) throw InvalidArgument("expand_product: non-invertible factor");
    TruncatedSeries factor = TruncatedSeries::one(degree);
    if (f.exponent <= degree) factor[f.exponent] += f.sign;
    s *= f.power == 1 ? factor : factor.inverse();
  }
  return s.shifted(shift);
}

/// prod_{i=1}^{k} (1 - u^{2i}), written [u^2]_k.
inline TruncatedSeries u2_pochhammer(int k, int degree) {
  std::vector<ProductFactor> f;
  for (int i = 1; i <= k; ++i) f.push_back({-1, 2 * i, 1});
  return expand_product(f, 0, degree);
}

/// Coefficient of u^n counts partitions of n meeting the constraints, by enumeration.
inline TruncatedSeries gf_partitions(const PartitionConstraints& constraints, int degree) {
  TruncatedSeries s(degree);
  for (int n = 0; n <= degree; ++n) s[n] = static_cast<long>(enumerate(n, constraints).size());
  return s;
}

enum class ClosedForm {
  /// t^{kl} / (prod_{i<=k} (1 - t^i) prod_{j<=l} (1 - t^j)): one even generic element.
  TracesOneEven,
  /// u^{2kl - l^2} prod_{i<=k-l} (1 + u^{2i-1}) / prod_{i<=l} (1 - u^{2i}): one odd generic element, k >= l.
  SupertracesOneOdd,
};

inline TruncatedSeries closed_form_series(ClosedForm kind, Hook h, int degree) {
  std::vector<ProductFactor> f;
  if (kind == ClosedForm::TracesOneEven) {
    for (int i = 1; i <= h.k; ++i) f.push_back({-1, i, -1});
    for (int j = 1; j <= h.l; ++j) f.push_back({-1, j, -1});
    auto s = expand_product(f, h.k * h.l, degree);
    return TruncatedSeries::from_coefficients(s.coefficients(), "t");
  }
  if (h.k < h.l) throw InvalidArgument("closed_form_series: supertraces form needs k >= l");
  for (int i = 1; i <= h.k - h.l; ++i) f.push_back({1, 2 * i - 1, 1});
  for (int i = 1; i <= h.l; ++i) f.push_back({-1, 2 * i, -1});
  return expand_product(f, 2 * h.k * h.l - h.l * h.l, degree);
}

enum class LimitIdentity {
  /// prod_{n>=1} (1 + u^{2n-1}) = sum_k u^{k^2} / [u^2]_k
  SelfConjugateSum,
  /// prod_{n>=1} (1 + u^{2n-1}) = sum_i u^{i(2n+i)} prod_{t<=n} (1 + u^{2t-1}) / [u^2]_i
  ShiftedSum,
};

struct IdentityCheck {
  bool holds = false;
  std::optional<int> first_discrepancy;
  TruncatedSeries lhs{0};
  TruncatedSeries rhs{0};
};

/// Which finite product multiplies the i-th summand of the shifted sum.
enum class ShiftedProduct {
  /// prod_{t=1}^{n}: the count of self-conjugate fillings of the (k-l) x (k-l) corner.
  UpToShift,
  /// prod_{t=1}^{i}: indexed by the summation variable instead. Kept to document that
  /// this reading does not give an identity.
  UpToIndex,
};

/// Compares both sides through degree D. Summands are added until their valuation exceeds D,
/// which makes the truncated comparison exact.
inline IdentityCheck check_limit_identity(LimitIdentity which, int degree, int shift = 1,
                                          ShiftedProduct product = ShiftedProduct::UpToShift) {
  if (degree < 1) throw InvalidArgument("check_limit_identity: degree must be >= 1");
  if (shift < 0) throw InvalidArgument("check_limit_identity: negative shift");
  std::vector<ProductFactor> odd;
  for (int n = 1; 2 * n - 1 <= degree; ++n) odd.push_back({1, 2 * n - 1, 1});
  IdentityCheck r;
  r.lhs = expand_product(odd, 0, degree);
  r.rhs = TruncatedSeries(degree);
  for (int i = 0;; ++i) {
    const int val = which == LimitIdentity::SelfConjugateSum ? i * i : i * (2 * shift + i);
    if (val > degree) break;
    TruncatedSeries term = u2_pochhammer(i, degree).inverse();
    if (which == LimitIdentity::ShiftedSum) {
      const int top = product == ShiftedProduct::UpToShift ? shift : i;
      std::vector<ProductFactor> f;
      for (int t = 1; t <= top; ++t) f.push_back({1, 2 * t - 1, 1});
      term *= expand_product(f, 0, degree);
    }
    r.rhs += term.shifted(val);
  }
  for (int n = 0; n <= degree; ++n) {
    if (r.lhs[n] != r.rhs[n]) {
      r.first_discrepancy = n;
      break;
    }
  }
  r.holds = !r.first_discrepancy;
  return r;
}

}  // namespace superschur
