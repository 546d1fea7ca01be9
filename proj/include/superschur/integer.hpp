#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace superschur {

/// Arbitrary-precision signed integer used for every coefficient and count.
using Integer = boost::multiprecision::cpp_int;

/// Raised for bad caller input (size mismatches, malformed text, violated preconditions).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal exactness assertion fails. Seeing one means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Divides and asserts the division leaves no remainder.
inline Integer divide_exact(const Integer& num, const Integer& den, const char* what) {
  if (den == 0) throw InternalError(std::string(what) + ": division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InternalError(std::string(what) + ": inexact division " + num.str() + " / " + den.str());
  }
  return q;
}

}  // namespace superschur
