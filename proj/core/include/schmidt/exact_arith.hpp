#pragma once

// Exact integer and rational primitives shared by every other module.
//
// Binomials follow the falling-factorial definition
//
//     C(t, k) = t (t-1) ... (t-k+1) / k!     for k >= 0,   0 for k < 0,
//
// which agrees with the combinatorial value for t >= 0 and is the polynomial
// continuation of C(x, k) for negative t. Every binomial identity used in the
// library is therefore a polynomial identity in its free variable and can be
// certified by evaluation at enough integer points.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schmidt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an internal cross-check fails. Such a failure means the
/// implementation is wrong, not that a congruence has a counterexample.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a division that must be exact leaves a remainder.
class IntegralityError : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

Integer binom(const Integer& top, long k);
Integer factorial(unsigned long n);
Integer rising_factorial(const Integer& x, unsigned long n);
Integer central_binom(unsigned long k);

/// (m+k)! i! / ((m+i)! k!), reduced.
Rational saalschutz_coeff(unsigned long m, unsigned long k, unsigned long i);

/// Returns num / den, throwing IntegralityError (tagged with `what`) when den
/// does not divide num.
Integer exact_quotient(const Integer& num, const Integer& den,
                       const std::string& what);

/// Non-negative residue of value modulo n (n > 0).
Integer residue(const Integer& value, const Integer& n);

Integer pow(const Integer& base, unsigned long exponent);

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

/// Parses a decimal integer with optional leading '-'. Throws
/// std::invalid_argument on anything else.
Integer parse_integer(const std::string& text);

}  // namespace schmidt
