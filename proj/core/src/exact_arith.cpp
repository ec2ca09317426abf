#include "schmidt/exact_arith.hpp"

#include <cctype>

namespace schmidt {

Integer binom(const Integer& top, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  unsigned long steps = static_cast<unsigned long>(k);
  if (sgn(top) >= 0) {
    if (top < steps) return 0;
    // C(t, k) = C(t, t-k) for t >= 0; take the shorter product.
    Integer rest = top - steps;
    if (rest.fits_ulong_p() && rest.get_ui() < steps) steps = rest.get_ui();
  }
  // Each prefix t (t-1) ... (t-i+1) is divisible by i!, so dividing by i
  // after the i-th factor is always exact.
  Integer result = 1;
  Integer factor = top;
  for (unsigned long i = 1; i <= steps; ++i) {
    result *= factor;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    --factor;
  }
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer rising_factorial(const Integer& x, unsigned long n) {
  Integer result = 1;
  Integer factor = x;
  for (unsigned long i = 0; i < n; ++i) {
    result *= factor;
    ++factor;
  }
  return result;
}

Integer central_binom(unsigned long k) {
  return binom(Integer(2 * k), static_cast<long>(k));
}

Rational saalschutz_coeff(unsigned long m, unsigned long k, unsigned long i) {
  if (i > k) throw std::invalid_argument("saalschutz_coeff: requires i <= k");
  Rational value(factorial(m + k) * factorial(i), factorial(m + i) * factorial(k));
  value.canonicalize();
  return value;
}

Integer exact_quotient(const Integer& num, const Integer& den,
                       const std::string& what) {
  if (den == 0) throw IntegralityError(what + ": division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw IntegralityError(what + ": " + num.get_str() + " is not divisible by " +
                           den.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer residue(const Integer& value, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not an integer: '" + text + "'");
  return Integer(text, 10);
}

}  // namespace schmidt
