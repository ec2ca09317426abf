#pragma once

// Sparse multivariate polynomials over Integer in variables x_0, x_1, ...
// and dense univariate polynomials over Integer.
//
// Terms are kept in graded order: lower total degree first; within a degree,
// the exponent vectors are compared variable by variable starting at x_0 and
// the larger exponent comes first. So x_0^2, x_0 x_1, x_0 x_2, x_1^2, ...

#include "schmidt/exact_arith.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schmidt {

using VarIndex = std::uint32_t;

struct VarPower {
  VarIndex var;
  std::uint32_t exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

class ExponentVector {
 public:
  ExponentVector() = default;
  /// Sorts, merges repeated variables and drops zero exponents.
  explicit ExponentVector(std::vector<VarPower> entries);

  static ExponentVector variable(VarIndex var, std::uint32_t exp = 1);

  const std::vector<VarPower>& entries() const { return entries_; }
  bool is_constant() const { return entries_.empty(); }
  std::uint64_t total_degree() const;
  std::uint32_t exponent(VarIndex var) const;

  ExponentVector operator*(const ExponentVector& other) const;

  /// "1" for the constant monomial, otherwise "x_0^2 * x_3".
  std::string to_string() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<VarPower> entries_;  // strictly increasing var, exp > 0
};

/// Strict weak ordering: true when a precedes b in canonical term order.
struct GradedOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, Integer, GradedOrder>;

  MultiPoly() = default;
  static MultiPoly constant(const Integer& c);
  static MultiPoly variable(VarIndex var);
  /// Sums the given terms; repeated monomials are merged.
  static MultiPoly from_terms(const std::vector<std::pair<ExponentVector, Integer>>& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const ExponentVector& monomial) const;

  void add_term(const ExponentVector& monomial, const Integer& coeff);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Integer& scalar);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Integer& s) { return a *= s; }
  friend MultiPoly operator*(const Integer& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  Integer evaluate(const std::function<Integer(VarIndex)>& value_of) const;

  /// Canonical text form: "c * x_i^e * ..." joined by " + ", or "0".
  std::string to_string() const;
  static MultiPoly parse(std::string_view text);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_pow(const MultiPoly& p, unsigned m);

struct NonDivisibleTerm {
  ExponentVector monomial;
  Integer coefficient;
  Integer residue;  // coefficient mod n, in (0, n)
};

struct DivisibilityVerdict {
  bool divisible = true;
  std::optional<NonDivisibleTerm> witness;  // first offending term in term order
};

DivisibilityVerdict all_coeffs_divisible(const MultiPoly& p, const Integer& n);

class UniPoly {
 public:
  UniPoly() = default;
  /// Coefficients by ascending degree; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Integer> coeffs);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coefficient(std::size_t power) const;

  void add_term(std::size_t power, const Integer& coeff);

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator*=(const Integer& scalar);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(UniPoly a, const Integer& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

  Integer evaluate(const Integer& x) const;
  std::string to_string() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

UniPoly uni_pow(const UniPoly& p, unsigned m);

/// x_k -> scale(k) * x^k. A rule returns nullopt for variables it does not
/// cover.
using SpecializationRule = std::function<std::optional<Integer>(VarIndex)>;

/// Throws std::out_of_range when the rule has no entry for an occurring
/// variable.
UniPoly specialize(const MultiPoly& p, const SpecializationRule& rule);

}  // namespace schmidt
