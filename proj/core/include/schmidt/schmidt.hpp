#pragma once

// Builders for the Schmidt polynomial families and the weighted sums
//
//     sum_{k=0}^{n-1} eps^k w(k) (2k+1) S_k^{(r)}(x_0, ..., x_k)^m
//
// whose coefficients the congruence verifiers inspect.

#include "schmidt/exact_arith.hpp"
#include "schmidt/mpoly.hpp"

#include <string>

namespace schmidt {

enum class Sign : int { minus = -1, plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
std::string to_string(Sign s);

/// Extra factor w(k) multiplying (2k+1) in the weighted sum.
enum class Weight {
  plain,             // 1
  kk1_pow_a,         // k^a (k+1)^a
  odd_square_pow_a,  // (2k+1)^(2a)
};

std::string to_string(Weight w);
Weight weight_from_string(const std::string& name);

struct SchmidtParams {
  unsigned n = 1;
  unsigned r = 1;
  unsigned m = 1;
  Sign epsilon = Sign::plus;
  unsigned a = 0;

  /// Throws std::invalid_argument unless r >= 1 and m >= 1.
  void validate() const;

  friend bool operator==(const SchmidtParams&, const SchmidtParams&) = default;
};

/// sum_{k=0}^{n} C(n+k, 2k)^r C(2k, k) x_k
MultiPoly schmidt_multi(unsigned n, unsigned r);

/// sum_{k=0}^{n} C(n, k)^r C(n+k, k)^r x^k
UniPoly schmidt_single(unsigned n, unsigned r);

Integer weight_factor(Weight w, unsigned a, unsigned k);

/// Requires n >= 1.
MultiPoly weighted_sum(const SchmidtParams& p, Weight w);

/// The same sum with S_k^{(r)}(x) in place of the multi-variable polynomial.
UniPoly weighted_sum_single(const SchmidtParams& p, Weight w);

/// x_k -> C(2k, k)^(r-1) x^k, which maps schmidt_multi(n, r) onto
/// schmidt_single(n, r).
SpecializationRule apery_specialization_rule(unsigned r);

}  // namespace schmidt
