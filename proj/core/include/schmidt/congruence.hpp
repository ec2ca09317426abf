#pragma once

// Divisibility verifiers for the weighted Schmidt sums, plus the
// constructive route that produces every inner sum as n * q through the
// basis expansion and the closed-form partial sums.

#include "schmidt/exact_arith.hpp"
#include "schmidt/linearizer.hpp"
#include "schmidt/mpoly.hpp"
#include "schmidt/schmidt.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schmidt {

enum class CheckKind { theorem, pan, kk1, odd_power };

std::string to_string(CheckKind c);
CheckKind check_kind_from_string(const std::string& name);

struct ReportTerm {
  std::string monomial;
  Integer coefficient;
};

struct Witness {
  std::string monomial;
  Integer coefficient;
  Integer residue;  // coefficient mod n, nonzero
};

struct CongruenceReport {
  SchmidtParams params;
  Weight weight = Weight::plain;
  CheckKind check = CheckKind::theorem;
  bool passed = true;
  std::optional<Witness> witness;  // present iff !passed
  std::vector<ReportTerm> terms;   // the checked sum, in canonical order
  bool constructive_checked = false;
  std::chrono::nanoseconds elapsed{0};
};

struct CheckOptions {
  /// Rebuild the sum from the constructive route and require equality.
  /// Only meaningful for the plain weight.
  bool constructive = false;
  bool keep_terms = true;
  BTableCache* cache = nullptr;
};

/// n C(n, k+1) C(n+k, k)
Integer partial_sum_plus(unsigned n, unsigned k);
/// (-1)^(n-1) n C(n-1, k) C(n+k, k)
Integer partial_sum_minus(unsigned n, unsigned k);
/// sum_{l=k}^{n-1} eps^l (2l+1) B_k(l), term by term.
Integer partial_sum_direct(unsigned n, unsigned k, Sign eps);

/// sum_{k=max(indices)}^{n-1} eps^k (2k+1) prod_j C(k+i_j, 2i_j)^r C(2i_j, i_j)
Integer inner_sum_direct(unsigned n, std::span<const unsigned> indices, unsigned r, Sign eps);

/// q such that the inner sum of a combination equals n * q, read off the
/// closed-form partial sums. No division by n takes place.
Integer constructive_quotient(unsigned n, const BasisCombo& combo, Sign eps);

struct ConstructiveInnerSum {
  Integer quotient;
  Integer value;  // n * quotient
};

/// Throws InvariantViolation when n * q differs from inner_sum_direct.
ConstructiveInnerSum inner_sum_constructive(unsigned n, std::span<const unsigned> indices,
                                            unsigned r, Sign eps,
                                            BTableCache* cache = nullptr);

/// The plain weighted sum assembled monomial by monomial from constructive
/// inner sums over sorted index tuples.
MultiPoly constructive_weighted_sum(const SchmidtParams& p, BTableCache* cache = nullptr);

/// Coefficient of x_i in the m = 1 plain sum:
///   eps=+1:  n sum_j b_{i,j} C(n, j+1) C(n+j, j)
///   eps=-1:  (-1)^(n-1) n sum_j b_{i,j} C(n-1, j) C(n+j, j)
Integer m1_coefficient(unsigned n, unsigned i, unsigned r, Sign eps,
                       BTableCache* cache = nullptr);

CongruenceReport make_report(const SchmidtParams& p, Weight w, CheckKind check,
                             const MultiPoly& sum, bool keep_terms);
CongruenceReport make_report(const SchmidtParams& p, Weight w, CheckKind check,
                             const UniPoly& sum, bool keep_terms);

/// Plain-weight divisibility of the multi-variable sum by n.
CongruenceReport theorem_check(const SchmidtParams& p, const CheckOptions& opts = {});

/// Single-variable sum divisibility; also requires it to equal the
/// specialisation of the multi-variable sum (InvariantViolation otherwise).
CongruenceReport pan_check(const SchmidtParams& p, const CheckOptions& opts = {});

}  // namespace schmidt
