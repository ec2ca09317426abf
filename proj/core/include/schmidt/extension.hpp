#pragma once

// Weighted variants of the congruence: k^a (k+1)^a and (2k+1)^(2a) factors.
//
// The c-coefficients solve
//
//     k^a (k+1)^a C(k+j, 2j) = sum_{i=0}^{a} c_i(j,a) C(k+j+i, 2j+2i) (2j+1)_{2i}
//
// identically in k. The basis term for index i vanishes at k = j .. j+i-1
// and equals (2j+1)_{2i} at k = j+i, so evaluating at k = j, j+1, ..., j+a
// gives a lower-triangular integer system.

#include "schmidt/certificate.hpp"
#include "schmidt/congruence.hpp"
#include "schmidt/exact_arith.hpp"
#include "schmidt/memo_table.hpp"
#include "schmidt/schmidt.hpp"

#include <span>
#include <utility>
#include <vector>

namespace schmidt {

class CTable {
 public:
  CTable(unsigned j, unsigned a, std::vector<Integer> entries);

  unsigned j() const { return j_; }
  unsigned a() const { return a_; }
  const std::vector<Integer>& entries() const { return entries_; }

  friend bool operator==(const CTable&, const CTable&) = default;

 private:
  unsigned j_;
  unsigned a_;
  std::vector<Integer> entries_;
};

using CTableCache = MemoTable<std::pair<unsigned, unsigned>, CTable>;

/// Throws IntegralityError if a back-substitution step is inexact.
CTable c_table(unsigned j, unsigned a, CTableCache* cache = nullptr);

/// Pointwise check of the expansion; needs at least 2j+2a+1 samples.
Certificate verify_c_identity(const CTable& table, std::span<const Integer> samples);
Certificate verify_c_identity(unsigned j, unsigned a, std::span<const Integer> samples);

/// Identity check at k = 0 .. 2j+2a, used to vet persisted tables.
bool ctable_is_valid(const CTable& table);

/// C(a, i) 4^i for i = 0 .. a: (2k+1)^(2a) = sum_i C(a,i) 4^i k^i (k+1)^i.
std::vector<Integer> square_weight_coeffs(unsigned a);

/// The expansion above at k = 0 .. 2a.
Certificate certify_square_weight(unsigned a);

enum class GeneralizedForm { kk1, odd_power };

struct GeneralizedOptions {
  /// Allow odd_power with m > 1; outside the stated claim.
  bool exploratory = false;
  bool keep_terms = true;
};

/// kk1:       sum eps^k (2k+1) k^a (k+1)^a S_k^m  divisible by n
/// odd_power: sum eps^k (2k+1)^(2a+1) S_k         divisible by n
CongruenceReport generalized_check(const SchmidtParams& p, GeneralizedForm form,
                                   const GeneralizedOptions& opts = {});

}  // namespace schmidt
