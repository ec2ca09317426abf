#pragma once

// Expansion of binomial products in the basis
//
//     B_t(k) = C(k+t, 2t) C(2t, t),   t = 0, 1, 2, ...
//
// Powers C(k+i, 2i)^r C(2i, i) expand through the b-coefficients
// b_{m,k}^{(r)}, products B_i B_j through a closed three-binomial formula.
// Any product of such factors therefore has integer coordinates in this
// basis.

#include "schmidt/certificate.hpp"
#include "schmidt/exact_arith.hpp"
#include "schmidt/memo_table.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace schmidt {

using BasisIndex = unsigned;

/// Finite combination sum_t c_t B_t(k) with no zero coefficients.
class BasisCombo {
 public:
  BasisCombo() = default;
  static BasisCombo single(BasisIndex t, const Integer& c = 1);

  const std::map<BasisIndex, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(BasisIndex t) const;
  std::optional<BasisIndex> min_index() const;
  std::optional<BasisIndex> max_index() const;

  void add(BasisIndex t, const Integer& c);
  BasisCombo& operator+=(const BasisCombo& other);
  BasisCombo& operator*=(const Integer& scalar);

  /// "{1: 2, 2: 4}"
  std::string to_string() const;

  friend bool operator==(const BasisCombo&, const BasisCombo&) = default;

 private:
  std::map<BasisIndex, Integer> terms_;
};

/// The integers b_{m,k}^{(r)}, k = m .. r*m.
class BTable {
 public:
  BTable(unsigned m, unsigned r, std::vector<Integer> entries);

  unsigned m() const { return m_; }
  unsigned r() const { return r_; }
  unsigned first_index() const { return m_; }
  unsigned last_index() const { return r_ * m_; }
  const std::vector<Integer>& entries() const { return entries_; }
  /// b_{m,k}^{(r)}; zero outside m..r*m.
  Integer at(unsigned k) const;

  friend bool operator==(const BTable&, const BTable&) = default;

 private:
  unsigned m_;
  unsigned r_;
  std::vector<Integer> entries_;
};

using BTableCache = MemoTable<std::pair<unsigned, unsigned>, BTable>;

/// B_t(k), polynomially continued in k.
Integer basis_eval(BasisIndex t, const Integer& k);

/// One step of the r -> r+1 recursion. Throws IntegralityError if any
/// division by C(k, m) is inexact.
BTable b_table_next(const BTable& prev);

/// Requires r >= 1. With a cache, intermediate tables are memoised too.
BTable b_table(unsigned m, unsigned r, BTableCache* cache = nullptr);

/// Entry count, C(k, m) | b_{m,k}^{(r)}, and the expansion identity at
/// 2rm+1 points. Used to vet tables that come from outside (persisted caches).
bool btable_is_valid(const BTable& table);

BasisCombo power_linearize(unsigned i, unsigned r, BTableCache* cache = nullptr);
BasisCombo product_linearize(BasisIndex i, BasisIndex j);
BasisCombo combo_mul(const BasisCombo& p, const BasisCombo& q);
BasisCombo tuple_linearize(std::span<const unsigned> indices, unsigned r,
                           BTableCache* cache = nullptr);
Integer combo_eval(const BasisCombo& c, const Integer& k);

/// C(l+k, 2k) C(2k, k) against its rewriting as
/// sum_i (m+k)! i!/((m+i)! k!) C(m, k-i) C(l-m, i) C(l+m+i, i), at the given
/// l-values. Needs at least 2k+1 samples.
Certificate pfaff_check(unsigned m, unsigned k, std::span<const Integer> samples);

/// C(l+m, 2m)^r C(2m, m) == sum_k b_{m,k}^{(r)} B_k(l) at l = 0 .. 2rm.
Certificate certify_power_identity(const BTable& table);

/// B_i(l) B_j(l) == combo_eval(product_linearize(i, j), l) at l = 0 .. 2(i+j).
Certificate certify_product_identity(BasisIndex i, BasisIndex j);

}  // namespace schmidt
