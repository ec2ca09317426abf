#include "schmidt/linearizer.hpp"

#include <stdexcept>

namespace schmidt {

BasisCombo BasisCombo::single(BasisIndex t, const Integer& c) {
  BasisCombo out;
  out.add(t, c);
  return out;
}

Integer BasisCombo::coefficient(BasisIndex t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<BasisIndex> BasisCombo::min_index() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<BasisIndex> BasisCombo::max_index() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

void BasisCombo::add(BasisIndex t, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BasisCombo& BasisCombo::operator+=(const BasisCombo& other) {
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

BasisCombo& BasisCombo::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

std::string BasisCombo::to_string() const {
  std::string out = "{";
  for (const auto& [t, c] : terms_) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(t) + ": " + c.get_str();
  }
  return out + "}";
}

BTable::BTable(unsigned m, unsigned r, std::vector<Integer> entries)
    : m_(m), r_(r), entries_(std::move(entries)) {
  if (r_ < 1) throw std::invalid_argument("BTable: r must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(r_) * m_ - m_ + 1)
    throw std::invalid_argument("BTable: expected r*m - m + 1 entries");
}

Integer BTable::at(unsigned k) const {
  if (k < first_index() || k > last_index()) return 0;
  return entries_[k - m_];
}

Integer basis_eval(BasisIndex t, const Integer& k) {
  return binom(k + t, 2L * t) * central_binom(t);
}

BTable b_table_next(const BTable& prev) {
  const unsigned m = prev.m();
  const unsigned r = prev.r();
  // b_{m,k}^{(r)} / C(k, m), exact by the divisibility invariant.
  std::vector<Integer> reduced;
  reduced.reserve(prev.entries().size());
  for (unsigned k = m; k <= r * m; ++k)
    reduced.push_back(exact_quotient(prev.at(k), binom(Integer(k), m),
                                     "b-coefficient divisibility by C(k,m)"));

  std::vector<Integer> next;
  next.reserve(static_cast<std::size_t>(r + 1) * m - m + 1);
  for (unsigned j = m; j <= (r + 1) * m; ++j) {
    Integer sum = 0;
    // C(m, j-k) vanishes unless j-m <= k <= j.
    unsigned lo = j >= 2 * m ? j - m : m;
    unsigned hi = std::min(j, r * m);
    for (unsigned k = lo; k <= hi; ++k)
      sum += reduced[k - m] * binom(Integer(m), static_cast<long>(j - k)) *
             binom(Integer(m + k), 2L * m);
    next.push_back(binom(Integer(j), m) * sum);
  }
  return BTable(m, r + 1, std::move(next));
}

BTable b_table(unsigned m, unsigned r, BTableCache* cache) {
  if (r < 1) throw std::invalid_argument("b_table: r must be >= 1");
  auto compute = [&]() -> BTable {
    if (r == 1) return BTable(m, 1, {Integer(1)});
    return b_table_next(b_table(m, r - 1, cache));
  };
  if (cache == nullptr) return compute();
  return cache->get_or_compute({m, r}, compute);
}

Certificate certify_power_identity(const BTable& table) {
  const unsigned m = table.m();
  const unsigned r = table.r();
  PointFunction lhs = [&](const Integer& l) -> Rational {
    return pow(binom(l + m, 2L * m), r) * central_binom(m);
  };
  PointFunction rhs = [&](const Integer& l) -> Rational {
    Integer total = 0;
    for (unsigned k = table.first_index(); k <= table.last_index(); ++k)
      total += table.at(k) * basis_eval(k, l);
    return total;
  };
  const long degree = 2L * r * m;
  auto samples = sample_range(0, degree);
  return certify_pointwise(lhs, rhs, samples, static_cast<std::size_t>(degree) + 1);
}

bool btable_is_valid(const BTable& table) {
  if (table.entries().size() != static_cast<std::size_t>(table.r()) * table.m() - table.m() + 1)
    return false;
  for (unsigned k = table.first_index(); k <= table.last_index(); ++k)
    if (!mpz_divisible_p(table.at(k).get_mpz_t(), binom(Integer(k), table.m()).get_mpz_t()))
      return false;
  return certify_power_identity(table).passed;
}

BasisCombo power_linearize(unsigned i, unsigned r, BTableCache* cache) {
  const BTable table = b_table(i, r, cache);
  BasisCombo out;
  for (unsigned t = table.first_index(); t <= table.last_index(); ++t) out.add(t, table.at(t));
  return out;
}

namespace {

/// Calls emit(j+s, C(i+j, i) C(j, i-s) C(j+s, s)) for s = 0..i, i <= j, updating
/// the two inner binomials by their ratios instead of recomputing them.
template <typename Emit>
void for_each_product_term(BasisIndex i, BasisIndex j, Emit&& emit) {
  const Integer lead = binom(Integer(i + j), i);
  Integer down = binom(Integer(j), i);  // C(j, i-s)
  Integer up = 1;                       // C(j+s, s)
  Integer term;
  for (unsigned s = 0; s <= i; ++s) {
    term = lead * down * up;
    emit(j + s, term);
    if (s == i) break;
    down *= i - s;
    mpz_divexact_ui(down.get_mpz_t(), down.get_mpz_t(), j - i + s + 1);
    up *= j + s + 1;
    mpz_divexact_ui(up.get_mpz_t(), up.get_mpz_t(), s + 1);
  }
}

}  // namespace

BasisCombo product_linearize(BasisIndex i, BasisIndex j) {
  if (i > j) std::swap(i, j);
  BasisCombo out;
  for_each_product_term(i, j, [&out](BasisIndex t, const Integer& c) { out.add(t, c); });
  return out;
}

BasisCombo combo_mul(const BasisCombo& p, const BasisCombo& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<Integer> dense(*p.max_index() + *q.max_index() + 1);
  Integer scale;
  for (const auto& [a, x] : p.terms()) {
    for (const auto& [b, y] : q.terms()) {
      scale = x * y;
      for_each_product_term(std::min(a, b), std::max(a, b), [&](BasisIndex t, const Integer& c) {
        mpz_addmul(dense[t].get_mpz_t(), scale.get_mpz_t(), c.get_mpz_t());
      });
    }
  }
  BasisCombo out;
  for (std::size_t t = 0; t < dense.size(); ++t) out.add(static_cast<BasisIndex>(t), dense[t]);
  return out;
}

BasisCombo tuple_linearize(std::span<const unsigned> indices, unsigned r, BTableCache* cache) {
  if (indices.empty()) throw std::invalid_argument("tuple_linearize: empty index list");
  BasisCombo acc = power_linearize(indices.front(), r, cache);
  for (std::size_t j = 1; j < indices.size(); ++j)
    acc = combo_mul(acc, power_linearize(indices[j], r, cache));
  return acc;
}

Integer combo_eval(const BasisCombo& c, const Integer& k) {
  Integer total = 0;
  for (const auto& [t, coeff] : c.terms()) total += coeff * basis_eval(t, k);
  return total;
}

Certificate pfaff_check(unsigned m, unsigned k, std::span<const Integer> samples) {
  PointFunction lhs = [k](const Integer& l) -> Rational { return basis_eval(k, l); };
  PointFunction rhs = [m, k](const Integer& l) -> Rational {
    Rational total = 0;
    for (unsigned i = 0; i <= k; ++i) {
      Integer binoms = binom(Integer(m), static_cast<long>(k - i)) * binom(l - m, i) *
                       binom(l + m + i, i);
      total += saalschutz_coeff(m, k, i) * Rational(binoms);
    }
    return total;
  };
  return certify_pointwise(lhs, rhs, samples, 2 * static_cast<std::size_t>(k) + 1);
}

Certificate certify_product_identity(BasisIndex i, BasisIndex j) {
  const BasisCombo combo = product_linearize(i, j);
  PointFunction lhs = [i, j](const Integer& l) -> Rational {
    return basis_eval(i, l) * basis_eval(j, l);
  };
  PointFunction rhs = [&combo](const Integer& l) -> Rational { return combo_eval(combo, l); };
  const long degree = 2L * (i + j);
  auto samples = sample_range(0, degree);
  return certify_pointwise(lhs, rhs, samples, static_cast<std::size_t>(degree) + 1);
}

}  // namespace schmidt
