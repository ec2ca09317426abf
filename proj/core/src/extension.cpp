#include "schmidt/extension.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace schmidt {

CTable::CTable(unsigned j, unsigned a, std::vector<Integer> entries)
    : j_(j), a_(a), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(a_) + 1)
    throw std::invalid_argument("CTable: expected a+1 entries");
}

namespace {

Integer c_lhs(unsigned j, unsigned a, const Integer& k) {
  return pow(k * (k + 1), a) * binom(k + j, 2L * j);
}

Integer c_basis(unsigned j, unsigned i, const Integer& k) {
  return binom(k + j + i, 2L * (j + i)) * rising_factorial(Integer(2 * j + 1), 2UL * i);
}

CTable solve_c_table(unsigned j, unsigned a) {
  std::vector<Integer> c;
  c.reserve(a + 1);
  for (unsigned step = 0; step <= a; ++step) {
    const Integer k(j + step);
    Integer rest = c_lhs(j, a, k);
    for (unsigned i = 0; i < step; ++i) rest -= c[i] * c_basis(j, i, k);
    c.push_back(exact_quotient(rest, c_basis(j, step, k),
                               "c-coefficient c_" + std::to_string(step) + "(" +
                                   std::to_string(j) + "," + std::to_string(a) + ")"));
  }
  return CTable(j, a, std::move(c));
}

}  // namespace

CTable c_table(unsigned j, unsigned a, CTableCache* cache) {
  if (cache == nullptr) return solve_c_table(j, a);
  return cache->get_or_compute({j, a}, [&] { return solve_c_table(j, a); });
}

Certificate verify_c_identity(const CTable& table, std::span<const Integer> samples) {
  const unsigned j = table.j();
  const unsigned a = table.a();
  PointFunction lhs = [j, a](const Integer& k) -> Rational { return c_lhs(j, a, k); };
  PointFunction rhs = [&table, j](const Integer& k) -> Rational {
    Integer total = 0;
    for (unsigned i = 0; i < table.entries().size(); ++i)
      total += table.entries()[i] * c_basis(j, i, k);
    return total;
  };
  return certify_pointwise(lhs, rhs, samples, 2UL * j + 2UL * a + 1);
}

Certificate verify_c_identity(unsigned j, unsigned a, std::span<const Integer> samples) {
  return verify_c_identity(c_table(j, a), samples);
}

bool ctable_is_valid(const CTable& table) {
  if (table.entries().size() != static_cast<std::size_t>(table.a()) + 1) return false;
  const auto samples = sample_range(0, 2L * table.j() + 2L * table.a());
  return verify_c_identity(table, samples).passed;
}

std::vector<Integer> square_weight_coeffs(unsigned a) {
  std::vector<Integer> out;
  out.reserve(a + 1);
  for (unsigned i = 0; i <= a; ++i) out.push_back(binom(Integer(a), i) * pow(Integer(4), i));
  return out;
}

Certificate certify_square_weight(unsigned a) {
  const auto coeffs = square_weight_coeffs(a);
  PointFunction lhs = [a](const Integer& k) -> Rational { return pow(2 * k + 1, 2UL * a); };
  PointFunction rhs = [&coeffs](const Integer& k) -> Rational {
    Integer total = 0;
    for (unsigned i = 0; i < coeffs.size(); ++i) total += coeffs[i] * pow(k * (k + 1), i);
    return total;
  };
  const auto samples = sample_range(0, 2L * a);
  return certify_pointwise(lhs, rhs, samples, 2UL * a + 1);
}

CongruenceReport generalized_check(const SchmidtParams& p, GeneralizedForm form,
                                   const GeneralizedOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (form == GeneralizedForm::odd_power && p.m != 1 && !opts.exploratory)
    throw std::invalid_argument("odd_power form is stated for m = 1; pass exploratory to override");
  const Weight w = form == GeneralizedForm::kk1 ? Weight::kk1_pow_a : Weight::odd_square_pow_a;
  const CheckKind kind = form == GeneralizedForm::kk1 ? CheckKind::kk1 : CheckKind::odd_power;
  CongruenceReport report = make_report(p, w, kind, weighted_sum(p, w), opts.keep_terms);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace schmidt
