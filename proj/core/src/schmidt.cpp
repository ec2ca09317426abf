#include "schmidt/schmidt.hpp"

#include <stdexcept>

namespace schmidt {

std::string to_string(Sign s) { return s == Sign::plus ? "+1" : "-1"; }

std::string to_string(Weight w) {
  switch (w) {
    case Weight::plain: return "plain";
    case Weight::kk1_pow_a: return "kk1_pow_a";
    case Weight::odd_square_pow_a: return "odd_square_pow_a";
  }
  return "unknown";
}

Weight weight_from_string(const std::string& name) {
  if (name == "plain") return Weight::plain;
  if (name == "kk1_pow_a") return Weight::kk1_pow_a;
  if (name == "odd_square_pow_a") return Weight::odd_square_pow_a;
  throw std::invalid_argument("unknown weight '" + name + "'");
}

void SchmidtParams::validate() const {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}

MultiPoly schmidt_multi(unsigned n, unsigned r) {
  if (r < 1) throw std::invalid_argument("schmidt_multi: r must be >= 1");
  MultiPoly p;
  for (unsigned k = 0; k <= n; ++k) {
    Integer c = pow(binom(Integer(n + k), 2 * k), r) * central_binom(k);
    p.add_term(ExponentVector::variable(k), c);
  }
  return p;
}

UniPoly schmidt_single(unsigned n, unsigned r) {
  if (r < 1) throw std::invalid_argument("schmidt_single: r must be >= 1");
  std::vector<Integer> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    coeffs[k] = pow(binom(Integer(n), k) * binom(Integer(n + k), k), r);
  return UniPoly(std::move(coeffs));
}

Integer weight_factor(Weight w, unsigned a, unsigned k) {
  switch (w) {
    case Weight::plain: return 1;
    case Weight::kk1_pow_a: return pow(Integer(k) * (k + 1), a);
    case Weight::odd_square_pow_a: return pow(Integer(2 * k + 1), 2 * a);
  }
  throw std::invalid_argument("weight_factor: unknown weight");
}

namespace {

Integer outer_factor(const SchmidtParams& p, Weight w, unsigned k) {
  Integer f = weight_factor(w, p.a, k) * (2 * k + 1);
  if (p.epsilon == Sign::minus && k % 2 == 1) f = -f;
  return f;
}

void check_sum_params(const SchmidtParams& p) {
  p.validate();
  if (p.n < 1) throw std::invalid_argument("weighted sum requires n >= 1");
}

}  // namespace

MultiPoly weighted_sum(const SchmidtParams& p, Weight w) {
  check_sum_params(p);
  MultiPoly total;
  for (unsigned k = 0; k < p.n; ++k) {
    Integer f = outer_factor(p, w, k);
    if (f == 0) continue;
    const MultiPoly s = schmidt_multi(k, p.r);
    total += poly_pow(s, p.m) * f;
  }
  return total;
}

UniPoly weighted_sum_single(const SchmidtParams& p, Weight w) {
  check_sum_params(p);
  UniPoly total;
  for (unsigned k = 0; k < p.n; ++k) {
    Integer f = outer_factor(p, w, k);
    if (f == 0) continue;
    total += uni_pow(schmidt_single(k, p.r), p.m) * f;
  }
  return total;
}

SpecializationRule apery_specialization_rule(unsigned r) {
  if (r < 1) throw std::invalid_argument("apery_specialization_rule: r must be >= 1");
  return [r](VarIndex k) -> std::optional<Integer> { return pow(central_binom(k), r - 1); };
}

}  // namespace schmidt
