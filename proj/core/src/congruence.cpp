#include "schmidt/congruence.hpp"

#include <algorithm>
#include <stdexcept>

namespace schmidt {

std::string to_string(CheckKind c) {
  switch (c) {
    case CheckKind::theorem: return "theorem";
    case CheckKind::pan: return "pan";
    case CheckKind::kk1: return "kk1";
    case CheckKind::odd_power: return "odd_power";
  }
  return "unknown";
}

CheckKind check_kind_from_string(const std::string& name) {
  if (name == "theorem") return CheckKind::theorem;
  if (name == "pan") return CheckKind::pan;
  if (name == "kk1") return CheckKind::kk1;
  if (name == "odd_power" || name == "odd-power") return CheckKind::odd_power;
  throw std::invalid_argument("unknown check '" + name + "'");
}

namespace {

void require_partial_sum_range(unsigned n, unsigned k) {
  if (n < 1 || k >= n) throw std::invalid_argument("partial sum requires 0 <= k <= n-1");
}

Integer signed_odd(unsigned k, Sign eps) {
  Integer v = 2 * k + 1;
  if (eps == Sign::minus && k % 2 == 1) v = -v;
  return v;
}

using Clock = std::chrono::steady_clock;

}  // namespace

Integer partial_sum_plus(unsigned n, unsigned k) {
  require_partial_sum_range(n, k);
  return Integer(n) * binom(Integer(n), k + 1L) * binom(Integer(n + k), k);
}

Integer partial_sum_minus(unsigned n, unsigned k) {
  require_partial_sum_range(n, k);
  Integer v = Integer(n) * binom(Integer(n - 1), k) * binom(Integer(n + k), k);
  return (n - 1) % 2 == 0 ? v : Integer(-v);
}

Integer partial_sum_direct(unsigned n, unsigned k, Sign eps) {
  require_partial_sum_range(n, k);
  Integer total = 0;
  for (unsigned l = k; l < n; ++l) total += signed_odd(l, eps) * basis_eval(k, Integer(l));
  return total;
}

Integer inner_sum_direct(unsigned n, std::span<const unsigned> indices, unsigned r, Sign eps) {
  if (indices.empty()) throw std::invalid_argument("inner_sum_direct: empty index list");
  if (r < 1) throw std::invalid_argument("inner_sum_direct: r must be >= 1");
  const unsigned top = *std::max_element(indices.begin(), indices.end());
  if (top >= n) throw std::invalid_argument("inner_sum_direct: indices must be <= n-1");
  Integer total = 0;
  for (unsigned k = top; k < n; ++k) {
    Integer product = signed_odd(k, eps);
    for (unsigned i : indices)
      product *= pow(binom(Integer(k + i), 2L * i), r) * central_binom(i);
    total += product;
  }
  return total;
}

Integer constructive_quotient(unsigned n, const BasisCombo& combo, Sign eps) {
  Integer q = 0;
  for (const auto& [t, c] : combo.terms()) {
    if (eps == Sign::plus)
      q += c * binom(Integer(n), t + 1L) * binom(Integer(n + t), t);
    else
      q += c * binom(Integer(n) - 1, t) * binom(Integer(n + t), t);
  }
  if (eps == Sign::minus && (n - 1) % 2 == 1) q = -q;
  return q;
}

ConstructiveInnerSum inner_sum_constructive(unsigned n, std::span<const unsigned> indices,
                                            unsigned r, Sign eps, BTableCache* cache) {
  const Integer direct = inner_sum_direct(n, indices, r, eps);
  const BasisCombo combo = tuple_linearize(indices, r, cache);
  ConstructiveInnerSum out;
  out.quotient = constructive_quotient(n, combo, eps);
  out.value = Integer(n) * out.quotient;
  if (out.value != direct)
    throw InvariantViolation("constructive inner sum " + out.value.get_str() +
                             " differs from direct value " + direct.get_str());
  return out;
}

namespace {

struct TupleWalk {
  const SchmidtParams& params;
  const std::vector<BasisCombo>& powers;  // power_linearize(i, r) for i < n
  const Integer m_fact;
  MultiPoly& total;
  std::vector<unsigned> tuple;

  // Extends the sorted prefix; `prefix` is the combination for it.
  void extend(unsigned lowest, const BasisCombo& prefix) {
    if (tuple.size() == params.m) {
      emit(prefix);
      return;
    }
    for (unsigned i = lowest; i < params.n; ++i) {
      tuple.push_back(i);
      extend(i, tuple.size() == 1 ? powers[i] : combo_mul(prefix, powers[i]));
      tuple.pop_back();
    }
  }

  // A sorted tuple stands for its m! / prod(mult!) orderings, all with the
  // same inner sum.
  void emit(const BasisCombo& combo) {
    const Integer value = Integer(params.n) * constructive_quotient(params.n, combo, params.epsilon);
    Integer orderings = m_fact;
    std::vector<VarPower> powers_of;
    for (std::size_t s = 0; s < tuple.size();) {
      std::size_t e = s;
      while (e < tuple.size() && tuple[e] == tuple[s]) ++e;
      orderings /= factorial(e - s);
      powers_of.push_back({tuple[s], static_cast<std::uint32_t>(e - s)});
      s = e;
    }
    total.add_term(ExponentVector(std::move(powers_of)), orderings * value);
  }
};

}  // namespace

MultiPoly constructive_weighted_sum(const SchmidtParams& p, BTableCache* cache) {
  p.validate();
  if (p.n < 1) throw std::invalid_argument("constructive_weighted_sum: n must be >= 1");
  std::vector<BasisCombo> powers;
  powers.reserve(p.n);
  for (unsigned i = 0; i < p.n; ++i) powers.push_back(power_linearize(i, p.r, cache));
  MultiPoly total;
  TupleWalk walk{p, powers, factorial(p.m), total, {}};
  walk.extend(0, BasisCombo::single(0));
  return total;
}

Integer m1_coefficient(unsigned n, unsigned i, unsigned r, Sign eps, BTableCache* cache) {
  if (i >= n) throw std::invalid_argument("m1_coefficient: requires i <= n-1");
  const BTable table = b_table(i, r, cache);
  Integer sum = 0;
  for (unsigned j = table.first_index(); j <= table.last_index(); ++j) {
    if (eps == Sign::plus)
      sum += table.at(j) * binom(Integer(n), j + 1L) * binom(Integer(n + j), j);
    else
      sum += table.at(j) * binom(Integer(n) - 1, j) * binom(Integer(n + j), j);
  }
  Integer out = Integer(n) * sum;
  if (eps == Sign::minus && (n - 1) % 2 == 1) out = -out;
  return out;
}

CongruenceReport make_report(const SchmidtParams& p, Weight w, CheckKind check,
                             const MultiPoly& sum, bool keep_terms) {
  CongruenceReport report;
  report.params = p;
  report.weight = w;
  report.check = check;
  const DivisibilityVerdict verdict = all_coeffs_divisible(sum, Integer(p.n));
  report.passed = verdict.divisible;
  if (verdict.witness)
    report.witness = Witness{verdict.witness->monomial.to_string(), verdict.witness->coefficient,
                             verdict.witness->residue};
  if (keep_terms) {
    report.terms.reserve(sum.size());
    for (const auto& [mono, c] : sum.terms()) report.terms.push_back({mono.to_string(), c});
  }
  return report;
}

CongruenceReport make_report(const SchmidtParams& p, Weight w, CheckKind check,
                             const UniPoly& sum, bool keep_terms) {
  CongruenceReport report;
  report.params = p;
  report.weight = w;
  report.check = check;
  const Integer n(p.n);
  for (std::size_t e = 0; e < sum.coeffs().size(); ++e) {
    const Integer& c = sum.coeffs()[e];
    if (c == 0) continue;
    std::string mono = e == 0 ? "1" : e == 1 ? "x" : "x^" + std::to_string(e);
    if (report.passed) {
      Integer res = residue(c, n);
      if (res != 0) {
        report.passed = false;
        report.witness = Witness{mono, c, res};
      }
    }
    if (keep_terms) report.terms.push_back({std::move(mono), c});
  }
  return report;
}

CongruenceReport theorem_check(const SchmidtParams& p, const CheckOptions& opts) {
  const auto start = Clock::now();
  const MultiPoly sum = weighted_sum(p, Weight::plain);
  CongruenceReport report = make_report(p, Weight::plain, CheckKind::theorem, sum, opts.keep_terms);
  if (opts.constructive) {
    if (constructive_weighted_sum(p, opts.cache) != sum)
      throw InvariantViolation("constructive reconstruction disagrees with the direct sum");
    report.constructive_checked = true;
  }
  report.elapsed = Clock::now() - start;
  return report;
}

CongruenceReport pan_check(const SchmidtParams& p, const CheckOptions& opts) {
  const auto start = Clock::now();
  const UniPoly single = weighted_sum_single(p, Weight::plain);
  const UniPoly specialised =
      specialize(weighted_sum(p, Weight::plain), apery_specialization_rule(p.r));
  if (single != specialised)
    throw InvariantViolation("single-variable sum differs from the specialised multi-variable sum");
  CongruenceReport report = make_report(p, Weight::plain, CheckKind::pan, single, opts.keep_terms);
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace schmidt
