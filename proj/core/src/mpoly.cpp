#include "schmidt/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schmidt {

ExponentVector::ExponentVector(std::vector<VarPower> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  for (const auto& e : entries) {
    if (e.exp == 0) continue;
    if (!entries_.empty() && entries_.back().var == e.var)
      entries_.back().exp += e.exp;
    else
      entries_.push_back(e);
  }
}

ExponentVector ExponentVector::variable(VarIndex var, std::uint32_t exp) {
  ExponentVector v;
  if (exp > 0) v.entries_.push_back({var, exp});
  return v;
}

std::uint64_t ExponentVector::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& e : entries_) d += e.exp;
  return d;
}

std::uint32_t ExponentVector::exponent(VarIndex var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), var,
                             [](const VarPower& e, VarIndex v) { return e.var < v; });
  return (it != entries_.end() && it->var == var) ? it->exp : 0;
}

ExponentVector ExponentVector::operator*(const ExponentVector& other) const {
  ExponentVector out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->var < b->var)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->var < a->var) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  return out;
}

std::string ExponentVector::to_string() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += " * ";
    out += "x_" + std::to_string(e.var);
    if (e.exp != 1) out += "^" + std::to_string(e.exp);
  }
  return out;
}

bool GradedOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    // The vector holding the smaller variable index has a positive exponent
    // where the other has zero.
    if (ea[i].var != eb[i].var) return ea[i].var < eb[i].var;
    if (ea[i].exp != eb[i].exp) return ea[i].exp > eb[i].exp;
  }
  return i < ea.size() && i == eb.size();
}

MultiPoly MultiPoly::constant(const Integer& c) {
  MultiPoly p;
  p.add_term(ExponentVector{}, c);
  return p;
}

MultiPoly MultiPoly::variable(VarIndex var) {
  MultiPoly p;
  p.add_term(ExponentVector::variable(var), 1);
  return p;
}

MultiPoly MultiPoly::from_terms(
    const std::vector<std::pair<ExponentVector, Integer>>& terms) {
  MultiPoly p;
  for (const auto& [mono, c] : terms) p.add_term(mono, c);
  return p;
}

Integer MultiPoly::coefficient(const ExponentVector& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly::add_term(const ExponentVector& monomial, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  Integer product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpz_mul(product.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(ma * mb, product);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

Integer MultiPoly::evaluate(const std::function<Integer(VarIndex)>& value_of) const {
  Integer total = 0;
  for (const auto& [mono, c] : terms_) {
    Integer term = c;
    for (const auto& e : mono.entries()) term *= pow(value_of(e.var), e.exp);
    total += term;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    if (!mono.is_constant()) out += " * " + mono.to_string();
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::uint32_t parse_u32(std::string_view s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw std::invalid_argument("malformed polynomial term: '" + std::string(context) + "'");
  return static_cast<std::uint32_t>(std::stoul(std::string(s)));
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
  MultiPoly p;
  text = trim(text);
  if (text == "0") return p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string_view term = trim(text.substr(pos, next == std::string_view::npos ? next : next - pos));
    Integer coeff = 1;
    std::vector<VarPower> powers;
    std::size_t fpos = 0;
    bool first = true;
    while (fpos <= term.size()) {
      std::size_t fnext = term.find('*', fpos);
      std::string_view factor =
          trim(term.substr(fpos, fnext == std::string_view::npos ? fnext : fnext - fpos));
      if (factor.rfind("x_", 0) == 0) {
        std::size_t caret = factor.find('^');
        VarIndex var = parse_u32(factor.substr(2, caret == std::string_view::npos ? caret : caret - 2), term);
        std::uint32_t exp = caret == std::string_view::npos ? 1 : parse_u32(factor.substr(caret + 1), term);
        powers.push_back({var, exp});
      } else if (first) {
        coeff = parse_integer(std::string(factor));
      } else {
        throw std::invalid_argument("malformed polynomial term: '" + std::string(term) + "'");
      }
      first = false;
      if (fnext == std::string_view::npos) break;
      fpos = fnext + 1;
    }
    p.add_term(ExponentVector(std::move(powers)), coeff);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return p;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly poly_pow(const MultiPoly& p, unsigned m) {
  if (m == 0) throw std::invalid_argument("poly_pow: exponent must be >= 1");
  MultiPoly result = p;
  for (unsigned i = 1; i < m; ++i) result = result * p;
  return result;
}

DivisibilityVerdict all_coeffs_divisible(const MultiPoly& p, const Integer& n) {
  if (n < 1) throw std::invalid_argument("all_coeffs_divisible: modulus must be >= 1");
  for (const auto& [mono, c] : p.terms()) {
    Integer r = residue(c, n);
    if (r != 0) return {false, NonDivisibleTerm{mono, c, r}};
  }
  return {};
}

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UniPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

void UniPoly::add_term(std::size_t power, const Integer& coeff) {
  if (coeff == 0) return;
  if (coeffs_.size() <= power) coeffs_.resize(power + 1);
  coeffs_[power] += coeff;
  trim();
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  return UniPoly(std::move(out));
}

Integer UniPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].get_str();
    if (i == 1) out += " * x";
    if (i > 1) out += " * x^" + std::to_string(i);
  }
  return out;
}

UniPoly uni_pow(const UniPoly& p, unsigned m) {
  if (m == 0) throw std::invalid_argument("uni_pow: exponent must be >= 1");
  UniPoly result = p;
  for (unsigned i = 1; i < m; ++i) result = result * p;
  return result;
}

UniPoly specialize(const MultiPoly& p, const SpecializationRule& rule) {
  std::vector<Integer> coeffs;
  for (const auto& [mono, c] : p.terms()) {
    Integer value = c;
    std::size_t power = 0;
    for (const auto& e : mono.entries()) {
      auto scale = rule(e.var);
      if (!scale)
        throw std::out_of_range("specialize: no substitution for x_" + std::to_string(e.var));
      value *= pow(*scale, e.exp);
      power += static_cast<std::size_t>(e.var) * e.exp;
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += value;
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace schmidt
