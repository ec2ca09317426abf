#include "doctest.h"
#include "oracles.hpp"
#include "schmidt/linearizer.hpp"

#include <thread>

using namespace schmidt;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

BasisCombo combo(std::initializer_list<std::pair<unsigned, long>> terms) {
  BasisCombo c;
  for (auto [t, v] : terms) c.add(t, v);
  return c;
}

BasisCombo random_combo(oracle::Rng& rng) {
  BasisCombo c;
  const long n = rng.uniform(0, 4);
  for (long i = 0; i < n; ++i) c.add(static_cast<unsigned>(rng.uniform(0, 5)), rng.uniform(-20, 20));
  return c;
}

/// C(k+i, 2i)^r C(2i, i) from the rational falling-factorial oracle.
mpz_class power_term(unsigned i, unsigned r, const mpz_class& k) {
  mpq_class b = oracle::falling_binom(k + i, 2L * i);
  return oracle::ipow(b.get_num(), r) * oracle::central(i);
}

}  // namespace

TEST_CASE("b_table examples") {
  for (unsigned m = 0; m <= 6; ++m) CHECK(b_table(m, 1).entries() == ints({1}));
  CHECK(b_table(1, 2).entries() == ints({1, 2}));
  CHECK(b_table(2, 2).entries() == ints({1, 6, 6}));
  CHECK(b_table(2, 3).entries() == ints({1, 36, 216, 400, 225}));
  CHECK(b_table(0, 5).entries() == ints({1}));
  CHECK_THROWS_AS(b_table(1, 0), std::invalid_argument);
}

TEST_CASE("b_table(1,2) and b_table(2,2) reproduce the expansion at hand-checked points") {
  // l = 2: 18 = 6 + 12; l = 3: 72 = 12 + 60
  const auto t12 = b_table(1, 2);
  for (auto [l, lhs] : {std::pair{2, 18}, {3, 72}}) {
    CHECK(power_term(1, 2, l) == lhs);
    CHECK(t12.at(1) * oracle::basis(1, l) + t12.at(2) * oracle::basis(2, l) == lhs);
  }
  // l = 2, 3, 4: 6, 150, 1350
  const auto t22 = b_table(2, 2);
  for (auto [l, lhs] : {std::pair{2, 6}, {3, 150}, {4, 1350}}) {
    CHECK(power_term(2, 2, l) == lhs);
    mpz_class rhs = 0;
    for (unsigned k = 2; k <= 4; ++k) rhs += t22.at(k) * oracle::basis(k, l);
    CHECK(rhs == lhs);
  }
}

TEST_CASE("b_table_next rejects a table that breaks divisibility") {
  BTable bogus(2, 2, ints({1, 5, 6}));  // 5 is not divisible by C(3,2) = 3
  CHECK_THROWS_AS(b_table_next(bogus), IntegralityError);
  CHECK_FALSE(btable_is_valid(bogus));
  CHECK(btable_is_valid(b_table(3, 3)));
  CHECK_FALSE(btable_is_valid(BTable(1, 2, ints({1, 4}))));
}

TEST_CASE("property: C(k, m) divides every b-coefficient") {
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned r = 1; r <= 5; ++r) {
      const BTable t = b_table(m, r);
      CHECK(t.entries().size() == r * m - m + 1);
      for (unsigned k = m; k <= r * m; ++k)
        CHECK(mpz_divisible_p(t.at(k).get_mpz_t(), oracle::factorial_binom(k, m).get_mpz_t()));
    }
}

TEST_CASE("property: basis expansion of C(l+m, 2m)^r C(2m, m) holds at 2rm+1 points") {
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned r = 1; r <= 4; ++r) {
      const BasisCombo c = power_linearize(m, r);
      for (long l = 0; l <= 2L * r * m; ++l) CHECK(combo_eval(c, l) == power_term(m, r, l));
      CHECK(certify_power_identity(b_table(m, r)).passed);
      if (m >= 1) {
        CHECK(c.min_index() == m);
        CHECK(c.max_index() == r * m);
      }
    }
}

TEST_CASE("power_linearize examples") {
  CHECK(power_linearize(4, 1) == combo({{4, 1}}));
  CHECK(power_linearize(1, 2) == combo({{1, 1}, {2, 2}}));
  CHECK(power_linearize(0, 3) == combo({{0, 1}}));
}

TEST_CASE("product_linearize examples") {
  for (unsigned j = 0; j <= 5; ++j) CHECK(product_linearize(0, j) == combo({{j, 1}}));
  CHECK(product_linearize(1, 1) == combo({{1, 2}, {2, 4}}));
  // 36 = 2*6 + 4*6 at l = 2; 144 = 2*12 + 4*30 at l = 3
  CHECK(oracle::basis(1, 2) * oracle::basis(1, 2) == 36);
  CHECK(oracle::basis(1, 3) * oracle::basis(1, 3) == 144);
  // i = 1, j = 2: s = 0 gives C(3,1) C(2,1) C(2,0) = 6, s = 1 gives C(3,1) C(2,0) C(3,1) = 9
  const BasisCombo p12 = product_linearize(1, 2);
  CHECK(p12 == combo({{2, 6}, {3, 9}}));
  for (long l = 0; l <= 6; ++l)
    CHECK(combo_eval(p12, l) == oracle::basis(1, l) * oracle::basis(2, l));
}

TEST_CASE("property: product identity and symmetry for i, j <= 8") {
  for (unsigned i = 0; i <= 8; ++i)
    for (unsigned j = 0; j <= 8; ++j) {
      const BasisCombo p = product_linearize(i, j);
      CHECK(p == product_linearize(j, i));
      CHECK(*p.min_index() >= std::max(i, j));
      CHECK(*p.max_index() == i + j);
      for (long l = 0; l <= 2L * (i + j); ++l)
        CHECK(combo_eval(p, l) == oracle::basis(i, l) * oracle::basis(j, l));
      CHECK(certify_product_identity(i, j).passed);
    }
}

TEST_CASE("combo_mul examples") {
  oracle::Rng rng(3);
  for (int iter = 0; iter < 20; ++iter) {
    BasisCombo q = random_combo(rng);
    CHECK(combo_mul(combo({{0, 1}}), q) == q);
    CHECK(combo_mul(q, combo({{0, 1}})) == q);
  }
  CHECK(combo_mul(combo({{1, 1}}), combo({{1, 1}})) == combo({{1, 2}, {2, 4}}));
  CHECK(combo_mul(BasisCombo{}, combo({{3, 7}})).empty());
}

TEST_CASE("property: combo_mul is pointwise multiplication, associative and commutative") {
  oracle::Rng rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    BasisCombo p = random_combo(rng), q = random_combo(rng), s = random_combo(rng);
    const BasisCombo pq = combo_mul(p, q);
    for (long k = 0; k <= 20; ++k) CHECK(combo_eval(pq, k) == combo_eval(p, k) * combo_eval(q, k));
    CHECK(pq == combo_mul(q, p));
    CHECK(combo_mul(pq, s) == combo_mul(p, combo_mul(q, s)));
  }
}

TEST_CASE("tuple_linearize examples") {
  const std::vector<unsigned> single{3};
  CHECK(tuple_linearize(single, 1) == combo({{3, 1}}));
  const std::vector<unsigned> ones{1, 1};
  CHECK(tuple_linearize(ones, 1) == combo({{1, 2}, {2, 4}}));
  const BasisCombo sq = tuple_linearize(ones, 2);
  CHECK(sq == combo({{1, 2}, {2, 52}, {3, 180}, {4, 144}}));
  for (long k = 1; k <= 9; ++k) {
    mpz_class f = oracle::ipow(oracle::falling_binom(k + 1, 2).get_num(), 2) * 2;
    CHECK(combo_eval(sq, k) == f * f);
  }
  CHECK_THROWS_AS(tuple_linearize(std::vector<unsigned>{}, 1), std::invalid_argument);
}

TEST_CASE("property: tuple_linearize index bounds and pointwise value") {
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned a = 0; a <= 4; ++a)
      for (unsigned b = 0; b <= 4; ++b)
        for (unsigned c = 0; c <= 4; ++c)
          for (std::size_t len = 1; len <= 3; ++len) {
            std::vector<unsigned> idx{a, b, c};
            idx.resize(len);
            const BasisCombo res = tuple_linearize(idx, r);
            unsigned top = 0, total = 0;
            for (unsigned i : idx) {
              top = std::max(top, i);
              total += i;
            }
            REQUIRE_FALSE(res.empty());
            CHECK(*res.min_index() >= top);
            CHECK(*res.max_index() <= r * total);
            if (r <= 2)
              for (long k = 0; k <= 2L * r * total; ++k) {
                mpz_class expect = 1;
                for (unsigned i : idx) expect *= power_term(i, r, k);
                CHECK(combo_eval(res, k) == expect);
              }
          }
}

TEST_CASE("combo_eval examples") {
  CHECK(combo_eval(combo({{1, 1}}), 2) == 6);
  CHECK(combo_eval(BasisCombo{}, 11) == 0);
  CHECK(combo_eval(combo({{0, 5}}), 100) == 5);
  CHECK(combo({{1, 2}, {2, 4}}).to_string() == "{1: 2, 2: 4}");
  CHECK(BasisCombo{}.to_string() == "{}");
}

TEST_CASE("pfaff_check examples") {
  const auto one = ints({5});
  CHECK(pfaff_check(0, 0, one).passed);
  const auto three = ints({1, 2, 3});
  CHECK(pfaff_check(1, 1, three).passed);
  const auto eight = sample_range(2, 9);
  CHECK(pfaff_check(2, 3, eight).passed);
  CHECK_THROWS_AS(pfaff_check(2, 3, three), std::invalid_argument);
  const auto dup = ints({1, 1, 2});
  CHECK_THROWS_AS(pfaff_check(1, 1, dup), std::invalid_argument);
}

TEST_CASE("property: the rewritten Pfaff-Saalschutz identity holds, negative samples included") {
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned k = 0; k <= 6; ++k) {
      const auto samples = sample_range(-static_cast<long>(k) - 3, static_cast<long>(k) + 3);
      const Certificate cert = pfaff_check(m, k, samples);
      CHECK_MESSAGE(cert.passed, "m=" << m << " k=" << k);
      CHECK(cert.points == samples.size());
    }
}

TEST_CASE("pointwise certificate reports the first mismatch") {
  PointFunction lhs = [](const Integer& x) -> Rational { return x * x; };
  PointFunction rhs = [](const Integer& x) -> Rational { return x == 2 ? Integer(5) : Integer(x * x); };
  const auto s = sample_range(0, 3);
  const Certificate cert = certify_pointwise(lhs, rhs, s, 3);
  CHECK_FALSE(cert.passed);
  REQUIRE(cert.mismatch);
  CHECK(cert.mismatch->point == 2);
  CHECK(cert.mismatch->lhs == 4);
  CHECK(cert.mismatch->rhs == 5);
}

TEST_CASE("b-table cache: concurrent callers see equal tables") {
  BTableCache cache;
  std::vector<BTable> results(8, BTable(0, 1, ints({1})));
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < results.size(); ++t)
    workers.emplace_back([&, t] { results[t] = b_table(4, 5, &cache); });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == b_table(4, 5));
  CHECK(cache.size() == 5);  // r = 1..5 for m = 4
  CHECK(power_linearize(4, 5, &cache) == power_linearize(4, 5));
}
