#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qpoly.hpp"

using namespace hecke;

namespace {

LaurentPoly P(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

LaurentPoly random_poly(std::mt19937& rng, bool laurent = true) {
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<int> exp(laurent ? -5 : 0, 5);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.add_term(exp(rng), Rational(num(rng), den(rng)));
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly q = LaurentPoly::q();
  CHECK((q - 1) + LaurentPoly(1) == q);
  CHECK((q - 1) * (q + 1) == P({{2, 1}, {0, -1}}));
  CHECK(LaurentPoly::q_power(-1) * q == LaurentPoly(1));
  CHECK((q - q).is_zero());
  CHECK(P({{3, 2}, {-2, 1}}).min_exp() == -2);
  CHECK(P({{3, 2}, {-2, 1}}).max_exp() == 3);
}

TEST_CASE("rational function canonical form") {
  LaurentPoly q = LaurentPoly::q();
  RationalFn r(P({{2, 1}, {0, -1}}), q - 1);  // (q^2-1)/(q-1)
  CHECK(r.is_polynomial());
  CHECK(r.exact_poly() == q + 1);

  RationalFn s = RationalFn(P({{2, 1}, {0, -1}})) / RationalFn(q - 1);
  CHECK(s == r);

  CHECK(RationalFn(q + 1).exact_poly() == q + 1);
  CHECK_THROWS_AS(RationalFn(LaurentPoly(1), q - 1).exact_poly(), not_polynomial);
  CHECK_THROWS_AS(RationalFn(q, LaurentPoly(0)), division_by_zero);
  CHECK_THROWS_AS(RationalFn(q) / RationalFn(0), division_by_zero);

  // scaled pairs canonicalize identically
  RationalFn a(q + 1, q - 1);
  RationalFn b((q + 1) * P({{0, 3}}), (q - 1) * P({{0, 3}}));
  CHECK(a == b);
  RationalFn c((q + 1) * LaurentPoly::q_power(2), (q - 1) * LaurentPoly::q_power(2));
  CHECK(a == c);
  // denominator never keeps a power of q
  CHECK(c.den().min_exp() == 0);
  CHECK(c.den().leading_coeff() == 1);
}

TEST_CASE("f coefficients") {
  CHECK(f_coeff(0).is_zero());
  CHECK(f_coeff(1) == LaurentPoly(1));
  CHECK(f_coeff(3) == P({{2, 1}, {1, -1}, {0, 1}}));
  // closed form (q^p - (-1)^p)/(q+1)
  for (int p = 0; p <= 12; ++p) {
    LaurentPoly lhs = f_coeff(p) * (LaurentPoly::q() + 1);
    LaurentPoly rhs = LaurentPoly::q_power(p) - LaurentPoly((p % 2 == 0) ? 1 : -1);
    CHECK(lhs == rhs);
  }
  // recurrence f_p = (q-1) f_{p-1} + q f_{p-2}
  for (int p = 2; p <= 30; ++p) {
    CHECK(f_coeff(p) == (LaurentPoly::q() - 1) * f_coeff(p - 1) + LaurentPoly::q() * f_coeff(p - 2));
  }
}

TEST_CASE("f identities used by the reduction machinery") {
  LaurentPoly q = LaurentPoly::q();
  for (int p = 1; p <= 12; ++p) {
    // (q-1)^2 sum_k k q^{k-1} f_{2(p-k)} + (q-1) p q^{p-1} = f_{2p}
    LaurentPoly sum;
    for (int k = 1; k <= p - 1; ++k) sum += LaurentPoly(k) * LaurentPoly::q_power(k - 1) * f_coeff(2 * (p - k));
    LaurentPoly lhs = (q - 1) * (q - 1) * sum + (q - 1) * LaurentPoly(p) * LaurentPoly::q_power(p - 1);
    CHECK(lhs == f_coeff(2 * p));
  }
  for (int p = 1; p <= 12; ++p) {
    // (q-1) sum_l q^{l-1} f_{2(p+1-l)} + q^p = f_{2p+1}
    LaurentPoly sum;
    for (int l = 1; l <= p; ++l) sum += LaurentPoly::q_power(l - 1) * f_coeff(2 * (p + 1 - l));
    CHECK((q - 1) * sum + LaurentPoly::q_power(p) == f_coeff(2 * p + 1));
  }
}

TEST_CASE("q-integers") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(3).exact_poly() == P({{2, 1}, {1, 1}, {0, 1}}));
  CHECK(q_integer(-1).exact_poly() == P({{-1, -1}}));
  CHECK(q_integer(-2).exact_poly() == P({{-2, -1}, {-1, -1}}));
  // (q^x - 1)/(q - 1) against direct construction
  for (int x = -6; x <= 6; ++x) {
    RationalFn direct(LaurentPoly::q_power(x) - 1, LaurentPoly::q() - 1);
    CHECK(direct == q_integer(x));
  }
}

TEST_CASE("specialization") {
  CHECK(specialize(RationalFn(P({{2, 1}, {1, 1}, {0, 1}})), Rational(1)) == 3);
  CHECK(specialize(RationalFn(f_coeff(3)), Rational(1)) == 1);
  CHECK_THROWS_AS(specialize(RationalFn(LaurentPoly(1), LaurentPoly::q() - 1), Rational(1)), pole_at_point);
  CHECK(specialize(RationalFn(P({{-2, 1}})), Rational(1, 2)) == 4);
  CHECK_THROWS_AS(specialize(RationalFn(P({{-1, 1}})), Rational(0)), pole_at_point);
}

TEST_CASE("ratfn arithmetic is associative and commutative on samples") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    // the q^7 spike keeps every denominator nonzero (random exponents stop at 5)
    RationalFn a(random_poly(rng), random_poly(rng) + LaurentPoly::q_power(7));
    RationalFn b(random_poly(rng), random_poly(rng) + LaurentPoly::q_power(7));
    RationalFn c(random_poly(rng), random_poly(rng) + LaurentPoly::q_power(7));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("json round trip is exact") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::from_json(nlohmann::json::parse(p.to_json().dump())) == p);
    RationalFn r(random_poly(rng), random_poly(rng) + LaurentPoly::q_power(7));
    CHECK(RationalFn::from_json(nlohmann::json::parse(r.to_json().dump())) == r);
  }
  // exponent-sorted pairs with exact rational strings
  LaurentPoly p = P({{-1, 2}, {3, -4}});
  CHECK(p.to_json().dump() == "[[-1,\"2\"],[3,\"-4\"]]");
}

TEST_CASE("string rendering") {
  CHECK(P({{3, 1}, {1, -2}, {0, 1}}).str() == "q^3-2q+1");
  CHECK(P({{1, 1}, {0, -1}}).str() == "q-1");
  CHECK(P({{-1, -1}}).str() == "-q^-1");
  CHECK(LaurentPoly(0).str() == "0");
  CHECK(RationalFn(LaurentPoly(1), LaurentPoly::q() - 1).str() == "(1)/(q-1)");
}

TEST_CASE("int poly mirror") {
  IntPoly q = IntPoly::q();
  CHECK((q * q - IntPoly::qm1() * q).to_laurent() == LaurentPoly::q());
  for (int p = 0; p <= 16; ++p) CHECK(f_coeff_int(p).to_laurent() == f_coeff(p));
  IntPoly prod = f_coeff_int(9) * IntPoly::qm1();
  CHECK(prod.div_exact_qm1() == f_coeff_int(9));
  IntPoly back;
  CHECK(IntPoly::try_from_laurent(f_coeff(7).shifted(-3), &back));
  CHECK(back.to_laurent() == f_coeff(7).shifted(-3));
  LaurentPoly frac = LaurentPoly::monomial(0, Rational(1, 2));
  CHECK_FALSE(IntPoly::try_from_laurent(frac, &back));
  CHECK(binomial_ll(7, 3) == 35);
  CHECK(binomial_ll(5, 0) == 1);
  CHECK(binomial_ll(4, 5) == 0);
}
