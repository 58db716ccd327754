#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "runslab/polynomial.hpp"

using namespace runslab;
using Coeff = RunPolynomial::Coeff;

namespace {

RunPolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
  RunPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

RunPolynomial random_poly(std::mt19937& rng) {
  RunPolynomial p;
  const int terms = static_cast<int>(rng() % 6);
  for (int t = 0; t < terms; ++t) {
    p.add_term(static_cast<int>(rng() % 12), static_cast<long long>(rng() % 2001) - 1000);
  }
  return p;
}

}  // namespace

TEST_CASE("add_term keeps the canonical form") {
  RunPolynomial p;
  p.add_term(3, 2);
  CHECK(p == poly({{3, 2}}));
  p.add_term(3, -2);
  CHECK(p.is_zero());
  CHECK(p.coefficients().empty());

  RunPolynomial q = poly({{1, 1}});
  q.add_term(2, 4);
  CHECK(q == poly({{1, 1}, {2, 4}}));
  CHECK(q.coeff(2) == 4);
  CHECK(q.coeff(5) == 0);

  CHECK_THROWS_AS(q.add_term(-1, 3), InvalidInput);
}

TEST_CASE("merge") {
  CHECK(merge(poly({{1, 2}}), poly({{2, 4}})) == poly({{1, 2}, {2, 4}}));
  const RunPolynomial p = poly({{1, 2}, {3, 7}});
  CHECK(merge(p, RunPolynomial{}) == p);
  CHECK(merge(poly({{1, 1}, {2, 1}}), poly({{1, 1}, {2, -1}})) == poly({{1, 2}}));
}

TEST_CASE("merge is associative and commutative in canonical form") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const RunPolynomial a = random_poly(rng);
    const RunPolynomial b = random_poly(rng);
    const RunPolynomial c = random_poly(rng);
    const RunPolynomial left = merge(merge(a, b), c);
    CHECK(left == merge(a, merge(b, c)));
    CHECK(left == merge(merge(c, b), a));
    CHECK(left == merge(merge(b, a), c));
  }
}

TEST_CASE("mul_binomial_power") {
  CHECK(mul_binomial_power(poly({{3, 1}}), 2) == poly({{3, 1}, {4, 2}, {5, 1}}));
  const RunPolynomial p = poly({{0, 5}, {2, 1}});
  CHECK(mul_binomial_power(p, 0) == p);
  CHECK(mul_binomial_power(poly({{1, 2}, {2, 10}}), 1) == poly({{1, 2}, {2, 12}, {3, 10}}));
  CHECK_THROWS_AS(mul_binomial_power(p, -1), InvalidInput);
}

TEST_CASE("div_binomial_power performs exact synthetic division") {
  const BinomialDivision d1 = div_binomial_power(poly({{1, 2}, {2, 12}, {3, 10}}), 1);
  CHECK(d1.exact);
  CHECK(d1.quotient == poly({{1, 2}, {2, 10}}));

  const BinomialDivision d2 = div_binomial_power(poly({{3, 1}, {4, 2}, {5, 1}}), 2);
  CHECK(d2.exact);
  CHECK(d2.quotient == poly({{3, 1}}));

  const BinomialDivision d3 = div_binomial_power(poly({{1, 2}, {2, 4}}), 1);
  CHECK_FALSE(d3.exact);
  CHECK(d3.failed_stage == 1);
  CHECK(d3.remainder == 2);  // the value at z = -1

  const BinomialDivision d0 = div_binomial_power(poly({{1, 2}, {2, 4}}), 0);
  CHECK(d0.exact);
  CHECK(d0.quotient == poly({{1, 2}, {2, 4}}));

  CHECK(div_binomial_power(RunPolynomial{}, 3).exact);
  CHECK_THROWS_AS(div_binomial_power(poly({{1, 1}}), -1), InvalidInput);
}

TEST_CASE("division reports the first failing stage") {
  // z^3(1+z) + 1: stage 1 already fails with the value at -1
  RunPolynomial p = mul_binomial_power(poly({{3, 1}}), 1);
  p.add_term(0, 1);
  const BinomialDivision d = div_binomial_power(p, 3);
  CHECK_FALSE(d.exact);
  CHECK(d.failed_stage == 1);
  CHECK(d.remainder == 1);

  // (1+z)^1 * (z + 1 + z^2): stage 1 succeeds, stage 2 fails
  const RunPolynomial q = mul_binomial_power(poly({{0, 1}, {1, 1}, {2, 1}}), 1);
  const BinomialDivision d2 = div_binomial_power(q, 2);
  CHECK_FALSE(d2.exact);
  CHECK(d2.failed_stage == 2);
  CHECK(d2.remainder == 1);  // (z^2 + z + 1) at z = -1
}

TEST_CASE("division round-trips with multiplication") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const RunPolynomial p = random_poly(rng);
    const int m = static_cast<int>(rng() % 10);
    const BinomialDivision d = div_binomial_power(mul_binomial_power(p, m), m);
    CHECK(d.exact);
    CHECK(d.quotient == p);
  }
}

TEST_CASE("a zero at -1 is exactly divisibility by (1+z)") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const RunPolynomial p = random_poly(rng);
    if (p.is_zero()) continue;
    const bool divisible = div_binomial_power(p, 1).exact;
    CHECK(divisible == (p.eval_at(-1) == 0));
  }
}

TEST_CASE("eval_at") {
  const RunPolynomial p = poly({{1, 2}, {2, 12}, {3, 10}});
  CHECK(p.eval_at(-1) == 0);
  CHECK(p.eval_at(1) == 24);
  CHECK(p.eval_at(0) == 0);
  CHECK(poly({{0, 7}}).eval_at(0) == 7);
  CHECK(RunPolynomial{}.eval_at(5) == 0);
  CHECK(poly({{0, 1}, {3, 2}}).eval_at(2) == 17);
}

TEST_CASE("multiplicity_at_minus_one") {
  CHECK(multiplicity_at_minus_one(poly({{3, 1}, {4, 2}, {5, 1}})) == 2);
  CHECK(multiplicity_at_minus_one(poly({{1, 2}, {2, 4}})) == 0);
  CHECK(multiplicity_at_minus_one(mul_binomial_power(poly({{0, 1}}), 3)) == 3);
  CHECK_THROWS_AS(multiplicity_at_minus_one(RunPolynomial{}), InvalidInput);
}

TEST_CASE("to_string") {
  CHECK(RunPolynomial{}.to_string() == "0");
  CHECK(poly({{0, 5}}).to_string() == "5");
  CHECK(poly({{1, 1}}).to_string() == "z");
  CHECK(poly({{1, 2}, {2, 12}, {3, 10}}).to_string() == "2z + 12z^2 + 10z^3");
  CHECK(poly({{3, 1}, {4, 2}, {5, 1}}).to_string() == "z^3 + 2z^4 + z^5");
  CHECK(poly({{1, -1}, {2, 3}}).to_string() == "-z + 3z^2");
  CHECK(poly({{0, 1}, {2, -4}}).to_string() == "1 - 4z^2");
}

TEST_CASE("128-bit coefficients survive the decimal round-trip") {
  CHECK(coeff_to_string(0) == "0");
  CHECK(coeff_to_string(-7) == "-7");
  Coeff fact20 = 1;
  for (int i = 2; i <= 20; ++i) fact20 *= i;
  CHECK(coeff_to_string(fact20) == "2432902008176640000");
  CHECK(coeff_from_string("2432902008176640000") == fact20);
  // beyond 64 bits
  const Coeff big = fact20 * fact20;
  CHECK(coeff_from_string(coeff_to_string(big)) == big);
  CHECK(coeff_from_string("-123") == -123);

  CHECK_THROWS_AS(coeff_from_string(""), InvalidInput);
  CHECK_THROWS_AS(coeff_from_string("-"), InvalidInput);
  CHECK_THROWS_AS(coeff_from_string("12a"), InvalidInput);
  CHECK_THROWS_AS(coeff_from_string("9999999999999999999999999999999999999999"), InvalidInput);
}

TEST_CASE("JSON serialization uses exponent keys and decimal-string values") {
  const RunPolynomial p = poly({{1, 2}, {2, 12}, {3, 10}});
  CHECK(to_json(p) == R"({"1":"2","2":"12","3":"10"})");
  CHECK(polynomial_from_json(to_json(p)) == p);
  CHECK(to_json(RunPolynomial{}) == "{}");
  CHECK(polynomial_from_json("{}") == RunPolynomial{});

  // exponents beyond one digit and coefficients beyond 64 bits
  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    RunPolynomial q = random_poly(rng);
    q.add_term(17, RunPolynomial::Coeff{1} << 100);
    CHECK(polynomial_from_json(to_json(q)) == q);
  }

  CHECK_THROWS_AS(polynomial_from_json("not json"), InvalidInput);
  CHECK_THROWS_AS(polynomial_from_json("[]"), InvalidInput);
  CHECK_THROWS_AS(polynomial_from_json(R"({"x":"1"})"), InvalidInput);
  CHECK_THROWS_AS(polynomial_from_json(R"({"1":2})"), InvalidInput);
  CHECK_THROWS_AS(polynomial_from_json(R"({"-1":"2"})"), InvalidInput);
}
