#include "lehmertool/resultant.hpp"

#include <doctest.h>

#include <random>

using namespace lehmer;

namespace {
IntPoly random_poly(std::mt19937_64& rng, int deg, long bound, bool monic) {
  std::uniform_int_distribution<long> cc(-bound, bound);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k < deg; ++k) c[static_cast<std::size_t>(k)] = cc(rng);
  c[static_cast<std::size_t>(deg)] = monic ? 1 : (cc(rng) | 1);
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("pinned resultants") {
  IntPoly f = parse_poly("X^2+3*X+3");
  CHECK(resultant_with_xn_minus_1(f, 3).value == 28);
  CHECK(resultant_with_xn_minus_1(f, 6).value == 784);
  CHECK(resultant(f, xn_minus_1(3)).value == 28);
  // Res(X-2, X^2-1) = (2-1)(2+1)... evaluated as g(2) = 3
  CHECK(resultant(parse_poly("X-2"), xn_minus_1(2)).value == 3);
  CHECK(resultant(parse_poly("X-2"), phi(1)).value == 3);
}

TEST_CASE("subresultant PRS agrees with the Sylvester determinant") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    int da = 1 + static_cast<int>(rng() % 7), db = 1 + static_cast<int>(rng() % 7);
    // monic a: the product-over-roots convention coincides with the
    // Sylvester determinant
    IntPoly a = random_poly(rng, da, 12, true);
    IntPoly b = random_poly(rng, db, 12, false);
    if (b.is_zero()) continue;
    CHECK(resultant(a, b).value == sylvester_resultant(a, b));
  }
}

TEST_CASE("product-over-roots convention for monic f") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 5), 8, true);
    IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 5), 8, false);
    IntPoly h = random_poly(rng, 1 + static_cast<int>(rng() % 5), 8, false);
    // multiplicative in the second argument
    CHECK(resultant(f, g * h).value == resultant(f, g).value * resultant(f, h).value);
    // degree-0 second argument: Res(f, c) = c^deg(f)
    mpz_class c = 3;
    mpz_class expect;
    mpz_pow_ui(expect.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(f.degree()));
    CHECK(resultant(f, IntPoly::constant(c)).value == expect);
    // linear f = X - a: Res(f, g) = g(a)
    std::uniform_int_distribution<long> aa(-9, 9);
    mpz_class a = aa(rng);
    IntPoly lin = IntPoly::monomial(1, 1) - IntPoly::constant(a);
    CHECK(resultant(lin, g).value == g.eval(a));
  }
}

TEST_CASE("sparse powmod path matches the dense resultant") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    IntPoly f = random_poly(rng, 2 + static_cast<int>(rng() % 5), 6, true);
    unsigned long n = 2 + rng() % 9;
    mpz_class dense = resultant(f, xn_minus_1(n)).value;
    if (dense == 0) continue;
    CHECK(resultant_with_xn_minus_1(f, n).value == dense);
  }
}

TEST_CASE("factor-the-circle identity Res(f, X^n-1) = f(1) * Res(f, Phi_{n-1})") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    IntPoly f = random_poly(rng, 2 + static_cast<int>(rng() % 4), 6, true);
    unsigned long n = 2 + rng() % 7;
    mpz_class lhs = resultant(f, xn_minus_1(n)).value;
    // In the product-over-roots convention prod(alpha^n - 1) =
    // prod(alpha - 1) * prod(1 + ... + alpha^{n-1}) and
    // prod(alpha - 1) = (-1)^deg f * f(1).
    mpz_class rhs = f.eval(mpz_class(1)) * resultant(f, phi(static_cast<int>(n) - 1)).value;
    if (f.degree() % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cyclotomic collision is detected") {
  CHECK_THROWS_AS(resultant_with_xn_minus_1(parse_poly("X-1"), 4), CyclotomicCollision);
  CHECK_THROWS_AS(resultant_with_xn_minus_1(phi(3) * parse_poly("X-2"), 4),
                  CyclotomicCollision);
}

TEST_CASE("congruence implies resultant divisibility") {
  CHECK(check_resultant_divisibility(parse_poly("X^2+3*X+3"), 2, 3));
  CHECK_FALSE(check_resultant_divisibility(parse_poly("X-2"), 2, 2));
}
