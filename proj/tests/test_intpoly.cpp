#include "lehmertool/intpoly.hpp"

#include <doctest.h>

#include <random>

using namespace lehmer;

namespace {
IntPoly random_poly(std::mt19937_64& rng, int max_deg, long bound) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> cc(-bound, bound);
  int d = dd(rng);
  std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = cc(rng);
  return IntPoly(std::move(c));
}
}  // namespace

TEST_CASE("parse and render round-trip") {
  for (const char* s : {"X^2+3*X+3", "X-2", "X^10+X^9-X^7-X^6-X^5-X^4-X^3+X+1",
                        "-X^3+2*X-7", "0", "42", "X"}) {
    IntPoly f = parse_poly(s);
    CHECK(parse_poly(f.render()) == f);
  }
  CHECK(parse_poly("3,3,1") == parse_poly("X^2+3*X+3"));
  CHECK(parse_poly("(X+1)*(X+2)") == parse_poly("X^2+3*X+2"));
  CHECK(parse_poly("2*(X^2-1)") == parse_poly("2*X^2-2"));
}

TEST_CASE("parse errors carry an offset") {
  CHECK_THROWS_AS(parse_poly("X^+2"), ParseError);
  CHECK_THROWS_AS(parse_poly("X**2"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("Y^2"), ParseError);
  CHECK_THROWS_AS(parse_poly("(X+1"), ParseError);
}

TEST_CASE("ring laws on pseudorandom polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    IntPoly a = random_poly(rng, 6, 9), b = random_poly(rng, 6, 9),
            c = random_poly(rng, 6, 9);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == IntPoly());
  }
}

TEST_CASE("division by a monic divisor") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    IntPoly f = random_poly(rng, 8, 20);
    IntPoly g = random_poly(rng, 3, 20);
    // force g monic of degree >= 1
    std::vector<mpz_class> gc = g.coeffs();
    gc.resize(4);
    gc[3] = 1;
    g = IntPoly(gc);
    auto [q, r] = f.divmod_monic(g);
    CHECK(q * g + r == f);
    CHECK((r.is_zero() || r.degree() < g.degree()));
    CHECK((f * g).divide_exact(g) == f);
  }
}

TEST_CASE("phi and cyclotomic identities") {
  for (int n = 2; n <= 30; ++n) {
    CHECK((IntPoly::monomial(1, 1) - IntPoly::constant(1)) * phi(n - 1) ==
          xn_minus_1(static_cast<unsigned long>(n)));
    IntPoly prod = IntPoly::constant(1);
    for (unsigned long d = 1; d <= static_cast<unsigned long>(n); ++d)
      if (n % static_cast<int>(d) == 0) prod = prod * classical_cyclotomic(d);
    CHECK(prod == xn_minus_1(static_cast<unsigned long>(n)));
  }
  CHECK(classical_cyclotomic(1) == parse_poly("X-1"));
  CHECK(classical_cyclotomic(12) == parse_poly("X^4-X^2+1"));
  CHECK(classical_cyclotomic(105).coeff(7) == -2);  // first index with a coefficient outside {-1,0,1}
}

TEST_CASE("eval, derivative, content, compose_power") {
  IntPoly f = parse_poly("X^2+3*X+3");
  CHECK(f.eval(mpz_class(2)) == 13);
  CHECK(f.eval(mpq_class(1, 2)) == mpq_class(19, 4));
  CHECK(f.derivative() == parse_poly("2*X+3"));
  CHECK(parse_poly("6*X^2+9").content() == 3);
  CHECK(f.compose_power(3) == parse_poly("X^6+3*X^3+3"));
  CHECK(f.length() == 7);
}

TEST_CASE("polynomial gcd") {
  IntPoly a = parse_poly("X^2-1"), b = parse_poly("X^2+2*X+1");
  CHECK(poly_gcd(a, b) == parse_poly("X+1"));
  CHECK(poly_gcd(a, IntPoly()) == a);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    IntPoly f = random_poly(rng, 4, 5), g = random_poly(rng, 4, 5),
            h = random_poly(rng, 3, 5);
    if (f.is_zero() || g.is_zero() || h.is_zero() || h.is_constant()) continue;
    IntPoly d = poly_gcd(f * h, g * h);
    // the primitive part of h divides gcd(f*h, g*h), and the gcd divides both products
    IntPoly hp = h.primitive_part();
    CHECK(d.divide_exact(hp) * hp == d);
    CHECK((f * h).divide_exact(d) * d == f * h);
    CHECK((g * h).divide_exact(d) * d == g * h);
  }
}

TEST_CASE("modular divisibility and the congruence predicate") {
  mpz_class m = 2;
  IntPoly f = parse_poly("X^2+3*X+3");
  CHECK(congruent_to_phi(f, m));
  CHECK(divides_mod(phi(2), f, m));
  CHECK_FALSE(divides_mod(phi(2), parse_poly("X^2+2*X+3"), m));
  CHECK_FALSE(congruent_to_phi(parse_poly("X-2"), 2));

  // congruent-to-phi implies divisibility by the same-degree phi
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> cc(-10, 10);
  for (int i = 0; i < 100; ++i) {
    int D = 1 + static_cast<int>(rng() % 8);
    mpz_class mm = 2 + static_cast<long>(rng() % 9);
    std::vector<mpz_class> c(static_cast<std::size_t>(D) + 1);
    for (int k = 0; k < D; ++k) {
      mpz_class base = cc(rng);
      c[k] = base - (((base - 1) % mm + mm) % mm);
    }
    c[static_cast<std::size_t>(D)] = 1;
    IntPoly g(c);
    CHECK(congruent_to_phi(g, mm));
    CHECK(divides_mod(phi(D), g, mm));
  }
}

TEST_CASE("cyclotomic root detection") {
  CHECK(has_cyclotomic_root(parse_poly("X-1")));
  CHECK(has_cyclotomic_root(phi(4)));
  CHECK(has_cyclotomic_root(classical_cyclotomic(7) * parse_poly("X-2")));
  CHECK_FALSE(has_cyclotomic_root(parse_poly("X-2")));
  CHECK_FALSE(has_cyclotomic_root(parse_poly("X^2+3*X+3")));
  // Salem polynomial: roots on the circle but not roots of unity
  CHECK_FALSE(has_cyclotomic_root(parse_poly("X^10+X^9-X^7-X^6-X^5-X^4-X^3+X+1")));
  CHECK(cyclotomic_order_bound(4) >= 12);  // phi(12)=4
  CHECK(cyclotomic_order_bound(1) == 2);
}
