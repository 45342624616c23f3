#include "lehmertool/mahler.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace lehmer;

TEST_CASE("pinned Mahler measures") {
  CHECK(mahler(parse_poly("X-2")).log_measure ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));
  CHECK(mahler(parse_poly("X-3")).log_measure ==
        doctest::Approx(std::log(3.0)).epsilon(1e-10));
  CHECK(mahler(parse_poly("X^2+3*X+3")).log_measure ==
        doctest::Approx(std::log(3.0)).epsilon(1e-10));  // both roots outside, product = 3
  MahlerValue lm = mahler(parse_poly("X^10+X^9-X^7-X^6-X^5-X^4-X^3+X+1"), 1e-9);
  CHECK(std::fabs(lm.log_measure - 0.1623576120) < 1e-6);
  CHECK(lm.abs_error_bound <= 1e-9);
  CHECK_FALSE(lm.cyclotomic_flag);
}

TEST_CASE("cyclotomic factors contribute zero and set the flag") {
  MahlerValue v = mahler(phi(4));
  CHECK(v.log_measure == 0.0);
  CHECK(v.cyclotomic_flag);
  MahlerValue w = mahler(classical_cyclotomic(12) * parse_poly("X-2"));
  CHECK(w.cyclotomic_flag);
  CHECK(w.log_measure == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  CHECK(mahler(parse_poly("X^3")).log_measure == 0.0);  // root at the origin
}

TEST_CASE("multiplicativity log M(fg) = log M(f) + log M(g)") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> cc(-7, 7);
  for (int i = 0; i < 40; ++i) {
    int df = 1 + static_cast<int>(rng() % 4), dg = 1 + static_cast<int>(rng() % 4);
    std::vector<mpz_class> fc(static_cast<std::size_t>(df) + 1),
        gc(static_cast<std::size_t>(dg) + 1);
    for (auto& x : fc) x = cc(rng);
    for (auto& x : gc) x = cc(rng);
    fc.back() = 1;  // the measure engine works on monic polynomials
    gc.back() = 1;
    IntPoly f(fc), g(gc);
    double lhs = mahler(f * g, 1e-10).log_measure;
    double rhs = mahler(f, 1e-10).log_measure + mahler(g, 1e-10).log_measure;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  }
}

TEST_CASE("agreement with the Jensen quadrature oracle") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> cc(-9, 9);
  int tested = 0;
  while (tested < 50) {
    int d = 1 + static_cast<int>(rng() % 8);
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = cc(rng);
    c.back() = 1;
    IntPoly f(c);
    MahlerValue mv = mahler(f, 1e-10);
    auto jv = oracle::jensen_log_mahler(f);
    double tol = 1e-8 + 10.0 * jv.error_estimate;
    if (tol > 0.05) continue;  // root hugging the circle, quadrature unusable
    CHECK(std::fabs(mv.log_measure - jv.value) <= tol);
    ++tested;
  }
}

TEST_CASE("square-free decomposition reconstructs the input") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> cc(-5, 5);
  for (int i = 0; i < 40; ++i) {
    IntPoly f = parse_poly("X+1") * parse_poly("X+1") *
                IntPoly(std::vector<mpz_class>{cc(rng), cc(rng), 1});
    auto parts = squarefree_decomposition(f);
    IntPoly prod = IntPoly::constant(f.leading());
    for (const auto& [g, mult] : parts) {
      CHECK(g.is_monic());
      for (int k = 0; k < mult; ++k) prod = prod * g;
    }
    CHECK(prod == f);
  }
}

TEST_CASE("certified enclosures isolate the right number of roots") {
  IntPoly f = parse_poly("(X-2)*(X-3)*(X^2+1)");
  auto set = isolate_roots(f, 1e-12);
  CHECK(set.roots.size() == 4);
  int total = 0;
  for (const auto& r : set.roots) {
    total += r.multiplicity;
    CHECK(r.radius <= 1e-10);
  }
  CHECK(total == 4);
  // multiple roots get collapsed with the correct multiplicity
  auto set2 = isolate_roots(parse_poly("(X-2)*(X-2)*(X+5)"), 1e-10);
  bool found_double = false;
  for (const auto& r : set2.roots)
    if (r.multiplicity == 2) found_double = std::abs(r.center - std::complex<double>(2, 0)) < 1e-6;
  CHECK(found_double);
}
