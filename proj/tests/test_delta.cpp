#include "lehmertool/delta.hpp"

#include <doctest.h>

#include <random>

using namespace lehmer;

TEST_CASE("pinned valuation sums") {
  IntPoly f = parse_poly("X^2+3*X+3");
  DeltaReport r = delta(f, 2, 3);
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == mpq_class(2, 3));
  CHECK(r.resultant_used == 28);
  CHECK(r.numeric == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  DeltaReport r2 = delta_power(f, 2, 3, 2);
  REQUIRE(r2.exact.has_value());
  CHECK(*r2.exact == mpq_class(4, 3));
  CHECK(r2.resultant_used == 784);

  DeltaReport r3 = delta(parse_poly("X-2"), 2, 2);
  REQUIRE(r3.exact.has_value());
  CHECK(*r3.exact == 0);
}

TEST_CASE("exactness only for prime powers") {
  IntPoly f = parse_poly("X^2+3*X+3");
  CHECK(delta(f, 4, 3).exact.has_value());
  CHECK(delta(f, 9, 3).exact.has_value());
  CHECK_FALSE(delta(f, 6, 3).exact.has_value());
}

TEST_CASE("power monotonicity Delta(A^j) >= Delta(A), per prime") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> cc(-6, 6);
  int tested = 0;
  while (tested < 60) {
    int D = 1 + static_cast<int>(rng() % 5);
    std::vector<mpz_class> c(static_cast<std::size_t>(D) + 1);
    for (int k = 0; k < D; ++k) c[static_cast<std::size_t>(k)] = cc(rng);
    c[static_cast<std::size_t>(D)] = 1;
    IntPoly f(c);
    if (has_cyclotomic_root(f)) continue;
    mpz_class m = 2 + static_cast<long>(rng() % 9);
    long n = 2 + static_cast<long>(rng() % 5);
    unsigned long j = 2 + rng() % 3;
    DeltaReport base = delta(f, m, n);
    DeltaReport pow = delta_power(f, m, n, j);
    // X^n - 1 divides X^(jn) - 1, so the valuation can only grow prime by
    // prime; that implies Delta(A^j) >= Delta(A) exactly.
    REQUIRE(base.per_prime.size() == pow.per_prime.size());
    for (std::size_t i = 0; i < base.per_prime.size(); ++i) {
      CHECK(base.per_prime[i].p == pow.per_prime[i].p);
      CHECK(pow.per_prime[i].e >= base.per_prime[i].e);
    }
    ++tested;
  }
}

TEST_CASE("sign of integer combinations of prime logarithms") {
  using T = std::vector<std::pair<mpz_class, long>>;
  CHECK(log_combination_sign(T{{2, 1}}) > 0);
  CHECK(log_combination_sign(T{{2, -1}}) < 0);
  CHECK(log_combination_sign(T{{2, 0}, {3, 0}}) == 0);
  // 3 log 2 vs log 8: exactly zero requires all-zero coefficients, so
  // log 8 enters as 2^3 with coefficient... use 2: 3 log 2 - log 9 > 0 iff 8 > 9: negative
  CHECK(log_combination_sign(T{{2, 3}, {3, -2}}) < 0);
  CHECK(log_combination_sign(T{{2, 10}, {3, -6}}) > 0);  // 1024 vs 729
  // a razor-thin one: 2^190 vs 3^119.88... use 5^13 vs 2^30: 1220703125 vs 1073741824
  CHECK(log_combination_sign(T{{5, 13}, {2, -30}}) > 0);
}

TEST_CASE("threshold comparisons are exact") {
  IntPoly f = parse_poly("X^2+3*X+3");
  DeltaReport r = delta(f, 2, 3);
  CHECK(delta_at_least(r, 2, 3));
  CHECK(delta_at_least(r, 1, 2));
  CHECK_FALSE(delta_at_least(r, 3, 4));
  CHECK(check_delta_threshold(f, 2, 3));
  CHECK_FALSE(check_delta_threshold(parse_poly("X-2"), 2, 2));
}

TEST_CASE("implication chain on constructed families") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> cc(-5, 5);
  int tested = 0;
  while (tested < 80) {
    long n = 2 + static_cast<long>(rng() % 5);
    mpz_class m = 2 + static_cast<long>(rng() % 9);
    int dA = static_cast<int>(rng() % 4);
    std::vector<mpz_class> ac(static_cast<std::size_t>(dA) + 1);
    for (int k = 0; k < dA; ++k) ac[static_cast<std::size_t>(k)] = cc(rng);
    ac[static_cast<std::size_t>(dA)] = 1;
    int dB = static_cast<int>(n) - 2 + dA;
    std::vector<mpz_class> bc(static_cast<std::size_t>(dB) + 1);
    for (int k = 0; k <= dB; ++k) bc[static_cast<std::size_t>(k)] = cc(rng);
    IntPoly f = phi(static_cast<int>(n) - 1) * IntPoly(ac) + IntPoly(bc).mul_scalar(m);
    if (has_cyclotomic_root(f)) continue;
    CHECK(divides_mod(phi(static_cast<int>(n) - 1), f, m));
    CHECK(check_resultant_divisibility(f, m, n));
    CHECK(check_delta_threshold(f, m, n));
    ++tested;
  }
}
