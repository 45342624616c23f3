#pragma once

#include "lehmertool/intpoly.hpp"
#include "lehmertool/resultant.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lehmer {

/// One prime of m with the valuation it contributes:
/// e = ord_p(Res(f, X^n - 1)), a = ord_p(m).
struct PrimeValuation {
  mpz_class p;
  unsigned long e = 0;
  unsigned long a = 0;
};

/// Delta(A_f, m, n) = (1 / (n log m)) * sum_p ord_p(Res(f, X^n-1)) log p.
/// The value is an exact rational iff m is a prime power; otherwise only
/// the per-prime integers are exact and comparisons use directed rounding.
struct DeltaReport {
  std::vector<PrimeValuation> per_prime;
  mpz_class m;
  long n = 0;
  unsigned long j = 1;                 // power variant Delta(A^j, m, n); j=1 is plain Delta
  mpz_class resultant_used;            // Res(f, X^(jn) - 1)
  std::optional<mpq_class> exact;      // present iff m is a prime power
  double numeric = 0.0;

  std::string to_json() const;
};

/// Exact computation of Delta(A_f, m, n) from one integer resultant.
DeltaReport delta(const IntPoly& f, const mpz_class& m, long n);

/// Delta(A_f^j, m, n), computed from Res(f, X^(jn) - 1); the power set
/// {alpha^j} is never materialized.
DeltaReport delta_power(const IntPoly& f, const mpz_class& m, long n, unsigned long j);

/// Sign of sum_i c_i log p_i for integers c_i and primes p_i, determined
/// exactly (directed rounding with precision escalation; the sum is zero
/// only when every c_i is zero).
int log_combination_sign(const std::vector<std::pair<mpz_class, long>>& terms);

/// Compare a DeltaReport against a rational threshold num/den, exactly.
/// Returns true iff Delta >= num/den.
bool delta_at_least(const DeltaReport& r, long num, long den);

/// Remark-style predicate: Delta(A_f, m, n) >= (n-1)/n.
bool check_delta_threshold(const IntPoly& f, const mpz_class& m, long n);

}  // namespace lehmer
