#pragma once

#include "lehmertool/intpoly.hpp"

namespace lehmer {

/// gcd(f, X^n - 1) is nonconstant: the quantity being computed is
/// undefined (Delta would be infinite).
struct CyclotomicCollision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Result of a resultant computation in the convention
/// Res(f, g) = prod over roots alpha of monic f of g(alpha).
struct ResultantValue {
  mpz_class value;
  int f_degree = 0;
  int g_degree = 0;
};

/// Res(f, g) for monic nonconstant f and nonzero g, computed by a
/// subresultant polynomial remainder sequence.
ResultantValue resultant(const IntPoly& f, const IntPoly& g);

/// Res(f, X^n - 1) = prod (alpha^n - 1), computed via X^n mod f so the
/// cost stays polynomial in deg f and log n.
/// Throws CyclotomicCollision if f shares a root with X^n - 1.
ResultantValue resultant_with_xn_minus_1(const IntPoly& f, unsigned long n);

/// True iff m^(n-1) divides Res(f, Phi_(n-1)) exactly.
bool check_resultant_divisibility(const IntPoly& f, const mpz_class& m, long n);

/// Test oracle: resultant by fraction-free (Bareiss) elimination of the
/// Sylvester matrix. Independent of the PRS path.
mpz_class sylvester_resultant(const IntPoly& f, const IntPoly& g);

/// X^n mod f for monic f (square and multiply).
IntPoly power_x_mod(const IntPoly& f, unsigned long n);

}  // namespace lehmer
