#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>

namespace lehmer {

struct FactorizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Prime factorization of n >= 1: map prime -> exponent.
/// Trial division to 10^6, then Pollard rho; a surviving composite
/// cofactor above 10^12 is rejected.
std::map<mpz_class, unsigned> factorize(const mpz_class& n);

bool is_probable_prime(const mpz_class& n);

/// ord_p(n) for n != 0.
unsigned long ord_p(const mpz_class& n, const mpz_class& p);

}  // namespace lehmer
