#include "lehmertool/factorize.hpp"

namespace lehmer {

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  // Brent's variant with a deterministic sequence of parameters.
  for (unsigned long c = 1; c < 64; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
  throw FactorizationError("Pollard rho failed on " + mpz_class(n).get_str());
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (n > mpz_class("1000000000000000000"))
    throw FactorizationError("composite cofactor too large: " + n.get_str());
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<mpz_class, unsigned> factorize(const mpz_class& n) {
  if (n < 1) throw FactorizationError("factorize requires n >= 1");
  std::map<mpz_class, unsigned> out;
  mpz_class rest = n;
  for (unsigned long p = 2; p <= 1000000ul && rest > 1; p += (p == 2) ? 1 : 2) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        ++e;
      }
      out[mpz_class(p)] = e;
    }
    mpz_class pp = mpz_class(p) * p;
    if (pp > rest) break;
  }
  if (rest > 1) {
    if (is_probable_prime(rest))
      ++out[rest];
    else
      factor_into(rest, out);
  }
  return out;
}

unsigned long ord_p(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw FactorizationError("ord_p of zero is undefined");
  mpz_class rest = abs(n);
  unsigned long e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    rest /= p;
    ++e;
  }
  return e;
}

}  // namespace lehmer
