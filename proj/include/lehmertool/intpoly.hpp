#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lehmer {

/// Error while parsing a polynomial from text. `offset` is the byte
/// position in the input where the problem was detected.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"),
        offset(off) {}
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order. The zero polynomial is the empty sequence;
/// otherwise the last stored coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, int degree);

  bool is_zero() const { return c_.empty(); }
  /// Degree of a nonzero polynomial; throws DomainError on zero.
  int degree() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Coefficient of X^i (zero beyond the stored range).
  const mpz_class& coeff(std::size_t i) const;
  mpz_class leading() const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;

  IntPoly derivative() const;
  /// L(f) = sum of |coefficients|.
  mpz_class length() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly mul_scalar(const mpz_class& s) const;
  /// f(X^k).
  IntPoly compose_power(unsigned k) const;

  /// Exact division; throws DomainError if the division has a remainder.
  IntPoly divide_exact(const IntPoly& divisor) const;
  /// Euclidean division by a monic divisor (quotient, remainder over Z).
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

  /// Content (gcd of coefficients, nonnegative; 0 for the zero polynomial).
  mpz_class content() const;
  IntPoly primitive_part() const;

  /// Canonical rendering: descending powers, explicit signs, e.g.
  /// "X^2+3*X+3". The zero polynomial renders as "0".
  std::string render() const;

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

/// Phi_n(X) = X^n + X^(n-1) + ... + X + 1 (degree n, all coefficients 1).
IntPoly phi(int n);

/// X^n - 1.
IntPoly xn_minus_1(unsigned long n);

/// The classical (irreducible) cyclotomic polynomial of index k >= 1.
IntPoly classical_cyclotomic(unsigned long k);

/// Nonnegative polynomial gcd over Z (primitive-PRS based).
IntPoly poly_gcd(IntPoly a, IntPoly b);

/// Parses either a comma-separated ascending coefficient list ("3,3,1")
/// or an expression like "X^2+3*X+3".
IntPoly parse_poly(const std::string& text);

/// Image of an integer polynomial in (Z/mZ)[X], coefficients in [0, m).
class ModPoly {
 public:
  ModPoly(const IntPoly& f, const mpz_class& m);
  const mpz_class& modulus() const { return m_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

 private:
  std::vector<mpz_class> c_;
  mpz_class m_;
};

ModPoly reduce_mod(const IntPoly& f, const mpz_class& m);

/// True iff monic g divides f in (Z/mZ)[X].
bool divides_mod(const IntPoly& g, const IntPoly& f, const mpz_class& m);

/// True iff every coefficient of monic f is congruent to 1 mod m.
bool congruent_to_phi(const IntPoly& f, const mpz_class& m);

/// Largest k such that a degree-D polynomial can have a root of unity of
/// order k (i.e. phi(k) <= D).
unsigned long cyclotomic_order_bound(int degree);

/// True iff f shares a root with some X^k - 1, k <= n_max.
bool has_cyclotomic_root(const IntPoly& f, unsigned long n_max);
bool has_cyclotomic_root(const IntPoly& f);

}  // namespace lehmer
