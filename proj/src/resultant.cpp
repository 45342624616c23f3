#include "lehmertool/resultant.hpp"

#include <vector>

namespace lehmer {

namespace {

// Pseudo-remainder: lc(B)^(degA - degB + 1) * A  mod  B.
IntPoly prem(const IntPoly& A, const IntPoly& B) {
  int d = A.degree() - B.degree();
  mpz_class lc = B.leading();
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), d + 1);
  std::vector<mpz_class> rem = A.mul_scalar(scale).coeffs();
  int dd = B.degree();
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (static_cast<int>(rem.size()) - 1 < dd) break;
    mpz_class q = rem.back() / lc;  // exact by the scaling above
    int shift = static_cast<int>(rem.size()) - 1 - dd;
    for (int i = 0; i <= dd; ++i) rem[shift + i] -= q * B.coeffs()[i];
  }
  return IntPoly(std::move(rem));
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Res(A, B) in the standard convention lc(A)^degB * prod B(alpha_i),
// subresultant PRS (Cohen, Algorithm 3.3.7).
mpz_class resultant_std(IntPoly A, IntPoly B) {
  if (A.is_zero() || B.is_zero()) return 0;
  if (A.is_constant() && B.is_constant()) return 1;
  if (A.is_constant()) return pow_z(A.leading(), B.degree());
  if (B.is_constant()) return pow_z(B.leading(), A.degree());

  int sign = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    std::swap(A, B);
  }
  mpz_class ca = A.content(), cb = B.content();
  A = A.divide_exact(IntPoly::constant(ca));
  B = B.divide_exact(IntPoly::constant(cb));
  mpz_class t = pow_z(ca, B.degree()) * pow_z(cb, A.degree());

  mpz_class g = 1, h = 1;
  while (true) {
    int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPoly R = prem(A, B);
    if (R.is_zero()) return 0;
    A = B;
    mpz_class divisor = g * pow_z(h, delta);
    B = R.divide_exact(IntPoly::constant(divisor));
    g = A.leading();
    // h <- g^delta * h^(1-delta), exact
    if (delta > 0) {
      mpz_class num = pow_z(g, delta);
      if (delta > 1) {
        mpz_class den = pow_z(h, delta - 1);
        h = num / den;
      } else {
        h = num;
      }
    }
    if (B.is_constant()) break;
  }
  // h <- lc(B)^degA / h^(degA - 1)
  int dA = A.degree();
  mpz_class num = pow_z(B.leading(), dA);
  mpz_class res = (dA > 1) ? mpz_class(num / pow_z(h, dA - 1)) : num;
  return sign * t * res;
}

}  // namespace

mpz_class sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  int m = f.is_constant() ? 0 : f.degree();
  int n = g.is_constant() ? 0 : g.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return pow_z(f.leading(), n);
  if (n == 0) return pow_z(g.leading(), m);
  int N = m + n;
  std::vector<std::vector<mpz_class>> a(N, std::vector<mpz_class>(N, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[i][i + j] = f.coeffs()[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[n + i][i + j] = g.coeffs()[n - j];
  // Bareiss fraction-free elimination.
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (a[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[N - 1][N - 1];
}

ResultantValue resultant(const IntPoly& f, const IntPoly& g) {
  if (!f.is_monic() || f.is_constant())
    throw DomainError("resultant requires monic nonconstant f");
  if (g.is_zero()) throw DomainError("resultant requires nonzero g");
  ResultantValue r;
  r.f_degree = f.degree();
  r.g_degree = g.is_constant() ? 0 : g.degree();
  // For monic f the standard resultant equals prod g(alpha).
  r.value = resultant_std(f, g);
  return r;
}

IntPoly power_x_mod(const IntPoly& f, unsigned long n) {
  if (!f.is_monic() || f.is_constant())
    throw DomainError("power_x_mod requires monic nonconstant f");
  if (n == 0) return IntPoly::constant(1);
  // square-and-multiply on X^k mod f
  IntPoly result = IntPoly::constant(1);
  unsigned long bit = 1;
  while ((bit << 1) && (bit << 1) <= n) bit <<= 1;
  for (; bit; bit >>= 1) {
    result = (result * result).divmod_monic(f).second;
    if (n & bit) result = (result * IntPoly::monomial(1, 1)).divmod_monic(f).second;
  }
  return result;
}

ResultantValue resultant_with_xn_minus_1(const IntPoly& f, unsigned long n) {
  if (!f.is_monic() || f.is_constant())
    throw DomainError("resultant requires monic nonconstant f");
  if (n < 1) throw DomainError("n must be >= 1");
  IntPoly g = power_x_mod(f, n) - IntPoly::constant(1);
  ResultantValue r;
  r.f_degree = f.degree();
  r.g_degree = static_cast<int>(n);
  if (g.is_zero()) {
    throw CyclotomicCollision("f shares a root with X^" + std::to_string(n) + "-1");
  }
  r.value = resultant_std(f, g);
  if (r.value == 0)
    throw CyclotomicCollision("f shares a root with X^" + std::to_string(n) + "-1");
  return r;
}

bool check_resultant_divisibility(const IntPoly& f, const mpz_class& m, long n) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 2) throw DomainError("n must be >= 2");
  ResultantValue r = resultant(f, phi(static_cast<int>(n) - 1));
  if (r.value == 0)
    throw CyclotomicCollision("f shares a root with Phi_(n-1)");
  mpz_class mod = m;
  mpz_class mn;
  mpz_pow_ui(mn.get_mpz_t(), mod.get_mpz_t(), n - 1);
  return r.value % mn == 0;
}

}  // namespace lehmer
