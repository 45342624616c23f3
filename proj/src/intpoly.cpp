#include "lehmertool/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace lehmer {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(degree + 1, 0);
    p.c_.back() = c;
  }
  return p;
}

int IntPoly::degree() const {
  if (c_.empty()) throw DomainError("degree of the zero polynomial is undefined");
  return static_cast<int>(c_.size()) - 1;
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
  static const mpz_class zero = 0;
  return i < c_.size() ? c_[i] : zero;
}

mpz_class IntPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return IntPoly(std::move(d));
}

mpz_class IntPoly::length() const {
  mpz_class s = 0;
  for (const auto& a : c_) s += abs(a);
  return s;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::mul_scalar(const mpz_class& s) const {
  if (s == 0) return IntPoly();
  IntPoly r = *this;
  for (auto& a : r.c_) a *= s;
  return r;
}

IntPoly IntPoly::compose_power(unsigned k) const {
  if (is_zero()) return IntPoly();
  if (k == 0) return IntPoly::constant(eval(mpz_class(1)));
  std::vector<mpz_class> r((c_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
  return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
  if (!divisor.is_monic()) throw DomainError("division requires a monic divisor");
  std::vector<mpz_class> rem = c_;
  int dd = divisor.degree();
  std::vector<mpz_class> quot;
  if (static_cast<int>(rem.size()) - 1 >= dd)
    quot.assign(rem.size() - dd, 0);
  while (static_cast<int>(rem.size()) - 1 >= dd && !rem.empty()) {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (static_cast<int>(rem.size()) - 1 < dd) break;
    mpz_class q = rem.back();
    int shift = static_cast<int>(rem.size()) - 1 - dd;
    quot[shift] = q;
    for (int i = 0; i <= dd; ++i) rem[shift + i] -= q * divisor.c_[i];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return IntPoly();
  // General exact division (divisor not necessarily monic).
  std::vector<mpz_class> rem = c_;
  int dd = divisor.degree();
  const mpz_class& lc = divisor.c_.back();
  if (static_cast<int>(rem.size()) - 1 < dd) throw DomainError("inexact polynomial division");
  std::vector<mpz_class> quot(rem.size() - dd, 0);
  for (int shift = static_cast<int>(rem.size()) - 1 - dd; shift >= 0; --shift) {
    mpz_class top = rem[shift + dd];
    if (top == 0) continue;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (r != 0) throw DomainError("inexact polynomial division");
    quot[shift] = q;
    for (int i = 0; i <= dd; ++i) rem[shift + i] -= q * divisor.c_[i];
  }
  for (const auto& a : rem)
    if (a != 0) throw DomainError("inexact polynomial division");
  return IntPoly(std::move(quot));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  mpz_class g = content();
  if (g == 0) return IntPoly();
  IntPoly r = *this;
  for (auto& a : r.c_) a /= g;
  if (r.c_.back() < 0)
    for (auto& a : r.c_) a = -a;
  return r;
}

std::string IntPoly::render() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& a = c_[i];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += (a < 0) ? "-" : "+";
    }
    bool unit = (mag == 1);
    if (i == 0 || !unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "X";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly phi(int n) {
  if (n < 0) throw DomainError("phi(n) requires n >= 0");
  return IntPoly(std::vector<mpz_class>(n + 1, 1));
}

IntPoly xn_minus_1(unsigned long n) {
  std::vector<mpz_class> c(n + 1, 0);
  c[0] = -1;
  c[n] = 1;
  return IntPoly(std::move(c));
}

IntPoly classical_cyclotomic(unsigned long k) {
  if (k == 0) throw DomainError("cyclotomic index must be >= 1");
  // Moebius product: Phi_k = prod_{d | k} (X^(k/d) - 1)^{mu(d)}.
  auto moebius = [](unsigned long n) -> int {
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        mu = -mu;
        if (n % p == 0) return 0;
      }
    }
    if (n > 1) mu = -mu;
    return mu;
  };
  IntPoly num = IntPoly::constant(1);
  std::vector<unsigned long> den_exponents;
  for (unsigned long d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int mu = moebius(d);
    if (mu == 1)
      num = num * xn_minus_1(k / d);
    else if (mu == -1)
      den_exponents.push_back(k / d);
  }
  for (unsigned long n : den_exponents) num = num.divide_exact(xn_minus_1(n));
  return num;
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return b.primitive_part().mul_scalar(b.content());
  if (b.is_zero()) return a.primitive_part().mul_scalar(a.content());
  mpz_class ca = a.content(), cb = b.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // Pseudo-remainder, then take primitive part.
    int d = a.degree() - b.degree();
    mpz_class lc = b.leading();
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), d + 1);
    IntPoly r = a.mul_scalar(scale);
    // long division of r by b (b has invertible leading coeff after scaling)
    std::vector<mpz_class> rem = r.coeffs();
    int dd = b.degree();
    while (static_cast<int>(rem.size()) - 1 >= dd) {
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      if (static_cast<int>(rem.size()) - 1 < dd) break;
      mpz_class q = rem.back() / lc;  // exact by pseudo-division scaling
      int shift = static_cast<int>(rem.size()) - 1 - dd;
      for (int i = 0; i <= dd; ++i) rem[shift + i] -= q * b.coeffs()[i];
    }
    IntPoly rr{std::vector<mpz_class>(rem)};
    a = b;
    b = rr.primitive_part();
  }
  return a.primitive_part().mul_scalar(cg == 0 ? 1 : cg);
}

// ---------- parsing ----------

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", start);
    return mpz_class(s.substr(start, pos - start));
  }

  // expr := term (('+'|'-') term)*
  IntPoly expr() {
    IntPoly acc;
    bool neg = false;
    if (accept('+')) {
    } else if (accept('-')) {
      neg = true;
    }
    acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  // term := factor ('*' factor)*
  IntPoly term() {
    IntPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  // factor := atom ('^' nonneg-int)?
  IntPoly factor() {
    IntPoly base = atom();
    if (accept('^')) {
      skip_ws();
      if (peek() == '-') throw ParseError("exponent must be a nonnegative integer", pos);
      mpz_class e = integer();
      if (!e.fits_ulong_p()) throw ParseError("exponent too large", pos);
      unsigned long k = e.get_ui();
      IntPoly r = IntPoly::constant(1);
      for (unsigned long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  IntPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      IntPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos);
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos;
      return IntPoly::monomial(1, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(integer());
    throw ParseError("unexpected character", pos);
  }
};

bool looks_like_list(const std::string& text) {
  for (char c : text)
    if (c == 'x' || c == 'X' || c == '^' || c == '*' || c == '(') return false;
  return text.find(',') != std::string::npos || text.find_first_not_of(" \t+-0123456789") ==
                                                    std::string::npos;
}

IntPoly parse_list(const std::string& text) {
  std::vector<mpz_class> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty coefficient", pos);
    tok = tok.substr(a, b - a + 1);
    try {
      coeffs.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid integer coefficient '" + tok + "'", pos);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw ParseError("empty input", 0);
  if (looks_like_list(text) && text.find(',') != std::string::npos) return parse_list(text);
  if (text.find_first_of("xX(^*") == std::string::npos && text.find(',') == std::string::npos) {
    // Single constant, valid in both grammars.
    return parse_list(text);
  }
  Parser p(text);
  IntPoly result = p.expr();
  if (!p.eof()) throw ParseError("trailing input", p.pos);
  return result;
}

// ---------- mod-m arithmetic ----------

ModPoly::ModPoly(const IntPoly& f, const mpz_class& m) : m_(m) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  c_.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    c_.push_back(r);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int ModPoly::degree() const {
  if (c_.empty()) throw DomainError("degree of the zero polynomial is undefined");
  return static_cast<int>(c_.size()) - 1;
}

ModPoly reduce_mod(const IntPoly& f, const mpz_class& m) { return ModPoly(f, m); }

bool divides_mod(const IntPoly& g, const IntPoly& f, const mpz_class& m) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (!g.is_monic()) throw DomainError("mod-m division requires a monic divisor");
  auto [q, r] = f.divmod_monic(g);
  (void)q;
  return ModPoly(r, m).is_zero();
}

bool congruent_to_phi(const IntPoly& f, const mpz_class& m) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (!f.is_monic()) throw DomainError("congruent_to_phi requires a monic polynomial");
  for (int i = 0; i <= f.degree(); ++i)
    if ((f.coeff(i) - 1) % m != 0) return false;
  return true;
}

namespace {
unsigned long euler_phi(unsigned long k) {
  unsigned long result = k;
  for (unsigned long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}
}  // namespace

unsigned long cyclotomic_order_bound(int degree) {
  if (degree < 1) return 1;
  // phi(k) >= sqrt(k/2) for all k, so phi(k) <= D forces k <= 2 D^2.
  unsigned long d = static_cast<unsigned long>(degree);
  unsigned long bound = 1;
  for (unsigned long k = 1; k <= 2 * d * d + 1; ++k)
    if (euler_phi(k) <= d) bound = k;
  return bound;
}

bool has_cyclotomic_root(const IntPoly& f, unsigned long n_max) {
  if (f.is_zero()) throw DomainError("has_cyclotomic_root requires a nonzero polynomial");
  if (f.is_constant()) return false;
  unsigned long d = static_cast<unsigned long>(f.degree());
  for (unsigned long k = 1; k <= n_max; ++k) {
    if (euler_phi(k) > d) continue;
    IntPoly g = poly_gcd(f, xn_minus_1(k));
    if (!g.is_constant()) return true;
  }
  return false;
}

bool has_cyclotomic_root(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("has_cyclotomic_root requires a nonzero polynomial");
  if (f.is_constant()) return false;
  return has_cyclotomic_root(f, cyclotomic_order_bound(f.degree()));
}

}  // namespace lehmer
