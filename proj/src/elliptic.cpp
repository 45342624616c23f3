#include "lehmertool/elliptic.hpp"

#include "lehmertool/factorize.hpp"
#include "lehmertool/fejer.hpp"
#include "lehmertool/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lehmer {

namespace {

double log_abs_mpz(const mpz_class& z) {
  if (z == 0) throw DomainError("log of zero");
  long e;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

double log_abs_mpq(const mpq_class& q) {
  return log_abs_mpz(q.get_num()) - log_abs_mpz(q.get_den());
}

// ord_p of a rational; nullopt encodes +infinity (q = 0).
std::optional<long> ord_q(const mpq_class& q, const mpz_class& p) {
  if (q == 0) return std::nullopt;
  long v = 0;
  if (q.get_num() % p == 0)
    v += static_cast<long>(ord_p(q.get_num(), p));
  else if (q.get_den() % p == 0)
    v -= static_cast<long>(ord_p(q.get_den(), p));
  return v;
}

bool min_ord_positive(const std::optional<long>& v) { return !v || *v > 0; }

mpz_class parse_int_token(const std::string& s) {
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return std::isspace((unsigned char)c); }),
          t.end());
  if (t.empty()) throw ParseError("empty integer token", 0);
  try {
    return mpz_class(t);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad integer token: " + s, 0);
  }
}

mpq_class parse_rat_token(const std::string& s) {
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return std::isspace((unsigned char)c); }),
          t.end());
  if (t.empty()) throw ParseError("empty rational token", 0);
  try {
    mpq_class q(t);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational token: " + s, 0);
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::string Point::str() const {
  if (infinity) return "O";
  std::ostringstream os;
  os << "(" << x.get_str() << "," << y.get_str() << ")";
  return os.str();
}

Curve::Curve(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)),
      a4_(std::move(a4)), a6_(std::move(a6)) {
  compute_invariants();
  if (disc_ == 0) throw DomainError("singular Weierstrass model (discriminant 0)");

  // Laska-Kraus-Connell scaling. u collects p^k for every prime with
  // p^12 | disc (subject to c4/c6 valuations and the Kraus conditions
  // at 2 and 3). Curves whose discriminant resists factorization are
  // kept as given.
  mpz_class u = 1;
  std::map<mpz_class, unsigned> dfac;
  try {
    mpz_class ad = abs(disc_);
    dfac = factorize(ad);
  } catch (const FactorizationError&) {
    dfac.clear();
  }
  for (const auto& [p, vd] : dfac) {
    if (vd < 12) continue;
    unsigned long k = vd / 12;
    if (c4_ != 0) k = std::min(k, ord_p(c4_, p) / 4);
    if (c6_ != 0) k = std::min(k, ord_p(c6_, p) / 6);
    if (p == 2 || p == 3) {
      while (k > 0) {
        mpz_class pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), 4 * k);
        mpz_class c4n = c4_ / pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), 6 * k);
        mpz_class c6n = c6_ / pk;
        bool ok;
        if (p == 3) {
          ok = (c6n == 0) || (ord_p(c6n, 3) != 2);
        } else {
          mpz_class r4 = ((c4n % 16) + 16) % 16;
          mpz_class r6 = ((c6n % 32) + 32) % 32;
          ok = (((c6n % 4) + 4) % 4 == 3) || (r4 == 0 && (r6 == 0 || r6 == 8));
        }
        if (ok) break;
        --k;
      }
    }
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    u *= pk;
  }
  if (u == 1) return;

  mpz_class u4, u6;
  mpz_pow_ui(u4.get_mpz_t(), u.get_mpz_t(), 4);
  mpz_pow_ui(u6.get_mpz_t(), u.get_mpz_t(), 6);
  mpz_class c4n = c4_ / u4, c6n = c6_ / u6;
  // Reconstruct a model from (c4, c6): b2 = -c6 mod 12 in (-6, 6].
  mpz_class nb2 = ((-c6n % 12) + 12) % 12;
  if (nb2 > 6) nb2 -= 12;
  mpz_class nb4 = (nb2 * nb2 - c4n);
  mpz_class nb6 = 0;
  bool ok = (nb4 % 24 == 0);
  if (ok) {
    nb4 /= 24;
    nb6 = -nb2 * nb2 * nb2 + 36 * nb2 * nb4 - c6n;
    ok = (nb6 % 216 == 0);
    if (ok) nb6 /= 216;
  }
  mpz_class na1, na2, na3, na4, na6;
  if (ok) {
    na1 = ((nb2 % 2) + 2) % 2;
    na3 = ((nb6 % 2) + 2) % 2;
    ok = ((nb2 - na1) % 4 == 0) && ((nb4 - na1 * na3) % 2 == 0) &&
         ((nb6 - na3 * na3) % 4 == 0);
  }
  if (ok) {
    na2 = (nb2 - na1) / 4;
    na4 = (nb4 - na1 * na3) / 2;
    na6 = (nb6 - na3 * na3) / 4;
    // Transformation x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
    mpz_class s2 = u * na1 - a1_;
    mpz_class r3, t2;
    ok = (s2 % 2 == 0);
    if (ok) {
      mpz_class s = s2 / 2;
      r3 = u * u * na2 - a2_ + s * a1_ + s * s;
      ok = (r3 % 3 == 0);
      if (ok) {
        mpz_class r = r3 / 3;
        t2 = u * u * u * na3 - a3_ - r * a1_;
        ok = (t2 % 2 == 0);
        if (ok) {
          u_ = u;
          s_ = s;
          r_ = r;
          t_ = t2 / 2;
        }
      }
    }
  }
  if (!ok) return;  // fall back to the input model
  a1_ = na1;
  a2_ = na2;
  a3_ = na3;
  a4_ = na4;
  a6_ = na6;
  compute_invariants();
  if (c4_ != c4n || c6_ != c6n)
    throw DomainError("minimal model reconstruction mismatch");
}

void Curve::compute_invariants() {
  b2_ = a1_ * a1_ + 4 * a2_;
  b4_ = 2 * a4_ + a1_ * a3_;
  b6_ = a3_ * a3_ + 4 * a6_;
  b8_ = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
        a4_ * a4_;
  c4_ = b2_ * b2_ - 24 * b4_;
  c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
  disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ +
          9 * b2_ * b4_ * b6_;
  if (4 * b8_ != b2_ * b6_ - b4_ * b4_ || 1728 * disc_ != c4_ * c4_ * c4_ - c6_ * c6_)
    throw DomainError("inconsistent Weierstrass invariants");
}

Curve Curve::parse(const std::string& quintuple) {
  auto parts = split_commas(quintuple);
  if (parts.size() != 5) throw ParseError("curve needs 5 comma-separated integers a1,a2,a3,a4,a6", 0);
  return Curve(parse_int_token(parts[0]), parse_int_token(parts[1]),
               parse_int_token(parts[2]), parse_int_token(parts[3]),
               parse_int_token(parts[4]));
}

bool Curve::on_curve(const Point& p) const {
  if (p.infinity) return true;
  mpq_class lhs = p.y * p.y + mpq_class(a1_) * p.x * p.y + mpq_class(a3_) * p.y;
  mpq_class rhs = p.x * p.x * p.x + mpq_class(a2_) * p.x * p.x +
                  mpq_class(a4_) * p.x + mpq_class(a6_);
  return lhs == rhs;
}

Point Curve::point_from_input(const mpq_class& x, const mpq_class& y) const {
  mpq_class u2(u_ * u_), u3(u_ * u_ * u_);
  mpq_class xp = (x - mpq_class(r_)) / u2;
  mpq_class yp = (y - mpq_class(s_) * u2 * xp - mpq_class(t_)) / u3;
  xp.canonicalize();
  yp.canonicalize();
  Point p = Point::make(xp, yp);
  if (!on_curve(p)) throw OffCurveError("point is not on the curve");
  return p;
}

Point Curve::parse_point(const std::string& text) const {
  auto parts = split_commas(text);
  if (parts.size() != 2) throw ParseError("point needs 2 comma-separated rationals x,y", 0);
  return point_from_input(parse_rat_token(parts[0]), parse_rat_token(parts[1]));
}

Point Curve::neg(const Point& p) const {
  if (p.infinity) return p;
  return Point::make(p.x, -p.y - mpq_class(a1_) * p.x - mpq_class(a3_));
}

Point Curve::add(const Point& p, const Point& q) const {
  if (p.infinity) return q;
  if (q.infinity) return p;
  mpq_class lambda;
  if (p.x == q.x) {
    if (p.y != q.y || 2 * p.y + mpq_class(a1_) * p.x + mpq_class(a3_) == 0)
      return Point::O();  // Q = -P, including 2-torsion doubling
    mpq_class num = 3 * p.x * p.x + 2 * mpq_class(a2_) * p.x + mpq_class(a4_) -
                    mpq_class(a1_) * p.y;
    mpq_class den = 2 * p.y + mpq_class(a1_) * p.x + mpq_class(a3_);
    lambda = num / den;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  lambda.canonicalize();
  mpq_class x3 = lambda * lambda + mpq_class(a1_) * lambda - mpq_class(a2_) -
                 p.x - q.x;
  mpq_class y3 = -(lambda * (x3 - p.x) + p.y) - mpq_class(a1_) * x3 - mpq_class(a3_);
  x3.canonicalize();
  y3.canonicalize();
  return Point::make(x3, y3);
}

Point Curve::scalar_mul(long n, const Point& p) const {
  if (n == 0 || p.infinity) return Point::O();
  Point base = p;
  if (n < 0) {
    base = neg(base);
    n = -n;
  }
  Point acc = Point::O();
  while (n > 0) {
    if (n & 1) acc = add(acc, base);
    n >>= 1;
    if (n) base = add(base, base);
  }
  return acc;
}

bool Curve::good_reduction(const mpz_class& p) const { return disc_ % p != 0; }

std::optional<int> Curve::torsion_order(const Point& p) const {
  if (p.infinity) return 1;
  Point q = p;
  for (int k = 1; k <= 12; ++k) {
    if (q.infinity) return k;
    q = add(q, p);
  }
  return std::nullopt;
}

std::string Curve::str() const {
  std::ostringstream os;
  os << "[" << a1_.get_str() << "," << a2_.get_str() << "," << a3_.get_str()
     << "," << a4_.get_str() << "," << a6_.get_str() << "]";
  return os.str();
}

namespace {

// psi_2(P) = 2y + a1 x + a3, psi_3(P) = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8.
mpq_class psi2_at(const Curve& E, const Point& P) {
  return 2 * P.y + mpq_class(E.a1()) * P.x + mpq_class(E.a3());
}

mpq_class psi3_at(const Curve& E, const Point& P) {
  mpq_class x = P.x;
  return ((3 * x + mpq_class(E.b2())) * x + 3 * mpq_class(E.b4())) * x * x +
         3 * mpq_class(E.b6()) * x + mpq_class(E.b8());
}

// True iff P (with ord_p x >= 0) reduces to the singular point mod p.
bool reduces_singular(const Curve& E, const Point& P, const mpz_class& p,
                      unsigned long N) {
  if (N == 0) return false;
  auto vx = ord_q(P.x, p);
  if (vx && *vx < 0) return false;  // reduces into the identity region
  mpq_class A = 3 * P.x * P.x + 2 * mpq_class(E.a2()) * P.x + mpq_class(E.a4()) -
                mpq_class(E.a1()) * P.y;
  mpq_class B = psi2_at(E, P);
  return min_ord_positive(ord_q(A, p)) && min_ord_positive(ord_q(B, p));
}

// lambda_p(P) / log p for P with nonsingular reduction.
mpq_class nonsingular_multiple(const Point& P, const mpz_class& p, unsigned long N) {
  auto vx = ord_q(P.x, p);
  mpq_class mult(N, 12);
  if (vx && *vx < 0) mult += mpq_class(-*vx, 2);
  mult.canonicalize();
  return mult;
}

// lambda_p(P) / log p on a minimal model, any reduction type. Singular
// additive reduction is peeled off with the exact identities
//   lambda(2P) = 4 lambda(P) + (v(psi_2(P)) - N/4) log p,
//   lambda(3P) = 9 lambda(P) + (v(psi_3(P)) - 2N/3) log p,
// which follow from the quasi-parallelogram law; doubling escapes every
// component group except Z/3Z, where tripling lands on the identity
// component.
mpq_class local_multiple(const Curve& E, const Point& P, const mpz_class& p,
                         unsigned long N, int depth) {
  if (P.infinity) throw DomainError("local height at the identity");
  if (depth > 16) throw DomainError("bad-reduction recursion failed to terminate");
  if (!reduces_singular(E, P, p, N)) return nonsingular_multiple(P, p, N);

  if (E.c4() % p != 0) {
    // Multiplicative reduction: (1/2) B_2(n0/N) N with n0 = min(v(psi_2), N/2).
    mpq_class n0(N, 2);
    auto vB = ord_q(psi2_at(E, P), p);
    if (vB && mpq_class(*vB) < n0) n0 = mpq_class(*vB);
    mpq_class mult = -n0 * (mpq_class(N) - n0) / (2 * mpq_class(N)) + mpq_class(N, 12);
    mult.canonicalize();
    return mult;
  }

  mpq_class Nq(N);
  Point P2 = E.add(P, P);
  if (P2.infinity) {
    // 2-torsion: 3P = P gives 8 lambda(P) = (2N/3 - v(psi_3)) log p.
    auto vC = ord_q(psi3_at(E, P), p);
    if (!vC) throw DomainError("division polynomial vanished unexpectedly");
    mpq_class mult = (2 * Nq / 3 - mpq_class(*vC)) / 8;
    mult.canonicalize();
    return mult;
  }
  auto vB = ord_q(psi2_at(E, P), p);
  if (!vB) throw DomainError("psi_2 vanished at a point of infinite order");
  if (!reduces_singular(E, P2, p, N)) {
    mpq_class mult =
        (nonsingular_multiple(P2, p, N) - mpq_class(*vB) + Nq / 4) / 4;
    mult.canonicalize();
    return mult;
  }
  Point P3 = E.add(P2, P);
  if (P3.infinity) {
    // 3-torsion: lambda(2P) = lambda(-P) = lambda(P).
    mpq_class mult = (Nq / 4 - mpq_class(*vB)) / 3;
    mult.canonicalize();
    return mult;
  }
  if (!reduces_singular(E, P3, p, N)) {
    auto vC = ord_q(psi3_at(E, P), p);
    if (!vC) throw DomainError("division polynomial vanished unexpectedly");
    mpq_class mult =
        (nonsingular_multiple(P3, p, N) - mpq_class(*vC) + 2 * Nq / 3) / 9;
    mult.canonicalize();
    return mult;
  }
  mpq_class mult = (local_multiple(E, P2, p, N, depth + 1) - mpq_class(*vB) + Nq / 4) / 4;
  mult.canonicalize();
  return mult;
}

}  // namespace

LocalHeightValue local_height_nonarch(const Curve& E, const Point& P,
                                      const mpz_class& p) {
  if (P.infinity) throw DomainError("local height at the identity");
  if (p < 2 || !is_probable_prime(p)) throw DomainError("place must be prime");
  unsigned long N = (E.discriminant() % p == 0) ? ord_p(E.discriminant(), p) : 0;
  LocalHeightValue out;
  out.prime = p;
  out.method = (N > 0) ? HeightMethod::BadReductionAlgorithm : HeightMethod::GoodFormula;
  mpq_class mult = local_multiple(E, P, p, N, 0);
  out.logp_multiple = mult;
  out.value = mult.get_d() * log_abs_mpz(p);
  return out;
}

LocalHeightValue local_height_arch(const Curve& E, const Point& P, double precision) {
  if (P.infinity) throw DomainError("local height at the identity");
  if (precision < 1e-12) throw PrecisionError("archimedean series limited to 1e-12", precision);

  double b2 = mpz_get_d(E.b2().get_mpz_t());
  double b4 = mpz_get_d(E.b4().get_mpz_t());
  double b6 = mpz_get_d(E.b6().get_mpz_t());
  double b8 = mpz_get_d(E.b8().get_mpz_t());
  // Invariants of the x -> x+1 shifted model, used on the |x| < 2 branch.
  double p2 = b2 - 12, p4 = b4 - b2 + 6, p6 = b6 - 2 * b4 + b2 - 4;
  double p8 = b8 - 3 * b6 + 3 * b4 - b2 + 3;

  // lambda-tilde(P) = -(1/2) log|t_0| + sum 4^{-n} (1/8) log|zeta_n|
  // over the duplication recursion in t = 1/x (branch 1) or 1/(x+1)
  // (branch 0); lambda_inf = lambda-tilde - (1/12) log|Disc|.
  bool branch1 = cmp(abs(P.x), 2) >= 0;
  double lam;
  double t;
  if (branch1) {
    lam = 0.5 * log_abs_mpq(P.x);
    t = 1.0 / mpq_get_d(P.x.get_mpq_t());
  } else {
    mpq_class xp1 = P.x + 1;
    if (xp1 == 0) {
      // x = -1: start on branch 1 despite |x| < 2; t = -1 keeps the
      // recursion well-defined and |t| <= 1 throughout.
      branch1 = true;
      lam = 0.0;
      t = -1.0;
    } else {
      lam = 0.5 * log_abs_mpq(xp1);
      t = 1.0 / mpq_get_d(xp1.get_mpq_t());
    }
  }

  double weight = 0.125;
  for (int n = 0; n < 64; ++n) {
    double w, z;
    if (branch1) {
      w = t * (4.0 + t * (b2 + t * (2.0 * b4 + t * b6)));
      z = 1.0 - t * t * (b4 + t * (2.0 * b6 + t * b8));
    } else {
      w = t * (4.0 + t * (p2 + t * (2.0 * p4 + t * p6)));
      z = 1.0 - t * t * (p4 + t * (2.0 * p6 + t * p8));
    }
    // zeta/t' candidates: stay-or-switch so that |x(2P)| >= 2 uses the
    // 1/x chart and |x(2P)| < 2 uses the 1/(x+1) chart.
    double zeta_to_1 = branch1 ? z : z - w;      // next chart t = 1/x
    double zeta_to_0 = branch1 ? z + w : z;      // next chart t = 1/(x+1)
    bool go1 = std::fabs(zeta_to_1) >= 2.0 * std::fabs(w);
    double zeta = go1 ? zeta_to_1 : zeta_to_0;
    if (zeta == 0.0 || !std::isfinite(zeta)) {
      go1 = !go1;
      zeta = go1 ? zeta_to_1 : zeta_to_0;
      if (zeta == 0.0 || !std::isfinite(zeta))
        throw PrecisionError("archimedean recursion degenerated", 1.0);
    }
    lam += weight * std::log(std::fabs(zeta));
    weight *= 0.25;
    t = w / zeta;
    branch1 = go1;
  }

  lam -= log_abs_mpz(E.discriminant()) / 12.0;

  LocalHeightValue out;
  out.prime = std::nullopt;
  out.method = HeightMethod::ArchimedeanSeries;
  out.value = lam;
  return out;
}

CanonicalHeight canonical_height(const Curve& E, const Point& P, double precision) {
  if (P.infinity) throw DomainError("canonical height of the identity");
  CanonicalHeight out;
  out.precision = precision;

  std::map<mpz_class, unsigned> places = factorize(abs(E.discriminant()));
  mpz_class den = P.x.get_den();
  if (den > 1)
    for (const auto& [p, e] : factorize(den)) places.emplace(p, e);

  double total = 0.0;
  for (const auto& [p, e] : places) {
    LocalHeightValue lv = local_height_nonarch(E, P, p);
    total += lv.value;
    out.locals.push_back(std::move(lv));
  }
  LocalHeightValue arch = local_height_arch(E, P, precision);
  total += arch.value;
  out.locals.push_back(std::move(arch));
  out.value = total;

  if (std::fabs(total) < 1e-6 && E.torsion_order(P)) {
    out.torsion_suspect = true;
    out.value = 0.0;
  }
  return out;
}

EllipticDeltaReport elliptic_delta(const Curve& E, const std::vector<Point>& points,
                                   const mpz_class& m, long n) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 1) throw DomainError("n must be >= 1");
  auto mfac = factorize(m);
  for (const auto& [p, a] : mfac)
    if (!E.good_reduction(p))
      throw BadReductionError("bad reduction at prime " + p.get_str() +
                              " dividing the modulus");
  EllipticDeltaReport rep;
  rep.m = m;
  rep.n = n;
  rep.points = points;

  std::vector<Point> nP;
  for (const auto& P : points) {
    if (P.infinity || E.torsion_order(P))
      throw TorsionPointError("torsion point in the point set");
    Point Q = E.scalar_mul(n, P);
    if (Q.infinity) throw TorsionPointError("nP is the identity");
    nP.push_back(std::move(Q));
  }

  double logm = log_abs_mpz(m);
  double value = 0.0;
  for (const auto& [p, a] : mfac) {
    EllipticPrimeContribution c;
    c.p = p;
    c.a = a;
    for (const auto& Q : nP) {
      auto vx = ord_q(Q.x, p);
      unsigned long e = (vx && *vx < 0) ? static_cast<unsigned long>(-*vx) : 0;
      c.e.push_back(e);
      value += 0.5 * static_cast<double>(e) * log_abs_mpz(p);
    }
    rep.per_prime.push_back(std::move(c));
  }
  value /= static_cast<double>(n) * static_cast<double>(n) * logm;
  rep.value = value;

  if (rep.per_prime.size() == 1) {
    // m = p^k: Delta = sum_P e_P / (2 n^2 k) exactly.
    unsigned long esum = 0;
    for (unsigned long e : rep.per_prime[0].e) esum += e;
    mpq_class exact(esum, 2 * static_cast<unsigned long>(n) *
                              static_cast<unsigned long>(n) * rep.per_prime[0].a);
    exact.canonicalize();
    rep.exact = exact;
  }
  return rep;
}

bool elliptic_delta_monotonicity_check(const Curve& E, const std::vector<Point>& points,
                                       const mpz_class& m, long n, long j_max) {
  EllipticDeltaReport base = elliptic_delta(E, points, m, n);
  for (long j = 1; j <= j_max; ++j) {
    std::vector<Point> jP;
    for (const auto& P : points) jP.push_back(E.scalar_mul(j, P));
    EllipticDeltaReport rj = elliptic_delta(E, jP, m, n);
    // Per point and per prime: the formal-group filtration forces
    // ord_p den x(njP) >= ord_p den x(nP).
    for (std::size_t pi = 0; pi < base.per_prime.size(); ++pi)
      for (std::size_t qi = 0; qi < base.per_prime[pi].e.size(); ++qi)
        if (rj.per_prime[pi].e[qi] < base.per_prime[pi].e[qi]) return false;
  }
  return true;
}

double thm5_bound(double delta_val, const mpz_class& m, long n, long card, long J,
                  double c_e) {
  if (J < 1) throw DomainError("J must be >= 1");
  double logm = log_abs_mpz(m);
  double Jd = static_cast<double>(J);
  double penalty = c_e * (static_cast<double>(card) / (static_cast<double>(n) * n)) *
                   std::log(Jd + 1.0) / Jd;
  return 6.0 / ((Jd + 1.0) * (Jd + 2.0)) * (delta_val * logm - penalty);
}

std::pair<long, double> thm5_optimize(double delta_val, const mpz_class& m, long n,
                                      long card, double c_e, long J_max) {
  long best_J = 1;
  double best = thm5_bound(delta_val, m, n, card, 1, c_e);
  int decreasing = 0;
  for (long J = 2; J <= J_max; ++J) {
    double v = thm5_bound(delta_val, m, n, card, J, c_e);
    if (v > best) {
      best = v;
      best_J = J;
      decreasing = 0;
    } else if (++decreasing >= 64) {
      break;
    }
  }
  return {best_J, best};
}

bool corollary6_filter(const Curve& E, const Point& Q, const mpz_class& m, long n,
                       double eps, double delta_min) {
  for (const auto& [p, a] : factorize(m))
    if (!E.good_reduction(p)) return false;  // hypothesis fails: filter out
  if (static_cast<double>(n) < std::max(std::sqrt(eps), 2.0)) return false;
  if (E.torsion_order(Q)) return false;
  EllipticDeltaReport rep = elliptic_delta(E, {Q}, m, n);
  return rep.value >= delta_min - 1e-12;
}

double calibrate_c_e(const Curve& E, const std::vector<Point>& samples, long J) {
  if (J < 1) throw DomainError("J must be >= 1");
  double worst = 0.0;
  for (const auto& Q : samples) {
    if (Q.infinity || E.torsion_order(Q))
      throw TorsionPointError("torsion point in the calibration sample");
    double s = 0.0;
    Point jQ = Point::O();
    for (long j = 1; j <= J; ++j) {
      jQ = E.add(jQ, Q);
      s += fejer_weight(j, J) * local_height_arch(E, jQ).value;
    }
    worst = std::min(worst, s);
  }
  return -worst / std::log(static_cast<double>(J) + 1.0);
}

std::string EllipticDeltaReport::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"m\":" << m.get_str() << ",\"n\":" << n << ",\"value\":" << value;
  if (exact)
    os << ",\"exact\":\"" << exact->get_num().get_str() << "/"
       << exact->get_den().get_str() << "\"";
  os << ",\"points\":[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) os << ",";
    os << "\"" << points[i].str() << "\"";
  }
  os << "],\"per_prime\":[";
  for (std::size_t i = 0; i < per_prime.size(); ++i) {
    if (i) os << ",";
    os << "{\"p\":" << per_prime[i].p.get_str() << ",\"a\":" << per_prime[i].a
       << ",\"e\":[";
    for (std::size_t j = 0; j < per_prime[i].e.size(); ++j) {
      if (j) os << ",";
      os << per_prime[i].e[j];
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

}  // namespace lehmer
