#pragma once

#include "lehmertool/intpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lehmer {

struct BadReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TorsionPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OffCurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point in affine coordinates, or the identity O.
struct Point {
  mpq_class x, y;
  bool infinity = false;
  static Point O() {
    Point p;
    p.infinity = true;
    return p;
  }
  static Point make(mpq_class px, mpq_class py) {
    Point p;
    p.x = std::move(px);
    p.y = std::move(py);
    return p;
  }
  friend bool operator==(const Point& a, const Point& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  std::string str() const;
};

/// Elliptic curve over Q in long Weierstrass form with integer
/// a-invariants. The model is reduced to a global minimal model at
/// construction (Laska-Kraus-Connell); the transformation (u, r, s, t)
/// from the input model is recorded.
class Curve {
 public:
  Curve(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6);
  static Curve parse(const std::string& quintuple);

  // Minimal-model invariants.
  const mpz_class& a1() const { return a1_; }
  const mpz_class& a2() const { return a2_; }
  const mpz_class& a3() const { return a3_; }
  const mpz_class& a4() const { return a4_; }
  const mpz_class& a6() const { return a6_; }
  const mpz_class& b2() const { return b2_; }
  const mpz_class& b4() const { return b4_; }
  const mpz_class& b6() const { return b6_; }
  const mpz_class& b8() const { return b8_; }
  const mpz_class& c4() const { return c4_; }
  const mpz_class& discriminant() const { return disc_; }
  bool was_minimalized() const { return u_ != 1 || r_ != 0 || s_ != 0 || t_ != 0; }
  mpz_class scaling_u() const { return u_; }

  bool on_curve(const Point& p) const;
  /// Maps a point given in input-model coordinates to the minimal model
  /// and validates it.
  Point point_from_input(const mpq_class& x, const mpq_class& y) const;
  Point parse_point(const std::string& text) const;

  Point neg(const Point& p) const;
  Point add(const Point& p, const Point& q) const;
  Point scalar_mul(long n, const Point& p) const;

  bool good_reduction(const mpz_class& p) const;
  /// Exact order if P is torsion (order <= 12 by Mazur), nullopt otherwise.
  std::optional<int> torsion_order(const Point& p) const;

  std::string str() const;

 private:
  void compute_invariants();
  mpz_class a1_, a2_, a3_, a4_, a6_;
  mpz_class b2_, b4_, b6_, b8_, c4_, c6_, disc_;
  mpz_class u_ = 1, r_ = 0, s_ = 0, t_ = 0;  // input -> minimal transformation
};

enum class HeightMethod { GoodFormula, BadReductionAlgorithm, ArchimedeanSeries };

struct LocalHeightValue {
  std::optional<mpz_class> prime;  // nullopt = archimedean place
  double value = 0.0;
  HeightMethod method = HeightMethod::GoodFormula;
  /// Nonarchimedean values are rational multiples of log p; the exact
  /// multiple (value / log p) when available.
  std::optional<mpq_class> logp_multiple;
};

/// Local canonical height at a finite prime on the minimal model,
/// normalized as lambda_p = (1/2)max(-ord_p x, 0) log p + (1/12) ord_p(Disc) log p
/// at nonsingular reduction; singular reduction is resolved through the
/// exact multiplication identities for psi_2 / psi_3.
LocalHeightValue local_height_nonarch(const Curve& E, const Point& P, const mpz_class& p);

/// Archimedean local height, normalized so the sum of all local heights
/// is the canonical height.
LocalHeightValue local_height_arch(const Curve& E, const Point& P, double precision = 1e-10);

struct CanonicalHeight {
  double value = 0.0;
  double precision = 0.0;
  bool torsion_suspect = false;
  std::vector<LocalHeightValue> locals;
};

/// hhat(P) as the sum of local heights over the archimedean place and all
/// primes dividing den(x(P)) or the discriminant.
CanonicalHeight canonical_height(const Curve& E, const Point& P, double precision = 1e-10);

struct EllipticPrimeContribution {
  mpz_class p;
  unsigned long a = 0;          // ord_p(m)
  std::vector<unsigned long> e; // per point: max(-ord_p x(nP), 0)
};

struct EllipticDeltaReport {
  double value = 0.0;
  std::optional<mpq_class> exact;  // present iff m is a prime power
  std::vector<EllipticPrimeContribution> per_prime;
  mpz_class m;
  long n = 0;
  std::vector<Point> points;
  std::string to_json() const;
};

/// Delta(P-set, (m), n) = sum_P (1/log m) sum_{p|m} (1/n^2) lambda_p(nP),
/// with good reduction required at every p | m.
EllipticDeltaReport elliptic_delta(const Curve& E, const std::vector<Point>& points,
                                   const mpz_class& m, long n);

/// Delta(jP-set, (m), n) >= Delta(P-set, (m), n) for 1 <= j <= j_max,
/// decided by exact integer comparison per prime.
bool elliptic_delta_monotonicity_check(const Curve& E, const std::vector<Point>& points,
                                       const mpz_class& m, long n, long j_max);

/// 6/((J+1)(J+2)) * (delta*log m - C_E (card/n^2) log(J+1)/J).
double thm5_bound(double delta_val, const mpz_class& m, long n, long card, long J,
                  double c_e);
std::pair<long, double> thm5_optimize(double delta_val, const mpz_class& m, long n,
                                      long card, double c_e, long J_max = 10000);

/// Point filter: good reduction at p | m, n >= max(sqrt(eps), 2) (rational
/// points have degree 1), and Delta({Q}, (m), n) >= delta_min.
bool corollary6_filter(const Curve& E, const Point& Q, const mpz_class& m, long n,
                       double eps, double delta_min);

/// Estimates the archimedean Fejer deficit:
/// max(0, -min over sample points Q of sum_j f_j lambda_inf(jQ) / log(J+1)).
double calibrate_c_e(const Curve& E, const std::vector<Point>& samples, long J);

}  // namespace lehmer
