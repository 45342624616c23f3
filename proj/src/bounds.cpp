#include "lehmertool/bounds.hpp"

#include <cmath>
#include <sstream>

namespace lehmer {

namespace {
double log_mpz(const mpz_class& m) {
  signed long exp;
  double mant = mpz_get_d_2exp(&exp, m.get_mpz_t());
  return std::log(std::abs(mant)) + exp * std::log(2.0);
}
}  // namespace

double thm3_bound(double delta_val, const mpz_class& m, long n, long card, long J) {
  if (m < 2 || n < 1 || card < 1 || J < 1)
    throw DomainError("thm3_bound: arguments out of range");
  double logm = log_mpz(m);
  double penalty = (static_cast<double>(card) / n) * (std::log(J / 2.0 + 1.0) + 1.0) / J;
  return 3.0 / (J + 2.0) * (delta_val * logm - penalty);
}

std::pair<long, double> thm3_optimize(double delta_val, const mpz_class& m, long n,
                                      long card, long J_max) {
  if (J_max < 1) throw DomainError("thm3_optimize: J_max must be >= 1");
  long best_J = 1;
  double best = thm3_bound(delta_val, m, n, card, 1);
  double prev = best;
  int decreasing = 0;
  for (long J = 2; J <= J_max; ++J) {
    double v = thm3_bound(delta_val, m, n, card, J);
    if (v > best) {
      best = v;
      best_J = J;
    }
    decreasing = (v < prev) ? decreasing + 1 : 0;
    if (decreasing >= 64) break;
    prev = v;
  }
  return {best_J, best};
}

std::pair<double, LemmaBranch> lemma_bound(long D, const mpz_class& m, long n) {
  if (D < 1 || m < 2 || n < 2) throw DomainError("lemma_bound: arguments out of range");
  double logm = log_mpz(m);
  double threshold = static_cast<double>(D) / (16.0 * n);
  double large = logm / 264.0;
  double ratio = D / (static_cast<double>(n) * logm);
  double small = logm / ((128.0 * ratio) * std::log(16.0 * ratio));
  if (logm > threshold) return {large, LemmaBranch::LargeM};
  if (logm < threshold) return {small, LemmaBranch::SmallM};
  // boundary: both cases apply, report the larger
  return large >= small ? std::make_pair(large, LemmaBranch::LargeM)
                        : std::make_pair(small, LemmaBranch::SmallM);
}

double corollary_bound(const mpz_class& m, double eps) {
  if (m < 2) throw DomainError("corollary_bound: m must be >= 2");
  if (!(eps > 0.0) || eps > 1.0) throw DomainError("corollary_bound: eps must be in (0,1]");
  return log_mpz(m) / ((185.0 / eps) * std::log(24.0 / eps));
}

double shparlinski_eps(const mpz_class& m) {
  if (m < 16) throw DomainError("shparlinski_eps: m must be >= 16");
  double logm = log_mpz(m);
  return std::log(logm) / logm;
}

double bdm_reference(long D, const mpz_class& m) {
  if (D < 1 || m < 2) throw DomainError("bdm_reference: arguments out of range");
  double Cm;
  if (m == 2)
    Cm = 0.25 * std::log(5.0);
  else {
    double md = mpz_get_d(m.get_mpz_t());
    Cm = std::log(std::sqrt(md * md + 1.0) / 2.0);
  }
  return static_cast<double>(D) / (D + 1.0) * Cm;
}

double samuels_bound(long D, const mpz_class& m, const IntPoly& u) {
  if (D < 1 || m < 2) throw DomainError("samuels_bound: arguments out of range");
  if (!u.is_zero() && u.degree() > D - 1)
    throw DomainError("samuels_bound: deg u must be <= D-1");
  // g = X^(D+1) - 1 + (X-1) u(X)
  IntPoly g = IntPoly::monomial(1, static_cast<int>(D) + 1) - IntPoly::constant(1) +
              (IntPoly::monomial(1, 1) - IntPoly::constant(1)) * u;
  mpz_class L = g.length();
  return static_cast<double>(D) / (D + 1.0) * (log_mpz(m) - log_mpz(L));
}

bool lemma_constant_check() {
  double lhs = (1.0 / 57.0) * (0.5 - 4.0 * std::log(57.0) / 57.0);
  return lhs >= 1.0 / 264.0;
}

BoundReport evaluate_bounds(double delta_val, long D, const mpz_class& m, long n,
                            long card, double eps, std::optional<double> measured,
                            long J_max) {
  BoundReport r;
  r.D = D;
  r.n = n;
  r.card = card;
  r.m = m;
  r.eps = eps;
  r.delta_val = delta_val;
  auto [jstar, best] = thm3_optimize(delta_val, m, n, card, J_max);
  r.thm3_best_J = jstar;
  r.thm3_best = best;
  for (long J : {1L, 2L, 3L, 4L, 8L, 16L, 57L})
    r.thm3_by_J[J] = thm3_bound(delta_val, m, n, card, J);
  r.thm3_by_J[jstar] = best;
  if (n >= 2) {
    auto [lv, lb] = lemma_bound(D, m, n);
    r.lemma_value = lv;
    r.lemma_branch = lb;
  }
  r.corollary_value = corollary_bound(m, eps);
  r.bdm_value = bdm_reference(D, m);
  if (measured) {
    r.measured_log_mahler = measured;
    double applicable = std::max(r.thm3_best, r.lemma_value);
    r.slack = *measured - applicable;
  }
  return r;
}

std::string BoundReport::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"D\":" << D << ",\"m\":" << m.get_str() << ",\"n\":" << n
     << ",\"card\":" << card << ",\"eps\":" << eps << ",\"delta\":" << delta_val;
  os << ",\"thm3_best_J\":" << thm3_best_J << ",\"thm3_best\":" << thm3_best;
  os << ",\"thm3_by_J\":{";
  bool first = true;
  for (const auto& [J, v] : thm3_by_J) {
    if (!first) os << ",";
    first = false;
    os << "\"" << J << "\":" << v;
  }
  os << "}";
  os << ",\"lemma\":" << lemma_value << ",\"lemma_branch\":\""
     << (lemma_branch == LemmaBranch::LargeM ? "large-m" : "small-m") << "\"";
  os << ",\"corollary\":" << corollary_value << ",\"bdm\":" << bdm_value;
  if (samuels_value) os << ",\"samuels\":" << *samuels_value;
  if (measured_log_mahler) os << ",\"log_mahler\":" << *measured_log_mahler;
  if (slack) os << ",\"slack\":" << *slack;
  os << ",\"vacuous\":" << (thm3_best <= 0.0 ? "true" : "false");
  os << "}";
  return os.str();
}

std::string BoundReport::csv_header() {
  return "poly,D,m,n,delta,thm3_J,thm3,lemma,corollary,bdm,mahler,slack";
}

std::string BoundReport::csv_row(const std::string& poly_text) const {
  std::ostringstream os;
  os.precision(17);
  os << '"' << poly_text << '"' << ',' << D << ',' << m.get_str() << ',' << n << ','
     << delta_val << ',' << thm3_best_J << ',' << thm3_best << ',' << lemma_value << ','
     << corollary_value << ',' << bdm_value << ',';
  if (measured_log_mahler) os << *measured_log_mahler;
  os << ',';
  if (slack) os << *slack;
  return os.str();
}

}  // namespace lehmer
