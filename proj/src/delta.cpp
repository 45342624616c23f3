#include "lehmertool/delta.hpp"

#include "lehmertool/factorize.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>

namespace lehmer {

int log_combination_sign(const std::vector<std::pair<mpz_class, long>>& terms) {
  bool all_zero = true;
  for (const auto& [p, c] : terms)
    if (c != 0) all_zero = false;
  if (all_zero) return 0;
  // The p_i are distinct primes, so the sum vanishes only in the all-zero
  // case; a finite precision therefore always settles the sign.
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    mpfr_t lo, hi, t;
    mpfr_inits2(prec, lo, hi, t, nullptr);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (const auto& [p, c] : terms) {
      if (c == 0) continue;
      // lower bound contribution
      mpfr_set_z(t, p.get_mpz_t(), c > 0 ? MPFR_RNDD : MPFR_RNDU);
      mpfr_log(t, t, c > 0 ? MPFR_RNDD : MPFR_RNDU);
      mpfr_mul_si(t, t, c, c > 0 ? MPFR_RNDD : MPFR_RNDD);
      mpfr_add(lo, lo, t, MPFR_RNDD);
      // upper bound contribution
      mpfr_set_z(t, p.get_mpz_t(), c > 0 ? MPFR_RNDU : MPFR_RNDD);
      mpfr_log(t, t, c > 0 ? MPFR_RNDU : MPFR_RNDD);
      mpfr_mul_si(t, t, c, MPFR_RNDU);
      mpfr_add(hi, hi, t, MPFR_RNDU);
    }
    int lo_sign = mpfr_sgn(lo);
    int hi_sign = mpfr_sgn(hi);
    mpfr_clears(lo, hi, t, nullptr);
    if (lo_sign > 0) return 1;
    if (hi_sign < 0) return -1;
    if (prec > 1u << 20)
      throw std::runtime_error("log_combination_sign: precision cap exceeded");
  }
}

namespace {

DeltaReport delta_impl(const IntPoly& f, const mpz_class& m, long n, unsigned long j) {
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 1) throw DomainError("n must be >= 1");
  if (j < 1) throw DomainError("j must be >= 1");
  if (!f.is_monic() || f.is_constant())
    throw DomainError("delta requires monic nonconstant f");

  DeltaReport rep;
  rep.m = m;
  rep.n = n;
  rep.j = j;
  ResultantValue res = resultant_with_xn_minus_1(f, static_cast<unsigned long>(n) * j);
  rep.resultant_used = res.value;

  auto factors = factorize(m);
  double num = 0.0, logm = 0.0;
  for (const auto& [p, a] : factors) {
    PrimeValuation pv;
    pv.p = p;
    pv.a = a;
    pv.e = ord_p(res.value, p);
    double lp = std::log(mpz_get_d(p.get_mpz_t()));
    num += static_cast<double>(pv.e) * lp;
    logm += static_cast<double>(a) * lp;
    rep.per_prime.push_back(std::move(pv));
  }
  rep.numeric = num / (static_cast<double>(n) * logm);
  if (factors.size() == 1) {
    const auto& pv = rep.per_prime.front();
    rep.exact = mpq_class(mpz_class(pv.e), mpz_class(n) * pv.a);
    rep.exact->canonicalize();
  }
  return rep;
}

}  // namespace

DeltaReport delta(const IntPoly& f, const mpz_class& m, long n) {
  return delta_impl(f, m, n, 1);
}

DeltaReport delta_power(const IntPoly& f, const mpz_class& m, long n, unsigned long j) {
  return delta_impl(f, m, n, j);
}

bool delta_at_least(const DeltaReport& r, long num, long den) {
  if (den <= 0) throw DomainError("threshold denominator must be positive");
  if (r.exact) return *r.exact >= mpq_class(num, den);
  // den * sum e_p log p - num * n * sum a_p log p >= 0 ?
  std::vector<std::pair<mpz_class, long>> terms;
  for (const auto& pv : r.per_prime) {
    long c = den * static_cast<long>(pv.e) - num * r.n * static_cast<long>(pv.a);
    terms.emplace_back(pv.p, c);
  }
  return log_combination_sign(terms) >= 0;
}

bool check_delta_threshold(const IntPoly& f, const mpz_class& m, long n) {
  DeltaReport r = delta(f, m, n);
  return delta_at_least(r, n - 1, n);
}

std::string DeltaReport::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"m\":" << m.get_str() << ",\"n\":" << n << ",\"j\":" << j;
  os << ",\"numeric\":" << numeric;
  if (exact)
    os << ",\"exact\":\"" << exact->get_num().get_str() << "/"
       << exact->get_den().get_str() << "\"";
  os << ",\"resultant\":\"" << resultant_used.get_str() << "\"";
  os << ",\"per_prime\":[";
  for (std::size_t i = 0; i < per_prime.size(); ++i) {
    if (i) os << ",";
    os << "{\"p\":" << per_prime[i].p.get_str() << ",\"e\":" << per_prime[i].e
       << ",\"a\":" << per_prime[i].a << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace lehmer
