#include "lehmertool/mahler.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lehmer {

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero() || f.is_constant())
    throw DomainError("square-free decomposition requires a nonconstant polynomial");
  // Yun's algorithm on the primitive part.
  IntPoly p = f.primitive_part();
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly a = poly_gcd(p, p.derivative());
  IntPoly b = p.divide_exact(a);
  IntPoly c = p.derivative().divide_exact(a);
  IntPoly d = c - b.derivative();
  int i = 1;
  while (!(b.is_constant())) {
    IntPoly g = poly_gcd(b, d);
    if (!g.is_constant()) out.emplace_back(g.primitive_part(), i);
    b = b.divide_exact(g);
    c = d.divide_exact(g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

using bf50 = boost::multiprecision::cpp_bin_float_50;
using bf100 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;
using cplx50 = boost::multiprecision::cpp_complex_50;
using cplx100 = boost::multiprecision::cpp_complex<100>;

template <class C>
struct real_of {
  using type = typename C::value_type;
};
template <>
struct real_of<std::complex<double>> {
  using type = double;
};

template <class C>
C horner(const std::vector<C>& coeffs, const C& z) {
  C acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

template <class C>
std::vector<C> to_coeffs(const IntPoly& f) {
  using R = typename real_of<C>::type;
  std::vector<C> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) {
    // exact decimal string -> target precision
    out.emplace_back(static_cast<R>(R(a.get_str())), R(0));
  }
  return out;
}

template <>
std::vector<std::complex<double>> to_coeffs<std::complex<double>>(const IntPoly& f) {
  std::vector<std::complex<double>> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) out.emplace_back(mpz_get_d(a.get_mpz_t()), 0.0);
  return out;
}

template <class C>
std::vector<C> derivative_coeffs(const std::vector<C>& c) {
  std::vector<C> d;
  using R = typename real_of<C>::type;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * C(R(i), R(0)));
  return d;
}

struct Enclosed {
  std::complex<double> center;
  double radius;
};

// Aberth-Ehrlich simultaneous iteration plus a Newton-style certified
// radius deg * |f(z)/f'(z)|. `ok` is false if the disks fail to shrink
// below target or are not pairwise disjoint at this working precision;
// the candidate centers are still returned to seed the next level.
template <class C>
std::pair<std::vector<Enclosed>, bool> isolate_sqfree(const IntPoly& g, double target,
                                                      const std::vector<Enclosed>* seed) {
  using R = typename real_of<C>::type;
  const int d = g.degree();
  std::vector<C> coeffs = to_coeffs<C>(g);
  std::vector<C> dcoeffs = derivative_coeffs(coeffs);

  std::vector<C> z(d);
  if (seed && static_cast<int>(seed->size()) == d) {
    for (int i = 0; i < d; ++i)
      z[i] = C(R((*seed)[i].center.real()), R((*seed)[i].center.imag()));
  } else {
    // Cauchy-bound circle with an irrational angular offset.
    double lead = std::abs(mpz_get_d(g.leading().get_mpz_t()));
    double maxc = 0.0;
    for (const auto& a : g.coeffs()) maxc = std::max(maxc, std::abs(mpz_get_d(a.get_mpz_t())));
    double rad = 0.5 * (1.0 + maxc / lead);
    for (int i = 0; i < d; ++i) {
      double th = 2.0 * std::numbers::pi * i / d + 0.7;
      z[i] = C(R(rad * std::cos(th)), R(rad * std::sin(th)));
    }
  }

  const int max_iter = 200 + 20 * d;
  for (int iter = 0; iter < max_iter; ++iter) {
    R worst = R(0);
    for (int i = 0; i < d; ++i) {
      C fz = horner(coeffs, z[i]);
      C dfz = horner(dcoeffs, z[i]);
      if (fz == C(0)) continue;
      if (dfz == C(0)) {
        z[i] += C(R(1e-6), R(1e-6));
        worst = R(1);
        continue;
      }
      C newton = fz / dfz;
      C sum = 0;
      for (int k = 0; k < d; ++k)
        if (k != i) sum += C(1) / (z[i] - z[k]);
      C denom = C(1) - newton * sum;
      C corr = (denom == C(0)) ? newton : newton / denom;
      z[i] -= corr;
      R step = abs(corr);
      if (step > worst) worst = step;
    }
    if (worst < R(target) * R(0.01)) break;
  }

  // Certified radii.
  bool ok = true;
  std::vector<Enclosed> out(d);
  for (int i = 0; i < d; ++i) {
    C fz = horner(coeffs, z[i]);
    C dfz = horner(dcoeffs, z[i]);
    double r;
    if (dfz == C(0))
      r = std::numeric_limits<double>::infinity();
    else
      r = static_cast<double>(R(d) * abs(fz) / abs(dfz));
    out[i].center = std::complex<double>(static_cast<double>(z[i].real()),
                                         static_cast<double>(z[i].imag()));
    // Padding for the double rounding of the center.
    r += 4e-16 * std::abs(out[i].center) + 1e-300;
    out[i].radius = r;
    if (!(r <= target)) ok = false;
  }
  if (ok) {
    for (int i = 0; i < d && ok; ++i)
      for (int k = i + 1; k < d && ok; ++k)
        if (std::abs(out[i].center - out[k].center) <= out[i].radius + out[k].radius)
          ok = false;
  }
  return {std::move(out), ok};
}

std::vector<Enclosed> isolate_sqfree_escalating(const IntPoly& g, double target) {
  auto [r0, ok0] = isolate_sqfree<std::complex<double>>(g, target, nullptr);
  if (ok0) return r0;
  auto [r1, ok1] = isolate_sqfree<cplx50>(g, target, &r0);
  if (ok1) return r1;
  auto [r2, ok2] = isolate_sqfree<cplx100>(g, target, &r1);
  if (ok2) return r2;
  throw PrecisionError("root isolation: requested radius unattainable at max precision",
                       target);
}

}  // namespace

RootEnclosureSet isolate_roots(const IntPoly& f, double target_radius) {
  if (f.is_zero() || f.is_constant())
    throw DomainError("isolate_roots requires a nonconstant polynomial");
  if (!(target_radius > 0)) throw DomainError("target radius must be positive");
  RootEnclosureSet set;
  set.source_degree = f.degree();
  set.guaranteed_radius = 0.0;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    for (const auto& e : isolate_sqfree_escalating(g, target_radius)) {
      RootEnclosure re;
      re.center = e.center;
      re.radius = e.radius;
      re.multiplicity = mult;
      set.guaranteed_radius = std::max(set.guaranteed_radius, e.radius);
      set.roots.push_back(re);
    }
  }
  return set;
}

MahlerValue mahler(const IntPoly& f, double tol) {
  if (!f.is_monic() || f.is_constant())
    throw DomainError("mahler requires a monic nonconstant polynomial");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");

  MahlerValue mv;
  // Remove cyclotomic factors exactly; they contribute zero.
  IntPoly rest = f;
  unsigned long kb = cyclotomic_order_bound(f.degree());
  for (unsigned long k = 1; k <= kb && !rest.is_constant(); ++k) {
    IntPoly ck = classical_cyclotomic(k);
    if (rest.is_constant() || ck.degree() > rest.degree()) continue;
    while (true) {
      IntPoly g = poly_gcd(rest, ck);
      if (g.is_constant()) break;
      rest = rest.divide_exact(ck);
      mv.cyclotomic_flag = true;
      if (rest.is_constant()) break;
    }
  }
  if (rest.is_constant()) {
    mv.log_measure = 0.0;
    mv.abs_error_bound = 0.0;
    return mv;
  }

  int d = rest.degree();
  double target = std::min(1e-12, tol / (8.0 * d));
  RootEnclosureSet set = isolate_roots(rest, target);
  double sum = 0.0, err = 0.0;
  for (const auto& re : set.roots) {
    double mag = std::abs(re.center);
    double r = re.radius;
    if (mag + r <= 1.0) continue;  // inside the closed unit disk: contributes 0
    sum += re.multiplicity * std::max(std::log(mag), 0.0);
    // |log|alpha| - log|c|| <= -log(1 - r/|c|) <= 2 r/|c| for r <= |c|/2;
    // the max(.,0) truncation does not increase the error.
    err += re.multiplicity * (2.0 * r / mag + 4e-16 * std::abs(std::log(mag)) + 1e-18);
  }
  if (err > tol)
    throw PrecisionError("mahler: certified error above tolerance", err);
  mv.log_measure = std::max(sum, 0.0);
  mv.abs_error_bound = err;
  return mv;
}

}  // namespace lehmer
