#include "lehmertool/fejer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lehmer {

double fejer_weight(long j, long J) {
  if (J < 1 || j < 1 || j > J) throw std::invalid_argument("fejer_weight: need 1 <= j <= J");
  return 1.0 - static_cast<double>(j) / (J + 1);
}

mpq_class fejer_moment(int k, long J) {
  if (J < 1) throw std::invalid_argument("fejer_moment: J must be >= 1");
  if (k < 0 || k > 2) throw std::invalid_argument("fejer_moment: k must be in {0,1,2}");
  mpq_class sum = 0;
  mpz_class Jp1 = J + 1;
  for (long j = 1; j <= J; ++j) {
    mpz_class jk = 1;
    for (int i = 0; i < k; ++i) jk *= j;
    sum += mpq_class(jk * (Jp1 - j), Jp1);
  }
  sum.canonicalize();
  return sum;
}

double fejer_sum_at(std::complex<double> z, long J) {
  if (J < 1) throw std::invalid_argument("fejer_sum_at: J must be >= 1");
  double sum = 0.0;
  std::complex<double> zj = 1.0;
  for (long j = 1; j <= J; ++j) {
    zj *= z;
    double mag = std::abs(1.0 - zj);
    if (mag == 0.0) return -std::numeric_limits<double>::infinity();
    sum += fejer_weight(j, J) * std::log(mag);
  }
  return sum;
}

namespace {

double sum_at_theta(double theta, long J) {
  return fejer_sum_at(std::polar(1.0, theta), J);
}

double golden_refine(double lo, double hi, long J, int depth) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = sum_at_theta(x1, J), f2 = sum_at_theta(x2, J);
  for (int i = 0; i < depth; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = sum_at_theta(x2, J);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = sum_at_theta(x1, J);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

FejerSweep verify_fejer_bound(long J, long grid_size, int refine_depth) {
  if (J < 1) throw std::invalid_argument("verify_fejer_bound: J must be >= 1");
  if (grid_size < 4 * J)
    throw std::invalid_argument("verify_fejer_bound: grid_size must be >= 4*J");
  if (refine_depth < 0) throw std::invalid_argument("refine_depth must be >= 0");

  FejerSweep sweep;
  sweep.J = J;
  sweep.grid_size = grid_size;
  sweep.refinement_depth = refine_depth;
  sweep.bound = 0.5 * std::log(J / 2.0 + 1.0) + 0.5;

  const double step = 2.0 * std::numbers::pi / grid_size;
  double best = -std::numeric_limits<double>::infinity();
  long best_i = 0;
  std::vector<double> vals(grid_size);
  for (long i = 0; i < grid_size; ++i) {
    vals[i] = sum_at_theta(i * step, J);
    if (vals[i] > best) {
      best = vals[i];
      best_i = i;
    }
  }
  sweep.sup_theta = best_i * step;
  // refine around the top few local maxima
  std::vector<long> candidates{best_i};
  for (long i = 0; i < grid_size; ++i) {
    long prev = (i + grid_size - 1) % grid_size, next = (i + 1) % grid_size;
    if (vals[i] >= vals[prev] && vals[i] >= vals[next] && vals[i] > best - 0.5)
      candidates.push_back(i);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](long a, long b) { return vals[a] > vals[b]; });
  if (candidates.size() > 16) candidates.resize(16);
  for (long i : candidates) {
    double refined = golden_refine((i - 1) * step, (i + 1) * step, J, refine_depth);
    if (refined > best) {
      best = refined;
      sweep.sup_theta = i * step;
    }
  }
  sweep.numeric_sup = best;
  sweep.margin = sweep.bound - best;
  return sweep;
}

bool verify_gttheta(const std::vector<double>& t_grid,
                    const std::vector<double>& theta_grid) {
  constexpr double kTol = -1e-12;
  for (double theta : theta_grid) {
    double dist = std::abs(std::remainder(theta, 2.0 * std::numbers::pi));
    if (dist < 1e-6)
      throw std::invalid_argument("verify_gttheta: theta too close to a multiple of 2*pi");
    double log_unit = std::log(std::abs(1.0 - std::polar(1.0, theta)));
    for (double t : t_grid) {
      if (t < 0) throw std::invalid_argument("verify_gttheta: t must be >= 0");
      double F = std::log(std::abs(1.0 - std::exp(-t) * std::polar(1.0, theta))) +
                 0.5 * t - log_unit;
      if (F < kTol) return false;
      if (t > 0) {
        // dF/dt = (e^{2t}-1)/((e^t-cos th)^2 + sin^2 th) must be positive
        double et = std::exp(t);
        double dF = (et * et - 1.0) /
                    ((et - std::cos(theta)) * (et - std::cos(theta)) +
                     std::sin(theta) * std::sin(theta));
        if (!(dF > 0.0)) return false;
      }
    }
  }
  return true;
}

bool verify_fejer_chain(long J, double tol) {
  double t = std::log1p(2.0 / J);
  double lhs = -0.5 * std::log1p(-std::exp(-t)) + J * t / 4.0;
  double mid = 0.5 * std::log(J / 2.0 + 1.0) + (J / 4.0) * std::log1p(2.0 / J);
  double bound = 0.5 * std::log(J / 2.0 + 1.0) + 0.5;
  return lhs <= mid + tol && mid <= bound + tol;
}

}  // namespace lehmer
