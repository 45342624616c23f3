#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace lehmer {

/// Fejer weight f_j = 1 - j/(J+1), 1 <= j <= J.
double fejer_weight(long j, long J);

/// Exact moment F_k = sum_{j=1}^J j^k f_j for k in {0,1,2}.
mpq_class fejer_moment(int k, long J);

/// sum_{j=1}^J f_j log|1 - z^j| for |z| <= 1. Returns -infinity when some
/// z^j hits 1 (so sup computations skip poles gracefully).
double fejer_sum_at(std::complex<double> z, long J);

struct FejerSweep {
  long J = 0;
  long grid_size = 0;
  double numeric_sup = 0.0;    // certified lower bound on the true sup
  double sup_theta = 0.0;
  double bound = 0.0;          // (1/2) log(J/2+1) + 1/2
  double margin = 0.0;         // bound - numeric_sup
  int refinement_depth = 0;
};

/// Samples |z| = 1 (the max is attained on the boundary by harmonicity),
/// refines the top candidates by golden section.
FejerSweep verify_fejer_bound(long J, long grid_size, int refine_depth);

/// Grid check of F_t(theta) = log|1-e^{-t}e^{i theta}| + t/2 - log|1-e^{i theta}| >= 0,
/// plus spot checks of dF/dt > 0 via its closed form.
bool verify_gttheta(const std::vector<double>& t_grid, const std::vector<double>& theta_grid);

/// The proof's intermediate chain at t = log(1+2/J):
/// -1/2 log(1-e^-t) + Jt/4 <= 1/2 log(J/2+1) + (J/4) log(1+2/J) <= bound.
bool verify_fejer_chain(long J, double tol = 1e-12);

}  // namespace lehmer
