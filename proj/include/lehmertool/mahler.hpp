#pragma once

#include "lehmertool/intpoly.hpp"

#include <complex>
#include <vector>

namespace lehmer {

struct PrecisionError : std::runtime_error {
  double achieved_radius;
  PrecisionError(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_radius(achieved) {}
};

struct RootEnclosure {
  std::complex<double> center;
  double radius = 0.0;
  int multiplicity = 1;
};

/// Certified disks around the roots of f. Each disk contains exactly
/// `multiplicity` roots counted with multiplicity; disks are pairwise
/// disjoint. Multiplicities come from the exact square-free decomposition.
struct RootEnclosureSet {
  std::vector<RootEnclosure> roots;
  int source_degree = 0;
  double guaranteed_radius = 0.0;
};

struct MahlerValue {
  double log_measure = 0.0;
  double abs_error_bound = 0.0;
  bool cyclotomic_flag = false;
};

/// Exact square-free decomposition over Z (Yun): returns pairs
/// (square-free factor, multiplicity) with f = lc * prod g_i^(m_i).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

RootEnclosureSet isolate_roots(const IntPoly& f, double target_radius);

/// log M(f) = sum over roots of multiplicity * max(log|alpha|, 0), with a
/// certified absolute error bound <= tol. Cyclotomic factors are removed
/// exactly first (they contribute zero) and set cyclotomic_flag.
MahlerValue mahler(const IntPoly& f, double tol = 1e-9);

/// Alias for the height-sum notation sum_{f(alpha)=0} h(alpha).
inline MahlerValue height_of_root_sum(const IntPoly& f, double tol = 1e-9) {
  return mahler(f, tol);
}

}  // namespace lehmer
