#pragma once

#include "lehmertool/intpoly.hpp"

#include <map>
#include <optional>
#include <string>

namespace lehmer {

enum class LemmaBranch { LargeM, SmallM };

/// RHS of the main theorem:
///   (3/(J+2)) * (delta*log m - (card/n) * (log(J/2+1)+1)/J).
/// May be negative ("no information at this J").
double thm3_bound(double delta_val, const mpz_class& m, long n, long card, long J);

/// Argmax of thm3_bound over 1 <= J <= J_max; ties toward smaller J.
/// Early exit once the RHS has been decreasing for 64 consecutive J.
std::pair<long, double> thm3_optimize(double delta_val, const mpz_class& m, long n,
                                      long card, long J_max = 10000);

/// Two-branch explicit bound: (log m)/264 when log m >= D/(16 n), else
/// log m / ((128 D / (n log m)) * log(16 D / (n log m))).
/// At the boundary both branches are evaluated and the larger reported.
std::pair<double, LemmaBranch> lemma_bound(long D, const mpz_class& m, long n);

/// log m / (185 eps^-1 log(24 eps^-1)), 0 < eps <= 1.
double corollary_bound(const mpz_class& m, double eps);

/// (log log m)/(log m) for m >= 16.
double shparlinski_eps(const mpz_class& m);

/// Reference congruence bound: (D/(D+1)) * C_m with
/// C_2 = (1/4) log 5 and C_m = log(sqrt(m^2+1)/2) for m >= 3.
double bdm_reference(long D, const mpz_class& m);

/// (D/(D+1)) * log(m / L(X^(D+1) - 1 + (X-1) u(X))), deg u <= D-1.
double samuels_bound(long D, const mpz_class& m, const IntPoly& u);

/// Pinned regression guard: (1/57)(1/2 - 4 log(57)/57) >= 1/264.
bool lemma_constant_check();

/// Every bound evaluated for one input, plus measured height sum if given.
struct BoundReport {
  std::map<long, double> thm3_by_J;
  long thm3_best_J = 1;
  double thm3_best = 0.0;
  double lemma_value = 0.0;
  LemmaBranch lemma_branch = LemmaBranch::LargeM;
  double corollary_value = 0.0;
  double bdm_value = 0.0;
  std::optional<double> samuels_value;
  std::optional<double> measured_log_mahler;
  std::optional<double> slack;
  long D = 0, n = 0, card = 0;
  mpz_class m;
  double eps = 1.0;
  double delta_val = 0.0;

  std::string to_json() const;
  static std::string csv_header();
  std::string csv_row(const std::string& poly_text) const;
};

/// Evaluates every applicable bound. `measured` is the height sum when
/// available; slack = measured - max(applicable bounds).
BoundReport evaluate_bounds(double delta_val, long D, const mpz_class& m, long n,
                            long card, double eps,
                            std::optional<double> measured = std::nullopt,
                            long J_max = 10000);

}  // namespace lehmer
