// Command-line front end. Talks to the core exclusively through the
// C API in lehmertool.h.

#include "lehmertool.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int fail(lt_status st) {
  std::cerr << "error: " << lt_last_error() << "\n";
  return static_cast<int>(st);
}

bool emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return true;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return false;
  }
  os << text;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lehmertool: congruence divisibility, Mahler measures, and "
               "height lower bounds for integer polynomials and elliptic curves"};
  app.set_config("--config", "", "key=value config file (command line wins)");
  app.require_subcommand(1);

  std::string poly, modulus = "2", curve, point, mode = "congruent-to-phi";
  std::string out_path, format = "json";
  long n = 2, degree = 4, coeff_bound = 4, count = 100, j_max = 6, J_max = 57;
  long grid = 100000;
  int depth = 30;
  bool exhaustive = false;
  unsigned long long seed = 0;
  double tol = 1e-9, eps = 1.0, c_e = 0.0, delta_val = 0.0;

  auto* check = app.add_subcommand("check", "congruence/Delta/bound report for one polynomial");
  check->add_option("--poly", poly, "polynomial (expression or coefficient list)")->required();
  check->add_option("--modulus", modulus, "modulus m >= 2");
  check->add_option("--n", n, "cyclotomic index n >= 2");
  check->add_option("--tol", tol, "Mahler tolerance");
  check->add_option("--out", out_path, "output file (default stdout)");

  auto* search = app.add_subcommand("search", "coefficient-space sweep with bound assertions");
  search->add_option("--mode", mode, "congruent-to-phi | divisible-by-phi | samuels(u)");
  search->add_option("--degree", degree, "degree D");
  search->add_option("--modulus", modulus, "modulus m >= 2");
  search->add_option("--n", n, "cyclotomic index n >= 2");
  search->add_option("--coeff-bound", coeff_bound, "coefficient box bound B");
  search->add_option("--count", count, "random sample count");
  search->add_flag("--exhaustive", exhaustive, "enumerate the whole coefficient box");
  search->add_option("--seed", seed, "random seed (recorded in output)");
  search->add_option("--tol", tol, "Mahler tolerance");
  search->add_option("--eps", eps, "epsilon for the corollary bound");
  search->add_option("--out", out_path, "CSV output file (JSON summary to stdout)");
  search->add_option("--format", format, "stdout format: csv | json");

  auto* fejer = app.add_subcommand("fejer", "verify the kernel sup bound for J = 1..j-max");
  fejer->add_option("--j-max", J_max, "largest J");
  fejer->add_option("--grid", grid, "boundary grid size");
  fejer->add_option("--depth", depth, "golden-section refinement depth");
  fejer->add_option("--out", out_path, "output file (default stdout)");

  auto* elliptic = app.add_subcommand("elliptic", "canonical height / elliptic Delta report");
  elliptic->add_option("--curve", curve, "a1,a2,a3,a4,a6")->required();
  elliptic->add_option("--point", point, "x,y (exact rationals)")->required();
  elliptic->add_option("--modulus", modulus, "modulus m >= 2");
  elliptic->add_option("--n", n, "multiplier n >= 1");
  elliptic->add_option("--j-max", j_max, "monotonicity check range");
  elliptic->add_option("--c-e", c_e, "archimedean calibration constant C (>= 0)");
  elliptic->add_option("--eps", eps, "epsilon for the point filter");
  elliptic->add_option("--out", out_path, "output file (default stdout)");

  auto* table = app.add_subcommand("bounds-table", "bound values for given delta, D, m, n");
  table->add_option("--delta", delta_val, "Delta value")->required();
  table->add_option("--degree", degree, "degree D")->required();
  table->add_option("--modulus", modulus, "modulus m >= 2");
  table->add_option("--n", n, "cyclotomic index n >= 2");
  table->add_option("--eps", eps, "epsilon for the corollary bound");
  table->add_option("--j-max", J_max, "largest J row");
  table->add_option("--format", format, "csv | json");
  table->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  char* json = nullptr;
  char* csv = nullptr;
  lt_status st = LT_OK;

  if (*check) {
    st = lt_check_report(poly.c_str(), modulus.c_str(), n, tol, &json);
    if (st != LT_OK) return fail(st);
    bool ok = emit(json, out_path);
    lt_string_free(json);
    return ok ? 0 : 1;
  }
  if (*search) {
    st = lt_search_run(mode.c_str(), degree, modulus.c_str(), n, coeff_bound,
                       exhaustive ? -1 : count, seed, tol, eps, &csv, &json);
    if (st != LT_OK && st != LT_ERR_BOUND) return fail(st);
    bool ok = true;
    if (!out_path.empty()) {
      ok = emit(csv, out_path) && emit(json, "");
    } else {
      ok = emit(format == "csv" ? csv : json, "");
    }
    if (st == LT_ERR_BOUND) std::cerr << "error: " << lt_last_error() << "\n";
    lt_string_free(csv);
    lt_string_free(json);
    if (st == LT_ERR_BOUND) return static_cast<int>(st);
    return ok ? 0 : 1;
  }
  if (*fejer) {
    st = lt_fejer_verify(J_max, grid, depth, &json);
    if (st != LT_OK && st != LT_ERR_BOUND) return fail(st);
    bool ok = json && emit(json, out_path);
    lt_string_free(json);
    if (st == LT_ERR_BOUND) return fail(st);
    return ok ? 0 : 1;
  }
  if (*elliptic) {
    st = lt_elliptic_report(curve.c_str(), point.c_str(), modulus.c_str(), n,
                            j_max, c_e, eps, &json);
    if (st != LT_OK) return fail(st);
    bool ok = emit(json, out_path);
    lt_string_free(json);
    return ok ? 0 : 1;
  }
  if (*table) {
    st = lt_bounds_table(delta_val, degree, modulus.c_str(), n, eps, J_max,
                         format.c_str(), &json);
    if (st != LT_OK) return fail(st);
    bool ok = emit(json, out_path);
    lt_string_free(json);
    return ok ? 0 : 1;
  }
  return 2;
}
