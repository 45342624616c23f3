#pragma once

#include "lehmertool/bounds.hpp"
#include "lehmertool/delta.hpp"
#include "lehmertool/intpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lehmer {

enum class SearchMode { CongruentToPhi, DivisibleByPhi, Samuels };

struct SearchConfig {
  SearchMode mode = SearchMode::CongruentToPhi;
  long degree = 4;        // D; in samuels mode candidates have degree D+1
  mpz_class m = 3;
  long n = 5;
  long coeff_bound = 4;
  bool exhaustive = false;
  long count = 100;       // random samples when not exhaustive
  unsigned long long seed = 0;
  double tol = 1e-9;
  double eps = 1.0;
  long J_max = 10000;
  unsigned threads = 0;   // 0 = hardware concurrency
  IntPoly samuels_u;      // the fixed u(X), deg <= D-1, samuels mode only

  void validate() const;
};

struct SearchRow {
  std::size_t index = 0;
  IntPoly f;
  DeltaReport delta_report;
  BoundReport bounds;
  double log_mahler = 0.0;
  bool hypothesis_divisible = false;  // Phi_{n-1} | f in (Z/mZ)[X]
  std::optional<double> samuels_value;
  std::vector<std::string> violations;  // named bounds exceeding measured + tol
};

struct RunRecord {
  SearchConfig config;
  std::vector<SearchRow> rows;
  std::size_t generated = 0;
  std::size_t cyclotomic_skipped = 0;
  long counterexamples = 0;
  std::optional<double> min_slack;
  std::optional<double> min_log_mahler;
  double wall_seconds = 0.0;

  /// Data section (schema comment + header + rows); byte-stable for a
  /// fixed config and seed.
  std::string csv_data() const;
  std::string to_json() const;
};

/// Generates candidates (seeded-random or exhaustive over the coefficient
/// box), filters by the mode predicate, excludes polynomials with a root
/// of unity, and evaluates Delta, every applicable bound, and the Mahler
/// measure per survivor. Bound violations are recorded, not thrown.
RunRecord run_search(const SearchConfig& cfg);

SearchMode parse_search_mode(const std::string& text, IntPoly* samuels_u);

}  // namespace lehmer
