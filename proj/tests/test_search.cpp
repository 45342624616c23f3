#include "lehmertool/search.hpp"

#include <doctest.h>

using namespace lehmer;

namespace {

SearchConfig base_cfg(SearchMode mode) {
  SearchConfig cfg;
  cfg.mode = mode;
  cfg.degree = 4;
  cfg.m = 3;
  cfg.n = 5;
  cfg.coeff_bound = 3;
  cfg.count = 40;
  cfg.seed = 12345;
  cfg.threads = 2;
  return cfg;
}

}  // namespace

TEST_CASE("same seed gives byte-identical data sections") {
  for (SearchMode mode : {SearchMode::CongruentToPhi, SearchMode::DivisibleByPhi}) {
    SearchConfig cfg = base_cfg(mode);
    RunRecord a = run_search(cfg);
    cfg.threads = 4;  // thread count must not affect the output
    RunRecord b = run_search(cfg);
    CHECK(a.csv_data() == b.csv_data());
    CHECK(!a.csv_data().empty());

    cfg.seed = 99;
    RunRecord c = run_search(cfg);
    CHECK(a.csv_data() != c.csv_data());
  }
}

TEST_CASE("mode predicates hold on every surviving row") {
  SUBCASE("congruent mode: monic, every coefficient congruent to 1") {
    SearchConfig cfg = base_cfg(SearchMode::CongruentToPhi);
    RunRecord r = run_search(cfg);
    CHECK(!r.rows.empty());
    for (const auto& row : r.rows) {
      CHECK(row.f.degree() == cfg.degree);
      CHECK(row.f.is_monic());
      CHECK(congruent_to_phi(row.f, cfg.m));
      CHECK(!has_cyclotomic_root(row.f));
    }
  }
  SUBCASE("divisible mode: Phi_{n-1} divides f in (Z/m)[X]") {
    SearchConfig cfg = base_cfg(SearchMode::DivisibleByPhi);
    RunRecord r = run_search(cfg);
    CHECK(!r.rows.empty());
    IntPoly ph = phi(static_cast<int>(cfg.n) - 1);
    for (const auto& row : r.rows) {
      CHECK(row.hypothesis_divisible);
      CHECK(divides_mod(ph, row.f, cfg.m));
    }
  }
  SUBCASE("samuels mode: f = X^{D+1} - 1 + (X-1)u + m*B") {
    SearchConfig cfg = base_cfg(SearchMode::Samuels);
    cfg.samuels_u = parse_poly("X^2 - 1");
    RunRecord r = run_search(cfg);
    CHECK(!r.rows.empty());
    IntPoly g = IntPoly::monomial(1, static_cast<int>(cfg.degree) + 1) -
                IntPoly::constant(1) + parse_poly("X - 1") * cfg.samuels_u;
    for (const auto& row : r.rows) {
      CHECK(row.samuels_value.has_value());
      IntPoly diff = row.f - g;
      for (std::size_t i = 0; i < diff.coeffs().size(); ++i)
        CHECK(diff.coeff(i) % cfg.m == 0);
    }
  }
}

TEST_CASE("small sweeps find no counterexamples") {
  for (SearchMode mode : {SearchMode::CongruentToPhi, SearchMode::DivisibleByPhi}) {
    SearchConfig cfg = base_cfg(mode);
    cfg.count = 60;
    RunRecord r = run_search(cfg);
    CHECK(r.counterexamples == 0);
    for (const auto& row : r.rows) CHECK(row.violations.empty());
    if (!r.rows.empty()) {
      REQUIRE(r.min_slack.has_value());
      CHECK(*r.min_slack > -cfg.tol);
    }
  }
}

TEST_CASE("exhaustive enumeration is deterministic and counts candidates") {
  SearchConfig cfg = base_cfg(SearchMode::CongruentToPhi);
  cfg.degree = 2;
  cfg.coeff_bound = 4;
  cfg.m = 3;
  cfg.exhaustive = true;
  RunRecord a = run_search(cfg);
  RunRecord b = run_search(cfg);
  CHECK(a.csv_data() == b.csv_data());
  CHECK(a.generated > 0);
  CHECK(a.rows.size() + a.cyclotomic_skipped <= a.generated);
}

TEST_CASE("an empty survivor set is a valid outcome") {
  // coeff_bound 1 with m = 3 leaves only the all-ones polynomial, which is
  // cyclotomic at degree 2 and therefore skipped.
  SearchConfig cfg = base_cfg(SearchMode::CongruentToPhi);
  cfg.degree = 2;
  cfg.coeff_bound = 1;
  cfg.exhaustive = true;
  RunRecord r = run_search(cfg);
  CHECK(r.rows.empty());
  CHECK(r.cyclotomic_skipped == r.generated);
  CHECK(r.counterexamples == 0);
  CHECK(!r.min_slack.has_value());
  CHECK(!r.csv_data().empty());  // schema comment and header still present
}

TEST_CASE("config validation") {
  SearchConfig cfg = base_cfg(SearchMode::DivisibleByPhi);
  cfg.degree = 2;
  cfg.n = 8;  // deg Phi_7 = 6 > 2
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("mode parsing") {
  IntPoly u;
  CHECK(parse_search_mode("congruent-to-phi", &u) == SearchMode::CongruentToPhi);
  CHECK(parse_search_mode("divisible-by-phi", &u) == SearchMode::DivisibleByPhi);
  CHECK(parse_search_mode("samuels(X^2+1)", &u) == SearchMode::Samuels);
  CHECK(u == parse_poly("X^2+1"));
  CHECK_THROWS_AS(parse_search_mode("bogus", &u), ParseError);
}
