#include <lehmertool.h>

#include <doctest.h>

#include <cstring>
#include <string>

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { lt_string_free(p); }
  std::string s() const { return p ? std::string(p) : std::string(); }
};

bool contains(const std::string& hay, const char* needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("version and polynomial roundtrip") {
  CHECK(lt_version() != nullptr);

  lt_poly* p = nullptr;
  REQUIRE(lt_poly_parse("X^4 - 2*X + 3", &p) == LT_OK);
  CHECK(lt_poly_degree(p) == 4);
  Str r;
  REQUIRE(lt_poly_render(p, &r.p) == LT_OK);
  lt_poly* q = nullptr;
  REQUIRE(lt_poly_parse(r.p, &q) == LT_OK);
  Str r2;
  REQUIRE(lt_poly_render(q, &r2.p) == LT_OK);
  CHECK(r.s() == r2.s());
  lt_poly_free(p);
  lt_poly_free(q);

  lt_poly* bad = nullptr;
  CHECK(lt_poly_parse("X^^2 +", &bad) == LT_ERR_PARSE);
  CHECK(std::strlen(lt_last_error()) > 0);
}

TEST_CASE("check report on the reference polynomial") {
  Str out;
  REQUIRE(lt_check_report("X^2+3*X+3", "2", 3, 1e-9, &out.p) == LT_OK);
  std::string j = out.s();
  CHECK(contains(j, "\"delta\""));
  CHECK(contains(j, "\"exact\":\"2/3\""));
  CHECK(contains(j, "\"resultant\":\"28\""));
  CHECK(contains(j, "\"log_mahler\""));
  CHECK(contains(j, "\"bounds\""));
}

TEST_CASE("cyclotomic input reports the flag without bounds") {
  Str out;
  // X+1 has a root of unity but does not collide with X^3 - 1
  REQUIRE(lt_check_report("X+1", "2", 3, 1e-9, &out.p) == LT_OK);
  std::string j = out.s();
  CHECK(contains(j, "\"cyclotomic\":true"));
  CHECK(!contains(j, "\"bounds\""));
  // X^2+X+1 shares a root with X^3 - 1: Delta is undefined
  Str out2;
  CHECK(lt_check_report("X^2+X+1", "2", 3, 1e-9, &out2.p) == LT_ERR_HYPOTHESIS);
}

TEST_CASE("error code mapping") {
  Str out;
  CHECK(lt_check_report("not a poly !!", "2", 3, 1e-9, &out.p) == LT_ERR_PARSE);
  CHECK(lt_check_report("X^2+3*X+3", "x", 3, 1e-9, &out.p) == LT_ERR_PARSE);
  // bad reduction at every p | m is a hypothesis failure
  CHECK(lt_elliptic_report("0,0,1,-1,0", "0,0", "37", 5, 4, 0.0, 1.0, &out.p) ==
        LT_ERR_HYPOTHESIS);
  // torsion point
  CHECK(lt_elliptic_report("0,0,0,0,1", "2,3", "5", 3, 4, 0.0, 1.0, &out.p) ==
        LT_ERR_HYPOTHESIS);
  // off-curve point is a parse/input error
  CHECK(lt_elliptic_report("0,0,1,-1,0", "2,3", "2", 5, 4, 0.0, 1.0, &out.p) ==
        LT_ERR_PARSE);
}

TEST_CASE("search run populates csv and json") {
  Str csv, json;
  REQUIRE(lt_search_run("congruent-to-phi", 4, "3", 5, 3, 30, 7, 1e-9, 1.0,
                        &csv.p, &json.p) == LT_OK);
  CHECK(contains(csv.s(), "# schema=lehmer-search-csv-1"));
  CHECK(contains(csv.s(), "index,"));
  CHECK(contains(json.s(), "\"counterexamples\":0"));

  Str csv2, json2;
  REQUIRE(lt_search_run("congruent-to-phi", 4, "3", 5, 3, 30, 7, 1e-9, 1.0,
                        &csv2.p, &json2.p) == LT_OK);
  CHECK(csv.s() == csv2.s());

  Str c3, j3;
  CHECK(lt_search_run("bogus-mode", 4, "3", 5, 3, 30, 7, 1e-9, 1.0, &c3.p,
                      &j3.p) == LT_ERR_PARSE);
}

TEST_CASE("fejer verification") {
  Str out;
  REQUIRE(lt_fejer_verify(5, 20000, 20, &out.p) == LT_OK);
  CHECK(contains(out.s(), "\"margin\""));
  CHECK(contains(out.s(), "\"kernel_monotone\":true"));
}

TEST_CASE("elliptic report on a good case") {
  Str out;
  REQUIRE(lt_elliptic_report("0,0,1,-1,0", "0,0", "2", 5, 4, 0.0, 1.0, &out.p) ==
          LT_OK);
  std::string j = out.s();
  CHECK(contains(j, "\"canonical_height\""));
  CHECK(contains(j, "\"delta\""));
  CHECK(contains(j, "\"exact\":\"1/25\""));
  CHECK(contains(j, "\"monotone\":true"));
}

TEST_CASE("bounds table in both formats") {
  Str csv, json;
  REQUIRE(lt_bounds_table(0.5, 6, "3", 4, 1.0, 20, "csv", &csv.p) == LT_OK);
  CHECK(contains(csv.s(), "J,"));
  REQUIRE(lt_bounds_table(0.5, 6, "3", 4, 1.0, 20, "json", &json.p) == LT_OK);
  CHECK(contains(json.s(), "\"thm3\""));
  Str bad;
  CHECK(lt_bounds_table(0.5, 0, "3", 4, 1.0, 20, "json", &bad.p) == LT_ERR_PARSE);
}
