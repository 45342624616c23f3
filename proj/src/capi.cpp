#include "lehmertool.h"

#include "lehmertool/bounds.hpp"
#include "lehmertool/delta.hpp"
#include "lehmertool/elliptic.hpp"
#include "lehmertool/factorize.hpp"
#include "lehmertool/fejer.hpp"
#include "lehmertool/mahler.hpp"
#include "lehmertool/resultant.hpp"
#include "lehmertool/search.hpp"

#include <cstring>
#include <sstream>
#include <string>

using namespace lehmer;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mpz_class parse_modulus(const char* text) {
  if (!text) throw ParseError("null modulus", 0);
  mpz_class m;
  try {
    m = mpz_class(std::string(text));
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string("bad modulus: ") + text, 0);
  }
  if (m < 2) throw DomainError("modulus must be >= 2");
  return m;
}

// Runs `body`, translating exceptions to status codes.
template <typename F>
lt_status guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return LT_ERR_PARSE;
  } catch (const CyclotomicCollision& e) {
    g_last_error = e.what();
    return LT_ERR_HYPOTHESIS;
  } catch (const BadReductionError& e) {
    g_last_error = e.what();
    return LT_ERR_HYPOTHESIS;
  } catch (const TorsionPointError& e) {
    g_last_error = e.what();
    return LT_ERR_HYPOTHESIS;
  } catch (const OffCurveError& e) {
    g_last_error = e.what();
    return LT_ERR_PARSE;
  } catch (const PrecisionError& e) {
    g_last_error = e.what();
    return LT_ERR_PRECISION;
  } catch (const FactorizationError& e) {
    g_last_error = e.what();
    return LT_ERR_PRECISION;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return LT_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LT_ERR_INTERNAL;
  }
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

struct lt_poly {
  IntPoly f;
};
struct lt_curve {
  Curve e;
};

extern "C" {

const char* lt_version(void) { return "lehmertool 1.0.0"; }

const char* lt_last_error(void) { return g_last_error.c_str(); }

void lt_string_free(char* s) { std::free(s); }

lt_status lt_poly_parse(const char* text, lt_poly** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return LT_ERR_PARSE;
  }
  return guarded([&] {
    *out = new lt_poly{parse_poly(text)};
    return LT_OK;
  });
}

void lt_poly_free(lt_poly* p) { delete p; }

lt_status lt_poly_render(const lt_poly* p, char** out) {
  if (!p || !out) {
    g_last_error = "null argument";
    return LT_ERR_PARSE;
  }
  *out = dup_string(p->f.render());
  return LT_OK;
}

int lt_poly_degree(const lt_poly* p) {
  if (!p || p->f.is_zero()) return -1;
  return p->f.degree();
}

lt_status lt_check_report(const char* poly, const char* modulus, long n,
                          double tol, char** json_out) {
  if (!poly || !modulus || !json_out) {
    g_last_error = "null argument";
    return LT_ERR_PARSE;
  }
  return guarded([&]() -> lt_status {
    mpz_class m = parse_modulus(modulus);
    if (n < 2) throw DomainError("n must be >= 2");
    if (!(tol > 0)) tol = 1e-9;
    IntPoly f = parse_poly(poly);
    if (f.is_zero() || !f.is_monic())
      throw DomainError("polynomial must be monic and nonzero");

    bool cyclotomic = has_cyclotomic_root(f);
    bool div_i = divides_mod(phi(static_cast<int>(n) - 1), f, m);
    bool div_ii = check_resultant_divisibility(f, m, n);
    DeltaReport dr = delta(f, m, n);
    bool thresh = delta_at_least(dr, n - 1, n);

    std::ostringstream os;
    os.precision(17);
    os << "{\"poly\":\"" << json_escape(f.render()) << "\",\"m\":" << m.get_str()
       << ",\"n\":" << n << ",\"cyclotomic\":" << (cyclotomic ? "true" : "false")
       << ",\"divides_mod\":" << (div_i ? "true" : "false")
       << ",\"resultant_divisibility\":" << (div_ii ? "true" : "false")
       << ",\"delta\":" << dr.to_json()
       << ",\"delta_threshold\":" << (thresh ? "true" : "false");
    if (!cyclotomic) {
      MahlerValue mv = mahler(f, tol);
      BoundReport br = evaluate_bounds(dr.numeric, f.degree(), m, n, f.degree(),
                                       1.0, mv.log_measure);
      os << ",\"log_mahler\":" << mv.log_measure
         << ",\"mahler_error\":" << mv.abs_error_bound
         << ",\"bounds\":" << br.to_json();
    }
    os << "}";
    *json_out = dup_string(os.str());
    return LT_OK;
  });
}

lt_status lt_search_run(const char* mode, long degree, const char* modulus,
                        long n, long coeff_bound, long count,
                        unsigned long long seed, double tol, double eps,
                        char** csv_out, char** json_out) {
  if (!mode || !modulus || !csv_out || !json_out) {
    g_last_error = "null argument";
    return LT_ERR_PARSE;
  }
  return guarded([&]() -> lt_status {
    SearchConfig cfg;
    cfg.mode = parse_search_mode(mode, &cfg.samuels_u);
    cfg.degree = degree;
    cfg.m = parse_modulus(modulus);
    cfg.n = n;
    cfg.coeff_bound = coeff_bound;
    cfg.exhaustive = count < 0;
    cfg.count = count < 0 ? 0 : count;
    cfg.seed = seed;
    if (tol > 0) cfg.tol = tol;
    if (eps > 0) cfg.eps = eps;
    RunRecord rec = run_search(cfg);
    *csv_out = dup_string(rec.csv_data());
    *json_out = dup_string(rec.to_json());
    if (rec.counterexamples > 0) {
      g_last_error = std::to_string(rec.counterexamples) +
                     " candidate(s) violated a proved bound";
      return LT_ERR_BOUND;
    }
    return LT_OK;
  });
}

lt_status lt_fejer_verify(long J_max, long grid, int depth, char** json_out) {
  if (!json_out) {
    g_last_error = "null argument";
    return LT_ERR_PARSE;
  }
  return guarded([&]() -> lt_status {
    if (J_max < 1) throw DomainError("J_max must be >= 1");
    double min_margin = 1e300;
    std::ostringstream os;
    os.precision(17);
    os << "{\"sweeps\":[";
    for (long J = 1; J <= J_max; ++J) {
      FejerSweep s = verify_fejer_bound(J, grid, depth);
      if (J > 1) os << ",";
      os << "{\"J\":" << s.J << ",\"sup\":" << s.numeric_sup
         << ",\"bound\":" << s.bound << ",\"margin\":" << s.margin
         << ",\"chain\":" << (verify_fejer_chain(J) ? "true" : "false") << "}";
      min_margin = std::min(min_margin, s.margin);
    }
    std::vector<double> t_grid, theta_grid;
    for (double t = 0.0; t <= 5.0 + 1e-12; t += 0.01) t_grid.push_back(t);
    for (long i = 0; i < 10000; ++i)
      theta_grid.push_back(2.0 * M_PI * (i + 0.5) / 10000.0);
    bool gt = verify_gttheta(t_grid, theta_grid);
    os << "],\"min_margin\":" << min_margin
       << ",\"kernel_monotone\":" << (gt ? "true" : "false") << "}";
    *json_out = dup_string(os.str());
    if (min_margin < -1e-9 || !gt) {
      g_last_error = "Fejer bound violated";
      return LT_ERR_BOUND;
    }
    return LT_OK;
  });
}

lt_status lt_elliptic_report(const char* curve, const char* point,
                             const char* modulus, long n, long j_max,
                             double c_e, double eps, char** json_out) {
  if (!curve || !point || !modulus || !json_out) {
    g_last_error = "null argument";
    return LT_ERR_PARSE;
  }
  return guarded([&]() -> lt_status {
    mpz_class m = parse_modulus(modulus);
    if (n < 1) throw DomainError("n must be >= 1");
    if (j_max < 1) j_max = 1;
    if (!(eps > 0.0) || eps > 1.0) eps = 1.0;
    if (c_e < 0) c_e = 0.0;
    Curve E = Curve::parse(curve);
    Point P = E.parse_point(point);

    CanonicalHeight h = canonical_height(E, P);
    EllipticDeltaReport dr = elliptic_delta(E, {P}, m, n);
    bool mono = elliptic_delta_monotonicity_check(E, {P}, m, n, j_max);
    auto [jstar, bound] = thm5_optimize(dr.value, m, n, 1, c_e);
    bool filt = corollary6_filter(E, P, m, n, eps, dr.value);

    std::ostringstream os;
    os.precision(17);
    os << "{\"curve\":\"" << json_escape(E.str()) << "\""
       << ",\"minimalized\":" << (E.was_minimalized() ? "true" : "false")
       << ",\"discriminant\":" << E.discriminant().get_str()
       << ",\"point\":\"" << json_escape(P.str()) << "\""
       << ",\"canonical_height\":" << h.value
       << ",\"torsion_suspect\":" << (h.torsion_suspect ? "true" : "false")
       << ",\"locals\":[";
    for (std::size_t i = 0; i < h.locals.size(); ++i) {
      const auto& lv = h.locals[i];
      if (i) os << ",";
      os << "{\"place\":\"" << (lv.prime ? lv.prime->get_str() : "inf")
         << "\",\"value\":" << lv.value;
      if (lv.logp_multiple)
        os << ",\"logp_multiple\":\"" << lv.logp_multiple->get_num().get_str()
           << "/" << lv.logp_multiple->get_den().get_str() << "\"";
      os << "}";
    }
    os << "],\"delta\":" << dr.to_json()
       << ",\"monotone_to_j\":" << j_max
       << ",\"monotone\":" << (mono ? "true" : "false")
       << ",\"bound_J\":" << jstar << ",\"bound\":" << bound
       << ",\"c_e\":" << c_e
       << ",\"filter\":" << (filt ? "true" : "false") << "}";
    *json_out = dup_string(os.str());
    return LT_OK;
  });
}

lt_status lt_bounds_table(double delta_val, long D, const char* modulus,
                          long n, double eps, long J_max, const char* format,
                          char** out) {
  if (!modulus || !out) {
    g_last_error = "null argument";
    return LT_ERR_PARSE;
  }
  return guarded([&]() -> lt_status {
    mpz_class m = parse_modulus(modulus);
    if (D < 1 || n < 2) throw DomainError("need D >= 1 and n >= 2");
    if (J_max < 1) J_max = 57;
    bool csv = format && std::string(format) == "csv";
    auto [lemma_v, branch] = lemma_bound(D, m, n);
    double cor = corollary_bound(m, eps);
    double bdm = bdm_reference(D, m);
    std::ostringstream os;
    os.precision(17);
    if (csv) {
      os << "# schema=lehmer-bounds-csv-1\n";
      os << "# delta=" << delta_val << " D=" << D << " m=" << m.get_str()
         << " n=" << n << " eps=" << eps << "\n";
      os << "J,thm3\n";
      for (long J = 1; J <= J_max; ++J)
        os << J << "," << thm3_bound(delta_val, m, n, D, J) << "\n";
      os << "# lemma=" << lemma_v << " corollary=" << cor << " bdm=" << bdm << "\n";
    } else {
      os << "{\"delta\":" << delta_val << ",\"D\":" << D
         << ",\"m\":" << m.get_str() << ",\"n\":" << n << ",\"eps\":" << eps
         << ",\"thm3\":[";
      for (long J = 1; J <= J_max; ++J) {
        if (J > 1) os << ",";
        os << thm3_bound(delta_val, m, n, D, J);
      }
      os << "],\"lemma\":" << lemma_v << ",\"lemma_branch\":\""
         << (branch == LemmaBranch::LargeM ? "large-m" : "small-m")
         << "\",\"corollary\":" << cor << ",\"bdm\":" << bdm << "}";
    }
    *out = dup_string(os.str());
    return LT_OK;
  });
}

}  // extern "C"
