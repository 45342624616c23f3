#include "lehmertool/search.hpp"

#include "lehmertool/mahler.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace lehmer {

namespace {

long candidate_degree(const SearchConfig& cfg) {
  return cfg.mode == SearchMode::Samuels ? cfg.degree + 1 : cfg.degree;
}

// Coefficient of X^i adjusted to the residue 1 mod m nearest below base.
mpz_class adjust_to_one(const mpz_class& base, const mpz_class& m) {
  mpz_class r = ((base - 1) % m + m) % m;
  return base - r;
}

// The fixed monic part of the samuels family: X^(D+1) - 1 + (X-1) u(X).
IntPoly samuels_g(long D, const IntPoly& u) {
  return IntPoly::monomial(1, static_cast<int>(D) + 1) - IntPoly::constant(1) +
         (IntPoly::monomial(1, 1) - IntPoly::constant(1)) * u;
}

std::vector<IntPoly> generate_random(const SearchConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> box(-cfg.coeff_bound, cfg.coeff_bound);
  long D = cfg.degree;
  std::vector<IntPoly> out;
  out.reserve(static_cast<std::size_t>(cfg.count));
  for (long i = 0; i < cfg.count; ++i) {
    switch (cfg.mode) {
      case SearchMode::CongruentToPhi: {
        std::vector<mpz_class> c(static_cast<std::size_t>(D) + 1);
        for (long k = 0; k < D; ++k) c[k] = adjust_to_one(mpz_class(box(rng)), cfg.m);
        c[static_cast<std::size_t>(D)] = 1;
        out.emplace_back(std::move(c));
        break;
      }
      case SearchMode::DivisibleByPhi: {
        // f = Phi_{n-1} * A + m * B, A monic of degree D-(n-1), deg B < D.
        long dA = D - (cfg.n - 1);
        std::vector<mpz_class> ac(static_cast<std::size_t>(dA) + 1);
        for (long k = 0; k < dA; ++k) ac[k] = box(rng);
        ac[static_cast<std::size_t>(dA)] = 1;
        std::vector<mpz_class> bc(static_cast<std::size_t>(D));
        for (long k = 0; k < D; ++k) bc[k] = box(rng);
        out.push_back(phi(static_cast<int>(cfg.n) - 1) * IntPoly(std::move(ac)) +
                      IntPoly(std::move(bc)).mul_scalar(cfg.m));
        break;
      }
      case SearchMode::Samuels: {
        // f = g + m * B with deg B <= D, g monic of degree D+1.
        std::vector<mpz_class> bc(static_cast<std::size_t>(D) + 1);
        for (long k = 0; k <= D; ++k) bc[k] = box(rng);
        out.push_back(samuels_g(D, cfg.samuels_u) +
                      IntPoly(std::move(bc)).mul_scalar(cfg.m));
        break;
      }
    }
  }
  return out;
}

// Odometer over `slots` positions, each taking any value from `values`.
std::vector<IntPoly> generate_exhaustive(const SearchConfig& cfg) {
  long D = cfg.degree;
  std::vector<std::vector<mpz_class>> slot_values;
  auto full_box = [&] {
    std::vector<mpz_class> v;
    for (long c = -cfg.coeff_bound; c <= cfg.coeff_bound; ++c) v.emplace_back(c);
    return v;
  };
  std::size_t slots = 0;
  if (cfg.mode == SearchMode::CongruentToPhi) {
    std::vector<mpz_class> v;
    for (long c = -cfg.coeff_bound; c <= cfg.coeff_bound; ++c)
      if (((mpz_class(c) - 1) % cfg.m) == 0) v.emplace_back(c);
    slots = static_cast<std::size_t>(D);
    slot_values.assign(slots, v);
  } else if (cfg.mode == SearchMode::DivisibleByPhi) {
    // Enumerates the monic cofactor A only (the m*B part is 0).
    slots = static_cast<std::size_t>(D - (cfg.n - 1));
    slot_values.assign(slots, full_box());
  } else {
    // Enumerates B in f = g + m*B.
    slots = static_cast<std::size_t>(D) + 1;
    slot_values.assign(slots, full_box());
  }
  for (const auto& v : slot_values)
    if (v.empty()) return {};

  std::vector<IntPoly> out;
  std::vector<std::size_t> idx(slots, 0);
  while (true) {
    std::vector<mpz_class> c(slots);
    for (std::size_t k = 0; k < slots; ++k) c[k] = slot_values[k][idx[k]];
    switch (cfg.mode) {
      case SearchMode::CongruentToPhi: {
        c.push_back(1);
        out.emplace_back(std::move(c));
        break;
      }
      case SearchMode::DivisibleByPhi: {
        c.push_back(1);
        out.push_back(phi(static_cast<int>(cfg.n) - 1) * IntPoly(std::move(c)));
        break;
      }
      case SearchMode::Samuels: {
        out.push_back(samuels_g(D, cfg.samuels_u) + IntPoly(std::move(c)).mul_scalar(cfg.m));
        break;
      }
    }
    std::size_t k = 0;
    while (k < slots && ++idx[k] == slot_values[k].size()) idx[k++] = 0;
    if (k == slots) break;
  }
  return out;
}

}  // namespace

void SearchConfig::validate() const {
  if (degree < 1) throw DomainError("degree must be >= 1");
  if (m < 2) throw DomainError("modulus must be >= 2");
  if (n < 2) throw DomainError("n must be >= 2");
  if (coeff_bound < 1) throw DomainError("coefficient bound must be >= 1");
  if (!exhaustive && count < 0) throw DomainError("count must be >= 0");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!(eps > 0.0) || eps > 1.0) throw DomainError("eps must be in (0,1]");
  if (mode == SearchMode::DivisibleByPhi && degree < n - 1)
    throw DomainError("divisible-by-phi needs degree >= n-1");
  if (mode == SearchMode::Samuels && !samuels_u.is_zero() &&
      samuels_u.degree() > degree - 1)
    throw DomainError("samuels u must have degree <= D-1");
}

SearchMode parse_search_mode(const std::string& text, IntPoly* samuels_u) {
  if (text == "congruent-to-phi") return SearchMode::CongruentToPhi;
  if (text == "divisible-by-phi") return SearchMode::DivisibleByPhi;
  if (text.rfind("samuels", 0) == 0) {
    std::string rest = text.substr(7);
    if (!rest.empty()) {
      if (rest.front() == '(' && rest.back() == ')')
        rest = rest.substr(1, rest.size() - 2);
      else if (rest.front() == ':')
        rest = rest.substr(1);
      else
        throw ParseError("expected samuels(u) or samuels:u", 7);
    }
    if (samuels_u) *samuels_u = rest.empty() ? IntPoly() : parse_poly(rest);
    return SearchMode::Samuels;
  }
  throw ParseError("unknown search mode: " + text, 0);
}

RunRecord run_search(const SearchConfig& cfg) {
  cfg.validate();
  auto t0 = std::chrono::steady_clock::now();

  std::vector<IntPoly> candidates =
      cfg.exhaustive ? generate_exhaustive(cfg) : generate_random(cfg);

  RunRecord rec;
  rec.config = cfg;
  rec.generated = candidates.size();

  struct Slot {
    bool skipped = false;
    SearchRow row;
  };
  std::vector<Slot> slots(candidates.size());

  unsigned nthreads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  nthreads = std::min<unsigned>(nthreads, std::max<std::size_t>(candidates.size(), 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= candidates.size()) return;
      const IntPoly& f = candidates[i];
      Slot& s = slots[i];
      if (has_cyclotomic_root(f)) {
        s.skipped = true;
        continue;
      }
      SearchRow& row = s.row;
      row.index = i;
      row.f = f;
      long D = f.degree();
      row.delta_report = delta(f, cfg.m, cfg.n);
      MahlerValue mv = mahler(f, cfg.tol);
      row.log_mahler = mv.log_measure;
      row.hypothesis_divisible =
          divides_mod(phi(static_cast<int>(cfg.n) - 1), f, cfg.m);
      row.bounds = evaluate_bounds(row.delta_report.numeric, D, cfg.m, cfg.n, D,
                                   cfg.eps, row.log_mahler, cfg.J_max);
      if (cfg.mode == SearchMode::Samuels) {
        row.samuels_value = samuels_bound(cfg.degree, cfg.m, cfg.samuels_u);
        row.bounds.samuels_value = row.samuels_value;
      }

      double measured = row.log_mahler + cfg.tol;
      if (row.bounds.thm3_best > 0 && measured < row.bounds.thm3_best)
        row.violations.push_back("thm3");
      if (row.hypothesis_divisible) {
        if (measured < row.bounds.lemma_value) row.violations.push_back("lemma");
        if (cfg.n >= std::max<double>(cfg.eps * D, 2.0) &&
            measured < row.bounds.corollary_value)
          row.violations.push_back("corollary");
      }
      if (cfg.mode == SearchMode::CongruentToPhi &&
          congruent_to_phi(f, cfg.m) && measured < row.bounds.bdm_value)
        row.violations.push_back("bdm");
      if (row.samuels_value && measured < *row.samuels_value)
        row.violations.push_back("samuels");
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (auto& s : slots) {
    if (s.skipped) {
      ++rec.cyclotomic_skipped;
      continue;
    }
    if (!s.row.violations.empty()) ++rec.counterexamples;
    if (s.row.bounds.slack)
      rec.min_slack = rec.min_slack ? std::min(*rec.min_slack, *s.row.bounds.slack)
                                    : *s.row.bounds.slack;
    rec.min_log_mahler = rec.min_log_mahler
                             ? std::min(*rec.min_log_mahler, s.row.log_mahler)
                             : s.row.log_mahler;
    rec.rows.push_back(std::move(s.row));
  }

  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

namespace {
const char* mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::CongruentToPhi: return "congruent-to-phi";
    case SearchMode::DivisibleByPhi: return "divisible-by-phi";
    case SearchMode::Samuels: return "samuels";
  }
  return "?";
}
}  // namespace

std::string RunRecord::csv_data() const {
  std::ostringstream os;
  os.precision(17);
  os << "# schema=lehmer-search-csv-1\n";
  os << "# mode=" << mode_name(config.mode) << " degree=" << config.degree
     << " m=" << config.m.get_str() << " n=" << config.n
     << " coeff_bound=" << config.coeff_bound
     << " exhaustive=" << (config.exhaustive ? 1 : 0) << " count=" << config.count
     << " seed=" << config.seed << " tol=" << config.tol << " eps=" << config.eps;
  if (config.mode == SearchMode::Samuels)
    os << " u=\"" << config.samuels_u.render() << "\"";
  os << "\n";
  os << "index," << BoundReport::csv_header() << ",violations\n";
  for (const auto& r : rows) {
    os << r.index << "," << r.bounds.csv_row(r.f.render()) << ",";
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
      if (i) os << ";";
      os << r.violations[i];
    }
    os << "\n";
  }
  return os.str();
}

std::string RunRecord::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"config\":{\"mode\":\"" << mode_name(config.mode) << "\",\"degree\":"
     << config.degree << ",\"m\":" << config.m.get_str() << ",\"n\":" << config.n
     << ",\"coeff_bound\":" << config.coeff_bound
     << ",\"exhaustive\":" << (config.exhaustive ? "true" : "false")
     << ",\"count\":" << config.count << ",\"seed\":" << config.seed
     << ",\"tol\":" << config.tol << ",\"eps\":" << config.eps;
  if (config.mode == SearchMode::Samuels)
    os << ",\"u\":\"" << config.samuels_u.render() << "\"";
  os << "},\"generated\":" << generated
     << ",\"cyclotomic_skipped\":" << cyclotomic_skipped
     << ",\"rows\":" << rows.size()
     << ",\"counterexamples\":" << counterexamples;
  if (min_slack) os << ",\"min_slack\":" << *min_slack;
  if (min_log_mahler) os << ",\"min_log_mahler\":" << *min_log_mahler;
  os << ",\"wall_seconds\":" << wall_seconds << ",\"data\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << "{\"index\":" << rows[i].index << ",\"poly\":\"" << rows[i].f.render()
       << "\",\"bounds\":" << rows[i].bounds.to_json() << ",\"violations\":[";
    for (std::size_t v = 0; v < rows[i].violations.size(); ++v) {
      if (v) os << ",";
      os << "\"" << rows[i].violations[v] << "\"";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

}  // namespace lehmer
