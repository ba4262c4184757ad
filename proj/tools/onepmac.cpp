// onepmac: command-line front end for the single-particle MAC toolkit.
//
// Exit codes: 0 success, 1 claim not certified (e.g. not a member, no
// witness), 2 input error or guard violation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "onepmac/coherence.hpp"
#include "onepmac/errors.hpp"
#include "onepmac/interference.hpp"
#include "onepmac/io.hpp"
#include "onepmac/polytope.hpp"
#include "onepmac/strategies.hpp"
#include "onepmac/vertices.hpp"
#include "onepmac/violation.hpp"

using namespace onepmac;

namespace {

constexpr int kOk = 0;
constexpr int kNotCertified = 1;
constexpr int kInputError = 2;
constexpr int kDeskScaleParties = 4;

struct RunConfig {
  std::string format = "text";
  std::string output;
  double tol = 0.0;  // 0 keeps each module's default
  int grid = 200;
  std::uint64_t seed = 1;
  bool force = false;
};

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

std::string list_1based(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k] + 1);
  return s;
}

std::vector<int> parse_subset(const std::string& text, int N) {
  std::vector<int> S;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int p = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if (p < 1 || p > N)
        throw IndexOutOfRange("party " + std::to_string(p) + " is outside 1.." + std::to_string(N));
      S.push_back(p - 1);
    } catch (const std::logic_error&) {
      throw ParseError("subset '" + text + "': expected comma-separated party numbers like 1,2");
    }
  }
  if (S.empty()) throw ParseError("subset is empty");
  return S;
}

void guard_parties(int N, const RunConfig& cfg) {
  if (N > kDeskScaleParties && !cfg.force)
    throw InvalidDim("N = " + std::to_string(N) + " exceeds the desk-scale guard N <= " +
                     std::to_string(kDeskScaleParties) + "; pass --force to override");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ParseError(cfg.output + ": cannot write output file");
  out << text;
}

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_census(int N, int K, const RunConfig& cfg) {
  guard_parties(N, cfg);
  const CensusReport r = facet_census(AlphabetSpec::binary(N), K);
  std::ostringstream os;
  if (cfg.format == "json") {
    json j = to_json(r);
    j["N"] = N;
    j["K"] = K;
    j["polytope"] = to_json(r.polytope);
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "representative,orbit_size,is_positivity\n";
    const AlphabetSpec alph = AlphabetSpec::binary(N);
    for (const auto& c : r.classes) {
      const LinearInequality ineq(alph, c.representative.normal, c.representative.offset);
      os << csv_escape(ineq.describe()) << "," << c.orbit.size() << ","
         << (c.positivity ? "true" : "false") << "\n";
    }
  } else {
    os << r.vertex_count << " vertices, dim " << r.dim << ", " << r.facet_count << " facets, "
       << r.positivity_count << " positivity, " << r.nontrivial_classes() << " nontrivial classes";
    if (r.nontrivial_classes() == 0) os << " (positivity-only facets)";
    os << "\n";
    const AlphabetSpec alph = AlphabetSpec::binary(N);
    for (const auto& c : r.classes) {
      const LinearInequality ineq(alph, c.representative.normal, c.representative.offset);
      os << "  [" << (c.positivity ? "positivity" : "nontrivial") << ", orbit " << c.orbit.size()
         << "] " << ineq.describe() << "\n";
    }
  }
  emit(cfg, os.str());
  return kOk;
}

int cmd_violate(const std::vector<int>& Ns, const RunConfig& cfg) {
  std::vector<ViolationReport> reports;
  for (int N : Ns) {
    if (N < 2) throw InvalidDim("violate needs N >= 2");
    reports.push_back(violation_report(N));
  }
  std::ostringstream os;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    os << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "N,delta,phi,trace_norm,lhs,bound\n";
    for (const auto& r : reports)
      os << r.N << "," << fmt(r.delta, 12) << "," << fmt(r.phases[0], 12) << ","
         << fmt(r.trace_norm, 12) << "," << fmt(r.lhs, 12) << "," << r.N << "\n";
  } else {
    os << "N   delta    phi*      ||M||_1   LHS       bound\n";
    for (const auto& r : reports) {
      char line[160];
      std::snprintf(line, sizeof(line), "%-3d %-8s %-9s %-9s %-9s %d\n", r.N,
                    fmt(r.delta).c_str(), fmt(r.phases[0], 6).c_str(),
                    fmt(r.trace_norm, 6).c_str(), fmt(r.lhs, 6).c_str(), r.N);
      os << line;
    }
    if (reports.size() == 1) {
      const auto& r = reports[0];
      os << "delta=" << fmt(r.delta) << " at phi*=" << fmt(r.phases[0], 6) << "\n"
         << "measurement: " << r.optimal_measurement << "\n";
    }
  }
  emit(cfg, os.str());
  return kOk;
}

int cmd_membership(const std::string& path, int N, int K, const RunConfig& cfg) {
  guard_parties(N, cfg);
  const json j = read_json_file(path);
  const Mac mac = mac_from_json(j);
  if (mac.parties() != N)
    throw ShapeMismatch("MAC has " + std::to_string(mac.parties()) + " parties but N = " +
                        std::to_string(N));
  const RationalVector point = rational_probs_from_json(j);
  std::vector<RationalVector> vertices;
  for (const auto& v : enumerate_vertices(mac.alphabets(), K))
    vertices.push_back(to_rational_vector(v.probs()));
  const MembershipResult r = lp_membership(point, vertices);
  std::ostringstream os;
  if (cfg.format == "json") {
    json out = to_json(r);
    out["N"] = N;
    out["K"] = K;
    os << out.dump(2) << "\n";
  } else {
    os << (r.member ? "true" : "false") << "\n";
    if (r.member) {
      os << "convex weights on " << vertices.size() << " vertices:";
      for (std::size_t k = 0; k < r.weights.size(); ++k)
        if (sgn(r.weights[k]) != 0) os << " v" << k << "=" << to_string(r.weights[k]);
      os << "\n";
    } else {
      const LinearInequality sep(mac.alphabets(), r.separator.normal, r.separator.offset);
      os << "separating functional: " << sep.describe() << "\n"
         << "value at point: " << to_string(eval_inequality(sep, point)) << "\n";
    }
  }
  emit(cfg, os.str());
  return r.member ? kOk : kNotCertified;
}

int cmd_witness(const std::string& path, int K, const RunConfig& cfg) {
  const OneParticleState state = state_from_json(read_json_file(path));
  const double crk_tol = cfg.tol > 0 ? cfg.tol : 1e-9;
  const CoherenceReport r = coherence_report(state, K, crk_tol);
  const double trace_norm = 2.0 * r.lhs - (r.K + 2.0);
  std::ostringstream os;
  if (cfg.format == "json") {
    json out = to_json(r);
    out["trace_norm"] = trace_norm;
    out["crk_tol"] = crk_tol;
    out["snap_tol"] = 1e-12;
    os << out.dump(2) << "\n";
  } else {
    if (r.witness_level > 0)
      os << r.witness_level << "-level coherence certified, δ=" << fmt(r.fingerprint_delta) << "\n";
    else
      os << "no " << r.K + 1 << "-level coherence certified, δ=" << fmt(r.fingerprint_delta) << "\n";
    os << "state fingerprint: " << r.state_hash << "\n"
       << "dimension: " << r.dim << "\n"
       << "coherence rank: " << (r.crk ? std::to_string(*r.crk) : std::string("n/a (mixed)")) << "\n"
       << "tolerances: crk " << crk_tol << ", delta snap 1e-12\n"
       << "witness level tested: " << r.K + 1 << "\n"
       << "trace norm ||M'||_1: " << fmt(trace_norm, 10) << "\n"
       << "delta': " << fmt(r.fingerprint_delta, 10) << "\n"
       << "fingerprinting LHS: " << fmt(r.lhs, 10) << " (bound " << fmt(r.bound, 1) << ")\n";
    if (r.comparison_trace_norm)
      os << "comparison matrix ||M~||_1: " << fmt(*r.comparison_trace_norm, 10) << "\n";
    os << "certified level: " << r.witness_level << "\n";
  }
  emit(cfg, os.str());
  return r.witness_level > 0 ? kOk : kNotCertified;
}

int cmd_interference(const std::string& path, const std::string& subset, const RunConfig& cfg) {
  const Mac mac = mac_from_json(read_json_file(path));
  const std::vector<int> S = parse_subset(subset, mac.parties());
  const double value = max_interference_IK(mac, S);
  const double tol = cfg.tol > 0 ? cfg.tol : Tolerances{}.interference;
  const bool separable = is_separable(mac, {Tolerances{}.validation, tol});
  std::ostringstream os;
  if (cfg.format == "json") {
    json out{{"S", list_1based(S)},
             {"order", S.size()},
             {"max_interference", value},
             {"vanishes", value < tol},
             {"separable", separable}};
    if (S.size() == 2) out["I2"] = interference_I2(mac, S[0], S[1]);
    os << out.dump(2) << "\n";
  } else {
    os << "I_" << S.size() << "(" << list_1based(S) << ") = " << fmt(value, 10)
       << (value < tol ? " (vanishes)" : "") << "\n"
       << "separable: " << (separable ? "true" : "false") << "\n";
  }
  emit(cfg, os.str());
  return kOk;
}

OneParticleState counterexample_state() {
  using c = cplx;
  CMatrix rho(3, 3);
  rho << c(1.0 / 8), c(1.0 / 12), c(1.0 / 6),
         c(1.0 / 12), c(1.0 / 8), c(0, 1.0 / 8),
         c(1.0 / 6), c(0, -1.0 / 8), c(3.0 / 4);
  return OneParticleState(rho);
}

int cmd_scan(const std::string& state_path, const RunConfig& cfg) {
  const OneParticleState state =
      state_path.empty() ? counterexample_state() : state_from_json(read_json_file(state_path));
  const ComparisonTest ct = comparison_matrix_test(state);
  const PhaseScanResult scan = phase_scan_witness(state, cfg.grid);
  constexpr double kMargin = 1e-6;
  bool below = true;
  for (int q = 0; q < 3; ++q) below = below && scan.maxima[q] <= scan.bounds[q] + kMargin;
  std::ostringstream os;
  if (cfg.format == "json") {
    json out = to_json(scan);
    out["comparison_trace_norm"] = ct.trace_norm;
    out["coherent"] = ct.coherent;
    out["no_phase_violation"] = below;
    out["state_hash"] = state_fingerprint(state);
    os << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "class,max,bound,phi1,phi2,phi3\n";
    for (int q = 0; q < 3; ++q)
      os << q + 1 << "," << fmt(scan.maxima[q], 10) << "," << fmt(scan.bounds[q], 1) << ","
         << fmt(scan.argmax[q][0], 6) << "," << fmt(scan.argmax[q][1], 6) << ","
         << fmt(scan.argmax[q][2], 6) << "\n";
  } else {
    os << "comparison matrix ||M~||_1 = " << fmt(ct.trace_norm, 10)
       << (ct.coherent ? " > 1 (3-level coherent)" : " <= 1") << "\n"
       << "phase-scan maxima (grid " << scan.resolution << "^3 + golden refinement):\n";
    for (int q = 0; q < 3; ++q)
      os << "  class " << q + 1 << ": " << fmt(scan.maxima[q], 7) << " (bound "
         << fmt(scan.bounds[q], 0) << ")\n";
    os << (below ? "no phase-encoding violation" : "phase-encoding violation found") << "\n";
  }
  emit(cfg, os.str());
  return below ? kOk : kNotCertified;
}

int cmd_odd_interference(int N, int K, int trials, const RunConfig& cfg) {
  guard_parties(N, cfg);
  Rng rng(cfg.seed);
  const OneParticleState state = random_mixed_state(N, N, rng);
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-9;
  const OddInterferenceCheck r = verify_odd_interference_vanishes(state, K, trials, cfg.seed, tol);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << json{{"N", N}, {"K", K}, {"trials", trials}, {"seed", cfg.seed},
               {"order", 2 * K + 1}, {"max_abs", r.max_abs}, {"vanishes", r.vanishes}}
              .dump(2)
       << "\n";
  } else {
    os << "max |I_" << 2 * K + 1 << "| over " << trials << " random (" << N << "," << K
       << ") encodings: " << r.max_abs << (r.vanishes ? " (vanishes)" : "") << "\n";
  }
  emit(cfg, os.str());
  return r.vanishes ? kOk : kNotCertified;
}

int cmd_separation(int trials, double eps, const RunConfig& cfg) {
  const SeparationEvidence ev = separation_harness(trials, eps, cfg.seed);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << json{{"trials", trials}, {"eps", eps}, {"seed", cfg.seed}, {"samples", ev.samples},
               {"best_p00", ev.best_p00}, {"best_score", ev.best_score}}
              .dump(2)
       << "\n";
  } else {
    os << "evidence only: " << ev.samples << " sampled (2,1) quantum strategies\n"
       << "best p(0|00) with other p(0|a) <= " << eps << ": " << fmt(ev.best_p00, 6) << "\n"
       << "best p(0|00) - max other: " << fmt(ev.best_score, 6) << "\n";
  }
  emit(cfg, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-particle multiple-access channel toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", cfg.output, "Write the report to this file");
  app.add_option("--tol", cfg.tol, "Tolerance override (crk / interference)")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", cfg.grid, "Phase grid resolution per period")
      ->check(CLI::Range(8, 100000))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "RNG seed for Monte-Carlo harnesses")->capture_default_str();
  app.add_flag("--force", cfg.force, "Override the desk-scale guard N <= 4");
  app.fallthrough();

  int N = 0, K = 0, trials = 200;
  double eps = 0.05;
  std::vector<int> Ns;
  std::string path, subset;

  auto* census = app.add_subcommand("census", "Vertices, dimension and facet classes of C_{N,K}");
  census->add_option("N", N)->required()->check(CLI::PositiveNumber);
  census->add_option("K", K)->required()->check(CLI::PositiveNumber);

  auto* violate = app.add_subcommand("violate", "Optimal fingerprinting violation for N paths");
  violate->add_option("N", Ns)->required();

  auto* membership = app.add_subcommand("membership", "Exact LP membership of a MAC in C_{N,K}");
  membership->add_option("mac", path)->required()->check(CLI::ExistingFile);
  membership->add_option("N", N)->required()->check(CLI::PositiveNumber);
  membership->add_option("K", K)->required()->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "Multi-level coherence certificate for a state");
  witness->add_option("state", path)->required()->check(CLI::ExistingFile);
  witness->add_option("K", K)->required()->check(CLI::PositiveNumber);

  auto* interference = app.add_subcommand("interference", "Interference of a party subset");
  interference->add_option("mac", path)->required()->check(CLI::ExistingFile);
  interference->add_option("S", subset, "1-based parties, e.g. 1,2")->required();

  auto* scan = app.add_subcommand("scan-counterexample",
                                  "Comparison test and phase scan of a three-level state");
  scan->add_option("--state", path, "State JSON (default: the built-in counterexample)")
      ->check(CLI::ExistingFile);

  auto* odd = app.add_subcommand("odd-interference",
                                 "Monte-Carlo check that order-(2K+1) interference vanishes");
  odd->add_option("N", N)->required()->check(CLI::PositiveNumber);
  odd->add_option("K", K)->required()->check(CLI::PositiveNumber);
  odd->add_option("--trials", trials)->capture_default_str()->check(CLI::PositiveNumber);

  auto* separation = app.add_subcommand("separation",
                                        "Evidence-only search near the (2,1) AND vertex");
  separation->add_option("--trials", trials)->capture_default_str()->check(CLI::PositiveNumber);
  separation->add_option("--eps", eps)->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*census) return cmd_census(N, K, cfg);
    if (*violate) return cmd_violate(Ns, cfg);
    if (*membership) return cmd_membership(path, N, K, cfg);
    if (*witness) return cmd_witness(path, K, cfg);
    if (*interference) return cmd_interference(path, subset, cfg);
    if (*scan) return cmd_scan(path, cfg);
    if (*odd) return cmd_odd_interference(N, K, trials, cfg);
    if (*separation) return cmd_separation(trials, eps, cfg);
  } catch (const onepmac::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
