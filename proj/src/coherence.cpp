#include "onepmac/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <numbers>

#include "onepmac/errors.hpp"
#include "onepmac/inequality.hpp"
#include "onepmac/parallel.hpp"
#include "onepmac/violation.hpp"

namespace onepmac {

namespace {

constexpr double kPi = std::numbers::pi;

// Support paths padded with the lowest-index empty paths up to K+1.
std::vector<int> witness_parties(const std::vector<double>& weights, int K, double tol) {
  std::vector<int> chosen, rest;
  for (int k = 0; k < static_cast<int>(weights.size()); ++k)
    (weights[k] > tol ? chosen : rest).push_back(k);
  for (int k : rest) {
    if (static_cast<int>(chosen.size()) >= K + 1) break;
    chosen.push_back(k);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// One C_{3,2} inequality in Helstrom form: X = sum sign * sigma_a.
struct ScanTerm {
  double sign;
  int a[3];
};

struct ScanIneq {
  std::vector<ScanTerm> terms;
  double base = 0.0;
};

std::vector<ScanIneq> scan_inequalities() {
  std::vector<ScanIneq> out;
  for (const auto& ineq : c32_nontrivial_inequalities()) {
    ScanIneq s;
    const auto& alph = ineq.alphabets;
    for (std::size_t a = 0; a < alph.num_inputs(); ++a)
      for (int b = 0; b < 2; ++b) {
        const Rational& c = ineq.coeffs[alph.transition_index(b, a)];
        if (sgn(c) == 0) continue;
        const auto in = alph.unflatten(a);
        const double cd = c.get_d();
        s.terms.push_back({b == 0 ? cd : -cd, {in[0], in[1], in[2]}});
        if (b == 1) s.base += cd;
      }
    out.push_back(std::move(s));
  }
  return out;
}

double scan_value(const ScanIneq& q, const CMatrix& rho, const cplx e[3]) {
  cplx X[9];
  double dsum = 0.0;
  cplx s01 = 0.0, s02 = 0.0, s12 = 0.0;
  for (const auto& t : q.terms) {
    dsum += t.sign;
    const cplx p0 = t.a[0] ? e[0] : cplx(1.0), p1 = t.a[1] ? e[1] : cplx(1.0),
               p2 = t.a[2] ? e[2] : cplx(1.0);
    s01 += t.sign * p0 * std::conj(p1);
    s02 += t.sign * p0 * std::conj(p2);
    s12 += t.sign * p1 * std::conj(p2);
  }
  X[0] = rho(0, 0).real() * dsum;
  X[4] = rho(1, 1).real() * dsum;
  X[8] = rho(2, 2).real() * dsum;
  X[1] = rho(0, 1) * s01;
  X[2] = rho(0, 2) * s02;
  X[5] = rho(1, 2) * s12;
  X[3] = std::conj(X[1]);
  X[6] = std::conj(X[2]);
  X[7] = std::conj(X[5]);
  double pos = 0.0;
  for (double x : hermitian_eigenvalues_3x3(X)) pos += std::max(0.0, x);
  return q.base + pos;
}

double scan_at(const ScanIneq& q, const CMatrix& rho, const std::array<double, 3>& phi) {
  const cplx e[3] = {std::polar(1.0, phi[0]), std::polar(1.0, phi[1]), std::polar(1.0, phi[2])};
  return scan_value(q, rho, e);
}

struct Best {
  double value = -1.0;
  std::array<int, 3> idx{};
};

bool better(double v, const std::array<int, 3>& idx, const Best& b) {
  if (v != b.value) return v > b.value;
  return idx < b.idx;
}

}  // namespace

int coherence_rank(const CVector& psi, double tol, double norm_tol) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > norm_tol)
    throw NotNormalized("state vector has norm " + std::to_string(n));
  int r = 0;
  for (Eigen::Index k = 0; k < psi.size(); ++k) r += std::abs(psi(k)) > tol;
  return r;
}

Eigen::MatrixXd comparison_matrix(const OneParticleState& state) {
  const int n = state.dim();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = i == j ? std::abs(state(i, i)) : -std::abs(state(i, j));
  return m;
}

ComparisonTest comparison_matrix_test(const OneParticleState& state, double margin) {
  if (state.dim() != 3)
    throw UnsupportedDim("comparison-matrix test is defined for three-level states (dim " +
                         std::to_string(state.dim()) + ")");
  const double tn = trace_norm(comparison_matrix(state).cast<cplx>());
  return {tn, tn > 1.0 + margin};
}

WitnessReport pure_state_witness(const CVector& psi, int K, double crk_tol, double snap_tol) {
  const int N = static_cast<int>(psi.size());
  if (K < 1 || K + 1 > N) throw InvalidDim("witness needs 1 <= K and K+1 <= dim");
  WitnessReport r;
  r.K = K;
  r.crk = coherence_rank(psi, crk_tol);
  if (r.crk > K + 1)
    throw RankMismatch("coherence rank " + std::to_string(r.crk) + " exceeds K+1 = " +
                       std::to_string(K + 1) + "; choose K >= crk - 1");
  std::vector<double> amp(N);
  for (int k = 0; k < N; ++k) amp[k] = std::abs(psi(k));
  r.parties = witness_parties(amp, K, crk_tol);
  r.phases = optimal_phases(K + 1);
  const CVector u = psi / psi.norm();
  const CMatrix m = fingerprint_matrix(u * u.adjoint(), r.parties, r.phases);
  const auto ev = hermitian_eigenvalues(m);
  r.trace_norm = 0.0;
  for (double x : ev) r.trace_norm += std::abs(x);
  r.delta = std::max(0.0, -ev.front());
  if (r.delta <= snap_tol) r.delta = 0.0;
  r.lhs = 0.5 * (K + 2.0 + r.trace_norm);
  r.certified = r.delta > 0.0;
  return r;
}

double ensemble_game_threshold(int K) { return (K + 1.0) / (K + 2.0); }

double ensemble_game_value(const OneParticleState& state, int K) {
  const int N = state.dim();
  if (K < 1 || K + 1 > N) throw InvalidDim("ensemble game needs 1 <= K and K+1 <= dim");
  std::vector<int> order(N);
  for (int k = 0; k < N; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return state(a, a).real() > state(b, b).real(); });
  std::vector<int> parties(order.begin(), order.begin() + K + 1);
  std::sort(parties.begin(), parties.end());
  const CMatrix m = fingerprint_matrix(state.matrix(), parties, optimal_phases(K + 1));
  const double lhs = 0.5 * (K + 2.0 + trace_norm(m));
  return lhs / (K + 2.0);
}

PhaseScanResult phase_scan_witness(const OneParticleState& state, int resolution, int threads) {
  if (state.dim() != 3) throw UnsupportedDim("phase scan is defined for three-level states");
  if (resolution < 8) throw InvalidDim("resolution must be at least 8 steps per period");
  const auto ineqs = scan_inequalities();
  const CMatrix& rho = state.matrix();
  const double step = 2.0 * kPi / resolution;
  std::vector<cplx> e(resolution);
  for (int k = 0; k < resolution; ++k) e[k] = std::polar(1.0, k * step);

  const int workers = thread_count(threads);
  std::vector<std::array<Best, 3>> partial(std::max(1, workers));
  parallel_chunks(resolution, workers, [&](std::size_t lo, std::size_t hi, int w) {
    auto& best = partial[w];
    for (std::size_t i = lo; i < hi; ++i)
      for (int j = 0; j < resolution; ++j)
        for (int k = 0; k < resolution; ++k) {
          const cplx ph[3] = {e[i], e[j], e[k]};
          const std::array<int, 3> idx{static_cast<int>(i), j, k};
          for (int q = 0; q < 3; ++q) {
            const double v = scan_value(ineqs[q], rho, ph);
            if (better(v, idx, best[q])) best[q] = {v, idx};
          }
        }
  });

  PhaseScanResult res;
  res.resolution = resolution;
  for (int q = 0; q < 3; ++q) {
    Best b;
    for (const auto& p : partial)
      if (p[q].value >= 0 && better(p[q].value, p[q].idx, b)) b = p[q];
    std::array<double, 3> phi{b.idx[0] * step, b.idx[1] * step, b.idx[2] * step};
    double val = b.value;
    // Coordinate-wise golden-section refinement within one grid step.
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int round = 0; round < 4; ++round)
      for (int c = 0; c < 3; ++c) {
        auto f = [&](double x) {
          auto p = phi;
          p[c] = x;
          return scan_at(ineqs[q], rho, p);
        };
        double lo = phi[c] - step, hi = phi[c] + step;
        double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 60; ++it) {
          if (f1 > f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - g * (hi - lo); f1 = f(x1);
          } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + g * (hi - lo); f2 = f(x2);
          }
        }
        const double x = 0.5 * (lo + hi);
        const double fx = f(x);
        if (fx > val) {
          val = fx;
          phi[c] = x;
        }
      }
    res.maxima[q] = val;
    for (int c = 0; c < 3; ++c) res.argmax[q][c] = std::remainder(phi[c], 2.0 * kPi);
  }
  return res;
}

std::string state_fingerprint(const OneParticleState& state) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](double x) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &x, sizeof(double));
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  const auto& m = state.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      feed(m(i, j).real());
      feed(m(i, j).imag());
    }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<CVector> as_pure(const OneParticleState& state, double tol) {
  const auto ev = hermitian_eigenvalues(state.matrix());
  if (std::abs(ev.back() - 1.0) > tol) return std::nullopt;
  return lowest_eigenvector(-state.matrix());
}

CoherenceReport coherence_report(const OneParticleState& state, int K, double crk_tol) {
  CoherenceReport r;
  r.dim = state.dim();
  r.K = K;
  r.bound = K + 1.0;
  r.state_hash = state_fingerprint(state);
  if (state.dim() == 3) r.comparison_trace_norm = comparison_matrix_test(state).trace_norm;
  if (const auto psi = as_pure(state)) {
    r.crk = coherence_rank(*psi, crk_tol);
    if (*r.crk <= K + 1) {
      const auto w = pure_state_witness(*psi, K, crk_tol);
      r.fingerprint_delta = w.delta;
      r.lhs = w.lhs;
      r.witness_level = w.certified ? K + 1 : 0;
    } else {
      // Rank above K+1: the witness at level crk certifies more than asked.
      r.K = *r.crk - 1;
      const auto w = pure_state_witness(*psi, r.K, crk_tol);
      r.fingerprint_delta = w.delta;
      r.lhs = w.lhs;
      r.bound = *r.crk;
      r.witness_level = w.certified ? *r.crk : 0;
    }
  } else {
    const CMatrix m = fingerprint_matrix(state.matrix(), [&] {
      std::vector<int> p(K + 1);
      for (int k = 0; k <= K; ++k) p[k] = k;
      return p;
    }(), optimal_phases(K + 1));
    const auto ev = hermitian_eigenvalues(m);
    double tn = 0.0;
    for (double x : ev) tn += std::abs(x);
    r.lhs = 0.5 * (K + 2.0 + tn);
    r.fingerprint_delta = std::max(0.0, -ev.front());
    if (r.fingerprint_delta > 1e-12)
      r.witness_level = K + 1;
    else if (r.comparison_trace_norm && *r.comparison_trace_norm > 1.0 + 1e-10 && K == 2)
      r.witness_level = 3;
  }
  return r;
}

}  // namespace onepmac
