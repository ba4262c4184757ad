#include "onepmac/violation.hpp"

#include <cmath>
#include <numbers>

#include "onepmac/encoding.hpp"
#include "onepmac/errors.hpp"

namespace onepmac {

namespace {

constexpr double kPi = std::numbers::pi;

double lambda_min(const CMatrix& m) {
  if (m.rows() == 3) return hermitian_eigenvalues_3x3(m.data())[0];
  return hermitian_eigenvalues(m).front();
}

}  // namespace

CMatrix build_M(int N, std::span<const double> phases) {
  if (N < 1 || static_cast<int>(phases.size()) != N) throw InvalidDim("need N >= 1 and N phases");
  CMatrix m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      m(i, j) = i == j ? cplx((N - 1.0) / N, 0.0)
                       : (cplx(N - 3.0, 0.0) + std::polar(1.0, phases[i]) + std::polar(1.0, -phases[j])) /
                             static_cast<double>(N);
  return m;
}

CMatrix build_M3(int N, double phi) {
  if (N < 2) throw InvalidDim("M3 needs N >= 2");
  const double n = N;
  const cplx e = std::polar(1.0, phi);
  const cplx m12 = (n - 3.0 + 2.0 * e) / n;
  if (N == 2) {
    CMatrix m(2, 2);
    m << (n - 1) / n, m12, std::conj(m12), (n - 1) / n;
    return m;
  }
  const double r = std::sqrt(n - 2.0);
  const cplx m13 = r * (n - 4.0 + e) / n;
  const cplx m23 = r * (n - 4.0 + std::conj(e)) / n;
  CMatrix m(3, 3);
  m << (n - 1) / n, m12, m13,
       std::conj(m12), (n - 1) / n, m23,
       std::conj(m13), std::conj(m23), ((n - 2.0) * (n - 5.0) + 4.0) / n;
  return m;
}

CMatrix fingerprint_matrix(const CMatrix& rho, std::span<const int> parties,
                           std::span<const double> phases) {
  if (parties.size() != phases.size()) throw ShapeMismatch("one phase per flipping party");
  const Eigen::Index n = rho.rows();
  CMatrix m = -rho;
  std::vector<double> ph(n, 0.0);
  for (std::size_t k = 0; k < parties.size(); ++k) {
    if (parties[k] < 0 || parties[k] >= n) throw IndexOutOfRange("party outside the state");
    ph.assign(n, 0.0);
    ph[parties[k]] = phases[k];
    m += phase_encoded(rho, ph);
  }
  return m;
}

double violation_delta(int N, double phi) {
  return std::max(0.0, -lambda_min(build_M3(N, phi)));
}

OptimalViolation max_violation(int N) {
  if (N < 2) throw InvalidDim("violation needs N >= 2");
  if (N <= 3) return {2.0 / N, kPi};
  const double n = N;
  const double num = 53.0 - 105.0 * n + 71.0 * n * n - 20.0 * n * n * n + 2.0 * n * n * n * n;
  const double den = 2.0 * (n - 2.0) * (n - 2.0) * (n - 3.0) * (n - 3.0);
  return {1.0 / (n * (n - 2.0) * (n - 3.0)), std::acos(std::clamp(num / den, -1.0, 1.0))};
}

OptimalViolation scan_violation(int N, double step) {
  OptimalViolation best{-1.0, 0.0};
  const int steps = static_cast<int>(std::ceil(2.0 * kPi / step));
  for (int k = 0; k < steps; ++k) {
    const double phi = k * step;
    const double d = violation_delta(N, phi);
    if (d > best.delta) best = {d, phi};
  }
  // Golden-section refinement of -lambda_min (smooth near the optimum).
  auto f = [N](double phi) { return -lambda_min(build_M3(N, phi)); };
  double a = best.phi - step, b = best.phi + step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80; ++it) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - g * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + g * (b - a); fd = f(d);
    }
  }
  const double phi = 0.5 * (a + b);
  const double val = std::max(0.0, f(phi));
  if (val > best.delta) best = {val, phi};
  return best;
}

std::vector<double> optimal_phases(int N) {
  const double phi = max_violation(N).phi;
  std::vector<double> ph(N, kPi);
  ph[0] = phi;
  ph[1] = -phi;
  return ph;
}

double helstrom_lhs(int N, std::span<const double> phases) {
  return 0.5 * (N + 1.0 + trace_norm(build_M(N, phases)));
}

ViolationReport violation_report(int N) {
  ViolationReport r;
  r.N = N;
  r.phases = optimal_phases(N);
  const CMatrix m = build_M(N, r.phases);
  r.trace_norm = trace_norm(m);
  r.delta = 0.5 * (r.trace_norm - N + 1.0);
  r.lhs = 0.5 * (N + 1.0 + r.trace_norm);
  r.closed_form_delta = max_violation(N).delta;
  r.measurement_vector = lowest_eigenvector(m);
  r.optimal_measurement =
      "Pi_0 = projector onto the eigenvector of M with the negative eigenvalue; Pi_1 = I - Pi_0";
  return r;
}

double helstrom_value(const LinearInequality& ineq, const std::vector<CMatrix>& states) {
  const AlphabetSpec& alph = ineq.alphabets;
  if (alph.output_size != 2) throw UnsupportedOutputSize("Helstrom value needs a binary output");
  const std::size_t n_in = alph.num_inputs();
  if (states.size() != n_in) throw ShapeMismatch("one state per input tuple");
  Eigen::Index d = -1;
  CMatrix X;
  double base = 0.0;
  for (std::size_t a = 0; a < n_in; ++a) {
    const double c0 = ineq.coeffs[alph.transition_index(0, a)].get_d();
    const double c1 = ineq.coeffs[alph.transition_index(1, a)].get_d();
    if (c0 == 0.0 && c1 == 0.0) continue;
    if (d < 0) {
      d = states[a].rows();
      X = CMatrix::Zero(d, d);
    }
    base += c1 * states[a].trace().real();
    X += (c0 - c1) * states[a];
  }
  if (d < 0) return 0.0;
  X = 0.5 * (X + X.adjoint());
  double pos = 0.0;
  const auto ev = d == 3 ? std::vector<double>{} : hermitian_eigenvalues(X);
  if (d == 3) {
    for (double x : hermitian_eigenvalues_3x3(X.data())) pos += std::max(0.0, x);
  } else {
    for (double x : ev) pos += std::max(0.0, x);
  }
  return base + pos;
}

double helstrom_phase_value(const LinearInequality& ineq, const CMatrix& rho,
                            const std::vector<std::vector<double>>& phases) {
  const AlphabetSpec& alph = ineq.alphabets;
  if (static_cast<int>(phases.size()) != alph.parties() || rho.rows() != alph.parties())
    throw ShapeMismatch("one phase row per party and one path per party");
  std::vector<CMatrix> states(alph.num_inputs(), CMatrix());
  std::vector<double> ph(alph.parties());
  for (std::size_t a = 0; a < alph.num_inputs(); ++a) {
    bool used = false;
    for (int b = 0; b < 2; ++b) used = used || sgn(ineq.coeffs[alph.transition_index(b, a)]) != 0;
    if (!used) continue;
    const auto in = alph.unflatten(a);
    for (int k = 0; k < alph.parties(); ++k) ph[k] = phases[k].at(in[k]);
    states[a] = phase_encoded(rho, ph);
  }
  return helstrom_value(ineq, states);
}

}  // namespace onepmac
