#pragma once

#include <span>
#include <string>
#include <vector>

#include "onepmac/inequality.hpp"
#include "onepmac/linalg.hpp"
#include "onepmac/state.hpp"

namespace onepmac {

// M = sum_i sigma_{e_i} - sigma_0 for the equal superposition on N paths where
// party i encodes input 1 as the phase phi_i: diagonal (N-1)/N, off-diagonal
// (N-3 + e^{i phi_i} + e^{-i phi_j})/N.
CMatrix build_M(int N, std::span<const double> phases);

// Restriction of M to its invariant subspace for phases (phi, -phi, pi, ..., pi);
// 2x2 for N = 2, 3x3 otherwise.
CMatrix build_M3(int N, double phi);

// M for an arbitrary one-particle state: sigma_a is the phase-encoded state
// where only `parties` flip (party parties[k] uses phases[k]).
CMatrix fingerprint_matrix(const CMatrix& rho, std::span<const int> parties,
                           std::span<const double> phases);

double violation_delta(int N, double phi);

struct OptimalViolation {
  double delta = 0.0;
  double phi = 0.0;
};

OptimalViolation max_violation(int N);
// Grid over phi with the given step, refined by golden-section search.
OptimalViolation scan_violation(int N, double step = 1e-3);

std::vector<double> optimal_phases(int N);

double helstrom_lhs(int N, std::span<const double> phases);

struct ViolationReport {
  int N = 0;
  std::vector<double> phases;
  double trace_norm = 0.0;
  double delta = 0.0;
  double lhs = 0.0;
  double closed_form_delta = 0.0;
  CVector measurement_vector;  // Pi_0 projects onto this eigenvector of M
  std::string optimal_measurement;
};

ViolationReport violation_report(int N);

// Helstrom-optimal value of a binary-output inequality when the receiver gets
// state states[a] for input tuple a (flattened): sum_a c(1|a) Tr(sigma_a) +
// positive part of sum_a (c(0|a) - c(1|a)) sigma_a.
double helstrom_value(const LinearInequality& ineq, const std::vector<CMatrix>& states);

// Same with phase encoding: party k applies phases[k][input] to its path.
double helstrom_phase_value(const LinearInequality& ineq, const CMatrix& rho,
                            const std::vector<std::vector<double>>& phases);

}  // namespace onepmac
