#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "onepmac/linalg.hpp"
#include "onepmac/state.hpp"

namespace onepmac {

int coherence_rank(const CVector& psi, double tol = 1e-9, double norm_tol = 1e-10);

// |rho_ii| on the diagonal, -|rho_ij| off it.
Eigen::MatrixXd comparison_matrix(const OneParticleState& state);

struct ComparisonTest {
  double trace_norm = 0.0;
  bool coherent = false;
};

// Three-level coherence test; dim must be 3.
ComparisonTest comparison_matrix_test(const OneParticleState& state, double margin = 1e-10);

struct WitnessReport {
  int K = 0;
  int crk = 0;
  std::vector<int> parties;     // the K+1 paths that encode (0-based)
  std::vector<double> phases;   // phase of each of those parties on input 1
  double trace_norm = 0.0;      // of M' = C M C^dagger
  double delta = 0.0;           // max{0, -lambda_min(M')}
  double lhs = 0.0;             // Helstrom LHS of the (K+1)-party inequality
  bool certified = false;       // delta > 0: (K+1)-level coherence
};

// Fingerprint witness for a pure state with the fixed optimal phases of N = K+1.
WitnessReport pure_state_witness(const CVector& psi, int K, double crk_tol = 1e-9,
                                 double snap_tol = 1e-12);

// Success probability of the ensemble game on the K+1 most significant
// support paths (or the first K+1 paths): LHS / (K+2). States without
// (K+1)-level coherence reach at most (K+1)/(K+2).
double ensemble_game_value(const OneParticleState& state, int K);
double ensemble_game_threshold(int K);

struct PhaseScanResult {
  std::array<double, 3> maxima{};
  std::array<std::array<double, 3>, 3> argmax{};
  std::array<double, 3> bounds{3.0, 3.0, 4.0};
  int resolution = 0;
};

// Dense grid over (phi_1, phi_2, phi_3) with step 2 pi / resolution, then
// coordinate-wise golden-section refinement around the best grid points. Each
// party encodes input 0 as phase 0 and input 1 as phi_k.
PhaseScanResult phase_scan_witness(const OneParticleState& state, int resolution = 200,
                                   int threads = 0);

struct CoherenceReport {
  int dim = 0;
  std::optional<int> crk;
  std::optional<double> comparison_trace_norm;
  double fingerprint_delta = 0.0;
  double lhs = 0.0;
  double bound = 0.0;
  int witness_level = 0;
  int K = 0;
  std::string state_hash;
};

// Pure states use the fingerprint witness at level K+1; three-level mixed
// states use the comparison-matrix test.
CoherenceReport coherence_report(const OneParticleState& state, int K, double crk_tol = 1e-9);

// FNV-1a fingerprint of the state matrix entries (hex).
std::string state_fingerprint(const OneParticleState& state);

// Pure-state vector if the state has rank one (largest eigenvalue within tol of 1).
std::optional<CVector> as_pure(const OneParticleState& state, double tol = 1e-9);

}  // namespace onepmac
