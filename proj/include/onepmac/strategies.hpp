#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "onepmac/channel.hpp"
#include "onepmac/encoding.hpp"
#include "onepmac/mac.hpp"
#include "onepmac/state.hpp"

namespace onepmac {

// {0, pi} phases on paths i and j, decoded by the projector onto psi.
struct I2Strategy {
  int i = 0;
  int j = 1;
  CVector projector;
};

struct I2Result {
  double value = 0.0;
  std::optional<I2Strategy> strategy;
};

I2Result i2_max_for_state(const OneParticleState& state, int i, int j);

// Binary-input MAC of the strategy; parties other than i, j do nothing.
Mac i2_strategy_mac(const OneParticleState& state, const I2Strategy& strategy);

// Groups group_i (containing i) and group_j (containing j) flip the phase of
// path i, respectively j, by pi when the parity of their inputs is odd; all
// other parties are idle singletons. Decoded with the projector of the I2
// strategy for (i, j).
JointEncoder parity_encoder(int N, const std::vector<int>& group_i, const std::vector<int>& group_j,
                            int i, int j);
Mac parity_strategy_mac(const OneParticleState& state, const std::vector<int>& group_i,
                        const std::vector<int>& group_j, int i, int j);

// Random sampling used by property tests and Monte Carlo harnesses.
using Rng = std::mt19937_64;
CVector random_unit_vector(int n, Rng& rng);
CMatrix random_unitary(int n, Rng& rng);
OneParticleState random_pure_state(int n, Rng& rng);
OneParticleState random_mixed_state(int n, int rank, Rng& rng);
NpChannel random_np_channel(Rng& rng);
JointNpChannel random_joint_channel(const std::vector<int>& parties, Rng& rng);
Povm random_binary_povm(int dim, Rng& rng);
std::vector<std::vector<int>> random_partition(int N, int max_group, Rng& rng);
JointEncoder random_joint_encoder(int N, int K, Rng& rng);

struct OddInterferenceCheck {
  bool vanishes = true;
  double max_abs = 0.0;
};

// Largest |I_order| over all party subsets of that size and all contexts, for
// `trials` random (N,K) joint encodings with random two-outcome POVMs.
double max_random_interference(const OneParticleState& state, int K, int order, int trials,
                               std::uint64_t seed);

OddInterferenceCheck verify_odd_interference_vanishes(const OneParticleState& state, int K,
                                                      int trials, std::uint64_t seed = 1,
                                                      double tol = 1e-9);

// Classical points plus one pairwise-coherent quantum point per pair of
// parties, spanning Q_{N,1} for binary inputs and output.
std::vector<Mac> q_n1_points(int N);

int numeric_affine_rank(const std::vector<Mac>& points, double tol = 1e-8);

// Evidence-only search for quantum (2,1) MACs close to the classical AND
// vertex p(0|00) = 1, p(0|01) = p(0|10) = p(0|11) = 0.
struct SeparationEvidence {
  double best_p00 = 0.0;       // largest p(0|00) among samples meeting the constraint
  double best_score = -1e9;    // largest p(0|00) - max other p(0|a)
  int samples = 0;
};

SeparationEvidence separation_harness(int trials, double eps, std::uint64_t seed);

}  // namespace onepmac
