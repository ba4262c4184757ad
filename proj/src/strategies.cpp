#include "onepmac/strategies.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "onepmac/errors.hpp"
#include "onepmac/interference.hpp"

namespace onepmac {

namespace {

constexpr double kPi = std::numbers::pi;

cplx gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

CVector pair_projector(int N, int i, int j, cplx rho_ij) {
  CVector psi = CVector::Zero(N);
  psi(i) = 1.0 / std::sqrt(2.0);
  psi(j) = std::conj(rho_ij) / std::abs(rho_ij) / std::sqrt(2.0);
  return psi;
}

}  // namespace

I2Result i2_max_for_state(const OneParticleState& state, int i, int j) {
  const int N = state.dim();
  if (i < 0 || j < 0 || i >= N || j >= N || i == j)
    throw IndexOutOfRange("I2 needs two distinct paths in 0..N-1");
  const double mag = std::abs(state(i, j));
  I2Result r;
  r.value = 4.0 * mag;
  if (mag > 0.0) r.strategy = I2Strategy{i, j, pair_projector(N, i, j, state(i, j))};
  return r;
}

Mac i2_strategy_mac(const OneParticleState& state, const I2Strategy& s) {
  const int N = state.dim();
  std::vector<std::vector<double>> phases(N, std::vector<double>{0.0, 0.0});
  phases[s.i][1] = kPi;
  phases[s.j][1] = kPi;
  return generate_mac(state, phase_encoder(phases), Povm::projective(s.projector));
}

JointEncoder parity_encoder(int N, const std::vector<int>& group_i, const std::vector<int>& group_j,
                            int i, int j) {
  JointEncoder enc;
  enc.input_sizes.assign(N, 2);
  std::vector<char> used(N, 0);
  auto add_group = [&](const std::vector<int>& g, int target) {
    const auto it = std::find(g.begin(), g.end(), target);
    if (it == g.end()) throw InvalidPartition("parity group must contain its target path");
    GroupEncoder ge{g, {}};
    for (int p : g) {
      if (p < 0 || p >= N || used[p]) throw InvalidPartition("parity groups must be disjoint");
      used[p] = 1;
    }
    const int t = static_cast<int>(it - g.begin());
    for (unsigned local = 0; local < (1u << g.size()); ++local)
      ge.per_input.push_back(JointNpChannel::path_phase(g, t, std::popcount(local) % 2 ? kPi : 0.0));
    enc.groups.push_back(std::move(ge));
  };
  add_group(group_i, i);
  add_group(group_j, j);
  for (int p = 0; p < N; ++p)
    if (!used[p]) {
      GroupEncoder ge{{p}, {}};
      ge.per_input.assign(2, JointNpChannel::identity({p}));
      enc.groups.push_back(std::move(ge));
    }
  return enc;
}

Mac parity_strategy_mac(const OneParticleState& state, const std::vector<int>& group_i,
                        const std::vector<int>& group_j, int i, int j) {
  const auto r = i2_max_for_state(state, i, j);
  if (!r.strategy) throw InvalidState("parity strategy needs rho_ij != 0");
  return generate_mac(state, parity_encoder(state.dim(), group_i, group_j, i, j),
                      Povm::projective(r.strategy->projector));
}

CVector random_unit_vector(int n, Rng& rng) {
  CVector v(n);
  for (int k = 0; k < n; ++k) v(k) = gaussian_complex(rng);
  return v / v.norm();
}

CMatrix random_unitary(int n, Rng& rng) {
  CMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = gaussian_complex(rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const cplx d = rr(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

OneParticleState random_pure_state(int n, Rng& rng) {
  return OneParticleState::pure(random_unit_vector(n, rng));
}

OneParticleState random_mixed_state(int n, int rank, Rng& rng) {
  CMatrix g(n, rank);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < rank; ++c) g(r, c) = gaussian_complex(rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return OneParticleState(rho);
}

NpChannel random_np_channel(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> nb(1, 3);
  const int branches = nb(rng);
  std::vector<double> w(branches);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - u(rng));  // Dirichlet(1,...,1) via exponentials
    total += x;
  }
  std::vector<NpBranch> out;
  for (int k = 0; k < branches; ++k) {
    const double r = u(rng);
    const cplx y = std::polar(r, 2.0 * kPi * u(rng));
    const cplx z = std::polar(std::sqrt(std::max(0.0, 1.0 - r * r)), 2.0 * kPi * u(rng));
    out.push_back({w[k] / total, y, z});
  }
  // Absorb rounding in the weights into the last branch.
  double s = 0.0;
  for (int k = 0; k + 1 < branches; ++k) s += out[k].weight;
  out.back().weight = 1.0 - s;
  return NpChannel(std::move(out));
}

JointNpChannel random_joint_channel(const std::vector<int>& parties, Rng& rng) {
  const int s = static_cast<int>(parties.size());
  const int d = s + 1;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> nr(1, 3);
  const int extra = nr(rng) - 1;
  // Stack the particle columns of all Kraus operators into an isometry.
  const int rows = s + extra * d;
  CMatrix g(rows, s);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < s; ++c) g(r, c) = gaussian_complex(rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  const CMatrix v = qr.householderQ() * CMatrix::Identity(rows, s);
  std::vector<CMatrix> kraus;
  CMatrix k0 = CMatrix::Zero(d, d);
  k0(0, 0) = std::polar(1.0, 2.0 * kPi * u(rng));
  k0.bottomRightCorner(s, s) = v.topRows(s);
  kraus.push_back(k0);
  for (int e = 0; e < extra; ++e) {
    CMatrix k = CMatrix::Zero(d, d);
    k.rightCols(s) = v.middleRows(s + e * d, d);
    kraus.push_back(k);
  }
  return JointNpChannel(parties, std::move(kraus));
}

Povm random_binary_povm(int dim, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const CMatrix U = random_unitary(dim, rng);
  Eigen::VectorXd lam(dim);
  for (int k = 0; k < dim; ++k) lam(k) = u(rng);
  CMatrix p0 = U * lam.cast<cplx>().asDiagonal() * U.adjoint();
  p0 = 0.5 * (p0 + p0.adjoint());
  const CMatrix p1 = CMatrix::Identity(dim, dim) - p0;
  return Povm({p0, p1});
}

std::vector<std::vector<int>> random_partition(int N, int max_group, Rng& rng) {
  std::vector<int> perm(N);
  for (int k = 0; k < N; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<int>> groups;
  std::uniform_int_distribution<int> sz(1, std::max(1, max_group));
  for (int pos = 0; pos < N;) {
    const int take = std::min(N - pos, sz(rng));
    std::vector<int> g(perm.begin() + pos, perm.begin() + pos + take);
    std::sort(g.begin(), g.end());
    groups.push_back(std::move(g));
    pos += take;
  }
  return groups;
}

JointEncoder random_joint_encoder(int N, int K, Rng& rng) {
  JointEncoder enc;
  enc.input_sizes.assign(N, 2);
  for (auto& g : random_partition(N, K, rng)) {
    GroupEncoder ge{g, {}};
    for (unsigned local = 0; local < (1u << g.size()); ++local)
      ge.per_input.push_back(random_joint_channel(g, rng));
    enc.groups.push_back(std::move(ge));
  }
  return enc;
}

double max_random_interference(const OneParticleState& state, int K, int order, int trials,
                               std::uint64_t seed) {
  const int N = state.dim();
  if (order < 1 || order > N) throw InvalidDim("interference order must lie in 1..N");
  Rng rng(seed);
  const auto subsets = combinations(N, order);
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Mac mac = generate_mac(state, random_joint_encoder(N, K, rng), random_binary_povm(N + 1, rng));
    for (const auto& S : subsets) best = std::max(best, max_interference_IK(mac, S));
  }
  return best;
}

OddInterferenceCheck verify_odd_interference_vanishes(const OneParticleState& state, int K,
                                                      int trials, std::uint64_t seed, double tol) {
  if (2 * K + 1 > state.dim()) throw InvalidDim("need 2K+1 <= N");
  OddInterferenceCheck c;
  c.max_abs = max_random_interference(state, K, 2 * K + 1, trials, seed);
  c.vanishes = c.max_abs < tol;
  return c;
}

std::vector<Mac> q_n1_points(int N) {
  const AlphabetSpec alph = AlphabetSpec::binary(N);
  std::vector<Mac> pts;
  pts.push_back(constant_mac(alph, 0));
  pts.push_back(constant_mac(alph, 1));
  for (int s = 0; s < N; ++s) {
    std::vector<int> table(alph.num_inputs());
    for (std::size_t a = 0; a < table.size(); ++a) table[a] = alph.unflatten(a)[s] == 1 ? 0 : 1;
    pts.push_back(deterministic_mac(alph, table));
  }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      CVector psi = CVector::Zero(N);
      psi(i) = psi(j) = 1.0 / std::sqrt(2.0);
      const auto state = OneParticleState::pure(psi);
      pts.push_back(i2_strategy_mac(state, *i2_max_for_state(state, i, j).strategy));
    }
  return pts;
}

int numeric_affine_rank(const std::vector<Mac>& points, double tol) {
  if (points.empty()) throw EmptyInput("rank of an empty point set");
  const std::size_t dim = points[0].probs().size();
  Eigen::MatrixXd diffs(dim, points.size() - 1);
  for (std::size_t k = 1; k < points.size(); ++k)
    for (std::size_t t = 0; t < dim; ++t) diffs(t, k - 1) = points[k].probs()[t] - points[0].probs()[t];
  if (diffs.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
  int rank = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) rank += svd.singularValues()(k) > tol;
  return rank;
}

SeparationEvidence separation_harness(int trials, double eps, std::uint64_t seed) {
  Rng rng(seed);
  SeparationEvidence ev;
  for (int t = 0; t < trials; ++t) {
    const auto state = random_mixed_state(2, 1 + t % 2, rng);
    ProductEncoder enc;
    for (int p = 0; p < 2; ++p) enc.table.push_back({random_np_channel(rng), random_np_channel(rng)});
    const Mac mac = generate_mac(state, enc, random_binary_povm(3, rng));
    const int a00[2] = {0, 0}, a01[2] = {0, 1}, a10[2] = {1, 0}, a11[2] = {1, 1};
    const double p00 = mac.prob(0, a00);
    const double rest = std::max({mac.prob(0, a01), mac.prob(0, a10), mac.prob(0, a11)});
    if (rest <= eps) ev.best_p00 = std::max(ev.best_p00, p00);
    ev.best_score = std::max(ev.best_score, p00 - rest);
    ++ev.samples;
  }
  return ev;
}

}  // namespace onepmac
