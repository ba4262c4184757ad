#include "onepmac/channel.hpp"

#include <algorithm>
#include <cmath>

#include "onepmac/errors.hpp"

namespace onepmac {

NpChannel::NpChannel(std::vector<NpBranch> branches, double tol) : branches_(std::move(branches)) {
  if (branches_.empty()) throw InvalidChannel("channel needs at least one branch");
  double total = 0.0;
  for (const auto& br : branches_) {
    if (!(br.weight >= 0.0)) throw InvalidChannel("branch weights must be nonnegative");
    if (std::abs(br.y) > 1.0 + tol) throw InvalidChannel("|y| exceeds 1");
    const double norm = std::norm(br.y) + std::norm(br.z);
    if (std::abs(norm - 1.0) > tol)
      throw InvalidChannel("branch violates |y|^2 + |z|^2 = 1 (got " + std::to_string(norm) + ")");
    total += br.weight;
  }
  if (std::abs(total - 1.0) > tol)
    throw InvalidChannel("branch weights sum to " + std::to_string(total));
}

NpChannel NpChannel::identity() { return NpChannel({{1.0, 1.0, 0.0}}); }

NpChannel NpChannel::phase(double theta) { return NpChannel({{1.0, std::polar(1.0, theta), 0.0}}); }

NpChannel NpChannel::blocking(double z_phase) { return NpChannel({{1.0, 0.0, std::polar(1.0, z_phase)}}); }

NpChannel NpChannel::damping(cplx y) {
  return NpChannel({{1.0, y, std::sqrt(std::max(0.0, 1.0 - std::norm(y)))}});
}

cplx NpChannel::coherence_factor() const {
  cplx s = 0.0;
  for (const auto& br : branches_) s += br.weight * br.y;
  return s;
}

double NpChannel::transmission() const {
  double s = 0.0;
  for (const auto& br : branches_) s += br.weight * std::norm(br.y);
  return s;
}

JointNpChannel::JointNpChannel(std::vector<int> parties, std::vector<CMatrix> kraus, double tol)
    : parties_(std::move(parties)), kraus_(std::move(kraus)) {
  if (parties_.empty()) throw InvalidKraus("joint channel needs at least one party");
  const Eigen::Index d = static_cast<Eigen::Index>(parties_.size()) + 1;
  if (kraus_.empty()) throw InvalidKraus("joint channel needs at least one Kraus operator");
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& k : kraus_) {
    if (k.rows() != d || k.cols() != d)
      throw InvalidKraus("Kraus operator must be " + std::to_string(d) + "x" + std::to_string(d));
    for (Eigen::Index t = 1; t < d; ++t)
      if (std::abs(k(t, 0)) > tol)
        throw InvalidKraus("Kraus operator creates a particle from the vacuum");
    sum += k.adjoint() * k;
  }
  const double defect = (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > tol)
    throw InvalidKraus("Kraus operators are not complete (defect " + std::to_string(defect) + ")");
}

JointNpChannel JointNpChannel::identity(std::vector<int> parties) {
  const Eigen::Index d = static_cast<Eigen::Index>(parties.size()) + 1;
  return JointNpChannel(std::move(parties), {CMatrix::Identity(d, d)});
}

JointNpChannel JointNpChannel::from_product(std::vector<int> parties,
                                            const std::vector<NpChannel>& channels) {
  if (channels.size() != parties.size()) throw ChannelCountMismatch("one channel per party");
  const Eigen::Index d = static_cast<Eigen::Index>(parties.size()) + 1;
  // Compose the per-party Kraus sets; on the one-particle space they commute.
  std::vector<CMatrix> ops{CMatrix::Identity(d, d)};
  for (std::size_t s = 0; s < channels.size(); ++s) {
    std::vector<CMatrix> next;
    for (const auto& br : channels[s].branches()) {
      CMatrix A = CMatrix::Identity(d, d);
      A(s + 1, s + 1) = br.y;
      CMatrix B = CMatrix::Zero(d, d);
      B(0, s + 1) = br.z;
      const double w = std::sqrt(br.weight);
      for (const auto& op : ops) {
        next.push_back(w * A * op);
        if (br.z != 0.0) next.push_back(w * B * op);
      }
    }
    ops = std::move(next);
  }
  return JointNpChannel(std::move(parties), std::move(ops));
}

JointNpChannel JointNpChannel::path_phase(std::vector<int> parties, int target, double theta) {
  const Eigen::Index d = static_cast<Eigen::Index>(parties.size()) + 1;
  if (target < 0 || target >= static_cast<int>(parties.size()))
    throw IndexOutOfRange("phase target outside the group");
  CMatrix k = CMatrix::Identity(d, d);
  k(target + 1, target + 1) = std::polar(1.0, theta);
  return JointNpChannel(std::move(parties), {k});
}

std::vector<CMatrix> JointNpChannel::global_kraus(int N) const {
  std::vector<char> in_group(N, 0);
  for (int p : parties_) {
    if (p < 0 || p >= N) throw IndexOutOfRange("channel party outside 0..N-1");
    in_group[p] = 1;
  }
  std::vector<CMatrix> out;
  for (const auto& k : kraus_) {
    CMatrix g = CMatrix::Zero(N + 1, N + 1);
    const cplx vac = k(0, 0);
    g(0, 0) = vac;
    for (int j = 0; j < N; ++j)
      if (!in_group[j]) g(j + 1, j + 1) = vac;
    for (std::size_t s = 0; s < parties_.size(); ++s) {
      const int col = parties_[s] + 1;
      g(0, col) = k(0, s + 1);
      for (std::size_t t = 0; t < parties_.size(); ++t) g(parties_[t] + 1, col) = k(t + 1, s + 1);
    }
    out.push_back(std::move(g));
  }
  return out;
}

Povm::Povm(std::vector<CMatrix> effects, double tol) : effects_(std::move(effects)) {
  if (effects_.size() < 2) throw InvalidPovm("POVM needs at least two outcomes");
  const Eigen::Index d = effects_[0].rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& e : effects_) {
    if (e.rows() != d || e.cols() != d) throw InvalidPovm("effects have inconsistent dimensions");
    if (hermiticity_defect(e) > tol) throw InvalidPovm("effect is not Hermitian");
    if (hermitian_eigenvalues(e, tol).front() < -tol) throw InvalidPovm("effect is not PSD");
    sum += e;
  }
  const double defect = (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > tol) throw InvalidPovm("effects do not sum to the identity");
}

Povm Povm::projective(const CVector& psi) {
  const Eigen::Index n = psi.size();
  CVector v = CVector::Zero(n + 1);
  v.tail(n) = psi / psi.norm();
  CMatrix p0 = v * v.adjoint();
  p0 = 0.5 * (p0 + p0.adjoint());
  CMatrix p1 = CMatrix::Identity(n + 1, n + 1) - p0;
  return Povm({p0, p1});
}

Povm Povm::number_basis(const std::vector<std::vector<double>>& decoder) {
  if (decoder.empty()) throw InvalidPovm("decoder needs at least one outcome");
  const std::size_t d = decoder[0].size();
  std::vector<CMatrix> effects;
  for (const auto& row : decoder) {
    if (row.size() != d) throw InvalidPovm("decoder rows have inconsistent length");
    CMatrix e = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < d; ++k) e(k, k) = row[k];
    effects.push_back(std::move(e));
  }
  return Povm(std::move(effects));
}

}  // namespace onepmac
