#pragma once

#include <vector>

#include "onepmac/linalg.hpp"

namespace onepmac {

// One amplitude-damping branch with Kraus pair A = diag(1, y), B = [[0, z], [0, 0]].
struct NpBranch {
  double weight = 1.0;
  cplx y = 1.0;
  cplx z = 0.0;
};

// Single-mode number-preserving channel: a convex mixture of branches.
class NpChannel {
 public:
  explicit NpChannel(std::vector<NpBranch> branches, double tol = 1e-12);

  static NpChannel identity();
  static NpChannel phase(double theta);
  static NpChannel blocking(double z_phase = 0.0);
  // Single branch with transmission amplitude y; z is real and nonnegative.
  static NpChannel damping(cplx y);

  const std::vector<NpBranch>& branches() const { return branches_; }
  // Coherence factor sum_k w_k y_k and transmission sum_k w_k |y_k|^2.
  cplx coherence_factor() const;
  double transmission() const;

 private:
  std::vector<NpBranch> branches_;
};

// Joint number-preserving channel on the paths of `parties`, acting on the
// local space {vacuum, e_{parties[0]}, e_{parties[1]}, ...}.
class JointNpChannel {
 public:
  JointNpChannel(std::vector<int> parties, std::vector<CMatrix> kraus, double tol = 1e-10);

  static JointNpChannel identity(std::vector<int> parties);
  static JointNpChannel from_product(std::vector<int> parties, const std::vector<NpChannel>& channels);
  // Phase e^{i theta} on the path of parties[target], identity elsewhere.
  static JointNpChannel path_phase(std::vector<int> parties, int target, double theta);

  const std::vector<int>& parties() const { return parties_; }
  const std::vector<CMatrix>& kraus() const { return kraus_; }

  // Kraus operators lifted to the global (N+1)-dimensional space.
  std::vector<CMatrix> global_kraus(int N) const;

 private:
  std::vector<int> parties_;
  std::vector<CMatrix> kraus_;
};

// Effects on the (N+1)-dimensional vacuum + one-particle space.
class Povm {
 public:
  explicit Povm(std::vector<CMatrix> effects, double tol = 1e-10);

  // Two outcomes: projector onto |psi> (psi on the N paths) and its complement.
  static Povm projective(const CVector& psi);
  // Measure vacuum/path, then post-process: decoder[b][k] = d(b | k), where
  // k = 0 is vacuum and k = i is path e_i.
  static Povm number_basis(const std::vector<std::vector<double>>& decoder);

  const std::vector<CMatrix>& effects() const { return effects_; }
  int outcomes() const { return static_cast<int>(effects_.size()); }
  int dim() const { return static_cast<int>(effects_[0].rows()); }

 private:
  std::vector<CMatrix> effects_;
};

}  // namespace onepmac
