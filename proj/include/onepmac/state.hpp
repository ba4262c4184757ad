#pragma once

#include "onepmac/linalg.hpp"

namespace onepmac {

struct StateTolerances {
  double hermitian = 1e-12;
  double psd = 1e-10;
  double trace = 1e-12;
};

// Density matrix of one particle on N paths, in the basis |e_1>..|e_N>.
class OneParticleState {
 public:
  explicit OneParticleState(CMatrix rho, const StateTolerances& tol = {});

  static OneParticleState pure(const CVector& psi, double norm_tol = 1e-10);
  static OneParticleState diagonal(const std::vector<double>& populations);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const CMatrix& matrix() const { return rho_; }
  cplx operator()(int i, int j) const { return rho_(i, j); }

  // The same state on vacuum + one-particle space (vacuum at index 0).
  CMatrix embedded() const;

 private:
  CMatrix rho_;
};

OneParticleState equal_superposition(int N);

}  // namespace onepmac
