#include "onepmac/state.hpp"

#include <cmath>

#include "onepmac/errors.hpp"

namespace onepmac {

OneParticleState::OneParticleState(CMatrix rho, const StateTolerances& tol) : rho_(std::move(rho)) {
  if (rho_.rows() < 1 || rho_.rows() != rho_.cols())
    throw InvalidDim("state must be a nonempty square matrix");
  const double herm = hermiticity_defect(rho_);
  if (herm > tol.hermitian)
    throw InvalidState("state is not Hermitian (defect " + std::to_string(herm) + ")");
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace)
    throw InvalidState("state trace is " + std::to_string(tr) + ", expected 1");
  const double lmin = hermitian_eigenvalues(rho_, tol.hermitian).front();
  if (lmin < -tol.psd)
    throw InvalidState("state is not positive semidefinite (min eigenvalue " +
                       std::to_string(lmin) + ")");
}

OneParticleState OneParticleState::pure(const CVector& psi, double norm_tol) {
  const double n = psi.norm();
  if (psi.size() < 1) throw InvalidDim("empty state vector");
  if (std::abs(n - 1.0) > norm_tol)
    throw NotNormalized("state vector has norm " + std::to_string(n));
  const CVector u = psi / n;
  return OneParticleState(u * u.adjoint());
}

OneParticleState OneParticleState::diagonal(const std::vector<double>& populations) {
  CMatrix rho = CMatrix::Zero(populations.size(), populations.size());
  for (std::size_t i = 0; i < populations.size(); ++i) rho(i, i) = populations[i];
  return OneParticleState(rho);
}

CMatrix OneParticleState::embedded() const {
  const int n = dim();
  CMatrix out = CMatrix::Zero(n + 1, n + 1);
  out.bottomRightCorner(n, n) = rho_;
  return out;
}

OneParticleState equal_superposition(int N) {
  if (N < 1) throw InvalidDim("equal superposition needs N >= 1");
  return OneParticleState(CMatrix::Constant(N, N, cplx(1.0 / N, 0.0)));
}

}  // namespace onepmac
