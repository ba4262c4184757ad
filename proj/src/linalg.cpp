#include "onepmac/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "onepmac/errors.hpp"

namespace onepmac {

namespace {

struct JacobiResult {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

JacobiResult jacobi_symmetric(Eigen::MatrixXd a, bool want_vectors) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd v = want_vectors ? Eigen::MatrixXd::Identity(n, n) : Eigen::MatrixXd();
  const double scale = std::max(1.0, a.norm());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    if (std::sqrt(off) < 1e-13 * scale) break;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        if (want_vectors)
          for (Eigen::Index k = 0; k < n; ++k) {
            const double vkp = v(k, p), vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
      }
  }
  return {a.diagonal(), v};
}

Eigen::MatrixXd real_embedding(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd e(2 * n, 2 * n);
  const Eigen::MatrixXd re = (0.5 * (m + m.adjoint())).real();
  const Eigen::MatrixXd im = (0.5 * (m + m.adjoint())).imag();
  e.topLeftCorner(n, n) = re;
  e.bottomRightCorner(n, n) = re;
  e.topRightCorner(n, n) = -im;
  e.bottomLeftCorner(n, n) = im;
  return e;
}

void check_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw NotHermitian("matrix is not square");
  const double d = hermiticity_defect(m);
  if (d > tol) throw NotHermitian("matrix deviates from Hermitian by " + std::to_string(d));
}

}  // namespace

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m, double herm_tol) {
  check_hermitian(m, herm_tol);
  if (m.rows() == 0) return {};
  const auto r = jacobi_symmetric(real_embedding(m), false);
  std::vector<double> all(r.values.data(), r.values.data() + r.values.size());
  std::sort(all.begin(), all.end());
  // Every eigenvalue of the embedding appears twice.
  std::vector<double> out;
  for (std::size_t k = 0; k < all.size(); k += 2) out.push_back(0.5 * (all[k] + all[k + 1]));
  return out;
}

CVector lowest_eigenvector(const CMatrix& m, double herm_tol) {
  check_hermitian(m, herm_tol);
  const Eigen::Index n = m.rows();
  const auto r = jacobi_symmetric(real_embedding(m), true);
  Eigen::Index best = 0;
  r.values.minCoeff(&best);
  CVector v(n);
  for (Eigen::Index k = 0; k < n; ++k) v(k) = cplx(r.vectors(k, best), r.vectors(n + k, best));
  v /= v.norm();
  // Fix the global phase: largest component real positive.
  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  v *= std::conj(v(big)) / std::abs(v(big));
  return v;
}

double trace_norm(const CMatrix& m, double herm_tol) {
  double s = 0.0;
  for (double x : hermitian_eigenvalues(m, herm_tol)) s += std::abs(x);
  return s;
}

std::array<double, 3> hermitian_eigenvalues_3x3(const cplx* m) {
  const double a00 = m[0].real(), a11 = m[4].real(), a22 = m[8].real();
  const cplx a01 = m[1], a02 = m[2], a12 = m[5];
  const double off = std::norm(a01) + std::norm(a02) + std::norm(a12);
  const double q = (a00 + a11 + a22) / 3.0;
  const double b00 = a00 - q, b11 = a11 - q, b22 = a22 - q;
  const double p2 = b00 * b00 + b11 * b11 + b22 * b22 + 2.0 * off;
  if (p2 <= 1e-300) return {q, q, q};
  const double p = std::sqrt(p2 / 6.0);
  // det(A - qI) for a Hermitian matrix.
  const double det = b00 * b11 * b22 + 2.0 * (a01 * a12 * std::conj(a02)).real() -
                     b00 * std::norm(a12) - b11 * std::norm(a02) - b22 * std::norm(a01);
  const double r = std::clamp(det / (2.0 * p * p * p), -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double hi = q + 2.0 * p * std::cos(phi);
  const double lo = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  return {lo, 3.0 * q - hi - lo, hi};
}

}  // namespace onepmac
