#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

namespace onepmac {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

double hermiticity_defect(const CMatrix& m);

// Eigenvalues (ascending) of a Hermitian matrix by cyclic Jacobi rotations on
// the real symmetric embedding [[Re, -Im], [Im, Re]]. Throws NotHermitian if
// the defect exceeds `herm_tol`.
std::vector<double> hermitian_eigenvalues(const CMatrix& m, double herm_tol = 1e-10);

// Unit eigenvector for the smallest eigenvalue (same solver).
CVector lowest_eigenvector(const CMatrix& m, double herm_tol = 1e-10);

double trace_norm(const CMatrix& m, double herm_tol = 1e-10);

// Closed-form eigenvalues of a 3x3 Hermitian matrix stored contiguously (row-
// or column-major give the same result), ascending. Used in dense
// phase scans.
std::array<double, 3> hermitian_eigenvalues_3x3(const cplx* m);

}  // namespace onepmac
