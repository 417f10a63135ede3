#pragma once

#include <stdexcept>

#include "qoalab/types.hpp"

namespace qoalab {

// Eigensystem of a Hermitian matrix, eigenvalues sorted ascending and
// eigenvectors stored as orthonormal columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Index dim() const { return eigenvalues.size(); }

  Matrix reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
  }
};

// Hermiticity deviation relative to the largest entry magnitude.
Real hermiticity_defect(const Matrix& m);

bool is_hermitian(const Matrix& m, Real tol = 1e-12);

// Throws std::invalid_argument when the input fails the Hermiticity check.
SpectralDecomposition eig_hermitian(const Matrix& h, Real herm_tol = 1e-12);

// Orthogonal projection onto the span of eigenvectors with eigenvalue
// exceeding tol times the largest eigenvalue. The zero matrix maps to the
// zero projection.
Matrix support_projection(const Matrix& rho, Real tol);
Matrix support_projection(const SpectralDecomposition& eig, Real tol);

}  // namespace qoalab
