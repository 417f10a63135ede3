#include "qoalab/spectral.hpp"

namespace qoalab {

Real hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return kPlusInfinity;
  const Real scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

bool is_hermitian(const Matrix& m, Real tol) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

SpectralDecomposition eig_hermitian(const Matrix& h, Real herm_tol) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("eig_hermitian: matrix is not square");
  }
  if (hermiticity_defect(h) > herm_tol) {
    throw std::invalid_argument(
        "eig_hermitian: input is not Hermitian within tolerance");
  }
  // Symmetrize before factorizing so tiny round-off asymmetry cannot leak
  // into the eigenbasis.
  const Matrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix support_projection(const SpectralDecomposition& eig, Real tol) {
  const Index n = eig.dim();
  const Real top = eig.eigenvalues.size() ? eig.eigenvalues.maxCoeff() : 0.0;
  Matrix proj = Matrix::Zero(n, n);
  if (top <= 0.0) return proj;
  const Real cut = tol * top;
  for (Index i = 0; i < n; ++i) {
    if (eig.eigenvalues(i) > cut) {
      proj.noalias() +=
          eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint();
    }
  }
  return proj;
}

Matrix support_projection(const Matrix& rho, Real tol) {
  return support_projection(eig_hermitian(rho), tol);
}

}  // namespace qoalab
