#pragma once

#include <stdexcept>
#include <utility>

#include "qoalab/spectral.hpp"
#include "qoalab/types.hpp"

namespace qoalab {

// Positive Hermitian matrix with unit trace, or a flagged sub-state with
// trace at most one. Validation happens at construction; the payload is
// immutable afterwards.
class DensityMatrix {
 public:
  struct Options {
    Real herm_tol = 1e-12;
    Real eig_floor = 1e-10;   // eigenvalues >= -eig_floor
    Real trace_tol = 1e-10;
    bool allow_substate = false;
  };

  static DensityMatrix from_matrix(Matrix m, const Options& opts = {}) {
    if (m.rows() != m.cols()) {
      throw std::invalid_argument("DensityMatrix: matrix is not square");
    }
    if (hermiticity_defect(m) > opts.herm_tol) {
      throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    const Real tr = m.trace().real();
    const SpectralDecomposition eig = eig_hermitian(m, opts.herm_tol);
    const Real scale = std::max(std::abs(tr), Real(1));
    if (eig.eigenvalues.minCoeff() < -opts.eig_floor * scale) {
      throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    }
    bool substate = false;
    if (std::abs(tr - 1.0) > opts.trace_tol) {
      if (opts.allow_substate && tr <= 1.0 + opts.trace_tol && tr >= 0.0) {
        substate = true;
      } else {
        throw std::invalid_argument("DensityMatrix: trace is not one");
      }
    }
    return DensityMatrix(std::move(m), substate);
  }

  const Matrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  Real trace() const { return mat_.trace().real(); }
  bool is_substate() const { return substate_; }

 private:
  DensityMatrix(Matrix m, bool substate)
      : mat_(std::move(m)), substate_(substate) {}

  Matrix mat_;
  bool substate_;
};

}  // namespace qoalab
