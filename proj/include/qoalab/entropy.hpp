#pragma once

#include <vector>

#include "qoalab/spectral.hpp"
#include "qoalab/types.hpp"

namespace qoalab {

struct EntropyOptions {
  // Eigenvalues below support_tol times the largest eigenvalue are treated
  // as zero when forming supports and logarithms.
  Real support_tol = 1e-10;
  // Negative eigenvalues beyond this (relative) tolerance reject the input.
  Real psd_tol = 1e-10;
};

// Umegaki relative entropy Tr(rho log rho - rho log sigma) in nats, with the
// convention 0 log 0 = 0. Returns +infinity when the support of rho is not
// contained in the support of sigma. Inputs are positive matrices; traces
// need not be one, so unnormalized blocks of a density are accepted.
ExtendedReal relative_entropy(const Matrix& rho, const Matrix& sigma,
                              const EntropyOptions& opts = {});

// Variant reusing a precomputed eigensystem of sigma.
ExtendedReal relative_entropy(const SpectralDecomposition& rho_eig,
                              const SpectralDecomposition& sigma_eig,
                              const EntropyOptions& opts = {});

// Tr(rho log rho) over the support of rho.
Real entropy_trace_term(const SpectralDecomposition& rho_eig,
                        const EntropyOptions& opts = {});

// Holevo chi of an ensemble of density matrices on a common space:
// sum_x p_x S(rho_x, rho) with rho the barycenter. Throws when a member of
// positive weight escapes the barycenter support, which cannot happen for
// valid inputs and signals numerical breakdown.
Real holevo_chi(const std::vector<Real>& weights,
                const std::vector<Matrix>& members,
                const EntropyOptions& opts = {});

}  // namespace qoalab
