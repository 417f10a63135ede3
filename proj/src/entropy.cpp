#include "qoalab/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace qoalab {

namespace {

void check_positive(const SpectralDecomposition& eig, Real psd_tol,
                    const char* who) {
  if (eig.dim() == 0) return;
  const Real top = std::max(eig.eigenvalues.maxCoeff(), Real(0));
  const Real floor = -psd_tol * std::max(top, Real(1));
  if (eig.eigenvalues.minCoeff() < floor) {
    throw std::invalid_argument(std::string(who) +
                                ": negative eigenvalue beyond tolerance");
  }
}

}  // namespace

Real entropy_trace_term(const SpectralDecomposition& rho_eig,
                        const EntropyOptions& opts) {
  const Real top =
      rho_eig.dim() ? std::max(rho_eig.eigenvalues.maxCoeff(), Real(0)) : 0.0;
  if (top <= 0.0) return 0.0;
  const Real cut = opts.support_tol * top;
  Real acc = 0.0;
  for (Index i = 0; i < rho_eig.dim(); ++i) {
    const Real p = rho_eig.eigenvalues(i);
    if (p > cut) acc += p * std::log(p);
  }
  return acc;
}

ExtendedReal relative_entropy(const SpectralDecomposition& rho_eig,
                              const SpectralDecomposition& sigma_eig,
                              const EntropyOptions& opts) {
  const Index n = rho_eig.dim();
  if (sigma_eig.dim() != n) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }
  check_positive(rho_eig, opts.psd_tol, "relative_entropy(rho)");
  check_positive(sigma_eig, opts.psd_tol, "relative_entropy(sigma)");
  if (n == 0) return 0.0;

  const Real rho_top = std::max(rho_eig.eigenvalues.maxCoeff(), Real(0));
  if (rho_top <= 0.0) return 0.0;  // rho = 0 contributes nothing
  const Real sigma_top = std::max(sigma_eig.eigenvalues.maxCoeff(), Real(0));
  const Real rho_cut = opts.support_tol * rho_top;
  const Real sigma_cut = opts.support_tol * sigma_top;

  // Support containment: mass of rho outside supp(sigma) must vanish.
  // Off-support leakage is measured against dim * tol, relative to the
  // largest eigenvalue of rho.
  Real leak = 0.0;
  for (Index j = 0; j < n; ++j) {
    if (sigma_eig.eigenvalues(j) > sigma_cut) continue;
    // <v_j| rho |v_j> via the eigenbasis of rho.
    const Vector overlap = rho_eig.eigenvectors.adjoint() *
                           sigma_eig.eigenvectors.col(j);
    Real mass = 0.0;
    for (Index i = 0; i < n; ++i) {
      const Real p = rho_eig.eigenvalues(i);
      if (p > rho_cut) mass += p * std::norm(overlap(i));
    }
    leak += mass;
  }
  if (leak > static_cast<Real>(n) * opts.support_tol * rho_top) {
    return kPlusInfinity;
  }

  // Tr rho log rho on the support of rho.
  Real value = entropy_trace_term(rho_eig, opts);

  // Tr rho log sigma = sum_{i,j} p_i |<u_i|v_j>|^2 log q_j over supports.
  const Matrix cross = rho_eig.eigenvectors.adjoint() * sigma_eig.eigenvectors;
  for (Index i = 0; i < n; ++i) {
    const Real p = rho_eig.eigenvalues(i);
    if (p <= rho_cut) continue;
    for (Index j = 0; j < n; ++j) {
      const Real q = sigma_eig.eigenvalues(j);
      if (q <= sigma_cut) continue;
      value -= p * std::norm(cross(i, j)) * std::log(q);
    }
  }
  return value;
}

ExtendedReal relative_entropy(const Matrix& rho, const Matrix& sigma,
                              const EntropyOptions& opts) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }
  return relative_entropy(eig_hermitian(rho), eig_hermitian(sigma), opts);
}

Real holevo_chi(const std::vector<Real>& weights,
                const std::vector<Matrix>& members,
                const EntropyOptions& opts) {
  if (weights.size() != members.size()) {
    throw std::invalid_argument("holevo_chi: weights/members size mismatch");
  }
  if (members.empty()) return 0.0;
  const Index n = members.front().rows();
  Matrix barycenter = Matrix::Zero(n, n);
  for (std::size_t x = 0; x < members.size(); ++x) {
    if (members[x].rows() != n || members[x].cols() != n) {
      throw std::invalid_argument("holevo_chi: member dimension mismatch");
    }
    if (weights[x] < -1e-12) {
      throw std::invalid_argument("holevo_chi: negative weight");
    }
    barycenter.noalias() += weights[x] * members[x];
  }
  const SpectralDecomposition bary_eig = eig_hermitian(barycenter);
  Real chi = 0.0;
  for (std::size_t x = 0; x < members.size(); ++x) {
    if (weights[x] <= 0.0) continue;
    const ExtendedReal s =
        relative_entropy(eig_hermitian(members[x]), bary_eig, opts);
    if (!is_finite(s)) {
      throw std::logic_error(
          "holevo_chi: member support escapes the barycenter support "
          "(numerical breakdown)");
    }
    chi += weights[x] * s;
  }
  return chi;
}

}  // namespace qoalab
