#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <limits>

namespace qoalab {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Entropic quantities take values in the extended reals: a finite value in
// nats, or positive infinity for the off-support branch.
using ExtendedReal = double;

inline constexpr ExtendedReal kPlusInfinity =
    std::numeric_limits<double>::infinity();

inline bool is_finite(ExtendedReal v) { return std::isfinite(v); }

inline constexpr Real kLog2 = 0.6931471805599453094172321214581766;

inline Real nats_to_bits(Real nats) { return nats / kLog2; }

}  // namespace qoalab
