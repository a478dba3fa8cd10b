// Shared scalar/matrix aliases and numerical tolerances.

#pragma once

#include <complex>
#include <cmath>

#include <Eigen/Dense>

namespace szsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;

inline constexpr const char* kVersion = "0.1.0";

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Column-stochasticity gate for transition matrices.
inline constexpr double kStochasticTol = 1e-10;
// State-normalization invariant asserted by tests after each operation.
inline constexpr double kNormTol = 1e-10;
// Runtime guard for state construction and measurement (looser: long runs drift).
inline constexpr double kNormGuardTol = 1e-6;
// Unitarity gate for coins and dense operators.
inline constexpr double kUnitaryTol = 1e-10;
// Default clustering tolerance for "eigenvalue equals -1" in coin classification.
inline constexpr double kEigenClusterTol = 1e-8;
// Emitted probability distributions must sum to 1 within this.
inline constexpr double kDistributionTol = 1e-9;

// Reduce an angle to [0, 2*pi).
inline double reduce_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

// Distance between two angles on the circle, in [0, pi].
inline double angle_distance(double a, double b) {
    double d = std::fabs(reduce_angle(a) - reduce_angle(b));
    return d > kPi ? kTwoPi - d : d;
}

}  // namespace szsim
