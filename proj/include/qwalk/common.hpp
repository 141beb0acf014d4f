#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Malformed or out-of-contract input. The CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A numeric routine could not meet its accuracy contract. Exit code 1.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reduce an angle to [0, 2*pi).
inline double wrap_angle(double beta) {
  double b = std::fmod(beta, kTwoPi);
  if (b < 0.0) b += kTwoPi;
  // fmod can return exactly 2*pi after the correction when beta = -eps
  if (b >= kTwoPi) b -= kTwoPi;
  return b;
}

}  // namespace qwalk
