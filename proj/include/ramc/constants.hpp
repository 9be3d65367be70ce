#pragma once

namespace ramc {

// Mathematical constants used throughout the library, correct to the last
// double-precision digit.
struct ConstantSet {
  double euler_gamma;    // gamma = -psi(1)
  double pi;
  double ln2;
  double zeta3;          // zeta(3)
  double pi_sq_over_6;   // pi^2/6 = psi'(1)
};

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi         = 3.14159265358979323846264338327950288;
inline constexpr double kLn2        = 0.69314718055994530941723212145817657;
inline constexpr double kZeta3      = 1.20205690315959428539973816151144999;
inline constexpr double kPiSqOver6  = 1.64493406684822643647241516664602519;

inline const ConstantSet& constants() {
  static const ConstantSet cs{kEulerGamma, kPi, kLn2, kZeta3, kPiSqOver6};
  return cs;
}

}  // namespace ramc
