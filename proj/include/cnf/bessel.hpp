#pragma once

#include <cmath>

// Cylinder functions J0..J2, K0..K2 and the first-kind/modified first
// derivatives needed by the fiber mode solver. Thin wrappers over the
// C++17 special math functions in libstdc++; measured relative accuracy
// is better than 5e-14 on x in (0, 50] against high-precision references
// (see tests/test_fiber_mode.cpp for the frozen table).

namespace cnf::bessel {

inline double J0(double x) { return std::cyl_bessel_j(0.0, x); }
inline double J1(double x) { return std::cyl_bessel_j(1.0, x); }
inline double J2(double x) { return std::cyl_bessel_j(2.0, x); }

inline double K0(double x) { return std::cyl_bessel_k(0.0, x); }
inline double K1(double x) { return std::cyl_bessel_k(1.0, x); }
inline double K2(double x) { return std::cyl_bessel_k(2.0, x); }

// J1'(x) = (J0 - J2)/2, K1'(x) = -(K0 + K2)/2
inline double J1p(double x) { return 0.5 * (J0(x) - J2(x)); }
inline double K1p(double x) { return -0.5 * (K0(x) + K2(x)); }

} // namespace cnf::bessel
