#pragma once

// Physical constants (CODATA 2018 exact/recommended values), SI units.
// This is the single constants table; everything else derives from it.

namespace cnf::constants {

inline constexpr double hbar = 1.054571817e-34;    // J s
inline constexpr double q_e  = 1.602176634e-19;    // C (exact)
inline constexpr double m_e  = 9.1093837015e-31;   // kg
inline constexpr double eps0 = 8.8541878128e-12;   // F/m
inline constexpr double c0   = 299792458.0;        // m/s (exact)

inline constexpr double eV = q_e;                  // J per electronvolt
inline constexpr double nm = 1e-9;                 // m per nanometre

// Graphene defaults: lattice constant and nearest-neighbor hopping.
inline constexpr double lattice_a_nm   = 0.246;
inline constexpr double gamma0_default = 2.89;     // eV

inline constexpr double pi = 3.14159265358979323846;

} // namespace cnf::constants
