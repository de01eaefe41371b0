#pragma once

#include <array>
#include <complex>

#include "cnf/constants.hpp"

// Nearest-neighbor tight binding for the graphene sheet, in the sheet
// frame adapted to zigzag tubes: x is the (future) tube axis, y the
// circumferential direction. The A->B neighbor vectors in this frame are
//   q1 = a (1/sqrt3, 0),  q2 = a (-1/(2 sqrt3), -1/2),  q3 = a (-1/(2 sqrt3), 1/2),
// the orientation that reproduces the standard closed form of |phi|
// with kx along the axis.

namespace cnf {

using cplx = std::complex<double>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct LatticeConstants {
  double a;                               // lattice constant, nm
  double a_c;                             // bond length a/sqrt(3), nm
  std::array<Vec2, 3> neighbor_vectors;   // A->B vectors, nm
};

LatticeConstants make_lattice(double a = constants::lattice_a_nm);
const LatticeConstants& default_lattice();

struct TBParams {
  double gamma0 = constants::gamma0_default; // hopping, eV; > 0
  double u = 0.0;                            // orbital overlap, in [0, 1/3)
};

// Throws cnf::Error on gamma0 <= 0 or u outside [0, 1/3).
void validate(const TBParams& p);

struct KPoint {
  double kx = 0.0; // 1/nm, along the tube axis
  double ky = 0.0; // 1/nm, around the circumference
};

enum class Band { valence, conduction };

struct BandCoefficients {
  cplx cA;
  cplx cB;
  Band band;
};

// phi(k) = sum_q e^{i k.q}
cplx structure_factor(const KPoint& k,
                      const LatticeConstants& lat = default_lattice());

// E+-(k) = +- gamma0 |phi| / (1 -+ u |phi|), in eV.
// Throws OverlapSingularityError if the denominator vanishes.
double band_energy(const KPoint& k, Band band, const TBParams& p,
                   const LatticeConstants& lat = default_lattice());

// Eigenvector coefficients of the generalized 2x2 problem, normalized
// against the overlap matrix (|cA|^2 + |cB|^2 = 1 when u = 0).
// Throws DiracPointError when |phi| < 1e-9.
BandCoefficients band_coefficients(const KPoint& k, Band band,
                                   const TBParams& p,
                                   const LatticeConstants& lat =
                                       default_lattice());

// vA = sum_q q e^{i k.q} (components in nm); vB = -conj(vA).
struct VelocitySums {
  std::array<cplx, 2> vA;
  std::array<cplx, 2> vB;
};

VelocitySums neighbor_velocity_sums(const KPoint& k,
                                    const LatticeConstants& lat =
                                        default_lattice());

} // namespace cnf
