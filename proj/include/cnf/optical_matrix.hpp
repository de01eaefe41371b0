#pragma once

#include "cnf/nanotube.hpp"

// Optical transition matrix elements between subband states. The axial
// amplitude D_z drives the absorption computation; the transverse D_x
// and D_y (which need the tube curvature) exist to verify the selection
// rules. All amplitudes are in nm^-1; computing in nm keeps the
// cancellation residue of forbidden channels ~1e-15, far below the
// 1e-10 selection-rule thresholds.

namespace cnf {

struct MatrixElementM {
  double value; // nm^-1
};

// M = 2 a gamma0 m_e / (hbar^2 sqrt(3))
MatrixElementM matrix_element_M(const TBParams& p,
                                const LatticeConstants& lat =
                                    default_lattice());

struct TransitionAmplitude {
  cplx d; // nm^-1
};

// Diagonal-subband axial amplitude,
//   D_z(k) = -(M sqrt3/a) Re( v_z^A(k) phi* / (|phi| sqrt(1 - u^2 |phi|^2)) ).
// Real by construction. Throws DiracPointError at band touchings.
TransitionAmplitude dz_diagonal(const ZigzagTube& tube, int mu, double k_par);

// Full axial amplitude between (mu_in, k_par_in) valence and
// (mu_out, k_par_out) conduction states: the j-sum over the ring of
// hexagon columns. Vanishes unless mu_out = mu_in (mod 2n); reduces to
// dz_diagonal at equal states.
TransitionAmplitude dz_full(const ZigzagTube& tube, int mu_out,
                            double k_par_out, int mu_in, double k_par_in);

enum class Axis { x, y };

// Transverse amplitudes from the curvature expansion. Nonzero only for
// mu_out = mu_in +- 1 (mod 2n).
TransitionAmplitude dxy_full(const ZigzagTube& tube, int mu_out,
                             double k_par_out, int mu_in, double k_par_in,
                             Axis axis);

// Curvature parameters for one sublattice at transverse momentum state k:
// (v_plus, v_minus) with v_x(theta) = R_t (e^{i theta} v_plus +
// e^{-i theta} v_minus)/2 and v_y(theta) the same combination over 2i
// with a relative minus sign. Exposed for the algebraic identity tests.
struct CurvatureParams {
  cplx v_plus;
  cplx v_minus;
};

CurvatureParams curvature_params(const ZigzagTube& tube, const KPoint& k,
                                 bool sublattice_B);

cplx curvature_v(const CurvatureParams& v, double radius, double theta,
                 Axis axis);

} // namespace cnf
