#include "cnf/optical_matrix.hpp"

#include <cmath>

#include "cnf/errors.hpp"

namespace cnf {

namespace {
const double kSqrt3 = std::sqrt(3.0);
const cplx kI(0.0, 1.0);

// conduction-bra / valence-ket coefficient products for the two
// sublattice orderings
struct CoeffPair {
  cplx acs_bv; // cA^{c*}(k') cB^{v}(k)
  cplx bcs_av; // cB^{c*}(k') cA^{v}(k)
};

CoeffPair coeff_pair(const ZigzagTube& tube, const KPoint& k_out,
                     const KPoint& k_in) {
  const BandCoefficients out =
      band_coefficients(k_out, Band::conduction, tube.params, tube.lattice);
  const BandCoefficients in =
      band_coefficients(k_in, Band::valence, tube.params, tube.lattice);
  return {std::conj(out.cA) * in.cB, std::conj(out.cB) * in.cA};
}

} // namespace

MatrixElementM matrix_element_M(const TBParams& p,
                                const LatticeConstants& lat) {
  using namespace constants;
  // SI evaluation, reported per nanometre
  const double value_si =
      2.0 * (lat.a * nm) * (p.gamma0 * eV) * m_e / (hbar * hbar * kSqrt3);
  return {value_si * nm};
}

TransitionAmplitude dz_diagonal(const ZigzagTube& tube, int mu,
                                double k_par) {
  const KPoint k = map_to_sheet(tube, mu, k_par);
  const cplx phi = structure_factor(k, tube.lattice);
  const double abs_phi = std::abs(phi);
  if (abs_phi < 1e-9) {
    throw DiracPointError("dz_diagonal: |phi| ~ 0");
  }
  const double u = tube.params.u;
  const double root = std::sqrt(1.0 - u * u * abs_phi * abs_phi);
  const VelocitySums v = neighbor_velocity_sums(k, tube.lattice);
  const double M = matrix_element_M(tube.params, tube.lattice).value;
  const double a = tube.lattice.a;
  const double val =
      -(M * kSqrt3 / a) * std::real(v.vA[0] * std::conj(phi)) /
      (abs_phi * root);
  return {cplx(val, 0.0)};
}

TransitionAmplitude dz_full(const ZigzagTube& tube, int mu_out,
                            double k_par_out, int mu_in, double k_par_in) {
  const KPoint ko = map_to_sheet(tube, mu_out, k_par_out);
  const KPoint ki = map_to_sheet(tube, mu_in, k_par_in);
  const CoeffPair c = coeff_pair(tube, ko, ki);
  const double a = tube.lattice.a;
  const int n = tube.n;
  const double dkx = ko.kx - ki.kx;
  const double dky = ko.ky - ki.ky;
  const cplx vz = neighbor_velocity_sums(ki, tube.lattice).vA[0];
  // second atom of each column sits at (sqrt3/2, 1/2) a from the first
  const cplx pair = 1.0 + std::exp(-kI * (a * (dkx * kSqrt3 / 2.0 +
                                               dky * 0.5)));
  const cplx b_shift = std::exp(kI * (a * (ki.kx - ko.kx) / kSqrt3));
  cplx sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    const cplx pj = std::exp(-kI * (static_cast<double>(j) * a * dky));
    sum += pj * pair * (c.acs_bv * vz - c.bcs_av * b_shift * std::conj(vz));
  }
  const double M = matrix_element_M(tube.params, tube.lattice).value;
  return {M * kSqrt3 / (2.0 * a * n) * sum};
}

CurvatureParams curvature_params(const ZigzagTube& tube, const KPoint& k,
                                 bool sublattice_B) {
  const double a = tube.lattice.a;
  const int n = tube.n;
  // B-sublattice neighbors are the negated A neighbors; only the two
  // inclined neighbor vectors carry a circumferential step of +-pi/n
  const double x_off = (sublattice_B ? 1.0 : -1.0) * a / (2.0 * kSqrt3);
  const cplx e_minus = std::exp(-kI * (constants::pi / n)) - 1.0;
  const cplx e_plus = std::exp(kI * (constants::pi / n)) - 1.0;
  const cplx ph_dn = std::exp(kI * (k.kx * x_off - k.ky * a * 0.5));
  const cplx ph_up = std::exp(kI * (k.kx * x_off + k.ky * a * 0.5));
  CurvatureParams v;
  v.v_plus = ph_dn * e_minus + ph_up * e_plus;
  v.v_minus = ph_dn * e_plus + ph_up * e_minus;
  return v;
}

cplx curvature_v(const CurvatureParams& v, double radius, double theta,
                 Axis axis) {
  const cplx up = std::exp(kI * theta) * v.v_plus;
  const cplx dn = std::exp(-kI * theta) * v.v_minus;
  if (axis == Axis::x) return radius * (up + dn) / 2.0;
  return radius * (up - dn) / (2.0 * kI);
}

TransitionAmplitude dxy_full(const ZigzagTube& tube, int mu_out,
                             double k_par_out, int mu_in, double k_par_in,
                             Axis axis) {
  const KPoint ko = map_to_sheet(tube, mu_out, k_par_out);
  const KPoint ki = map_to_sheet(tube, mu_in, k_par_in);
  const CoeffPair c = coeff_pair(tube, ko, ki);
  const double a = tube.lattice.a;
  const int n = tube.n;
  const double Rt = tube.radius;
  const double dkx = ko.kx - ki.kx;
  const double dky = ko.ky - ki.ky;
  const CurvatureParams vA = curvature_params(tube, ki, false);
  const CurvatureParams vB = curvature_params(tube, ki, true);
  // Bloch phases of the four atoms of a column relative to its first
  // A atom: A2 at (sqrt3/2, 1/2) a, B1 at (1/sqrt3, 0) a, B2 at
  // (5/(2 sqrt3), 1/2) a.
  const cplx pA2 = std::exp(-kI * (a * (dkx * kSqrt3 / 2.0 + dky * 0.5)));
  const cplx pB1 = std::exp(-kI * (a * dkx / kSqrt3));
  const cplx pB2 =
      std::exp(-kI * (a * (dkx * 5.0 / (2.0 * kSqrt3) + dky * 0.5)));
  cplx sum = 0.0;
  for (int j = 1; j <= n; ++j) {
    const cplx pj = std::exp(-kI * (static_cast<double>(j) * a * dky));
    const double t1 = 2.0 * constants::pi * j / n;
    const double t2 = 2.0 * constants::pi * (j + 0.5) / n;
    const cplx termA =
        c.acs_bv * (curvature_v(vA, Rt, t1, axis) * pj +
                    curvature_v(vA, Rt, t2, axis) * pj * pA2);
    const cplx termB =
        c.bcs_av * (curvature_v(vB, Rt, t1, axis) * pj * pB1 +
                    curvature_v(vB, Rt, t2, axis) * pj * pB2);
    sum += termA - termB;
  }
  const double M = matrix_element_M(tube.params, tube.lattice).value;
  return {M * kSqrt3 / (2.0 * a * n) * sum};
}

} // namespace cnf
