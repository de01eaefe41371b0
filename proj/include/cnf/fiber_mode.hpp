#pragma once

#include <array>
#include <complex>

#include "cnf/constants.hpp"
#include "cnf/graphene.hpp"

// Fundamental guided mode of a step-index nanofiber and the coherent
// beam's vector potential. Geometry is specified in nm at the API; the
// solved wave quantities (beta, h, q_f, norm_A, beta_prime) are SI so
// the absorption exponent comes out dimensionless without further
// conversion factors.

namespace cnf {

struct FiberSpec {
  double radius = 125.0; // nm
  double n_core = 1.45;
  double n_clad = 1.0;
};

void validate(const FiberSpec& spec);

struct GuidedMode {
  double omega = 0.0;      // rad/s
  double beta = 0.0;       // 1/m
  double h = 0.0;          // 1/m, transverse wavenumber inside
  double q_f = 0.0;        // 1/m, decay constant outside
  double g = 0.0;          // dimensionless profile parameter
  int f = 1;               // propagation direction, +-1
  int p = 1;               // circular polarization, +-1
  double norm_A = 0.0;     // m^2, profile normalization integral
  double beta_prime = 0.0; // s/m, d(beta)/d(omega)
  bool multi_mode = false; // additional eigenvalue roots were present
};

// Complex cylindrical field components (e_r, e_phi, e_z); e_r is purely
// imaginary, e_phi and e_z real for real g.
struct ModeProfile {
  cplx e_r;
  cplx e_phi;
  cplx e_z;
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

struct FieldSample {
  std::array<cplx, 3> A_plus; // Cartesian vector potential, V s / m
  Vec3 position;              // nm
};

// Residual of the guided-mode eigenvalue equation at propagation
// constant beta (1/m) for vacuum wavenumber k (1/m). Zero on-shell.
double eigenvalue_residual(const FiberSpec& spec, double beta, double k);

// Solve for the fundamental mode at the given vacuum wavelength (nm).
// beta is bracketed in (n_clad k, n_core k); a 4096-point scan finds the
// sign change (sign changes across poles of the eigenvalue function are
// discarded by a residual check) and bisection refines to 1e-14
// relative. beta_prime comes from re-solving at omega(1 +- 1e-6).
// Throws NoGuidedModeError when no root survives.
GuidedMode solve_eigenvalue(const FiberSpec& spec, double wavelength,
                            int f = 1, int p = 1);

// Piecewise Bessel profile at radial distance r (nm). phi_az is accepted
// for interface symmetry; the components are azimuth-independent (the
// e^{i p phi} factor is applied by vector_potential).
ModeProfile mode_profile(const GuidedMode& mode, const FiberSpec& spec,
                         double r, double phi_az = 0.0);

// norm_A = 2 pi [ n1^2 int_0^R + n2^2 int_R^inf ] |e|^2 r dr, in m^2.
double normalization(const GuidedMode& mode, const FiberSpec& spec);

// A+ = sqrt(F hbar beta' / (2 omega eps0 A)) e(r) e^{i(f beta z + p phi)}
// at a Cartesian point given in nm; flux F in photons/s.
FieldSample vector_potential(const GuidedMode& mode, const FiberSpec& spec,
                             double flux, const Vec3& point);

// Uniform plane-wave potential A+ = sqrt(F hbar / (2 omega eps0 c A'))
// along the given unit polarization; cross-section area in nm^2.
FieldSample plane_wave_potential(double flux, double omega0,
                                 double area_nm2, const Vec3& polarization,
                                 const Vec3& point = Vec3{});

} // namespace cnf
