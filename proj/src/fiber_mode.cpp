#include "cnf/fiber_mode.hpp"

#include <cmath>
#include <vector>

#include "cnf/bessel.hpp"
#include "cnf/errors.hpp"
#include "cnf/quadrature.hpp"
#include "cnf/roots.hpp"

namespace cnf {

namespace {

using namespace cnf::bessel;
const cplx kI(0.0, 1.0);

struct WaveParams {
  double h, q, hR, qR;
};

WaveParams wave_params(const FiberSpec& spec, double beta, double k) {
  const double R = spec.radius * constants::nm;
  WaveParams w;
  w.h = std::sqrt(spec.n_core * spec.n_core * k * k - beta * beta);
  w.q = std::sqrt(beta * beta - spec.n_clad * spec.n_clad * k * k);
  w.hR = w.h * R;
  w.qR = w.q * R;
  return w;
}

// Single bisection-ready solve of the eigenvalue equation for one omega.
double solve_beta(const FiberSpec& spec, double k, bool* multi) {
  const double lo = spec.n_clad * k * (1.0 + 1e-9);
  const double hi = spec.n_core * k * (1.0 - 1e-9);
  auto fn = [&](double b) { return eigenvalue_residual(spec, b, k); };
  const int scan = 4096;
  std::vector<double> roots;
  double prev_b = lo;
  double prev_v = fn(lo);
  for (int i = 1; i <= scan; ++i) {
    const double b = lo + (hi - lo) * i / scan;
    const double v = fn(b);
    if (std::isfinite(prev_v) && std::isfinite(v) &&
        (prev_v < 0.0) != (v < 0.0)) {
      const double r = roots::bisect(fn, prev_b, b, 1e-15);
      // sign changes across Bessel-zero poles have a large residual
      if (std::abs(fn(r)) < 1e-6) roots.push_back(r);
    }
    prev_b = b;
    prev_v = v;
  }
  if (roots.empty()) {
    throw NoGuidedModeError("solve_eigenvalue: no root in the bracket");
  }
  if (multi) *multi = roots.size() > 1;
  return roots.front();
}

} // namespace

void validate(const FiberSpec& spec) {
  if (!(spec.radius > 0.0)) throw Error("FiberSpec: radius must be > 0");
  if (!(spec.n_core > spec.n_clad && spec.n_clad >= 1.0)) {
    throw Error("FiberSpec: need n_core > n_clad >= 1");
  }
}

double eigenvalue_residual(const FiberSpec& spec, double beta, double k) {
  const WaveParams w = wave_params(spec, beta, k);
  const double n1 = spec.n_core, n2 = spec.n_clad;
  const double kk = K1p(w.qR) / (w.qR * K1(w.qR));
  const double lhs = J0(w.hR) / (w.hR * J1(w.hR));
  const double s1 = (n1 * n1 - n2 * n2) / (2.0 * n1 * n1) * kk;
  const double s2 = beta * beta / (n1 * n1 * k * k) *
                    std::pow(1.0 / (w.qR * w.qR) + 1.0 / (w.hR * w.hR), 2);
  const double rhs = -(n1 * n1 + n2 * n2) / (2.0 * n1 * n1) * kk +
                     1.0 / (w.hR * w.hR) - std::sqrt(s1 * s1 + s2);
  return lhs - rhs;
}

GuidedMode solve_eigenvalue(const FiberSpec& spec, double wavelength, int f,
                            int p) {
  validate(spec);
  if (!(wavelength > 0.0)) throw Error("solve_eigenvalue: wavelength <= 0");
  if (f != 1 && f != -1) throw Error("solve_eigenvalue: f must be +-1");
  if (p != 1 && p != -1) throw Error("solve_eigenvalue: p must be +-1");
  const double lam = wavelength * constants::nm;
  const double k = 2.0 * constants::pi / lam;
  const double omega = constants::c0 * k;

  GuidedMode m;
  m.omega = omega;
  m.f = f;
  m.p = p;
  m.beta = solve_beta(spec, k, &m.multi_mode);
  const WaveParams w = wave_params(spec, m.beta, k);
  m.h = w.h;
  m.q_f = w.q;
  m.g = (1.0 / (w.qR * w.qR) + 1.0 / (w.hR * w.hR)) /
        (J1p(w.hR) / (w.hR * J1(w.hR)) + K1p(w.qR) / (w.qR * K1(w.qR)));

  // group slowness d(beta)/d(omega) by centered difference on re-solves
  const double dw = 1e-6 * omega;
  const double b_lo = solve_beta(spec, (omega - dw) / constants::c0, nullptr);
  const double b_hi = solve_beta(spec, (omega + dw) / constants::c0, nullptr);
  m.beta_prime = (b_hi - b_lo) / (2.0 * dw);

  m.norm_A = normalization(m, spec);
  return m;
}

ModeProfile mode_profile(const GuidedMode& mode, const FiberSpec& spec,
                         double r, double /*phi_az*/) {
  const double R = spec.radius * constants::nm;
  const double r_m = r * constants::nm;
  const double g = mode.g;
  const double p = mode.p;
  const double f = mode.f;
  ModeProfile e;
  if (r_m < R) {
    const double amp = mode.q_f * K1(mode.q_f * R) / (mode.h * J1(mode.h * R));
    const double j0 = J0(mode.h * r_m), j2 = J2(mode.h * r_m);
    e.e_r = kI * (amp * ((1.0 - g) * j0 - (1.0 + g) * j2));
    e.e_phi = -p * amp * ((1.0 - g) * j0 + (1.0 + g) * j2);
    e.e_z = f * 2.0 * mode.q_f * K1(mode.q_f * R) /
            (mode.beta * J1(mode.h * R)) * J1(mode.h * r_m);
  } else {
    const double k0 = K0(mode.q_f * r_m), k2 = K2(mode.q_f * r_m);
    e.e_r = kI * ((1.0 - g) * k0 + (1.0 + g) * k2);
    e.e_phi = -p * ((1.0 - g) * k0 - (1.0 + g) * k2);
    e.e_z = f * 2.0 * mode.q_f / mode.beta * K1(mode.q_f * r_m);
  }
  return e;
}

double normalization(const GuidedMode& mode, const FiberSpec& spec) {
  const double R = spec.radius * constants::nm;
  auto dens = [&](double r_m) {
    const ModeProfile e = mode_profile(mode, spec, r_m / constants::nm);
    const double e2 = std::norm(e.e_r) + std::norm(e.e_phi) + std::norm(e.e_z);
    return e2 * r_m;
  };
  const double inner = quad::adaptive(dens, 0.0, R, 1e-9);
  // K_nu decays as e^{-q r}; 40 decay lengths is past the 1e-16 floor
  const double outer = quad::adaptive(dens, R, R + 40.0 / mode.q_f, 1e-9);
  return 2.0 * constants::pi *
         (spec.n_core * spec.n_core * inner +
          spec.n_clad * spec.n_clad * outer);
}

FieldSample vector_potential(const GuidedMode& mode, const FiberSpec& spec,
                             double flux, const Vec3& point) {
  if (!(flux > 0.0)) throw Error("vector_potential: flux must be > 0");
  using namespace constants;
  const double x = point.x * nm, y = point.y * nm, z = point.z * nm;
  const double r = std::hypot(x, y);
  const double phi_az = std::atan2(y, x);
  const ModeProfile e = mode_profile(mode, spec, r / nm);
  const double pref = std::sqrt(flux * hbar * mode.beta_prime /
                                (2.0 * mode.omega * eps0 * mode.norm_A));
  const cplx phase =
      std::exp(kI * (mode.f * mode.beta * z + mode.p * phi_az));
  const cplx ar = pref * phase * e.e_r;
  const cplx ap = pref * phase * e.e_phi;
  FieldSample s;
  const double c = std::cos(phi_az), sn = std::sin(phi_az);
  s.A_plus = {ar * c - ap * sn, ar * sn + ap * c, pref * phase * e.e_z};
  s.position = point;
  return s;
}

FieldSample plane_wave_potential(double flux, double omega0, double area_nm2,
                                 const Vec3& polarization,
                                 const Vec3& point) {
  if (!(flux > 0.0 && area_nm2 > 0.0)) {
    throw Error("plane_wave_potential: flux and area must be > 0");
  }
  using namespace constants;
  const double area = area_nm2 * nm * nm;
  const double norm = std::hypot(polarization.x,
                                 std::hypot(polarization.y, polarization.z));
  if (!(norm > 0.0)) throw Error("plane_wave_potential: zero polarization");
  const double amp = std::sqrt(flux * hbar / (2.0 * omega0 * eps0 * c0 * area));
  FieldSample s;
  s.A_plus = {cplx(amp * polarization.x / norm),
              cplx(amp * polarization.y / norm),
              cplx(amp * polarization.z / norm)};
  s.position = point;
  return s;
}

} // namespace cnf
