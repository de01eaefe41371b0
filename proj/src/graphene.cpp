#include "cnf/graphene.hpp"

#include <cmath>

#include "cnf/errors.hpp"

namespace cnf {

namespace {
constexpr double kDiracTol = 1e-9;
const double kSqrt3 = std::sqrt(3.0);
} // namespace

LatticeConstants make_lattice(double a) {
  LatticeConstants lat;
  lat.a = a;
  lat.a_c = a / kSqrt3;
  lat.neighbor_vectors = {Vec2{a / kSqrt3, 0.0},
                          Vec2{-a / (2.0 * kSqrt3), -0.5 * a},
                          Vec2{-a / (2.0 * kSqrt3), 0.5 * a}};
  return lat;
}

const LatticeConstants& default_lattice() {
  static const LatticeConstants lat = make_lattice();
  return lat;
}

void validate(const TBParams& p) {
  if (!(p.gamma0 > 0.0)) throw Error("TBParams: gamma0 must be > 0");
  if (!(p.u >= 0.0 && p.u < 1.0 / 3.0)) {
    throw Error("TBParams: overlap u must lie in [0, 1/3)");
  }
}

cplx structure_factor(const KPoint& k, const LatticeConstants& lat) {
  cplx phi = 0.0;
  for (const Vec2& q : lat.neighbor_vectors) {
    phi += std::exp(cplx(0.0, k.kx * q.x + k.ky * q.y));
  }
  return phi;
}

double band_energy(const KPoint& k, Band band, const TBParams& p,
                   const LatticeConstants& lat) {
  const double abs_phi = std::abs(structure_factor(k, lat));
  const double sign = (band == Band::conduction) ? 1.0 : -1.0;
  const double denom = 1.0 - sign * p.u * abs_phi;
  if (std::abs(denom) < 1e-12) {
    throw OverlapSingularityError("band_energy: 1 -+ u|phi| vanishes");
  }
  return sign * p.gamma0 * abs_phi / denom;
}

BandCoefficients band_coefficients(const KPoint& k, Band band,
                                   const TBParams& p,
                                   const LatticeConstants& lat) {
  const cplx phi = structure_factor(k, lat);
  const double abs_phi = std::abs(phi);
  if (abs_phi < kDiracTol) {
    throw DiracPointError("band_coefficients: |phi| ~ 0 (band touching)");
  }
  const double sign = (band == Band::conduction) ? 1.0 : -1.0;
  const double denom = 2.0 * abs_phi * (1.0 - sign * p.u * abs_phi);
  if (denom <= 0.0) {
    throw OverlapSingularityError("band_coefficients: overlap denominator");
  }
  // principal complex square roots; the valence pair is (sqrt(phi/..),
  // sqrt(phi*/..)) and the conduction pair flips the sign of cA
  BandCoefficients out;
  out.band = band;
  out.cA = std::sqrt(phi / denom);
  out.cB = std::sqrt(std::conj(phi) / denom);
  if (band == Band::conduction) out.cA = -out.cA;
  return out;
}

VelocitySums neighbor_velocity_sums(const KPoint& k,
                                    const LatticeConstants& lat) {
  VelocitySums v;
  v.vA = {cplx(0.0), cplx(0.0)};
  for (const Vec2& q : lat.neighbor_vectors) {
    const cplx ph = std::exp(cplx(0.0, k.kx * q.x + k.ky * q.y));
    v.vA[0] += q.x * ph;
    v.vA[1] += q.y * ph;
  }
  v.vB = {-std::conj(v.vA[0]), -std::conj(v.vA[1])};
  return v;
}

} // namespace cnf
