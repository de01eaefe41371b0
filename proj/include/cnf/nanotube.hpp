#pragma once

#include <vector>

#include "cnf/graphene.hpp"

// Zigzag (n,0) tube geometry and zone folding. A subband is a cutting
// line k_perp = 2 pi mu / (n a) with mu in (-n, n]; k_par runs over
// (-pi/|T|, pi/|T|) with |T| = sqrt(3) a.

namespace cnf {

struct ZigzagTube {
  int n = 0;
  double radius = 0.0;      // nm, a n / (2 pi)
  double cell_length = 0.0; // nm, |T| = sqrt(3) a
  int n_subbands = 0;       // 2n (mu = -n+1 .. n)
  TBParams params;
  LatticeConstants lattice;

  double k_par_max() const { return constants::pi / cell_length; } // 1/nm
  double k_perp(int mu) const {
    return 2.0 * constants::pi * mu / (n * lattice.a);
  }
};

// Throws cnf::Error for n < 2 or invalid params.
ZigzagTube make_zigzag(int n, TBParams params = TBParams{});

// (n,0) is metallic iff n is a multiple of three.
bool is_semiconducting(int n);

struct SubbandState {
  int mu = 0;
  double k_par = 0.0; // 1/nm
  Band band = Band::conduction;
};

// Graphene 2D k-point of a tube state (kx = k_par, ky = k_perp(mu)).
KPoint map_to_sheet(const ZigzagTube& tube, int mu, double k_par);

// Band energy of the folded state, eV.
double subband_energy(const ZigzagTube& tube, const SubbandState& state);

// Direct transition energy E+ - E- >= 0, eV.
double transition_energy(const ZigzagTube& tube, int mu, double k_par);

struct BandEdge {
  int mu;
  double energy; // eV, min over k_par of the transition energy
  double k_par;  // 1/nm, location of the minimum
};

// Van Hove edges: per-mu minima of the transition energy, sorted
// ascending by energy. Requires a semiconducting tube.
std::vector<BandEdge> band_edges(const ZigzagTube& tube);

} // namespace cnf
