#include "cnf/nanotube.hpp"

#include <algorithm>
#include <cmath>

#include "cnf/errors.hpp"
#include "cnf/roots.hpp"

namespace cnf {

ZigzagTube make_zigzag(int n, TBParams params) {
  if (n < 2) throw Error("make_zigzag: need n >= 2");
  validate(params);
  ZigzagTube t;
  t.n = n;
  t.params = params;
  t.lattice = default_lattice();
  t.radius = t.lattice.a * n / (2.0 * constants::pi);
  t.cell_length = std::sqrt(3.0) * t.lattice.a;
  t.n_subbands = 2 * n;
  return t;
}

bool is_semiconducting(int n) {
  if (n < 2) throw Error("is_semiconducting: need n >= 2");
  return n % 3 != 0;
}

KPoint map_to_sheet(const ZigzagTube& tube, int mu, double k_par) {
  return KPoint{k_par, tube.k_perp(mu)};
}

double subband_energy(const ZigzagTube& tube, const SubbandState& state) {
  return band_energy(map_to_sheet(tube, state.mu, state.k_par), state.band,
                     tube.params, tube.lattice);
}

double transition_energy(const ZigzagTube& tube, int mu, double k_par) {
  const KPoint k = map_to_sheet(tube, mu, k_par);
  return band_energy(k, Band::conduction, tube.params, tube.lattice) -
         band_energy(k, Band::valence, tube.params, tube.lattice);
}

std::vector<BandEdge> band_edges(const ZigzagTube& tube) {
  if (!is_semiconducting(tube.n)) {
    throw MetallicTubeError("band_edges: tube is metallic");
  }
  const double kmax = tube.k_par_max();
  const int grid = 2048;
  std::vector<BandEdge> edges;
  edges.reserve(2 * tube.n);
  // E_g is even in k_par; scanning k_par >= 0 covers the zone. The
  // mu/-mu pair comes out bitwise identical (phi is even in k_perp).
  for (int mu = -tube.n + 1; mu <= tube.n; ++mu) {
    auto eg = [&](double k) { return transition_energy(tube, mu, k); };
    int best = 0;
    double best_e = eg(0.0);
    for (int i = 1; i < grid; ++i) {
      const double k = kmax * i / (grid - 1);
      const double e = eg(k);
      if (e < best_e) {
        best_e = e;
        best = i;
      }
    }
    BandEdge edge{mu, best_e, kmax * best / (grid - 1)};
    if (best > 0 && best < grid - 1) {
      auto [km, em] = roots::golden_min(eg, kmax * (best - 1) / (grid - 1),
                                        kmax * (best + 1) / (grid - 1),
                                        1e-12 * kmax);
      edge.k_par = km;
      edge.energy = em;
    }
    edges.push_back(edge);
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const BandEdge& l, const BandEdge& r) {
                     return l.energy < r.energy;
                   });
  return edges;
}

} // namespace cnf
