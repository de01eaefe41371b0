#pragma once

#include "cnf/fiber_mode.hpp"

// Arc-length parameterized nanotube center-lines relative to the fiber
// (fiber axis = z). Two families: straight lines tangent to the
// cylinder r = R_n, and helices wound on it.
//
// Conventions (these fix the signs that the paper leaves open):
//  - closest approach / contact point of a straight path is at s = 0,
//    azimuth 0, i.e. at (R_n, 0, 0);
//  - positive angle rotates the tube from the fiber axis toward +phi_hat
//    at the contact point; angle 0 is parallel, pi/2 perpendicular;
//  - positive winding W advances toward +phi_hat as z increases.

namespace cnf {

struct GeometryConfig {
  double gap = 1.25; // nm, fiber surface to tube center-line
  double r_n = 0.0;  // nm, center-line radial distance (R + gap)
};

// Builds the config and applies the clearance guard (gap >= 1 nm).
GeometryConfig make_geometry(const FiberSpec& spec, double gap = 1.25);

enum class PathKind { straight, helix };

struct PathPoint {
  Vec3 position; // nm
  Vec3 tangent;  // unit
};

struct NanotubePath {
  double length = 0.0; // nm, arc length
  PathKind kind = PathKind::straight;
  double angle = 0.0;   // rad (straight)
  double winding = 0.0; // 1/nm (helix)
  double r_n = 0.0;     // nm

  // s in [-length/2, length/2]
  PathPoint sample(double s) const;

  // z-span covered per unit arc length (cos of the helix angle for a
  // helix, |cos angle| for a straight path); used to size oscillatory
  // quadrature grids.
  double axial_rate() const;
};

NanotubePath straight_path(const FiberSpec& spec, const GeometryConfig& geo,
                           double angle, double length);

NanotubePath helix_path(const GeometryConfig& geo, double winding,
                        double length);

// W_opt = e_phi / (2 pi R_n e_z) at r = R_n, in 1/nm. Throws
// ZeroAxialFieldError if the axial component vanishes there.
double optimal_winding(const GuidedMode& mode, const FiberSpec& spec,
                       double r_n);

// Helix angle Phi_s = arctan(2 pi W R_n).
double helix_angle(double winding, double r_n);

} // namespace cnf
