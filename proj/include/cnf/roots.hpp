#pragma once

#include <cmath>
#include <utility>

namespace cnf::roots {

// Bisection on a bracketing interval [lo, hi] (f(lo) and f(hi) of opposite
// sign). Runs to relative interval width rel_tol, which for doubles
// terminates in at most ~60 halvings.
template <class F>
double bisect(F&& f, double lo, double hi, double rel_tol = 1e-15) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * (std::abs(lo) + std::abs(hi)) || mid <= lo ||
        mid >= hi) {
      return mid;
    }
    double fm = f(mid);
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section minimization on [a, b]; assumes a single interior
// minimum (used after a coarse grid scan has isolated it).
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b,
                                     double xtol = 1e-12) {
  const double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

} // namespace cnf::roots
