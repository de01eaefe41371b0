#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

// Adaptive quadrature on Gauss-Kronrod 7-15 panels with global error
// control: the worst panel (largest error estimate) is split until the
// summed error estimate meets the requested tolerance. Integrable
// endpoint singularities (inverse square root) converge because the
// panel containing the singular point keeps shrinking geometrically.

namespace cnf::quad {

namespace detail {

// 15-point Kronrod abscissae on [-1, 1] (positive half; node 7 is 0)
// and weights, with the embedded 7-point Gauss weights.
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

} // namespace detail

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// One Gauss-Kronrod 7-15 evaluation over [a, b].
template <class F>
Panel gk15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * detail::xgk[i]);
    fv[14 - i] = f(c + h * detail::xgk[i]);
  }
  fv[7] = f(c);
  double kron = detail::wgk[7] * fv[7];
  double gauss = detail::wg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kron += detail::wgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += detail::wg[i / 2] * (fv[i] + fv[14 - i]);
  }
  kron *= h;
  gauss *= h;
  return Panel{a, b, kron, std::abs(kron - gauss)};
}

// Integrate f over [a, b] to the requested tolerance. Error control is
// max(abs_tol, rel_tol*|result|) on the summed panel error estimates.
template <class F>
double adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                double abs_tol = 0.0, std::size_t max_panels = 4000) {
  if (a == b) return 0.0;
  std::priority_queue<Panel> panels;
  Panel whole = gk15(f, a, b);
  double total = whole.value;
  double err = whole.error;
  panels.push(whole);
  while (panels.size() < max_panels) {
    double bound = std::max(abs_tol, rel_tol * std::abs(total));
    if (err <= bound) break;
    Panel worst = panels.top();
    panels.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break; // panel at rounding limit
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  return total;
}

// Same, but with forced interior breakpoints (known kinks, resonances,
// Van Hove edges). Points outside (a, b) are ignored.
template <class F>
double adaptive_pts(F&& f, double a, double b, std::vector<double> pts,
                    double rel_tol = 1e-10, double abs_tol = 0.0,
                    std::size_t max_panels = 4000) {
  pts.push_back(a);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  double crude = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] < a || pts[i + 1] > b || pts[i] == pts[i + 1]) continue;
    crude += std::abs(gk15(f, pts[i], pts[i + 1]).value);
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] < a || pts[i + 1] > b || pts[i] == pts[i + 1]) continue;
    // share the budget so small segments are not over-resolved
    total += adaptive(f, pts[i], pts[i + 1], rel_tol,
                      std::max(abs_tol, 0.1 * rel_tol * crude), max_panels);
  }
  return total;
}

// Fixed-grid composite Simpson; n is rounded up to the next even count.
// Used by tests as an implementation-independent oracle and by the
// absorption engine for smooth periodic integrands with known scale.
template <class F>
double simpson(F&& f, double a, double b, std::size_t n) {
  if (n < 2) n = 2;
  if (n % 2 == 1) ++n;
  const double h = (b - a) / static_cast<double>(n);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < n; ++i) {
    sum += f(a + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

} // namespace cnf::quad
