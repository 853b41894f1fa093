#pragma once

#include <cmath>

#include "barrmet/core.hpp"
#include "barrmet/metrics.hpp"

namespace barrmet {

/// Quantities entering the explicit half-plane lower bounds: alpha splits
/// [z1, conj(z2)] at the real axis, c is half the horizontal separation, and
/// the legs are the distances from z1, z2 to the midpoint of the real parts.
struct HalfplaneBoundInputs {
  double alpha;
  double c;
  double leg_a;
  double leg_b;
};

inline HalfplaneBoundInputs halfplane_bound_inputs(Complex z1, Complex z2) {
  detail::require_in_halfplane(z1, "halfplane_bound_inputs");
  detail::require_in_halfplane(z2, "halfplane_bound_inputs");
  double c = std::abs(z1.real() - z2.real()) / 2.0;
  return {z1.imag() / (z1.imag() + z2.imag()), c, std::hypot(z1.imag(), c),
          std::hypot(z2.imag(), c)};
}

/// T_p: the boundary objective evaluated at the triangular-ratio extremal
/// point, i.e. where [z1, conj(z2)] crosses the real axis. A lower bound for
/// b_{H,p}; equals s_H at p = 1.
inline double t_bound(double p, Complex z1, Complex z2) {
  if (!(p >= 1.0)) throw std::invalid_argument("t_bound: requires p >= 1");
  HalfplaneBoundInputs in = halfplane_bound_inputs(z1, z2);
  double sep = std::abs(z1 - z2);
  if (sep == 0.0) return 0.0;
  return sep / (std::abs(z1 - std::conj(z2)) * p_sum(in.alpha, 1.0 - in.alpha, p));
}

/// U_p: the boundary objective evaluated at the midpoint of the real parts.
/// A lower bound for b_{H,p}; exact when the real parts agree, and at least
/// T_p for p >= 2.
inline double u_bound(double p, Complex z1, Complex z2) {
  if (!(p >= 1.0)) throw std::invalid_argument("u_bound: requires p >= 1");
  HalfplaneBoundInputs in = halfplane_bound_inputs(z1, z2);
  double sep = std::abs(z1 - z2);
  if (sep == 0.0) return 0.0;
  return sep / p_sum(in.leg_a, in.leg_b, p);
}

}  // namespace barrmet
