#pragma once

#include <cmath>
#include <numbers>

#include "barrmet/core.hpp"
#include "barrmet/geometry.hpp"
#include "barrmet/metrics.hpp"
#include "barrmet/numerics.hpp"
#include "barrmet/oracle.hpp"

namespace barrmet {

// The p-relative (Barrlund) distance
//
//   b_{G,p}(z1,z2) = sup over boundary z of |z1-z2| / (|z1-z|^p + |z-z2|^p)^(1/p)
//
// evaluated by closed form where one exists, by a guarded root solve or
// periodic scan otherwise, and by the boundary-sampling oracle as a last
// resort.

/// p = 2 for an arbitrary proper subdomain. Stewart's identity turns the
/// boundary infimum of |w-z1|^2 + |w-z2|^2 into 2 d^2(midpoint) + |z1-z2|^2/2,
/// which is exact even when the midpoint leaves the domain.
inline MetricResult b_p2_midpoint(const Domain& d, Complex z1, Complex z2) {
  if (!contains(d, z1) || !contains(d, z2))
    throw OutOfDomain("b_p2_midpoint: point not in the domain");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};
  Complex mid = 0.5 * (z1 + z2);
  double dm = boundary_distance(d, mid);
  double sep = std::abs(z1 - z2);
  double value = sep / std::sqrt(2.0 * dm * dm + 0.5 * sep * sep);
  return {value, nearest_boundary_point(d, mid), Method::ClosedForm, 0.0};
}

/// Closed form for the disk, p = 2: |z1-z2| / sqrt(2 + |z1|^2 + |z2|^2 - 2|z1+z2|).
inline MetricResult b_disk_p2_closed(Complex z1, Complex z2) {
  detail::require_in_disk(z1, "b_disk_p2_closed");
  detail::require_in_disk(z2, "b_disk_p2_closed");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};
  Complex s = z1 + z2;
  double den2 = 2.0 + std::norm(z1) + std::norm(z2) - 2.0 * std::abs(s);
  double value = std::abs(z1 - z2) / std::sqrt(std::max(den2, 0.0));
  Complex u = (s == Complex(0.0)) ? Complex(1.0, 0.0) : s / std::abs(s);
  return {value, u, Method::ClosedForm, 0.0};
}

/// Closed form for the half-plane, p = 2; the minimizing boundary point is
/// the midpoint of the real parts.
inline MetricResult b_halfplane_p2_closed(Complex z1, Complex z2) {
  detail::require_in_halfplane(z1, "b_halfplane_p2_closed");
  detail::require_in_halfplane(z2, "b_halfplane_p2_closed");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};
  double sep = std::abs(z1 - z2);
  double im = z1.imag() + z2.imag();
  double value = std::numbers::sqrt2 * sep / std::sqrt(sep * sep + im * im);
  return {value, Complex(0.5 * (z1.real() + z2.real()), 0.0), Method::ClosedForm, 0.0};
}

/// Half-plane, finite p. The boundary objective S_p(t) = |t-z1|^p + |t-z2|^p
/// is strictly convex; its unique critical point is bracketed by the real
/// parts and found by bisection on S_p'.
inline MetricResult b_halfplane_p(double p, Complex z1, Complex z2) {
  if (!(p >= 1.0)) throw std::invalid_argument("b_halfplane_p: requires p >= 1");
  detail::require_in_halfplane(z1, "b_halfplane_p");
  detail::require_in_halfplane(z2, "b_halfplane_p");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};

  const double x1 = z1.real(), x2 = z2.real();
  const double y1 = z1.imag(), y2 = z2.imag();
  if (x1 == x2) {
    double value = std::abs(y1 - y2) / p_sum(y1, y2, p);
    return {value, Complex(x1, 0.0), Method::ClosedForm, 0.0};
  }
  auto deriv = [&](double t) {
    return (t - x1) * std::pow(std::hypot(t - x1, y1), p - 2.0) +
           (t - x2) * std::pow(std::hypot(t - x2, y2), p - 2.0);
  };
  double t0 = bisect_root(deriv, Bracket{std::min(x1, x2), std::max(x1, x2)}, 1e-13);
  double value = std::abs(z1 - z2) / p_sum(std::hypot(t0 - x1, y1), std::hypot(t0 - x2, y2), p);
  return {value, Complex(t0, 0.0), Method::RootSolve, std::abs(deriv(t0))};
}

namespace detail {

// Critical-point expression for the circle objective at u = e^{i theta},
// principal branch of the complex power; zero at a true critical point.
// Used as a diagnostic only.
inline double circle_critical_residual(double p, Complex z1, Complex z2, Complex u) {
  Complex u2 = u * u;
  Complex a1 = (std::norm(z1) + 1.0) * u - std::conj(z1) * u2 - z1;
  Complex a2 = (std::norm(z2) + 1.0) * u - std::conj(z2) * u2 - z2;
  Complex t1 = std::pow(a1, 0.5 * p - 1.0) * (std::conj(z1) * u2 - z1);
  Complex t2 = std::pow(a2, 0.5 * p - 1.0) * (std::conj(z2) * u2 - z2);
  return std::abs(t1 + t2);
}

}  // namespace detail

/// Circle boundary (interior or exterior mode), finite p: minimizes
/// G(theta) = |z1-e^{i theta}|^p + |z2-e^{i theta}|^p by 512-point scan plus
/// golden-section refinement. The critical-point residual at the reported
/// minimizer is returned as a diagnostic.
inline MetricResult b_circle_p(bool exterior, double p, Complex z1, Complex z2) {
  if (!(p >= 1.0)) throw std::invalid_argument("b_circle_p: requires p >= 1");
  require_finite(z1, "b_circle_p");
  require_finite(z2, "b_circle_p");
  const char* who = exterior ? "b_circle_p (exterior)" : "b_circle_p (interior)";
  auto inside = [&](Complex z) { return exterior ? std::abs(z) > 1.0 : std::abs(z) < 1.0; };
  if (!inside(z1) || !inside(z2)) throw OutOfDomain(std::string(who) + ": point out of domain");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};

  auto g = [&](double theta) {
    Complex u = std::polar(1.0, theta);
    return std::pow(euclid(z1, u), p) + std::pow(euclid(z2, u), p);
  };
  auto [theta, gmin] = minimize_periodic(g, 512);
  Complex u = std::polar(1.0, theta);
  double value = std::abs(z1 - z2) / std::pow(gmin, 1.0 / p);
  return {value, u, Method::Scan, detail::circle_critical_residual(p, z1, z2, u)};
}

/// Half-plane, p = infinity. If the perpendicular bisector of [z1, z2] meets
/// the real axis strictly between the real parts, the minimizer is that
/// intersection; otherwise it is the foot of the point with the larger
/// imaginary part.
inline MetricResult b_halfplane_inf(Complex z1, Complex z2) {
  detail::require_in_halfplane(z1, "b_halfplane_inf");
  detail::require_in_halfplane(z2, "b_halfplane_inf");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};
  double dx = z1.real() - z2.real();
  if (dx != 0.0) {
    double zt = (std::norm(z1) - std::norm(z2)) / (2.0 * dx);
    double lo = std::min(z1.real(), z2.real());
    double hi = std::max(z1.real(), z2.real());
    if (lo < zt && zt < hi) {
      double value = 2.0 * std::abs(dx) / std::abs(z1 - std::conj(z2));
      return {value, Complex(zt, 0.0), Method::ClosedForm, 0.0};
    }
  }
  double ymax = std::max(z1.imag(), z2.imag());
  double foot = (z1.imag() >= z2.imag()) ? z1.real() : z2.real();
  return {std::abs(z1 - z2) / ymax, Complex(foot, 0.0), Method::ClosedForm, 0.0};
}

/// Unit disk, p = infinity. Either one focus sees a tangency of the inscribed
/// circle around its radial boundary point (value |z1-z2|/(1-min|z_k|)), or
/// the minimizer is an intersection of the perpendicular bisector of [z1, z2]
/// with the unit circle.
inline MetricResult b_disk_inf(Complex z1, Complex z2) {
  detail::require_in_disk(z1, "b_disk_inf");
  detail::require_in_disk(z2, "b_disk_inf");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};
  double r1 = std::abs(z1), r2 = std::abs(z2);
  double sep = std::abs(z1 - z2);
  if (r1 == 0.0 || r2 == 0.0) {
    Complex other = (r1 == 0.0) ? z2 : z1;
    return {sep, other / std::abs(other), Method::ClosedForm, 0.0};
  }
  bool tangent1 = std::abs(z2 - z1 / r1) <= 1.0 - r1;
  bool tangent2 = std::abs(z1 - z2 / r2) <= 1.0 - r2;
  if (tangent1 || tangent2) {
    Complex u = tangent1 ? z1 / r1 : z2 / r2;
    return {sep / (1.0 - std::min(r1, r2)), u, Method::ClosedForm, 0.0};
  }
  // both bisector-circle intersections, then the one nearer the foci
  double q = (r1 * r1 - r2 * r2) / (2.0 * sep);
  double root = std::sqrt(std::max(0.0, 1.0 - q * q));
  Complex dir = (z1 - z2) / sep;
  double orient = std::imag(std::conj(z1) * z2);
  Complex zp = dir * Complex(q, root);
  Complex zpp = dir * Complex(q, -root);
  Complex star = (orient != 0.0) ? dir * Complex(q, std::copysign(root, orient)) : zp;
  double m = std::min(std::abs(zp - z1), std::abs(zpp - z1));
  return {sep / m, star, Method::ClosedForm, 0.0};
}

/// Punctured plane: the boundary is the single point c.
inline MetricResult b_punctured(Complex center, double p, Complex z1, Complex z2) {
  if (!(p >= 1.0)) throw std::invalid_argument("b_punctured: requires p >= 1");
  require_finite(z1, "b_punctured");
  require_finite(z2, "b_punctured");
  if (z1 == center || z2 == center) throw OutOfDomain("b_punctured: point equals the puncture");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};
  double value = std::abs(z1 - z2) / p_sum(std::abs(z1 - center), std::abs(z2 - center), p);
  return {value, center, Method::ClosedForm, 0.0};
}

/// Dispatcher over (domain, p). Points on the boundary are rejected;
/// coincident points give 0.
inline MetricResult b(const Domain& d, PExponent p, Complex z1, Complex z2) {
  require_finite(z1, "b");
  require_finite(z2, "b");
  if (!contains(d, z1) || !contains(d, z2)) throw OutOfDomain("b: point not in the domain");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};

  return std::visit(
      [&](const auto& dom) -> MetricResult {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, UnitDisk>) {
          if (p.is_infinity()) return b_disk_inf(z1, z2);
          if (p.value() == 1.0) return s_disk(z1, z2);
          if (p.value() == 2.0) return b_p2_midpoint(d, z1, z2);
          return b_circle_p(false, p.value(), z1, z2);
        } else if constexpr (std::is_same_v<T, UpperHalfPlane>) {
          if (p.is_infinity()) return b_halfplane_inf(z1, z2);
          if (p.value() == 1.0) return s_halfplane(z1, z2);
          if (p.value() == 2.0) return b_p2_midpoint(d, z1, z2);
          return b_halfplane_p(p.value(), z1, z2);
        } else if constexpr (std::is_same_v<T, ExteriorUnitDisk>) {
          if (p.is_infinity()) return oracle_b(d, p, z1, z2, 8192);
          if (p.value() == 2.0) return b_p2_midpoint(d, z1, z2);
          return b_circle_p(true, p.value(), z1, z2);
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          if (p.is_infinity()) return oracle_b(d, p, z1, z2, 8192);
          if (p.value() == 2.0) return b_p2_midpoint(d, z1, z2);
          return b_punctured(dom.center, p.value(), z1, z2);
        } else {
          if (!p.is_infinity() && p.value() == 2.0) return b_p2_midpoint(d, z1, z2);
          return oracle_b(d, p, z1, z2, 8192);
        }
      },
      d);
}

}  // namespace barrmet
