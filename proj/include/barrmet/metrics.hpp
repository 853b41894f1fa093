#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "barrmet/core.hpp"
#include "barrmet/geometry.hpp"
#include "barrmet/numerics.hpp"

namespace barrmet {

namespace detail {

inline void require_in_disk(Complex z, const char* who) {
  require_finite(z, who);
  if (!(std::abs(z) < 1.0)) throw OutOfDomain(std::string(who) + ": point not in the unit disk");
}

inline void require_in_halfplane(Complex z, const char* who) {
  require_finite(z, who);
  if (!(z.imag() > 0.0))
    throw OutOfDomain(std::string(who) + ": point not in the upper half-plane");
}

// Unit circle grid shared by the scan fallbacks.
inline const std::array<Complex, 4096>& circle_grid_4096() {
  static const std::array<Complex, 4096> grid = [] {
    std::array<Complex, 4096> g{};
    for (std::size_t k = 0; k < g.size(); ++k)
      g[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / 4096.0);
    return g;
  }();
  return grid;
}

}  // namespace detail

// ----------------------------------------------------------- hyperbolic

/// Hyperbolic distance in the unit disk.
inline double hyperbolic_disk(Complex z1, Complex z2) {
  detail::require_in_disk(z1, "hyperbolic_disk");
  detail::require_in_disk(z2, "hyperbolic_disk");
  double num = std::abs(z1 - z2);
  if (num == 0.0) return 0.0;
  double den = std::sqrt(num * num + (1.0 - std::norm(z1)) * (1.0 - std::norm(z2)));
  return 2.0 * std::atanh(num / den);
}

/// Hyperbolic distance in the upper half-plane.
inline double hyperbolic_halfplane(Complex z1, Complex z2) {
  detail::require_in_halfplane(z1, "hyperbolic_halfplane");
  detail::require_in_halfplane(z2, "hyperbolic_halfplane");
  double num = std::abs(z1 - z2);
  if (num == 0.0) return 0.0;
  return 2.0 * std::atanh(num / std::abs(z1 - std::conj(z2)));
}

// ------------------------------------------------- triangular ratio s_G

/// s for the upper half-plane: |z1-z2| / |z1-conj(z2)|, with the extremal
/// boundary point where the segment [z1, conj(z2)] crosses the real axis.
inline MetricResult s_halfplane(Complex z1, Complex z2) {
  detail::require_in_halfplane(z1, "s_halfplane");
  detail::require_in_halfplane(z2, "s_halfplane");
  if (z1 == z2) return {0.0, std::nullopt, Method::ClosedForm, 0.0};
  double alpha = z1.imag() / (z1.imag() + z2.imag());
  double w = (1.0 - alpha) * z1.real() + alpha * z2.real();
  double value = std::abs(z1 - z2) / std::abs(z1 - std::conj(z2));
  return {value, Complex(w, 0.0), Method::ClosedForm, 0.0};
}

/// Quartic whose unit-circle roots are the Ptolemy-Alhazen reflection points
/// for the foci z1, z2.
inline QuarticCoefficients alhazen_quartic(Complex z1, Complex z2) {
  return {std::conj(z1) * std::conj(z2), -(std::conj(z1) + std::conj(z2)), Complex(0.0),
          z1 + z2, -z1 * z2};
}

/// |Im(u * conj(w))| where w sums the unit vectors from the foci to u;
/// vanishes exactly when the radius at u bisects the angle z1-u-z2.
inline double reflection_residual(Complex u, Complex z1, Complex z2) {
  Complex w = (u - z1) / std::abs(u - z1) + (u - z2) / std::abs(u - z2);
  return std::abs(std::imag(u * std::conj(w)));
}

/// s for the unit disk via the reflection quartic. Roots within 1e-8 of the
/// unit circle are projected onto it and compared by the objective
/// |z1-u| + |z2-u|; a 4096-point scan (with golden refinement) guards against
/// root-selection failure near degenerate foci.
inline MetricResult s_disk(Complex z1, Complex z2) {
  detail::require_in_disk(z1, "s_disk");
  detail::require_in_disk(z2, "s_disk");
  if (z1 == z2) return {0.0, std::nullopt, Method::QuarticSolve, 0.0};

  auto objective = [&](Complex u) { return euclid(z1, u) + euclid(z2, u); };

  Complex best_u(1.0, 0.0);
  double best_f = std::numeric_limits<double>::infinity();
  for (Complex root : solve_quartic(alhazen_quartic(z1, z2))) {
    double r = std::abs(root);
    if (std::abs(r - 1.0) > 1e-8 || r == 0.0) continue;
    Complex u = root / r;
    double f = objective(u);
    if (f < best_f) {
      best_f = f;
      best_u = u;
    }
  }

  const auto& grid = detail::circle_grid_4096();
  std::size_t best_k = 0;
  double best_grid = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double f = objective(grid[k]);
    if (f < best_grid) {
      best_grid = f;
      best_k = k;
    }
  }
  double h = 2.0 * std::numbers::pi / static_cast<double>(grid.size());
  double theta0 = h * static_cast<double>(best_k);
  auto [theta, f_scan] =
      golden_minimize([&](double th) { return objective(std::polar(1.0, th)); },
                      theta0 - h, theta0 + h);
  if (best_grid < f_scan) {
    theta = theta0;
    f_scan = best_grid;
  }
  // The quartic root pins the reflection point to full precision; let the
  // scan take over only when it is materially better (wrong root selection).
  if (f_scan < best_f - 1e-12 * (1.0 + f_scan)) {
    best_f = f_scan;
    best_u = std::polar(1.0, theta);
  }

  double value = std::abs(z1 - z2) / best_f;
  return {value, best_u, Method::QuarticSolve, reflection_residual(best_u, z1, z2)};
}

// -------------------------------------------------- point pair and m_D

/// p_G(z1,z2) = |z1-z2| / sqrt(|z1-z2|^2 + 4 d(z1) d(z2)).
inline double point_pair(const Domain& d, Complex z1, Complex z2) {
  if (!contains(d, z1) || !contains(d, z2))
    throw OutOfDomain("point_pair: point not in the domain");
  double num = std::abs(z1 - z2);
  if (num == 0.0) return 0.0;
  return num / std::sqrt(num * num + 4.0 * boundary_distance(d, z1) * boundary_distance(d, z2));
}

/// m_D(z1,z2) = |z1-z2| / (2 - |z1+z2|); majorizes s_D, with equality exactly
/// for pairs collinear with the origin. Not a metric.
inline double m_disk(Complex z1, Complex z2) {
  detail::require_in_disk(z1, "m_disk");
  detail::require_in_disk(z2, "m_disk");
  return std::abs(z1 - z2) / (2.0 - std::abs(z1 + z2));
}

}  // namespace barrmet
