#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "barrmet/core.hpp"

namespace barrmet {

// ------------------------------------------------------------- quartic

/// Coefficients of c4*u^4 + c3*u^3 + c2*u^2 + c1*u + c0.
struct QuarticCoefficients {
  Complex c4, c3, c2, c1, c0;
};

namespace detail {

inline Complex poly_eval(const std::vector<Complex>& c, Complex x) {
  Complex r = 0.0;
  for (Complex ci : c) r = r * x + ci;
  return r;
}

inline Complex poly_deriv_eval(const std::vector<Complex>& c, Complex x) {
  Complex r = 0.0;
  double n = static_cast<double>(c.size()) - 1.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    r = r * x + c[i] * (n - static_cast<double>(i));
  }
  return r;
}

}  // namespace detail

/// All roots (with multiplicity) of the given polynomial of degree <= 4.
/// Leading coefficients that are negligible against the coefficient scale are
/// dropped first. Durand-Kerner simultaneous iteration on the monic
/// polynomial, then one Newton step per root.
inline std::vector<Complex> solve_quartic(const QuarticCoefficients& q) {
  std::vector<Complex> c = {q.c4, q.c3, q.c2, q.c1, q.c0};
  double scale = 0.0;
  for (Complex ci : c) scale = std::max(scale, std::abs(ci));
  if (scale == 0.0) throw DegenerateInput("solve_quartic: all coefficients are zero");
  std::size_t lead = 0;
  while (lead + 1 < c.size() && std::abs(c[lead]) <= 1e-14 * scale) ++lead;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));

  const std::size_t n = c.size() - 1;
  if (n == 0) return {};  // nonzero constant, no roots
  for (std::size_t i = 1; i < c.size(); ++i) c[i] /= c[0];
  c[0] = 1.0;
  if (n == 1) return {-c[1]};

  // Radius heuristic keeps the initial guesses around the root ring.
  double radius = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i)
    radius = std::max(radius, std::pow(std::abs(c[i]), 1.0 / static_cast<double>(i)));
  radius = std::max(0.5, radius);

  std::vector<Complex> x(n);
  const Complex g(0.4, 0.9);
  Complex acc = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc *= g;
    x[i] = radius * acc;
  }

  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= x[i] - x[j];
      if (denom == Complex(0.0)) {
        x[i] += Complex(1e-8, 1e-8);  // split coincident iterates
        worst = 1.0;
        continue;
      }
      Complex d = detail::poly_eval(c, x[i]) / denom;
      x[i] -= d;
      worst = std::max(worst, std::abs(d) / (1.0 + std::abs(x[i])));
    }
    if (worst < 1e-14) break;
  }

  for (std::size_t i = 0; i < n; ++i) {
    Complex dp = detail::poly_deriv_eval(c, x[i]);
    if (std::abs(dp) > 1e-12) x[i] -= detail::poly_eval(c, x[i]) / dp;
  }
  return x;
}

// ------------------------------------------------------------ brackets

struct Bracket {
  double lo, hi;
};

/// Bisection on [b.lo, b.hi]; requires a sign change. Returns the midpoint of
/// the final bracket of width <= tol.
template <class F>
double bisect_root(F&& f, Bracket b, double tol) {
  if (!(b.lo < b.hi)) throw BadBracket("bisect_root: requires lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("bisect_root: tol must be positive");
  double lo = b.lo, hi = b.hi;
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw BadBracket("bisect_root: f(lo) and f(hi) have the same sign");
  for (int iter = 0; iter < 200 && (hi - lo) > tol; ++iter) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// -------------------------------------------------------- minimization

/// Golden-section minimization on [lo, hi]. Returns (argmin, min).
template <class F>
std::pair<double, double> golden_minimize(F&& f, double lo, double hi,
                                          double tol = 1e-12, int max_iter = 200) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

/// Minimize a continuous 2*pi-periodic function: coarse scan on grid_n
/// equispaced angles, then golden-section refinement on the interval
/// bracketing the best grid point. The result never exceeds the best coarse
/// sample. Returns (argmin in [0, 2*pi), min).
template <class F>
std::pair<double, double> minimize_periodic(F&& f, std::size_t grid_n) {
  if (grid_n < 8) throw std::invalid_argument("minimize_periodic: grid_n must be >= 8");
  const double two_pi = 2.0 * std::numbers::pi;
  const double h = two_pi / static_cast<double>(grid_n);
  double best_theta = 0.0, best_val = f(0.0);
  for (std::size_t k = 1; k < grid_n; ++k) {
    double th = h * static_cast<double>(k);
    double v = f(th);
    if (v < best_val) {
      best_val = v;
      best_theta = th;
    }
  }
  auto [theta, val] = golden_minimize(f, best_theta - h, best_theta + h, 1e-12, 200);
  if (best_val < val) {
    theta = best_theta;
    val = best_val;
  }
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) theta += two_pi;
  return {theta, val};
}

// ----------------------------------------------------------------- agm

/// Arithmetic-geometric mean of two positive numbers.
inline double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("agm: arguments must be positive");
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-15 * std::max(a, b); ++i) {
    double am = 0.5 * (a + b);
    double gm = std::sqrt(a * b);
    a = am;
    b = gm;
  }
  return 0.5 * (a + b);
}

}  // namespace barrmet
