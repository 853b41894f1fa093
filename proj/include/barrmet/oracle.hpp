#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "barrmet/core.hpp"
#include "barrmet/geometry.hpp"
#include "barrmet/numerics.hpp"

namespace barrmet {

/// Which set the supremum in the p-relative distance ranges over: the domain
/// boundary (the definition) or the whole complement (the domain-monotone
/// variant).
enum class SupremumOver { Boundary, Complement };

namespace detail {

template <class Cost>
MetricResult oracle_refined(const Domain& d, Complex z1, Complex z2, std::size_t samples,
                            Cost&& cost) {
  struct Candidate {
    Complex point;
    double value;
  };

  return std::visit(
      [&](const auto& dom) -> MetricResult {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, PuncturedPlane>) {
          return {std::abs(z1 - z2) / cost(dom.center), dom.center, Method::Scan, 0.0};
        } else if constexpr (std::is_same_v<T, UnitDisk> || std::is_same_v<T, ExteriorUnitDisk>) {
          double best = std::numeric_limits<double>::infinity();
          double best_theta = 0.0;
          const double h = 2.0 * std::numbers::pi / static_cast<double>(samples);
          for (std::size_t k = 0; k < samples; ++k) {
            double th = h * static_cast<double>(k);
            double v = cost(std::polar(1.0, th));
            if (v < best) {
              best = v;
              best_theta = th;
            }
          }
          auto [theta, v] = golden_minimize(
              [&](double th) { return cost(std::polar(1.0, th)); }, best_theta - h,
              best_theta + h);
          if (best < v) {
            theta = best_theta;
            v = best;
          }
          return {std::abs(z1 - z2) / v, std::polar(1.0, theta), Method::Scan, h};
        } else if constexpr (std::is_same_v<T, UpperHalfPlane>) {
          BoundaryWindow w = standard_window(z1, z2);
          double lo = w.anchor.real() - w.radius, hi = w.anchor.real() + w.radius;
          const double h = (hi - lo) / static_cast<double>(samples - 1);
          double best = std::numeric_limits<double>::infinity();
          double best_t = lo;
          for (std::size_t k = 0; k < samples; ++k) {
            double t = lo + h * static_cast<double>(k);
            double v = cost(Complex(t, 0.0));
            if (v < best) {
              best = v;
              best_t = t;
            }
          }
          auto [t, v] = golden_minimize([&](double x) { return cost(Complex(x, 0.0)); },
                                        std::max(lo, best_t - h), std::min(hi, best_t + h));
          if (best < v) {
            t = best_t;
            v = best;
          }
          return {std::abs(z1 - z2) / v, Complex(t, 0.0), Method::Scan, h};
        } else {
          auto rings = dom.rings();
          std::vector<double> lengths;
          double total = 0.0;
          for (const Ring* r : rings) {
            lengths.push_back(ring_length(*r));
            total += lengths.back();
          }
          const double h = total / static_cast<double>(samples);
          Candidate best{dom.outer().front(), std::numeric_limits<double>::infinity()};
          std::size_t best_ring = 0;
          double best_s = 0.0;
          double pos = 0.0;
          std::size_t ring_idx = 0;
          double ring_start = 0.0;
          for (std::size_t k = 0; k < samples; ++k, pos += h) {
            while (pos >= ring_start + lengths[ring_idx] && ring_idx + 1 < rings.size()) {
              ring_start += lengths[ring_idx];
              ++ring_idx;
            }
            double s = pos - ring_start;
            Complex pt = ring_point_at(*rings[ring_idx], s);
            double v = cost(pt);
            if (v < best.value) {
              best = {pt, v};
              best_ring = ring_idx;
              best_s = s;
            }
          }
          const Ring& r = *rings[best_ring];
          auto [s, v] = golden_minimize([&](double x) { return cost(ring_point_at(r, x)); },
                                        best_s - h, best_s + h);
          if (v < best.value) best = {ring_point_at(r, s), v};
          return {std::abs(z1 - z2) / best.value, best.point, Method::Scan, h};
        }
      },
      d);
}

}  // namespace detail

/// Brute-force evaluation of the p-relative distance by boundary
/// discretization plus local golden-section refinement. Never consults any
/// closed form. With SupremumOver::Complement the minimization additionally
/// admits the unconstrained minimizer of the denominator whenever it lies
/// outside the domain (the denominator is convex, so the constrained minimum
/// over the closed complement is attained either there or on the boundary).
inline MetricResult oracle_b(const Domain& d, PExponent p, Complex z1, Complex z2,
                             std::size_t samples = 8192,
                             SupremumOver over = SupremumOver::Boundary) {
  if (samples < 64) throw std::invalid_argument("oracle_b: samples must be >= 64");
  if (!contains(d, z1) || !contains(d, z2))
    throw OutOfDomain("oracle_b: point not in the domain");
  if (z1 == z2) return {0.0, std::nullopt, Method::Scan, 0.0};

  MetricResult res;
  if (p.is_infinity()) {
    auto cost = [&](Complex w) { return std::max(euclid(z1, w), euclid(z2, w)); };
    res = detail::oracle_refined(d, z1, z2, samples, cost);
  } else {
    const double pv = p.value();
    auto cost = [&](Complex w) { return p_sum(euclid(z1, w), euclid(z2, w), pv); };
    res = detail::oracle_refined(d, z1, z2, samples, cost);
  }

  if (over == SupremumOver::Complement) {
    double sep = std::abs(z1 - z2);
    Complex mid = 0.5 * (z1 + z2);
    if (!p.is_infinity() && p.value() == 1.0) {
      // every point of [z1, z2] attains the unconstrained minimum |z1-z2|
      for (std::size_t k = 0; k <= 4096; ++k) {
        Complex w = z1 + (static_cast<double>(k) / 4096.0) * (z2 - z1);
        if (!contains(d, w)) {
          if (res.value < 1.0) res = {1.0, w, Method::Scan, res.residual};
          break;
        }
      }
    } else if (!contains(d, mid)) {
      double denom = p.is_infinity() ? 0.5 * sep : p_sum(0.5 * sep, 0.5 * sep, p.value());
      double value = sep / denom;
      if (value > res.value) res = {value, mid, Method::Scan, res.residual};
    }
  }
  return res;
}

}  // namespace barrmet
