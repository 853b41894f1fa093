#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace barrmet {

using Complex = std::complex<double>;

// ---------------------------------------------------------------- errors

class OutOfDomain : public std::domain_error {
public:
  explicit OutOfDomain(const std::string& what) : std::domain_error(what) {}
};

class MissingWindow : public std::invalid_argument {
public:
  explicit MissingWindow(const std::string& what) : std::invalid_argument(what) {}
};

class BadBracket : public std::invalid_argument {
public:
  explicit BadBracket(const std::string& what) : std::invalid_argument(what) {}
};

class DegenerateInput : public std::invalid_argument {
public:
  explicit DegenerateInput(const std::string& what) : std::invalid_argument(what) {}
};

class ZeroInput : public std::invalid_argument {
public:
  explicit ZeroInput(const std::string& what) : std::invalid_argument(what) {}
};

class OutOfRange : public std::out_of_range {
public:
  explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

class BadConfiguration : public std::invalid_argument {
public:
  explicit BadConfiguration(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidPolygon : public std::invalid_argument {
public:
  explicit InvalidPolygon(const std::string& what) : std::invalid_argument(what) {}
};

// ------------------------------------------------------------- helpers

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* who) {
  if (!is_finite(z))
    throw std::invalid_argument(std::string(who) + ": non-finite point");
}

/// |a - b| without the hypot overflow guard; the scan loops live on this.
inline double euclid(Complex a, Complex b) {
  double dx = a.real() - b.real();
  double dy = a.imag() - b.imag();
  return std::sqrt(dx * dx + dy * dy);
}

/// (a^p + b^p)^(1/p) for a, b >= 0, evaluated with the largest term factored
/// out so that large p does not overflow.
inline double p_sum(double a, double b, double p) {
  if (p == 1.0) return a + b;
  if (p == 2.0) return std::hypot(a, b);
  double m = std::max(a, b);
  if (m == 0.0) return 0.0;
  double r = std::min(a, b) / m;
  return m * std::pow(1.0 + std::pow(r, p), 1.0 / p);
}

// ------------------------------------------------------------ exponent

/// The exponent p in the p-relative (Barrlund) distance: either a finite
/// value >= 1 or infinity.
class PExponent {
public:
  static PExponent finite(double p) {
    if (!std::isfinite(p) || p < 1.0)
      throw std::invalid_argument("PExponent: finite exponent must satisfy p >= 1");
    return PExponent(p, false);
  }
  static PExponent infinity() { return PExponent(0.0, true); }

  bool is_infinity() const { return inf_; }
  double value() const {
    if (inf_) throw std::logic_error("PExponent: no finite value for p = infinity");
    return p_;
  }

  /// 2^(1-1/p), the supremum of b_{G,p} over all planar domains.
  double sup_value() const { return inf_ ? 2.0 : std::pow(2.0, 1.0 - 1.0 / p_); }

  std::string str() const { return inf_ ? "inf" : std::to_string(p_); }

  friend bool operator==(PExponent a, PExponent b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.p_ == b.p_);
  }
  friend bool operator!=(PExponent a, PExponent b) { return !(a == b); }

private:
  PExponent(double p, bool inf) : p_(p), inf_(inf) {}
  double p_;
  bool inf_;
};

// -------------------------------------------------------------- result

enum class Method { ClosedForm, QuarticSolve, RootSolve, Scan };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::QuarticSolve: return "quartic-solve";
    case Method::RootSolve: return "root-solve";
    case Method::Scan: return "scan";
  }
  return "unknown";
}

/// A computed distance value together with the boundary point realizing it
/// (when known), how it was computed, and a residual diagnostic.
struct MetricResult {
  double value = 0.0;
  std::optional<Complex> extremal_point;
  Method method = Method::ClosedForm;
  double residual = 0.0;
};

}  // namespace barrmet
