#pragma once

// Piecewise-linear functions on [0, inf) and the first-crossing machinery
// behind the variational function f(lambda).

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rdl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nonnegative real or +infinity.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  static ExtendedReal finite(double v);
  static constexpr ExtendedReal infinity() {
    ExtendedReal e;
    e.value_ = std::numeric_limits<double>::infinity();
    return e;
  }

  [[nodiscard]] bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  [[nodiscard]] bool is_finite() const { return !is_infinite(); }
  /// Raw double; +inf when infinite.
  [[nodiscard]] double value() const { return value_; }

  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  double value_ = 0.0;
};

/// The pair gamma = (lambda-1)/(lambda+1), lambda = (1+gamma)/(1-gamma).
class GammaParam {
 public:
  static GammaParam from_gamma(double gamma);
  static GammaParam from_lambda(double lambda);

  [[nodiscard]] double gamma() const { return gamma_; }
  [[nodiscard]] double lambda() const { return lambda_; }

 private:
  GammaParam(double g, double l) : gamma_(g), lambda_(l) {}
  double gamma_;
  double lambda_;
};

enum class Sign { Plus, Minus };

/// Continuous piecewise-linear g on [0, inf) with g(0) = 0, given by
/// breakpoints, values and a slope used past the last breakpoint.
///
/// `lipschitz()` enforces |slope| <= 1 on every piece (the admissible set of
/// the variational problem). `general()` only enforces ordering and g(0) = 0;
/// it is used for step-like degree profiles.
class PLFunction {
 public:
  static PLFunction lipschitz(std::vector<double> xs, std::vector<double> ys, double tail_slope);
  static PLFunction general(std::vector<double> xs, std::vector<double> ys, double tail_slope);
  /// g(x) = slope * x.
  static PLFunction linear(double slope);

  [[nodiscard]] double operator()(double x) const;

  [[nodiscard]] const std::vector<double>& breakpoints() const { return xs_; }
  [[nodiscard]] const std::vector<double>& values() const { return ys_; }
  [[nodiscard]] double tail_slope() const { return tail_; }
  [[nodiscard]] std::size_t size() const { return xs_.size(); }

  /// Slope of segment k (between breakpoints k and k+1); k == size()-1 is the tail.
  [[nodiscard]] double slope(std::size_t k) const;

  [[nodiscard]] bool is_lipschitz(double tol = 1e-9) const;
  [[nodiscard]] bool is_nondecreasing_nonnegative(double tol = 1e-12) const;

  /// Same function with extra breakpoints inserted (for refinement checks).
  [[nodiscard]] PLFunction refined(const std::vector<double>& extra) const;

 private:
  PLFunction(std::vector<double> xs, std::vector<double> ys, double tail)
      : xs_(std::move(xs)), ys_(std::move(ys)), tail_(tail) {}
  static void validate_shape(const std::vector<double>& xs, const std::vector<double>& ys);

  std::vector<double> xs_;
  std::vector<double> ys_;
  double tail_;
};

/// min { x >= 0 : gamma*x + sign*g(x) >= t }.
ExtendedReal gamma_crossing(const PLFunction& g, const GammaParam& p, double t, Sign sign);

/// l+ = min { x : g(lambda x) - x >= t },  l- = min { x : x - g(x)/lambda >= t }.
/// g must be nondecreasing and nonnegative.
ExtendedReal ell_crossing(const PLFunction& g, double lambda, double t, Sign sign);

struct FBounds {
  double lower;
  double upper;
  std::optional<double> exact;
};

/// Closed-form bounds on f; exact on [0, 1] and at 0 and +inf.
FBounds f_closed(double lambda);

/// Self-similar sawtooth with zeros at sigma^i, i = 0..periods, preceded by a
/// flat run-in on [0, 1]. Requires gamma < 1/2.
PLFunction sigma_g(const GammaParam& p, int periods);
double sigma_ratio(const GammaParam& p);

/// Largest t for which both crossings stay finite (may be +inf).
double finite_crossing_limit(const PLFunction& g, const GammaParam& p);

/// sup over t in [t_lo, t_hi] of (Gamma+(t) + Gamma-(t)) / t, evaluated exactly
/// at the finitely many critical levels (one-sided limits included).
double sup_ratio(const PLFunction& g, const GammaParam& p, double t_lo, double t_hi);

/// Distance-1 tracking approximation by alternating +-1 slopes, first slope +1.
PLFunction canonicalize(const PLFunction& g, double span);

/// True if g has slopes alternating +1, -1, ... starting with +1 (tail included).
bool is_canonical(const PLFunction& g, double tol = 1e-9);

/// Removes peaks/valleys that are never first crossings, until a fixpoint.
PLFunction remove_extrema(const PLFunction& g, const GammaParam& p);

struct BreakpointTrace {
  std::vector<double> lengths;    // l_i
  std::vector<double> ends;       // x_i
  std::vector<double> crossings;  // t_i
  int first_slope = 1;
};

BreakpointTrace trace(const PLFunction& g, const GammaParam& p);

/// x_i = t_i/(1+gamma) + sum_{j<i} 2/(1-gamma^2) q^{i-j} t_j with q = (1-gamma)/(1+gamma).
std::vector<double> ends_from_crossings(const std::vector<double>& ts, const GammaParam& p);

/// t_i = sum_{j<=i} (gamma + (-1)^{j-i}) l_j.
std::vector<double> crossings_from_lengths(const std::vector<double>& lengths, const GammaParam& p);

bool s_good(const std::vector<double>& ts, double S, const GammaParam& p);

struct RecurrenceRun {
  double S = 0.0;
  /// Stored mantissas; the true value is ldexp(T[i], scale[i]).
  std::vector<double> T;
  std::vector<int> scale;
  std::optional<std::size_t> first_nonpositive;  // 0-based index into T
  /// Coefficients of x^2 + alpha x + beta for the three-term form.
  double alpha = 0.0;
  double beta = 0.0;
  double discriminant = 0.0;

  [[nodiscard]] long double value(std::size_t i) const;
};

/// T_1 = t1, then each T_{i+1} solved from the S-good equality.
RecurrenceRun run_recurrence(double t1, double S, const GammaParam& p, std::size_t N);

/// Characteristic polynomial coefficients (alpha, beta) of the three-term form.
std::pair<double, double> characteristic(double S, const GammaParam& p);

/// z(x) = g(y) - y where x = g(y) + y.
PLFunction rotate(const PLFunction& g);

struct HUpper {
  double h_upper;
  double f_value;
};

/// Value of f implied by a value h of the variational objective at gamma.
double f_from_h(const GammaParam& p, double h);
HUpper h_upper_and_f(const GammaParam& p);

}  // namespace rdl
