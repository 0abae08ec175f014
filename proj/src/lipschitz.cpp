#include "rdl/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rdl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlopeTol = 1e-12;

// First x >= 0 with  a*g(c*x) + b*x >= t.  Segments of g map to segments in x
// with endpoints xs[k]/c, so the crossing is a linear solve on one of them.
double first_crossing(const PLFunction& g, double a, double c, double b, double t) {
  const auto& xs = g.breakpoints();
  const auto& ys = g.values();
  auto psi_at = [&](std::size_t k) { return a * ys[k] + b * (xs[k] / c); };

  double prev = psi_at(0);
  if (prev >= t) return 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double next = psi_at(k + 1);
    if (next >= t) {
      const double xa = xs[k] / c;
      const double xb = xs[k + 1] / c;
      const double x = xa + (t - prev) / (next - prev) * (xb - xa);
      return std::clamp(x, xa, xb);
    }
    prev = next;
  }
  const double slope = a * g.tail_slope() * c + b;
  if (slope <= 0.0) return kInf;
  return xs.back() / c + (t - prev) / slope;
}

double sign_of(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

}  // namespace

ExtendedReal ExtendedReal::finite(double v) {
  if (!(v >= 0.0) || std::isinf(v)) throw Error("ExtendedReal: finite value must be >= 0");
  ExtendedReal e;
  e.value_ = v;
  return e;
}

GammaParam GammaParam::from_gamma(double gamma) {
  if (!(gamma > -1.0 && gamma < 1.0)) throw Error("gamma must lie in (-1, 1)");
  return {gamma, (1.0 + gamma) / (1.0 - gamma)};
}

GammaParam GammaParam::from_lambda(double lambda) {
  if (!(lambda > 0.0) || std::isinf(lambda)) throw Error("lambda must be a positive finite real");
  return {(lambda - 1.0) / (lambda + 1.0), lambda};
}

// ---------------------------------------------------------------------------
// PLFunction

void PLFunction::validate_shape(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.empty() || xs.size() != ys.size()) throw Error("PLFunction: breakpoints/values size mismatch");
  if (xs[0] != 0.0) throw Error("PLFunction: first breakpoint must be 0");
  if (ys[0] != 0.0) throw Error("PLFunction: g(0) must be 0");
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!std::isfinite(xs[k]) || !std::isfinite(ys[k])) throw Error("PLFunction: non-finite breakpoint");
    if (k > 0 && !(xs[k] > xs[k - 1])) throw Error("PLFunction: breakpoints must be strictly increasing");
  }
}

PLFunction PLFunction::lipschitz(std::vector<double> xs, std::vector<double> ys, double tail_slope) {
  validate_shape(xs, ys);
  if (!(std::abs(tail_slope) <= 1.0 + kSlopeTol)) throw Error("PLFunction: tail slope outside [-1, 1]");
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const double dx = xs[k] - xs[k - 1];
    if (std::abs(ys[k] - ys[k - 1]) > dx * (1.0 + kSlopeTol) + kSlopeTol)
      throw Error("PLFunction: segment " + std::to_string(k - 1) + " violates the 1-Lipschitz bound");
  }
  return {std::move(xs), std::move(ys), std::clamp(tail_slope, -1.0, 1.0)};
}

PLFunction PLFunction::general(std::vector<double> xs, std::vector<double> ys, double tail_slope) {
  validate_shape(xs, ys);
  if (!std::isfinite(tail_slope)) throw Error("PLFunction: non-finite tail slope");
  return {std::move(xs), std::move(ys), tail_slope};
}

PLFunction PLFunction::linear(double slope) { return lipschitz({0.0}, {0.0}, slope); }

double PLFunction::operator()(double x) const {
  if (x < 0.0) throw Error("PLFunction: evaluation at negative x");
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - xs_.begin()) - 1;
  return ys_[k] + slope(k) * (x - xs_[k]);
}

double PLFunction::slope(std::size_t k) const {
  if (k + 1 >= xs_.size()) return tail_;
  return (ys_[k + 1] - ys_[k]) / (xs_[k + 1] - xs_[k]);
}

bool PLFunction::is_lipschitz(double tol) const {
  for (std::size_t k = 0; k < xs_.size(); ++k)
    if (std::abs(slope(k)) > 1.0 + tol) return false;
  return true;
}

bool PLFunction::is_nondecreasing_nonnegative(double tol) const {
  for (std::size_t k = 0; k < xs_.size(); ++k) {
    if (ys_[k] < -tol) return false;
    if (slope(k) < -tol) return false;
  }
  return true;
}

PLFunction PLFunction::refined(const std::vector<double>& extra) const {
  std::vector<double> xs = xs_;
  for (double x : extra)
    if (x > 0.0 && std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) ys.push_back((*this)(x));
  ys[0] = 0.0;
  return {std::move(xs), std::move(ys), tail_};
}

// ---------------------------------------------------------------------------
// Crossings

ExtendedReal gamma_crossing(const PLFunction& g, const GammaParam& p, double t, Sign sign) {
  if (!(t >= 0.0)) throw Error("gamma_crossing: t must be >= 0");
  const double x = first_crossing(g, sign_of(sign), 1.0, p.gamma(), t);
  return std::isinf(x) ? ExtendedReal::infinity() : ExtendedReal::finite(x);
}

ExtendedReal ell_crossing(const PLFunction& g, double lambda, double t, Sign sign) {
  if (!(lambda > 0.0) || !(t > 0.0)) throw Error("ell_crossing: lambda and t must be positive");
  if (!g.is_nondecreasing_nonnegative()) throw Error("ell_crossing: g must be nondecreasing and nonnegative");
  const double x = sign == Sign::Plus ? first_crossing(g, 1.0, lambda, -1.0, t)
                                      : first_crossing(g, -1.0 / lambda, 1.0, 1.0, t);
  return std::isinf(x) ? ExtendedReal::infinity() : ExtendedReal::finite(x);
}

// ---------------------------------------------------------------------------
// Closed forms

FBounds f_closed(double lambda) {
  if (std::isnan(lambda) || lambda < 0.0) throw Error("f_closed: lambda must be >= 0");
  if (std::isinf(lambda)) return {0.5, 0.5, 0.5};
  const double l = lambda;
  FBounds b{};
  b.lower = (l + 1.0) / (2.0 * l + 1.0);
  if (l < 3.0)
    b.upper = (2.0 * l * l + 3.0 * l + 7.0 + 2.0 * std::sqrt(l + 1.0)) / (4.0 * l * l + 4.0 * l + 9.0);
  else
    b.upper = (l + 1.0) / (2.0 * l);
  if (l == 0.0)
    b.exact = 1.0;
  else if (l <= 1.0)
    b.exact = b.upper;
  return b;
}

double f_from_h(const GammaParam& p, double h) {
  const double gm = p.gamma();
  return 1.0 - 1.0 / ((1.0 - gm * gm) * h / 2.0 + 1.0 + gm);
}

HUpper h_upper_and_f(const GammaParam& p) {
  const double gm = p.gamma();
  double h = 0.0;
  if (gm < 0.5)
    h = (2.0 * gm * gm + 2.0 * gm + 8.0 + std::sqrt(32.0 * (1.0 - gm))) / std::pow(gm + 1.0, 3);
  else
    h = 2.0 / gm;
  return {h, f_from_h(p, h)};
}

double sigma_ratio(const GammaParam& p) {
  const double gm = p.gamma();
  return (1.0 - gm + std::sqrt(2.0 * (1.0 - gm))) / (1.0 + gm);
}

PLFunction sigma_g(const GammaParam& p, int periods) {
  if (!(p.gamma() < 0.5)) throw Error("sigma_g: requires gamma < 1/2 (g = 0 is used above)");
  if (periods < 2) throw Error("sigma_g: periods must be >= 2");
  const double sigma = sigma_ratio(p);
  std::vector<double> xs{0.0, 1.0};
  std::vector<double> ys{0.0, 0.0};
  double lo = 1.0;
  for (int i = 0; i < periods; ++i) {
    const double hi = lo * sigma;
    const double sgn = (i % 2 == 1) ? 1.0 : -1.0;
    xs.push_back((lo + hi) / 2.0);
    ys.push_back(sgn * (hi - lo) / 2.0);
    xs.push_back(hi);
    ys.push_back(0.0);
    lo = hi;
  }
  const double tail = (periods % 2 == 1) ? 1.0 : -1.0;
  return PLFunction::lipschitz(std::move(xs), std::move(ys), tail);
}

// ---------------------------------------------------------------------------
// sup_ratio

double finite_crossing_limit(const PLFunction& g, const GammaParam& p) {
  double limit = kInf;
  for (double sgn : {1.0, -1.0}) {
    if (p.gamma() + sgn * g.tail_slope() > 0.0) continue;
    double best = -kInf;
    for (std::size_t k = 0; k < g.size(); ++k)
      best = std::max(best, p.gamma() * g.breakpoints()[k] + sgn * g.values()[k]);
    limit = std::min(limit, best);
  }
  return limit;
}

double sup_ratio(const PLFunction& g, const GammaParam& p, double t_lo, double t_hi) {
  if (!(t_lo > 0.0 && t_lo < t_hi)) throw Error("sup_ratio: need 0 < t_lo < t_hi");
  auto both = [&](double t) {
    const auto up = gamma_crossing(g, p, t, Sign::Plus);
    const auto dn = gamma_crossing(g, p, t, Sign::Minus);
    if (up.is_infinite() || dn.is_infinite())
      throw Error("sup_ratio: crossing is +inf inside the window (unbounded candidate)");
    return std::pair{up.value(), dn.value()};
  };
  both(t_hi);

  std::vector<double> levels{t_lo, t_hi};
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (double sgn : {1.0, -1.0}) {
      const double lv = p.gamma() * g.breakpoints()[k] + sgn * g.values()[k];
      if (lv > t_lo && lv < t_hi) levels.push_back(lv);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  double best = 0.0;
  for (double t : levels) {
    const auto [u, d] = both(t);
    best = std::max(best, (u + d) / t);
  }
  // Both crossings are affine in t strictly between consecutive levels, so the
  // ratio A + B/t is monotone there; the supremum sits at a one-sided limit.
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const double a = levels[k];
    const double b = levels[k + 1];
    if (b - a <= 1e-12 * b) continue;
    const double t1 = a + (b - a) / 3.0;
    const double t2 = a + 2.0 * (b - a) / 3.0;
    const auto [u1, d1] = both(t1);
    const auto [u2, d2] = both(t2);
    const double slope = ((u2 + d2) - (u1 + d1)) / (t2 - t1);
    const double at_a = (u1 + d1) - slope * (t1 - a);
    const double at_b = (u2 + d2) + slope * (b - t2);
    best = std::max({best, at_a / a, at_b / b});
  }
  return best;
}

// ---------------------------------------------------------------------------
// Canonical forms

bool is_canonical(const PLFunction& g, double tol) {
  double expected = 1.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (std::abs(g.slope(k) - expected) > tol) return false;
    expected = -expected;
  }
  return true;
}

PLFunction canonicalize(const PLFunction& g, double span) {
  if (!(span > 0.0)) throw Error("canonicalize: span must be positive");
  if (!g.is_lipschitz()) throw Error("canonicalize: g must be 1-Lipschitz");
  if (is_canonical(g)) {
    bool long_pieces = true;
    for (std::size_t k = 1; k < g.size(); ++k)
      long_pieces = long_pieces && g.breakpoints()[k] - g.breakpoints()[k - 1] >= 0.5 - 1e-12;
    if (long_pieces) return g;
  }

  const auto& xs = g.breakpoints();
  std::vector<double> out_x{0.0};
  std::vector<double> out_y{0.0};
  double x = 0.0;
  double y = 0.0;
  double s = 1.0;
  while (x < span) {
    // d(u) = y + s(u - x) - g(u) moves monotonically toward the target s.
    std::size_t k = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin()) - 1;
    double turn = kInf;
    double cur = x;
    double d = y - g(x);
    while (true) {
      const double ds = s - g.slope(k);
      const double seg_end = (k + 1 < xs.size()) ? xs[k + 1] : kInf;
      if (ds != 0.0) {
        const double u = cur + (s - d) / ds;
        if (u <= seg_end) {
          turn = u;
          break;
        }
      }
      if (std::isinf(seg_end)) break;
      d += ds * (seg_end - cur);
      cur = seg_end;
      ++k;
    }
    if (std::isinf(turn) || turn > span) break;
    y += s * (turn - x);
    x = turn;
    out_x.push_back(x);
    out_y.push_back(y);
    s = -s;
  }
  return PLFunction::lipschitz(std::move(out_x), std::move(out_y), s);
}

PLFunction remove_extrema(const PLFunction& g, const GammaParam& p) {
  if (!is_canonical(g)) throw Error("remove_extrema: input must alternate slopes +1/-1 starting with +1");
  std::vector<double> xs = g.breakpoints();
  std::vector<double> ys = g.values();
  const double gm = p.gamma();

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 2; i + 1 < xs.size(); ++i) {
      const bool peak = (i % 2 == 1);
      if (peak && i < 3) continue;
      const double sg = peak ? 1.0 : -1.0;
      const double here = gm * xs[i] + sg * ys[i];
      const double before = gm * xs[i - 2] + sg * ys[i - 2];
      if (here > before) continue;
      // Extend the pieces ending at x_{i-1} and starting at x_{i+1} until they meet.
      const double xa = xs[i - 1], ya = ys[i - 1];
      const double xb = xs[i + 1], yb = ys[i + 1];
      double xm = 0.0, ym = 0.0;
      if (peak) {
        xm = (ya + xa - yb + xb) / 2.0;
        ym = ya - (xm - xa);
      } else {
        xm = (yb + xb - ya + xa) / 2.0;
        ym = ya + (xm - xa);
      }
      xs.erase(xs.begin() + static_cast<long>(i - 1), xs.begin() + static_cast<long>(i + 2));
      ys.erase(ys.begin() + static_cast<long>(i - 1), ys.begin() + static_cast<long>(i + 2));
      xs.insert(xs.begin() + static_cast<long>(i - 1), xm);
      ys.insert(ys.begin() + static_cast<long>(i - 1), ym);
      changed = true;
      break;
    }
  }
  return PLFunction::lipschitz(std::move(xs), std::move(ys), g.tail_slope());
}

// ---------------------------------------------------------------------------
// Breakpoint analysis

std::vector<double> ends_from_crossings(const std::vector<double>& ts, const GammaParam& p) {
  const long double gm = p.gamma();
  const long double q = (1.0L - gm) / (1.0L + gm);
  const long double c = 2.0L / (1.0L - gm * gm);
  std::vector<double> out;
  out.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    long double x = ts[i] / (1.0L + gm);
    for (std::size_t j = 0; j < i; ++j) x += c * std::pow(q, static_cast<long double>(i - j)) * ts[j];
    out.push_back(static_cast<double>(x));
  }
  return out;
}

std::vector<double> crossings_from_lengths(const std::vector<double>& lengths, const GammaParam& p) {
  std::vector<double> out;
  out.reserve(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    long double t = 0.0L;
    for (std::size_t j = 0; j <= i; ++j) {
      const long double alt = ((i - j) % 2 == 0) ? 1.0L : -1.0L;
      t += (p.gamma() + alt) * lengths[j];
    }
    out.push_back(static_cast<double>(t));
  }
  return out;
}

BreakpointTrace trace(const PLFunction& g, const GammaParam& p) {
  if (!is_canonical(g)) throw Error("trace: input must be canonical");
  BreakpointTrace tr;
  const auto& xs = g.breakpoints();
  const auto& ys = g.values();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    tr.lengths.push_back(xs[i] - xs[i - 1]);
    tr.ends.push_back(xs[i]);
    const double alt = (i % 2 == 1) ? 1.0 : -1.0;
    tr.crossings.push_back(p.gamma() * xs[i] + alt * ys[i]);
  }
  const auto closed = ends_from_crossings(tr.crossings, p);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const double scale = std::max(1.0, std::abs(tr.ends[i]));
    if (std::abs(closed[i] - tr.ends[i]) > 1e-9 * scale)
      throw Error("trace: closed-form end x_" + std::to_string(i + 1) + " disagrees with the breakpoints");
  }
  return tr;
}

bool s_good(const std::vector<double>& ts, double S, const GammaParam& p) {
  const long double gm = p.gamma();
  const long double a = 2.0L / (1.0L + gm);
  const long double c = 2.0L / (1.0L - gm * gm);
  const long double q = (1.0L - gm) / (1.0L + gm);
  auto t_at = [&](std::size_t j) -> long double { return j == 0 ? 0.0L : ts[j - 1]; };
  for (std::size_t i = 1; i < ts.size(); ++i) {
    long double rhs = a * t_at(i);
    for (std::size_t j = 1; j <= i + 1; ++j)
      rhs += c * std::pow(q, static_cast<long double>(i - j + 2)) * (t_at(j) + t_at(j - 1));
    const long double lhs = S * t_at(i);
    if (lhs < rhs - 1e-9L * std::max(1.0L, std::abs(rhs))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rotation

PLFunction rotate(const PLFunction& g) {
  if (!g.is_lipschitz()) throw Error("rotate: g must be 1-Lipschitz");
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g.slope(k) <= -1.0 + 1e-12) throw Error("rotate: slope -1 makes g(y)+y non-invertible");
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < g.size(); ++k) {
    xs.push_back(g.values()[k] + g.breakpoints()[k]);
    ys.push_back(g.values()[k] - g.breakpoints()[k]);
  }
  const double m = g.tail_slope();
  return PLFunction::lipschitz(std::move(xs), std::move(ys), (m - 1.0) / (m + 1.0));
}

}  // namespace rdl
