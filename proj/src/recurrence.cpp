#include <cmath>
#include <string>
#include <tuple>

#include "rdl/lipschitz.hpp"

namespace rdl {

namespace {
constexpr int kRescaleExp = 512;
}

std::pair<double, double> characteristic(double S, const GammaParam& p) {
  const double gm = p.gamma();
  const double a = 2.0 / (1.0 + gm);
  const double c = 2.0 / (1.0 - gm * gm);
  const double q = (1.0 - gm) / (1.0 + gm);
  // c q T_{i+1} = (S - a - c q) T_i - q (S - a) T_{i-1}
  const double alpha = -(S - a - c * q) / (c * q);
  const double beta = (S - a) / c;
  return {alpha, beta};
}

long double RecurrenceRun::value(std::size_t i) const { return std::ldexp(static_cast<long double>(T[i]), scale[i]); }

RecurrenceRun run_recurrence(double t1, double S, const GammaParam& p, std::size_t N) {
  if (!(t1 > 0.0)) throw Error("run_recurrence: t1 must be positive");
  if (N < 2) throw Error("run_recurrence: N must be >= 2");

  RecurrenceRun run;
  run.S = S;
  std::tie(run.alpha, run.beta) = characteristic(S, p);
  run.discriminant = run.alpha * run.alpha - 4.0 * run.beta;

  const long double gm = p.gamma();
  const long double a = 2.0L / (1.0L + gm);
  const long double c = 2.0L / (1.0L - gm * gm);
  const long double q = (1.0L - gm) / (1.0L + gm);

  // Working values share one binary exponent `exp`; acc is
  // sum_{j<=i} q^{i-j+2} (T_j + T_{j-1}).
  long double cur = t1;
  long double acc = q * q * cur;
  int exp = 0;
  run.T.reserve(N);
  run.scale.reserve(N);
  run.T.push_back(static_cast<double>(cur));
  run.scale.push_back(0);

  for (std::size_t i = 1; i < N; ++i) {
    const long double next = ((S - a) * cur / c - acc) / q - cur;
    if (!std::isfinite(static_cast<double>(next)))
      throw Error("run_recurrence: numeric overflow after index " + std::to_string(i - 1));
    acc = q * acc + q * q * (next + cur);
    cur = next;
    const long double mag = std::abs(cur);
    if (mag > std::ldexp(1.0L, kRescaleExp) || (mag != 0.0L && mag < std::ldexp(1.0L, -kRescaleExp))) {
      const int shift = std::ilogb(static_cast<double>(mag));
      cur = std::ldexp(cur, -shift);
      acc = std::ldexp(acc, -shift);
      exp += shift;
    }
    run.T.push_back(static_cast<double>(cur));
    run.scale.push_back(exp);
    if (!run.first_nonpositive && cur <= 0.0L) run.first_nonpositive = i;
  }
  return run;
}

}  // namespace rdl
