// Numerical machinery for the constructive girth-six cases: signed rational
// powers, expanding bracket search, and bisection to tolerance.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "adg/core.hpp"

namespace adg {

/// Signed rational power with odd positive denominator q:
/// a >= 0 gives a^{p/q}; a < 0 gives (-1)^p |a|^{p/q}. The magnitude is never
/// formed as |a|^p first, so large p does not overflow prematurely.
double signed_pow(double a, long long p, long long q);

enum class PropLabel { D_prop4 = 4, D_prop5 = 5, D_prop6 = 6 };

/// The scalar root functions of the three mixed-parity girth-six cases, in
/// the normalized exponents (2j+1, 2k+1, 2m+1, 2n):
///   D_prop4(y) = -1 + 2 y^{2n} - (2 y^{2k+1} - 1)^{2n/(2k+1)}
///   D_prop5(c) =  1 - c^{2m+1} + c^{2m+1} ((c^{2j+1}-1)/c^{2j+1})^{2n/(2k+1)}
///   D_prop6(x) =  x^{2n} + 3^{2m+1}
///                 - (3^{2m+1}+1) ((x^{2k+1}+3^{2j+1})/(3^{2j+1}+1))^{2n/(2k+1)}
struct ScalarEquation {
  PropLabel label = PropLabel::D_prop4;
  int j = 0, k = 0, m = 0, n = 1;

  double operator()(double v) const;

  static ScalarEquation prop4(int k, int n);
  static ScalarEquation prop5(int j, int k, int m, int n);
  static ScalarEquation prop6(int j, int k, int m, int n);
};

struct Bracket {
  double lo = 0.0, hi = 0.0;
};

/// Probe start + direction*2^i for i = 0,1,2,... until the sign of eq flips
/// against eq(start); returns the bracketing interval (ordered lo < hi).
/// Infinite probe values participate by sign; NaN is an error.
template <class F>
Bracket expand_bracket(F&& eq, double start, int direction, int max_doublings = 200) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("expand_bracket: direction must be +1 or -1");
  const double f0 = eq(start);
  if (!std::isfinite(f0))
    throw std::domain_error("expand_bracket: non-finite value at start");
  if (f0 == 0.0)
    throw std::invalid_argument("expand_bracket: start is already a root");

  double prev = start;
  double step = 1.0;
  for (int i = 0; i < max_doublings; ++i, step *= 2.0) {
    const double x = start + direction * step;
    const double fx = eq(x);
    if (std::isnan(fx))
      throw std::domain_error("expand_bracket: NaN during expansion");
    if (fx == 0.0 || (fx < 0.0) != (f0 < 0.0))
      return direction > 0 ? Bracket{prev, x} : Bracket{x, prev};
    prev = x;
  }
  throw std::runtime_error("expand_bracket: no sign change found");
}

/// Bisection on a sign-changing bracket, run to machine resolution.
/// Returns r in [lo,hi] with |eq(r)| <= tol * max(1, |eq(lo)|, |eq(hi)|).
/// Deterministic: identical inputs give bit-identical results.
template <class F>
double find_bracketed_root(F&& eq, double lo, double hi, double tol = kRootTol) {
  if (!(lo < hi))
    throw std::invalid_argument("find_bracketed_root: need lo < hi");
  double flo = eq(lo), fhi = eq(hi);
  if (std::isnan(flo) || std::isnan(fhi))
    throw std::domain_error("find_bracketed_root: NaN at bracket endpoint");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw std::invalid_argument("find_bracketed_root: no sign change over bracket");

  const double scale = std::max({1.0, std::fabs(flo), std::fabs(fhi)});
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
    const double fmid = eq(mid);
    if (std::isnan(fmid))
      throw std::domain_error("find_bracketed_root: NaN inside bracket");
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  const double r = (std::fabs(flo) <= std::fabs(fhi)) ? lo : hi;
  const double fr = (std::fabs(flo) <= std::fabs(fhi)) ? flo : fhi;
  if (!(std::fabs(fr) <= tol * scale))
    throw std::runtime_error("find_bracketed_root: residual tolerance not met");
  return r;
}

}  // namespace adg
