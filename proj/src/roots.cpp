#include "adg/roots.hpp"

#include <cmath>

#include "adg/delta.hpp"

namespace adg {

double signed_pow(double a, long long p, long long q) {
  if (q <= 0 || q % 2 == 0)
    throw std::invalid_argument("signed_pow: q must be an odd positive integer");
  if (a == 0.0) {
    if (p < 0) throw std::domain_error("signed_pow: zero base, negative exponent");
    return p == 0 ? 1.0 : 0.0;
  }
  if (p == 0) return 1.0;

  const double mag_base = std::fabs(a);
  double mag;
  if (q == 1)
    mag = ipow(mag_base, p);
  else if (p == 1 && q == 3)
    mag = std::cbrt(mag_base);
  else
    mag = std::pow(mag_base, static_cast<double>(p) / static_cast<double>(q));

  return (a < 0.0 && p % 2 != 0) ? -mag : mag;
}

double ScalarEquation::operator()(double v) const {
  switch (label) {
    case PropLabel::D_prop4: {
      const double base = 2.0 * ipow(v, 2 * k + 1) - 1.0;
      return -1.0 + 2.0 * ipow(v, 2 * n) - signed_pow(base, 2 * n, 2 * k + 1);
    }
    case PropLabel::D_prop5: {
      const double cj = ipow(v, 2 * j + 1);
      const double cm = ipow(v, 2 * m + 1);
      return 1.0 - cm + cm * signed_pow((cj - 1.0) / cj, 2 * n, 2 * k + 1);
    }
    case PropLabel::D_prop6: {
      const double p3j = ipow(3.0, 2 * j + 1);
      const double p3m = ipow(3.0, 2 * m + 1);
      const double base = (ipow(v, 2 * k + 1) + p3j) / (p3j + 1.0);
      return ipow(v, 2 * n) + p3m - (p3m + 1.0) * signed_pow(base, 2 * n, 2 * k + 1);
    }
  }
  throw std::logic_error("ScalarEquation: bad label");
}

ScalarEquation ScalarEquation::prop4(int k, int n) {
  if (k < 0 || n < 1) throw std::invalid_argument("prop4 needs k >= 0, n >= 1");
  return ScalarEquation{PropLabel::D_prop4, 0, k, 0, n};
}

ScalarEquation ScalarEquation::prop5(int j, int k, int m, int n) {
  if (j < 0 || k < 0 || m < 0 || n < 1)
    throw std::invalid_argument("prop5 needs j,k,m >= 0 and n >= 1");
  return ScalarEquation{PropLabel::D_prop5, j, k, m, n};
}

ScalarEquation ScalarEquation::prop6(int j, int k, int m, int n) {
  if (j < 0 || k < 0 || m < 0 || n < 1)
    throw std::invalid_argument("prop6 needs j,k,m >= 0 and n >= 1");
  return ScalarEquation{PropLabel::D_prop6, j, k, m, n};
}

}  // namespace adg
