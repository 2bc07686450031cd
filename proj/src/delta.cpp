#include "adg/delta.hpp"

#include <algorithm>
#include <cmath>

namespace adg {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::range_error(std::string(what) + " overflowed");
}

// Sum a handful of terms in ascending value order. Cyclic rotations of the
// inputs produce the same multiset of terms and hence the bit-identical sum.
double sum_sorted(std::initializer_list<double> terms) {
  double t[4];
  std::copy(terms.begin(), terms.end(), t);
  std::sort(t, t + terms.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) acc += t[i];
  return acc;
}

}  // namespace

void MonomialFn::validate() const {
  if (i_exp < 1 || j_exp < 1)
    throw std::invalid_argument("monomial exponents must be >= 1");
}

double MonomialFn::eval(double X, double Y) const {
  return ipow(X, i_exp) * ipow(Y, j_exp);
}

double ipow(double base, long long e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  double acc = 1.0, b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::complex<double> ipow_c(std::complex<double> base, long long e) {
  std::complex<double> acc{1.0, 0.0};
  for (auto b = base; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    b *= b;
  }
  return acc;
}

double delta2(const MonomialFn& f, double a, double b, double x, double y) {
  const double left = ipow(a, f.i_exp) - ipow(b, f.i_exp);
  const double right = ipow(x, f.j_exp) - ipow(y, f.j_exp);
  const double r = left * right;
  require_finite(r, "delta2");
  return r;
}

double delta3(const MonomialFn& f, double a, double b, double c,
              double x, double y, double z) {
  const int i = f.i_exp, j = f.j_exp;
  const double t1 = ipow(x, j) * (ipow(a, i) - ipow(b, i));
  const double t2 = ipow(y, j) * (ipow(b, i) - ipow(c, i));
  const double t3 = ipow(z, j) * (ipow(c, i) - ipow(a, i));
  require_finite(t1, "delta3");
  require_finite(t2, "delta3");
  require_finite(t3, "delta3");
  return sum_sorted({t1, t2, t3});
}

double delta4(const MonomialFn& f, const std::array<double, 4>& a,
              const std::array<double, 4>& x) {
  const int i = f.i_exp, j = f.j_exp;
  double t[4];
  for (int q = 0; q < 4; ++q) {
    t[q] = ipow(x[q], j) * (ipow(a[q], i) - ipow(a[(q + 1) % 4], i));
    require_finite(t[q], "delta4");
  }
  return sum_sorted({t[0], t[1], t[2], t[3]});
}

double delta_cycle(const MonomialFn& f, const CycleType& type) {
  const auto& a = type.a_coords;
  const auto& x = type.x_coords;
  if (a.size() != x.size())
    throw std::invalid_argument("cycle type coordinate lists differ in length");
  switch (a.size()) {
    case 2: return delta2(f, a[0], a[1], x[0], x[1]);
    case 3: return delta3(f, a[0], a[1], a[2], x[0], x[1], x[2]);
    case 4: return delta4(f, {a[0], a[1], a[2], a[3]}, {x[0], x[1], x[2], x[3]});
    default:
      throw std::invalid_argument("cycle type must have k in {2,3,4}");
  }
}

std::complex<double> delta2_complex(const MonomialFn& f,
                                    std::complex<double> a, std::complex<double> b,
                                    std::complex<double> x, std::complex<double> y) {
  const auto left = ipow_c(a, f.i_exp) - ipow_c(b, f.i_exp);
  const auto right = ipow_c(x, f.j_exp) - ipow_c(y, f.j_exp);
  const auto r = left * right;
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
    throw std::range_error("delta2_complex overflowed");
  return r;
}

bool has_real_4cycle_obstruction(const MonomialFn& f) {
  f.validate();
  return f.i_exp % 2 == 1 && f.j_exp % 2 == 1;
}

}  // namespace adg
