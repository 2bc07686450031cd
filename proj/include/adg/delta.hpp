// Cycle-condition functionals Delta_2, Delta_3, Delta_4 for monomials,
// plus general alternating-sum evaluators and a complex Delta_2.
// A 2k-cycle of a given type exists iff both monomials' Delta vanish on it
// (with the distinctness side conditions handled by the witness machinery).
#pragma once

#include <array>
#include <complex>

#include "adg/core.hpp"

namespace adg {

/// f(X,Y) = X^{i_exp} Y^{j_exp} with both exponents >= 1.
struct MonomialFn {
  int i_exp = 1, j_exp = 1;

  void validate() const;
  double eval(double X, double Y) const;
};

inline MonomialFn f2_of(const MonomialPair& p) { return MonomialFn{p.s, p.t}; }
inline MonomialFn f3_of(const MonomialPair& p) { return MonomialFn{p.u, p.v}; }

/// Integer power by squaring; e < 0 gives 1/base^{-e}.
double ipow(double base, long long e);
std::complex<double> ipow_c(std::complex<double> base, long long e);

/// (a^i - b^i)(x^j - y^j), the factored form of the four-term alternating sum.
double delta2(const MonomialFn& f, double a, double b, double x, double y);

/// x^j(a^i - b^i) + y^j(b^i - c^i) + z^j(c^i - a^i).
double delta3(const MonomialFn& f, double a, double b, double c,
              double x, double y, double z);

/// sum_i x_i^j (a_i^i - a_{i+1}^i) over the cyclic index.
double delta4(const MonomialFn& f, const std::array<double, 4>& a,
              const std::array<double, 4>& x);

/// Dispatch on type.k() in {2,3,4}.
double delta_cycle(const MonomialFn& f, const CycleType& type);

std::complex<double> delta2_complex(const MonomialFn& f,
                                    std::complex<double> a, std::complex<double> b,
                                    std::complex<double> x, std::complex<double> y);

/// True iff both exponents are odd: then t -> t^odd is injective over R and
/// the factored Delta_2 cannot vanish with a != b and x != y.
bool has_real_4cycle_obstruction(const MonomialFn& f);

// Alternating sums for arbitrary bivariate callables.

template <class F>
double delta2_general(F&& f, double a, double b, double x, double y) {
  return f(a, x) - f(b, x) + f(b, y) - f(a, y);
}

template <class F>
double delta3_general(F&& f, double a, double b, double c,
                      double x, double y, double z) {
  return f(a, x) - f(b, x) + f(b, y) - f(c, y) + f(c, z) - f(a, z);
}

template <class F>
double delta4_general(F&& f, const std::array<double, 4>& a,
                      const std::array<double, 4>& x) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += f(a[i], x[i]) - f(a[(i + 1) % 4], x[i]);
  return acc;
}

}  // namespace adg
