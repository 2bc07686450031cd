#include "adg/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adg/delta.hpp"
#include "adg/isomorph.hpp"

namespace adg {
namespace {

double chebyshev(const Vertex& a, const Vertex& b) {
  return std::max({std::fabs(a.c1 - b.c1), std::fabs(a.c2 - b.c2),
                   std::fabs(a.c3 - b.c3)});
}

// Smallest Chebyshev distance between distinct vertices of the same partite
// set; infinity if there are no comparable pairs.
double min_same_partite_separation(const std::vector<Vertex>& vs) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i].partite == vs[j].partite)
        best = std::min(best, chebyshev(vs[i], vs[j]));
  return best;
}

void check_first_coords_distinct(const std::vector<double>& cs, const char* side) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (std::fabs(cs[i] - cs[j]) < kSeparationTol)
        throw std::runtime_error(std::string("vertex collision: ") + side +
                                 " first coordinates too close");
}

}  // namespace

double max_adjacency_residual(const MonomialPair& pair,
                              const std::vector<Vertex>& vertices) {
  const MonomialFn f2 = f2_of(pair), f3 = f3_of(pair);
  double worst = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex& a = vertices[i];
    const Vertex& b = vertices[(i + 1) % n];
    if (a.partite == b.partite)
      throw std::invalid_argument("consecutive vertices share a partite set");
    const Vertex& p = a.partite == Partite::Point ? a : b;
    const Vertex& l = a.partite == Partite::Point ? b : a;
    worst = std::max(worst, std::fabs(p.c2 + l.c2 - f2.eval(p.c1, l.c1)));
    worst = std::max(worst, std::fabs(p.c3 + l.c3 - f3.eval(p.c1, l.c1)));
  }
  return worst;
}

CycleWitness propagate_cycle(const MonomialPair& pair, const CycleType& type,
                             std::pair<double, double> seed, double tol) {
  pair.validate();
  const std::size_t k = type.k();
  if (k != type.x_coords.size())
    throw std::invalid_argument("cycle type coordinate lists differ in length");
  if (k < 2 || k > 4)
    throw std::invalid_argument("cycle type must have k in {2,3,4}");
  if (k <= 3) {
    check_first_coords_distinct(type.a_coords, "point");
    check_first_coords_distinct(type.x_coords, "line");
  }

  const MonomialFn f2 = f2_of(pair), f3 = f3_of(pair);
  const auto& a = type.a_coords;
  const auto& x = type.x_coords;

  std::vector<Vertex> vs(2 * k);
  double p2 = seed.first, p3 = seed.second;
  vs[0] = Vertex{Partite::Point, a[0], p2, p3};
  for (std::size_t i = 0; i < k; ++i) {
    const double l2 = f2.eval(a[i], x[i]) - p2;
    const double l3 = f3.eval(a[i], x[i]) - p3;
    vs[2 * i + 1] = Vertex{Partite::Line, x[i], l2, l3};
    const double an = a[(i + 1) % k];
    p2 = f2.eval(an, x[i]) - l2;
    p3 = f3.eval(an, x[i]) - l3;
    if (i + 1 < k) vs[2 * i + 2] = Vertex{Partite::Point, an, p2, p3};
  }

  // Returning to the start re-derives the seed coordinates; the discrepancy
  // is exactly the Delta value of each monomial on this type.
  const double closure = std::max(std::fabs(p2 - seed.first),
                                  std::fabs(p3 - seed.second));
  if (!(closure <= tol)) {
    char msg[96];
    std::snprintf(msg, sizeof msg,
                  "cycle does not close: Delta conditions violated "
                  "(closure error %.3e)", closure);
    throw std::runtime_error(msg);
  }

  for (const auto& v : vs)
    if (!std::isfinite(v.c1) || !std::isfinite(v.c2) || !std::isfinite(v.c3))
      throw std::range_error("cycle propagation overflowed");

  CycleWitness w;
  w.pair = pair;
  w.vertices = std::move(vs);
  w.max_residual = max_adjacency_residual(pair, w.vertices);
  return w;
}

CycleWitness witness_girth4(const MonomialPair& pair) {
  if (classify(pair).girth != 4)
    throw std::invalid_argument("witness_girth4: pair is not girth four");
  return propagate_cycle(pair, CycleType{{1.0, -1.0}, {1.0, -1.0}});
}

CycleWitness witness_girth6_same_parity(const MonomialPair& pair) {
  const auto r = classify(pair);
  if (r.label != CaseLabel::P2a && r.label != CaseLabel::P2b &&
      r.label != CaseLabel::P2c)
    throw std::invalid_argument(
        "witness_girth6_same_parity: pair is not a uniform-parity girth-six case");
  return propagate_cycle(pair, CycleType{{1.0, 0.0, -1.0}, {-1.0, 1.0, 0.0}});
}

namespace {

// Root of the third mixed case away from the built-in root at 1. The value
// at 1 is 0 with negative slope, so just off 1 on the chosen side the
// function is nonzero; expanding outward must then cross back. The side is
// picked by the tail coefficient: the function diverges to +inf on both ends
// when C < 1 and to -inf when C > 1.
double solve_prop6(const ScalarEquation& eq, double root_tol) {
  if (std::fabs(eq(1.0)) > 1e-12)
    throw std::runtime_error("prop6: expected a root at 1");
  const double h = 1e-6;
  if (!((eq(1.0 + h) - eq(1.0 - h)) / (2 * h) < 0.0))
    throw std::runtime_error("prop6: expected negative slope at 1");

  const double p3j = ipow(3.0, 2 * eq.j + 1);
  const double p3m = ipow(3.0, 2 * eq.m + 1);
  const double C = (p3m + 1.0) /
                   std::pow(p3j + 1.0, 2.0 * eq.n / (2.0 * eq.k + 1.0));
  const int dir = C < 1.0 ? +1 : -1;

  double outer = 0.0;
  bool have_outer = false;
  for (double delta = 1e-3; delta >= 1e-13; delta *= 0.1) {
    const double start = 1.0 + dir * delta;
    const double fs = eq(start);
    if (fs == 0.0) continue;
    const bool away = dir > 0 ? fs < 0.0 : fs > 0.0;
    if (away) {
      if (have_outer) {
        const double lo = std::min(start, outer), hi = std::max(start, outer);
        return find_bracketed_root(eq, lo, hi, root_tol);
      }
      const Bracket b = expand_bracket(eq, start, dir);
      return find_bracketed_root(eq, b.lo, b.hi, root_tol);
    }
    // Sign has already flipped back within delta of 1: the root we want sits
    // between this probe and a smaller one.
    outer = start;
    have_outer = true;
  }
  throw std::runtime_error("root search exhausted near the unit root");
}

}  // namespace

Girth6MixedPlan plan_girth6_mixed(const MonomialPair& pair, double root_tol) {
  const auto r = classify(pair);
  if (r.label != CaseLabel::P2d && r.label != CaseLabel::P2e &&
      r.label != CaseLabel::P2f && r.label != CaseLabel::P2g)
    throw std::invalid_argument(
        "plan_girth6_mixed: pair is not a mixed-parity girth-six case");

  Girth6MixedPlan plan;
  plan.nf = *r.normalized;
  const int j = plan.nf.j, k = plan.nf.k, m = plan.nf.m, n = plan.nf.n;

  if (n <= k) {
    plan.prop = 4;
    const auto eq = ScalarEquation::prop4(k, n);
    plan.bracket = expand_bracket(eq, 0.0, -1);  // value at 0 is -2
    plan.root = find_bracketed_root(eq, plan.bracket.lo, plan.bracket.hi, root_tol);
    plan.z = signed_pow(2.0 * ipow(plan.root, 2 * k + 1) - 1.0, 1, 2 * k + 1);
    plan.type = CycleType{{0.0, 1.0, -1.0}, {1.0, plan.root, plan.z}};
  } else if (m < j) {
    plan.prop = 5;
    const auto eq = ScalarEquation::prop5(j, k, m, n);
    if (!(eq(-1.0) < 0.0))
      throw std::runtime_error("prop5: expected negative value at -1");
    plan.bracket = expand_bracket(eq, -1.0, -1);
    plan.root = find_bracketed_root(eq, plan.bracket.lo, plan.bracket.hi, root_tol);
    const double cj = ipow(plan.root, 2 * j + 1);
    plan.z = signed_pow((cj - 1.0) / cj, 1, 2 * k + 1);
    plan.type = CycleType{{0.0, 1.0, plan.root}, {0.0, 1.0, plan.z}};
  } else if (m > j) {
    plan.prop = 6;
    const auto eq = ScalarEquation::prop6(j, k, m, n);
    plan.root = solve_prop6(eq, root_tol);
    plan.bracket = Bracket{plan.root, plan.root};
    const double p3j = ipow(3.0, 2 * j + 1);
    plan.z = signed_pow((ipow(plan.root, 2 * k + 1) + p3j) / (p3j + 1.0), 1, 2 * k + 1);
    plan.type = CycleType{{1.0, 0.0, -3.0}, {plan.root, 1.0, plan.z}};
  } else {
    throw std::logic_error("plan_girth6_mixed: n > k with j == m is girth eight");
  }
  return plan;
}

namespace {

// Every graph in this family has diagonal scaling automorphisms
//   (a1,a2,a3) -> (la a1, la^s lx^t a2, la^u lx^v a3)
//   [x1,x2,x3] -> [lx x1, la^s lx^t x2, la^u lx^v x3]
// for nonzero la, lx. Dividing the type's first coordinates by their largest
// magnitudes moves a cycle with large entries to an equivalent one whose
// adjacency values are O(1), where absolute residuals sit near machine
// precision. Types that are already small are left untouched.
void rescale_large_type(const MonomialPair& pair, CycleType& type) {
  const MonomialFn f2 = f2_of(pair), f3 = f3_of(pair);
  const std::size_t k = type.k();
  double fmax = 0.0, amax = 0.0, xmax = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double a = type.a_coords[i], an = type.a_coords[(i + 1) % k];
    const double x = type.x_coords[i];
    for (double val : {f2.eval(a, x), f3.eval(a, x), f2.eval(an, x), f3.eval(an, x)})
      fmax = std::max(fmax, std::fabs(val));
    amax = std::max(amax, std::fabs(a));
    xmax = std::max(xmax, std::fabs(x));
  }
  if (fmax <= 1e3 || amax == 0.0 || xmax == 0.0) return;
  for (auto& a : type.a_coords) a /= amax;
  for (auto& x : type.x_coords) x /= xmax;
}

}  // namespace

CycleWitness witness_girth6_mixed(const MonomialPair& pair, double root_tol) {
  const Girth6MixedPlan plan = plan_girth6_mixed(pair, root_tol);

  for (const auto& cs : {plan.type.a_coords, plan.type.x_coords})
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        if (std::fabs(cs[i] - cs[j]) < kSeparationTol)
          throw std::runtime_error(
              "distinctness failure in mixed girth-six construction");

  CycleType type = plan.type;
  rescale_large_type(plan.nf.exponents(), type);

  CycleWitness w = propagate_cycle(plan.nf.exponents(), type);
  return pull_back_witness(w, plan.nf.chain, pair);
}

CycleWitness witness_girth8(const MonomialPair& pair) {
  const auto r = classify(pair);
  if (r.girth != 8)
    throw std::invalid_argument("witness_girth8: pair is not girth eight");
  const auto [k, n] = *r.canonical;

  const MonomialPair canonical{1, 2 * k + 1, 1, 2 * n};
  const CycleType type{{1.0, 0.0, -1.0, 0.0}, {1.0, -1.0, 1.0, -1.0}};
  CycleWitness w = propagate_cycle(canonical, type);

  w = pull_back_witness(w, canonical_chain_girth8(pair), pair);

  // First coordinates repeat by design; the full triples may not.
  if (min_same_partite_separation(w.vertices) < kSeparationTol)
    throw std::runtime_error("witness_girth8: vertices not distinct as triples");
  return w;
}

CycleWitness pull_back_witness(const CycleWitness& w, std::span<const IsoStep> chain,
                               const MonomialPair& original) {
  const VertexMap vm(std::vector<IsoStep>(chain.begin(), chain.end()));
  CycleWitness out;
  out.pair = original;
  out.vertices.reserve(w.vertices.size());
  for (const auto& v : w.vertices) out.vertices.push_back(vm.backward(v));
  // An odd number of partite exchanges leaves the list line-first; rotate by
  // one so the cycle starts at a point again.
  if (!out.vertices.empty() && out.vertices.front().partite == Partite::Line)
    std::rotate(out.vertices.begin(), out.vertices.begin() + 1, out.vertices.end());
  out.max_residual = max_adjacency_residual(original, out.vertices);
  return out;
}

VerifyReport verify_witness(const CycleWitness& w, double residual_tol,
                            double separation_tol) {
  VerifyReport rep;
  rep.cycle_length = static_cast<int>(w.vertices.size());

  rep.structure_ok = rep.cycle_length >= 4 && rep.cycle_length % 2 == 0;
  if (rep.structure_ok)
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
      if (w.vertices[i].partite == w.vertices[(i + 1) % w.vertices.size()].partite) {
        rep.structure_ok = false;
        break;
      }
  if (!rep.structure_ok) {
    rep.detail = "structure: need an even alternating cycle of length >= 4";
    return rep;
  }

  rep.max_residual = max_adjacency_residual(w.pair, w.vertices);
  rep.min_separation = min_same_partite_separation(w.vertices);
  rep.residual_ok = rep.max_residual <= residual_tol;
  rep.distinct_ok = rep.min_separation >= separation_tol;
  rep.pass = rep.residual_ok && rep.distinct_ok;
  if (!rep.residual_ok) rep.detail += "residual above tolerance; ";
  if (!rep.distinct_ok) rep.detail += "vertices too close; ";
  return rep;
}

namespace {

double h_fn(double t, double x, int k, int n) {
  return (ipow(t, 2 * n) - ipow(x, 2 * n)) /
         (ipow(t, 2 * k + 1) - ipow(x, 2 * k + 1));
}

double H_fn(double t, double x, int k, int n) {
  return (2 * n - 2 * k - 1) * ipow(t, 2 * n) -
         2.0 * n * ipow(x, 2 * k + 1) * ipow(t, 2 * n - 2 * k - 1) +
         (2 * k + 1) * ipow(x, 2 * n);
}

double det3(double x, double y, double z, int k, int n) {
  const int K = 2 * k + 1, N = 2 * n;
  return (ipow(y, K) - ipow(x, K)) * (ipow(z, N) - ipow(x, N)) -
         (ipow(z, K) - ipow(x, K)) * (ipow(y, N) - ipow(x, N));
}

}  // namespace

CertificateReport certify_no_6cycle(const MonomialPair& pair, int trials,
                                    std::uint64_t seed) {
  const auto r = classify(pair);
  if (r.girth != 8)
    throw std::invalid_argument("certify_no_6cycle: pair is not girth eight");
  if (trials < 1) throw std::invalid_argument("certify_no_6cycle: trials < 1");

  CertificateReport rep;
  rep.pair = pair;
  rep.canonical = *r.canonical;
  rep.trials = trials;
  rep.min_abs_determinant = std::numeric_limits<double>::infinity();
  const int k = rep.canonical.k, n = rep.canonical.n;

  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const double x = rng.uniform(-10.0, 10.0);

    std::vector<double> grid(100);
    for (auto& t : grid) t = rng.uniform(-10.0, 10.0);
    std::sort(grid.begin(), grid.end());

    // (i) strict monotonicity of h_x across the sorted grid
    bool have_prev = false;
    double prev_t = 0.0, prev_h = 0.0;
    for (double t : grid) {
      if (std::fabs(t - x) < 1e-6) continue;            // h undefined at t = x
      if (have_prev && t - prev_t < 1e-9) continue;     // drop near-duplicates
      const double h = h_fn(t, x, k, n);
      ++rep.monotonic_samples;
      if (have_prev && !(h > prev_h)) ++rep.monotonic_violations;
      have_prev = true;
      prev_t = t;
      prev_h = h;
    }

    // (ii) positivity of H_x away from its critical points, plus the two
    // known critical values
    for (double t : grid) {
      if (std::fabs(t) < 1e-6 || std::fabs(t - x) < 1e-6) continue;
      ++rep.positivity_samples;
      if (!(H_fn(t, x, k, n) > 0.0)) ++rep.positivity_violations;
    }
    const double scale = std::max(1.0, (2 * k + 1) * ipow(std::fabs(x), 2 * n));
    rep.max_err_H_at_root =
        std::max(rep.max_err_H_at_root, std::fabs(H_fn(x, x, k, n)) / scale);
    rep.max_err_H_at_zero = std::max(
        rep.max_err_H_at_zero,
        std::fabs(H_fn(0.0, x, k, n) - (2 * k + 1) * ipow(x, 2 * n)) / scale);

    // (iii) nonzero determinant on random distinct triples
    double dx = 0, dy = 0, dz = 0;
    for (int attempt = 0; attempt < 100; ++attempt) {
      dx = rng.uniform(-10.0, 10.0);
      dy = rng.uniform(-10.0, 10.0);
      dz = rng.uniform(-10.0, 10.0);
      if (std::fabs(dx - dy) > 1e-2 && std::fabs(dy - dz) > 1e-2 &&
          std::fabs(dx - dz) > 1e-2)
        break;
    }
    const double det = det3(dx, dy, dz, k, n);
    const double dscale = std::max(
        1.0, std::fabs((ipow(dy, 2 * k + 1) - ipow(dx, 2 * k + 1)) *
                       (ipow(dz, 2 * n) - ipow(dx, 2 * n))));
    ++rep.determinant_samples;
    rep.min_abs_determinant = std::min(rep.min_abs_determinant, std::fabs(det));
    if (!(std::fabs(det) > 1e-12 * dscale)) ++rep.determinant_violations;
  }

  rep.pass = rep.monotonic_violations == 0 && rep.positivity_violations == 0 &&
             rep.determinant_violations == 0 && rep.max_err_H_at_root <= 1e-9 &&
             rep.max_err_H_at_zero <= 1e-9;
  return rep;
}

}  // namespace adg
