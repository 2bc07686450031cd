// Graph isomorphisms of Gamma_F(f2,f3): the five generic steps I1..I5, the
// odd-root step L5 for real monomial pairs, explicit vertex maps for the
// steps that transform chains use, and the automorphisms A1..A3 of
// Gamma_R(XY, XY^2). Includes a sampled adjacency-preservation checker.
#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adg/core.hpp"
#include "adg/delta.hpp"

namespace adg {

struct PolyTerm {
  double coeff = 1.0;
  int xd = 0, yd = 0;
};

/// Sparse bivariate polynomial sum of coeff * X^xd Y^yd terms. Steps I2, I3
/// and I5 leave the monomial world, so pair transforms work on this type and
/// flag whether the result is still a plain monomial.
struct PolyXY {
  std::vector<PolyTerm> terms;

  static PolyXY monomial(const MonomialFn& f);
  double eval(double X, double Y) const;
  bool is_monomial() const;      // single unit-coefficient term, both degrees >= 1
  MonomialFn as_monomial() const;
  std::string to_string() const;
};

/// Apply one step to a function pair.
std::pair<PolyXY, PolyXY> apply_iso_to_pair(const IsoStep& step,
                                            const PolyXY& f2, const PolyXY& f3);

/// Monomial-in, monomial-out convenience for the steps that preserve
/// monomials (I1, I4, L5).
std::pair<MonomialFn, MonomialFn> apply_iso_to_monomials(const IsoStep& step,
                                                         const MonomialFn& f2,
                                                         const MonomialFn& f3);

/// Apply a monomial-preserving step to an exponent tuple.
MonomialPair apply_iso_to_exponents(const IsoStep& step, const MonomialPair& p);

/// Explicit vertex map of a step or chain of steps (I1, I4, L5 only):
///   I1 exchanges the partite sets, coordinates unchanged;
///   I4 swaps the second and third coordinates on both sides;
///   L5(m) sends a point's first coordinate to its (2m+1)-th power
///         (inverse: signed odd root), lines unchanged.
/// forward() maps source-graph vertices to target-graph vertices; backward()
/// is the exact inverse.
class VertexMap {
 public:
  explicit VertexMap(std::vector<IsoStep> steps);
  static VertexMap of(const IsoStep& step);

  Vertex forward(Vertex v) const;
  Vertex backward(Vertex v) const;
  bool swaps_partite() const;
  const std::vector<IsoStep>& steps() const { return steps_; }

 private:
  std::vector<IsoStep> steps_;
};

enum class AutoKind { A1, A2, A3 };

/// An automorphism of Gamma_R(XY, XY^2):
///   A1(a): (p1,p2,p3) -> (p1+a, p2, p3), [l1,l2,l3] -> [l1, l2+a l1, l3+a l1^2]
///   A2(b): (p1,p2,p3) -> (p1, p2+b p1, p3+2b p2+b^2 p1), [l1,l2,l3] -> [l1+b, l2, l3+2b l2]
///   A3(c,d): (p1,p2,p3) -> (p1, p2-c, p3-d), [l1,l2,l3] -> [l1, l2+c, l3+d]
struct Automorphism {
  AutoKind kind = AutoKind::A3;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  static Automorphism A1(double a);
  static Automorphism A2(double b);
  static Automorphism A3(double c, double d);
};

Vertex automorphism_A(const Automorphism& phi, const Vertex& v);

struct AdjacencyCheck {
  bool ok = true;
  int trials = 0;
  double worst_residual = 0.0;
  Vertex bad_point, bad_line;  // a failing source edge, when !ok
};

/// Sample `trials` random edges of the source graph (a1, x1 in [-5,5], second
/// and third coordinates completed by the adjacency equations), push both
/// endpoints through `map`, and check adjacency in the destination graph to
/// 1e-9 relative accuracy.
AdjacencyCheck check_adjacency_preserved(const std::function<Vertex(const Vertex&)>& map,
                                         const MonomialPair& src_pair,
                                         const MonomialPair& dst_pair,
                                         int trials, Rng& rng);

AdjacencyCheck check_adjacency_preserved(const VertexMap& map,
                                         const MonomialPair& src_pair,
                                         const MonomialPair& dst_pair,
                                         int trials, Rng& rng);

}  // namespace adg
