// Construction and verification of explicit cycle witnesses: coordinate
// propagation around a cycle type, the per-case constructions for girth
// 4/6/8, pullback through transform chains, and the no-six-cycle numerical
// certificate for girth-eight pairs.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adg/classify.hpp"
#include "adg/core.hpp"
#include "adg/roots.hpp"

namespace adg {

/// Walk the cycle type starting from a point vertex with (c2,c3) = seed,
/// solving each adjacency equation for the next vertex. The closure error on
/// returning to the start equals the Delta values of the type and must stay
/// within tol; otherwise a closure failure is thrown. First coordinates must
/// be pairwise distinct for k <= 3.
CycleWitness propagate_cycle(const MonomialPair& pair, const CycleType& type,
                             std::pair<double, double> seed = {0.0, 0.0},
                             double tol = kResidualTol);

/// Girth-4 witness from the type (1,-1; 1,-1); exact in floating point.
CycleWitness witness_girth4(const MonomialPair& pair);

/// Girth-6 witness for the uniform-parity cases from the type (1,0,-1; -1,1,0).
CycleWitness witness_girth6_same_parity(const MonomialPair& pair);

/// Root-finding plan for a mixed-parity girth-6 tuple: which case applies,
/// the solved root and derived z, and the cycle type in the normalized graph.
struct Girth6MixedPlan {
  int prop = 4;  // 4, 5 or 6
  NormalizedForm nf;
  CycleType type;     // in the normalized graph
  double root = 0.0;  // y (prop4), c (prop5) or x (prop6)
  double z = 0.0;
  Bracket bracket;
};

Girth6MixedPlan plan_girth6_mixed(const MonomialPair& pair,
                                  double root_tol = kRootTol);

/// Girth-6 witness for the single-even-exponent cases: normalize, solve the
/// case's root function, build the cycle there, pull back through the chain.
CycleWitness witness_girth6_mixed(const MonomialPair& pair,
                                  double root_tol = kRootTol);

/// Girth-8 witness from the type (1,0,-1,0; 1,-1,1,-1) in the canonical
/// graph (X Y^{2k+1}, X Y^{2n}), pulled back; first coordinates repeat but
/// all eight vertices are distinct as triples.
CycleWitness witness_girth8(const MonomialPair& pair);

/// Map a witness in the chain's target graph back to the original graph by
/// inverting the steps in reverse order. Residuals are recomputed against
/// the original pair.
CycleWitness pull_back_witness(const CycleWitness& w, std::span<const IsoStep> chain,
                               const MonomialPair& original);

struct VerifyReport {
  int cycle_length = 0;
  double max_residual = 0.0;
  double min_separation = 0.0;   // over same-partite vertex pairs, Chebyshev
  bool structure_ok = false;     // even length >= 4, alternating partites
  bool distinct_ok = false;
  bool residual_ok = false;
  bool pass = false;
  std::string detail;
};

/// Recompute every adjacency residual and pairwise separation from scratch;
/// independent of how the witness was produced.
VerifyReport verify_witness(const CycleWitness& w,
                            double residual_tol = kResidualTol,
                            double separation_tol = kSeparationTol);

/// Max |p2+l2-f2| / |p3+l3-f3| over the witness's 2k edges.
double max_adjacency_residual(const MonomialPair& pair,
                              const std::vector<Vertex>& vertices);

struct CertificateReport {
  MonomialPair pair;
  CanonicalGirth8 canonical;
  int trials = 0;
  long monotonic_samples = 0, monotonic_violations = 0;
  long positivity_samples = 0, positivity_violations = 0;
  long determinant_samples = 0, determinant_violations = 0;
  double max_err_H_at_root = 0.0;  // |H_x(x)|, relative
  double max_err_H_at_zero = 0.0;  // |H_x(0) - (2k+1) x^{2n}|, relative
  double min_abs_determinant = 0.0;
  bool pass = false;
};

/// Numerical certificate that a girth-eight pair admits no 6-cycle, sampling
/// the three facts the argument rests on in the canonical form (k,n):
///  (i)  h_x(t) = (t^{2n}-x^{2n})/(t^{2k+1}-x^{2k+1}) strictly increasing,
///  (ii) H_x(t) = (2n-2k-1)t^{2n} - 2n x^{2k+1} t^{2n-2k-1} + (2k+1)x^{2n} > 0
///       away from t in {0,x}, with H_x(x) = 0 and H_x(0) = (2k+1)x^{2n}
///       checked explicitly,
///  (iii) det [[1,1,1],[x',y',z' ^{2k+1}],[x',y',z' ^{2n}]] != 0 for random
///        distinct x',y',z'.
CertificateReport certify_no_6cycle(const MonomialPair& pair, int trials,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace adg
