// Core domain types for algebraically defined monomial graphs over R^3:
// exponent tuples, girth classification results, cycle types, witnesses,
// and the isomorphism steps that connect them.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace adg {

// Exponent cap keeping witness searches inside well-conditioned double range.
inline constexpr int kMaxExponentDefault = 15;
// Adjacency residual bound for a verified cycle witness.
inline constexpr double kResidualTol = 1e-9;
// Minimum separation between distinct vertices of a witness.
inline constexpr double kSeparationTol = 1e-6;
// Residual tolerance for scalar root finding.
inline constexpr double kRootTol = 1e-12;
inline constexpr std::uint64_t kDefaultSeed = 1;

/// Exponents (s,t,u,v) of the defining pair f2 = X^s Y^t, f3 = X^u Y^v.
struct MonomialPair {
  int s = 1, t = 1, u = 1, v = 1;

  void validate(int max_exp = kMaxExponentDefault) const;
  static MonomialPair checked(int s, int t, int u, int v,
                              int max_exp = kMaxExponentDefault);
  bool operator==(const MonomialPair&) const = default;
};

/// (s mod 2, t mod 2, u mod 2, v mod 2)
std::array<int, 4> parity_signature(const MonomialPair& p);

/// One isomorphism step between graphs; chains of these record how an
/// exponent tuple was normalized, and they are invertible on vertices.
struct IsoStep {
  enum class Kind {
    I1Star,       // replace both functions f by f*(X,Y) = f(Y,X)
    I2Scale,      // f3 -> c * f3, c != 0
    I3Separable,  // f3 -> f3 + g(X) + h(Y)
    I4Swap,       // swap f2 and f3
    I5Shear,      // f3 -> f3 + delta * f2
    L5OddRoot     // (X^{2m+1} Y^t, X^{2m+1} Y^v) -> (X Y^t, X Y^v)
  };

  Kind kind = Kind::I1Star;
  double scale = 1.0;      // I2
  std::vector<double> g;   // I3, coefficients of g(X), ascending degree
  std::vector<double> h;   // I3, coefficients of h(Y), ascending degree
  double shear = 0.0;      // I5
  int odd_root_m = 0;      // L5, m >= 0

  static IsoStep i1_star();
  static IsoStep i2_scale(double c);
  static IsoStep i3_separable(std::vector<double> g, std::vector<double> h);
  static IsoStep i4_swap();
  static IsoStep i5_shear(double delta);
  static IsoStep l5_odd_root(int m);

  std::string name() const;  // "I1", "I4", "L5(1)", ...
};

/// Half-exponents (j,k,m,n) of the normalized presentation
/// (X^{2j+1} Y^{2k+1}, X^{2m+1} Y^{2n}) reached from a mixed-parity tuple,
/// together with the steps that got there.
struct NormalizedForm {
  int j = 0, k = 0, m = 0, n = 1;
  std::vector<IsoStep> chain;

  MonomialPair exponents() const {
    return MonomialPair{2 * j + 1, 2 * k + 1, 2 * m + 1, 2 * n};
  }
};

enum class CaseLabel { P1, P2a, P2b, P2c, P2d, P2e, P2f, P2g, P3a, P3b, P3c, P3d };

const char* to_string(CaseLabel label);
int girth_of(CaseLabel label);  // 4, 6 or 8

/// Parameters of the canonical girth-eight form (X Y^{2k+1}, X Y^{2n}), n > k.
struct CanonicalGirth8 {
  int k = 0, n = 1;
};

struct GirthResult {
  int girth = 0;
  CaseLabel label = CaseLabel::P1;
  std::optional<NormalizedForm> normalized;  // present for mixed-parity tuples
  std::optional<CanonicalGirth8> canonical;  // present iff girth == 8
};

enum class Partite { Point, Line };

/// A vertex (c1,c2,c3) of either partite set; points written (..), lines [..].
struct Vertex {
  Partite partite = Partite::Point;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
};

/// First coordinates (a_1..a_k; x_1..x_k) shared by a family of 2k-cycles.
struct CycleType {
  std::vector<double> a_coords;
  std::vector<double> x_coords;
  std::size_t k() const { return a_coords.size(); }
};

/// An explicit closed cycle: 2k vertices alternating point/line, checkable
/// against the adjacency equations with no knowledge of how it was built.
struct CycleWitness {
  MonomialPair pair;
  std::vector<Vertex> vertices;
  double max_residual = 0.0;
};

/// Deterministic RNG for all sampled checks. Doubles are derived from the
/// raw 64-bit stream so the sequence is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace adg
