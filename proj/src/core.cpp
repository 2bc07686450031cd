#include "adg/core.hpp"

#include <utility>

namespace adg {

void MonomialPair::validate(int max_exp) const {
  for (int e : {s, t, u, v}) {
    if (e < 1) throw std::invalid_argument("exponents must be >= 1");
    if (e > max_exp)
      throw std::invalid_argument("exponent " + std::to_string(e) +
                                  " exceeds cap " + std::to_string(max_exp));
  }
}

MonomialPair MonomialPair::checked(int s, int t, int u, int v, int max_exp) {
  MonomialPair p{s, t, u, v};
  p.validate(max_exp);
  return p;
}

std::array<int, 4> parity_signature(const MonomialPair& p) {
  return {p.s % 2, p.t % 2, p.u % 2, p.v % 2};
}

IsoStep IsoStep::i1_star() { return IsoStep{Kind::I1Star, 1.0, {}, {}, 0.0, 0}; }

IsoStep IsoStep::i2_scale(double c) {
  if (c == 0.0) throw std::invalid_argument("I2 requires c != 0");
  return IsoStep{Kind::I2Scale, c, {}, {}, 0.0, 0};
}

IsoStep IsoStep::i3_separable(std::vector<double> g, std::vector<double> h) {
  return IsoStep{Kind::I3Separable, 1.0, std::move(g), std::move(h), 0.0, 0};
}

IsoStep IsoStep::i4_swap() { return IsoStep{Kind::I4Swap, 1.0, {}, {}, 0.0, 0}; }

IsoStep IsoStep::i5_shear(double delta) {
  return IsoStep{Kind::I5Shear, 1.0, {}, {}, delta, 0};
}

IsoStep IsoStep::l5_odd_root(int m) {
  if (m < 0) throw std::invalid_argument("L5 requires m >= 0");
  return IsoStep{Kind::L5OddRoot, 1.0, {}, {}, 0.0, m};
}

std::string IsoStep::name() const {
  switch (kind) {
    case Kind::I1Star:      return "I1";
    case Kind::I2Scale:     return "I2(" + std::to_string(scale) + ")";
    case Kind::I3Separable: return "I3";
    case Kind::I4Swap:      return "I4";
    case Kind::I5Shear:     return "I5(" + std::to_string(shear) + ")";
    case Kind::L5OddRoot:   return "L5(" + std::to_string(odd_root_m) + ")";
  }
  return "?";
}

const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::P1:  return "P1";
    case CaseLabel::P2a: return "P2a";
    case CaseLabel::P2b: return "P2b";
    case CaseLabel::P2c: return "P2c";
    case CaseLabel::P2d: return "P2d";
    case CaseLabel::P2e: return "P2e";
    case CaseLabel::P2f: return "P2f";
    case CaseLabel::P2g: return "P2g";
    case CaseLabel::P3a: return "P3a";
    case CaseLabel::P3b: return "P3b";
    case CaseLabel::P3c: return "P3c";
    case CaseLabel::P3d: return "P3d";
  }
  return "?";
}

int girth_of(CaseLabel label) {
  switch (label) {
    case CaseLabel::P1:
      return 4;
    case CaseLabel::P3a:
    case CaseLabel::P3b:
    case CaseLabel::P3c:
    case CaseLabel::P3d:
      return 8;
    default:
      return 6;
  }
}

}  // namespace adg
