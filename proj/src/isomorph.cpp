#include "adg/isomorph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "adg/roots.hpp"

namespace adg {

PolyXY PolyXY::monomial(const MonomialFn& f) {
  f.validate();
  return PolyXY{{PolyTerm{1.0, f.i_exp, f.j_exp}}};
}

double PolyXY::eval(double X, double Y) const {
  double acc = 0.0;
  for (const auto& t : terms) acc += t.coeff * ipow(X, t.xd) * ipow(Y, t.yd);
  return acc;
}

bool PolyXY::is_monomial() const {
  return terms.size() == 1 && terms[0].coeff == 1.0 && terms[0].xd >= 1 &&
         terms[0].yd >= 1;
}

MonomialFn PolyXY::as_monomial() const {
  if (!is_monomial()) throw std::domain_error("PolyXY is not a plain monomial");
  return MonomialFn{terms[0].xd, terms[0].yd};
}

std::string PolyXY::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << " + ";
    first = false;
    if (t.coeff != 1.0 || (t.xd == 0 && t.yd == 0)) os << t.coeff;
    if (t.xd > 0) os << "X" << (t.xd > 1 ? "^" + std::to_string(t.xd) : "");
    if (t.yd > 0) os << "Y" << (t.yd > 1 ? "^" + std::to_string(t.yd) : "");
  }
  return first ? "0" : os.str();
}

namespace {

PolyXY star(const PolyXY& f) {
  PolyXY out = f;
  for (auto& t : out.terms) std::swap(t.xd, t.yd);
  return out;
}

PolyXY scaled(const PolyXY& f, double c) {
  PolyXY out = f;
  for (auto& t : out.terms) t.coeff *= c;
  return out;
}

PolyXY plus(const PolyXY& f, const PolyXY& g) {
  PolyXY out = f;
  out.terms.insert(out.terms.end(), g.terms.begin(), g.terms.end());
  return out;
}

}  // namespace

std::pair<PolyXY, PolyXY> apply_iso_to_pair(const IsoStep& step,
                                            const PolyXY& f2, const PolyXY& f3) {
  switch (step.kind) {
    case IsoStep::Kind::I1Star:
      return {star(f2), star(f3)};
    case IsoStep::Kind::I2Scale:
      if (step.scale == 0.0) throw std::invalid_argument("I2 scale must be nonzero");
      return {f2, scaled(f3, step.scale)};
    case IsoStep::Kind::I3Separable: {
      PolyXY add;
      for (std::size_t d = 0; d < step.g.size(); ++d)
        if (step.g[d] != 0.0) add.terms.push_back({step.g[d], static_cast<int>(d), 0});
      for (std::size_t d = 0; d < step.h.size(); ++d)
        if (step.h[d] != 0.0) add.terms.push_back({step.h[d], 0, static_cast<int>(d)});
      return {f2, plus(f3, add)};
    }
    case IsoStep::Kind::I4Swap:
      return {f3, f2};
    case IsoStep::Kind::I5Shear:
      return {f2, plus(f3, scaled(f2, step.shear))};
    case IsoStep::Kind::L5OddRoot: {
      const int expect = 2 * step.odd_root_m + 1;
      if (!f2.is_monomial() || !f3.is_monomial())
        throw std::invalid_argument("L5 applies to monomial pairs only");
      if (f2.terms[0].xd != expect || f3.terms[0].xd != expect)
        throw std::invalid_argument("L5 needs both X-exponents equal to 2m+1");
      PolyXY g2 = f2, g3 = f3;
      g2.terms[0].xd = 1;
      g3.terms[0].xd = 1;
      return {g2, g3};
    }
  }
  throw std::logic_error("apply_iso_to_pair: bad step kind");
}

std::pair<MonomialFn, MonomialFn> apply_iso_to_monomials(const IsoStep& step,
                                                         const MonomialFn& f2,
                                                         const MonomialFn& f3) {
  auto [g2, g3] = apply_iso_to_pair(step, PolyXY::monomial(f2), PolyXY::monomial(f3));
  if (!g2.is_monomial() || !g3.is_monomial())
    throw std::domain_error("step does not preserve monomials");
  return {g2.as_monomial(), g3.as_monomial()};
}

MonomialPair apply_iso_to_exponents(const IsoStep& step, const MonomialPair& p) {
  auto [g2, g3] = apply_iso_to_monomials(step, f2_of(p), f3_of(p));
  return MonomialPair{g2.i_exp, g2.j_exp, g3.i_exp, g3.j_exp};
}

VertexMap::VertexMap(std::vector<IsoStep> steps) : steps_(std::move(steps)) {
  for (const auto& s : steps_) {
    switch (s.kind) {
      case IsoStep::Kind::I1Star:
      case IsoStep::Kind::I4Swap:
      case IsoStep::Kind::L5OddRoot:
        break;
      default:
        throw std::invalid_argument("VertexMap supports I1, I4 and L5 steps only");
    }
  }
}

VertexMap VertexMap::of(const IsoStep& step) { return VertexMap({step}); }

namespace {

Vertex step_forward(const IsoStep& s, Vertex v) {
  switch (s.kind) {
    case IsoStep::Kind::I1Star:
      v.partite = v.partite == Partite::Point ? Partite::Line : Partite::Point;
      return v;
    case IsoStep::Kind::I4Swap:
      std::swap(v.c2, v.c3);
      return v;
    case IsoStep::Kind::L5OddRoot:
      if (v.partite == Partite::Point) v.c1 = ipow(v.c1, 2 * s.odd_root_m + 1);
      return v;
    default:
      throw std::logic_error("vertex map: unsupported step");
  }
}

Vertex step_backward(const IsoStep& s, Vertex v) {
  switch (s.kind) {
    case IsoStep::Kind::I1Star:
    case IsoStep::Kind::I4Swap:
      return step_forward(s, v);  // both are involutions
    case IsoStep::Kind::L5OddRoot:
      if (v.partite == Partite::Point) v.c1 = signed_pow(v.c1, 1, 2 * s.odd_root_m + 1);
      return v;
    default:
      throw std::logic_error("vertex map: unsupported step");
  }
}

}  // namespace

Vertex VertexMap::forward(Vertex v) const {
  for (const auto& s : steps_) v = step_forward(s, v);
  return v;
}

Vertex VertexMap::backward(Vertex v) const {
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) v = step_backward(*it, v);
  return v;
}

bool VertexMap::swaps_partite() const {
  int flips = 0;
  for (const auto& s : steps_)
    if (s.kind == IsoStep::Kind::I1Star) ++flips;
  return flips % 2 == 1;
}

Automorphism Automorphism::A1(double a) { return Automorphism{AutoKind::A1, a, 0, 0, 0}; }
Automorphism Automorphism::A2(double b) { return Automorphism{AutoKind::A2, 0, b, 0, 0}; }
Automorphism Automorphism::A3(double c, double d) {
  return Automorphism{AutoKind::A3, 0, 0, c, d};
}

Vertex automorphism_A(const Automorphism& phi, const Vertex& v) {
  Vertex w = v;
  switch (phi.kind) {
    case AutoKind::A1:
      if (v.partite == Partite::Point) {
        w.c1 = v.c1 + phi.a;
      } else {
        w.c2 = v.c2 + phi.a * v.c1;
        w.c3 = v.c3 + phi.a * v.c1 * v.c1;
      }
      return w;
    case AutoKind::A2:
      if (v.partite == Partite::Point) {
        w.c2 = v.c2 + phi.b * v.c1;
        w.c3 = v.c3 + 2.0 * phi.b * v.c2 + phi.b * phi.b * v.c1;
      } else {
        w.c1 = v.c1 + phi.b;
        w.c3 = v.c3 + 2.0 * phi.b * v.c2;
      }
      return w;
    case AutoKind::A3:
      if (v.partite == Partite::Point) {
        w.c2 = v.c2 - phi.c;
        w.c3 = v.c3 - phi.d;
      } else {
        w.c2 = v.c2 + phi.c;
        w.c3 = v.c3 + phi.d;
      }
      return w;
  }
  throw std::logic_error("automorphism_A: bad kind");
}

AdjacencyCheck check_adjacency_preserved(const std::function<Vertex(const Vertex&)>& map,
                                         const MonomialPair& src_pair,
                                         const MonomialPair& dst_pair,
                                         int trials, Rng& rng) {
  const MonomialFn sf2 = f2_of(src_pair), sf3 = f3_of(src_pair);
  const MonomialFn df2 = f2_of(dst_pair), df3 = f3_of(dst_pair);

  AdjacencyCheck res;
  res.trials = trials;
  for (int i = 0; i < trials; ++i) {
    const double a1 = rng.uniform(-5.0, 5.0);
    const double x1 = rng.uniform(-5.0, 5.0);
    const double a2 = rng.uniform(-5.0, 5.0);
    const double a3 = rng.uniform(-5.0, 5.0);
    Vertex p{Partite::Point, a1, a2, a3};
    Vertex l{Partite::Line, x1, sf2.eval(a1, x1) - a2, sf3.eval(a1, x1) - a3};

    Vertex ip = map(p);
    Vertex il = map(l);
    if (ip.partite == il.partite) {
      res.ok = false;
      res.bad_point = p;
      res.bad_line = l;
      return res;
    }
    const Vertex& q = ip.partite == Partite::Point ? ip : il;
    const Vertex& m = ip.partite == Partite::Point ? il : ip;
    const double e2 = df2.eval(q.c1, m.c1);
    const double e3 = df3.eval(q.c1, m.c1);
    const double r2 = std::fabs(q.c2 + m.c2 - e2) / std::max(1.0, std::fabs(e2));
    const double r3 = std::fabs(q.c3 + m.c3 - e3) / std::max(1.0, std::fabs(e3));
    const double r = std::max(r2, r3);
    res.worst_residual = std::max(res.worst_residual, r);
    if (r > 1e-9) {
      res.ok = false;
      res.bad_point = p;
      res.bad_line = l;
      return res;
    }
  }
  return res;
}

AdjacencyCheck check_adjacency_preserved(const VertexMap& map,
                                         const MonomialPair& src_pair,
                                         const MonomialPair& dst_pair,
                                         int trials, Rng& rng) {
  return check_adjacency_preserved(
      [&map](const Vertex& v) { return map.forward(v); }, src_pair, dst_pair,
      trials, rng);
}

}  // namespace adg
