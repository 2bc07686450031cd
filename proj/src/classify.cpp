#include "adg/classify.hpp"

namespace adg {

NormalizedForm normalize_mixed(const MonomialPair& p) {
  p.validate();
  const auto par = parity_signature(p);
  const int evens = (1 - par[0]) + (1 - par[1]) + (1 - par[2]) + (1 - par[3]);
  if (evens != 1)
    throw std::invalid_argument("normalize_mixed: need exactly one even exponent");

  MonomialPair cur = p;
  std::vector<IsoStep> chain;
  const auto i1 = [](const MonomialPair& q) { return MonomialPair{q.t, q.s, q.v, q.u}; };
  const auto i4 = [](const MonomialPair& q) { return MonomialPair{q.u, q.v, q.s, q.t}; };

  if (p.s % 2 == 0) {  // even slot -> fourth position via I4 then I1
    cur = i4(cur);
    chain.push_back(IsoStep::i4_swap());
    cur = i1(cur);
    chain.push_back(IsoStep::i1_star());
  } else if (p.t % 2 == 0) {
    cur = i4(cur);
    chain.push_back(IsoStep::i4_swap());
  } else if (p.u % 2 == 0) {
    cur = i1(cur);
    chain.push_back(IsoStep::i1_star());
  }
  // v even: already in place

  NormalizedForm nf;
  nf.j = (cur.s - 1) / 2;
  nf.k = (cur.t - 1) / 2;
  nf.m = (cur.u - 1) / 2;
  nf.n = cur.v / 2;
  nf.chain = std::move(chain);
  return nf;
}

GirthResult classify(const MonomialPair& p, int max_exp) {
  p.validate(max_exp);
  const bool se = p.s % 2 == 0, te = p.t % 2 == 0;
  const bool ue = p.u % 2 == 0, ve = p.v % 2 == 0;

  GirthResult r;
  if ((se || te) && (ue || ve)) {
    r.girth = 4;
    r.label = CaseLabel::P1;
    return r;
  }

  const int evens = int(se) + int(te) + int(ue) + int(ve);
  if (evens == 1) {
    r.normalized = normalize_mixed(p);
    bool eight = false;
    if (se) {
      eight = (p.t == p.v && p.s > p.u);
      r.label = eight ? CaseLabel::P3a : CaseLabel::P2d;
    } else if (te) {
      eight = (p.s == p.u && p.t > p.v);
      r.label = eight ? CaseLabel::P3b : CaseLabel::P2e;
    } else if (ue) {
      eight = (p.t == p.v && p.u > p.s);
      r.label = eight ? CaseLabel::P3c : CaseLabel::P2f;
    } else {
      eight = (p.s == p.u && p.v > p.t);
      r.label = eight ? CaseLabel::P3d : CaseLabel::P2g;
    }
    r.girth = eight ? 8 : 6;
    if (eight) r.canonical = CanonicalGirth8{r.normalized->k, r.normalized->n};
    return r;
  }

  // Uniform parity within each monomial and no even/even split with the
  // other: the three remaining girth-six families.
  r.girth = 6;
  if (se && te)
    r.label = CaseLabel::P2a;  // s,t even; u,v odd
  else if (ue && ve)
    r.label = CaseLabel::P2b;  // s,t odd; u,v even
  else
    r.label = CaseLabel::P2c;  // all odd
  return r;
}

CanonicalGirth8 canonical_girth8(const MonomialPair& p) {
  const GirthResult r = classify(p);
  if (r.girth != 8)
    throw std::invalid_argument("canonical_girth8: pair is not girth eight");
  return *r.canonical;
}

std::vector<IsoStep> canonical_chain_girth8(const MonomialPair& p) {
  const GirthResult r = classify(p);
  if (r.girth != 8)
    throw std::invalid_argument("canonical_chain_girth8: pair is not girth eight");
  std::vector<IsoStep> chain = r.normalized->chain;
  if (r.normalized->m > 0) chain.push_back(IsoStep::l5_odd_root(r.normalized->m));
  return chain;
}

}  // namespace adg
