#include <doctest.h>

#include <cmath>

#include "adg/classify.hpp"
#include "adg/isomorph.hpp"

using namespace adg;

TEST_CASE("pair transforms for the monomial-preserving steps") {
  const auto xy = PolyXY::monomial({1, 1});
  const auto x2y = PolyXY::monomial({2, 1});

  auto [a, b] = apply_iso_to_pair(IsoStep::i4_swap(), xy, x2y);
  CHECK(a.as_monomial().i_exp == 2);
  CHECK(a.as_monomial().j_exp == 1);
  CHECK(b.as_monomial().i_exp == 1);
  CHECK(b.as_monomial().j_exp == 1);

  const auto x2y3 = PolyXY::monomial({2, 3});
  auto [c, d] = apply_iso_to_pair(IsoStep::i1_star(), xy, x2y3);
  CHECK(c.as_monomial().i_exp == 1);
  CHECK(c.as_monomial().j_exp == 1);
  CHECK(d.as_monomial().i_exp == 3);
  CHECK(d.as_monomial().j_exp == 2);

  auto [e, f] = apply_iso_to_pair(IsoStep::l5_odd_root(1), PolyXY::monomial({3, 1}),
                                  PolyXY::monomial({3, 2}));
  CHECK(e.as_monomial().i_exp == 1);
  CHECK(e.as_monomial().j_exp == 1);
  CHECK(f.as_monomial().i_exp == 1);
  CHECK(f.as_monomial().j_exp == 2);

  CHECK_THROWS_AS(apply_iso_to_pair(IsoStep::l5_odd_root(1), xy, x2y),
                  std::invalid_argument);
}

TEST_CASE("scaling and shearing leave the monomial world, flagged as such") {
  const auto xy = PolyXY::monomial({1, 1});
  const auto x2y = PolyXY::monomial({2, 1});

  auto [a, b] = apply_iso_to_pair(IsoStep::i2_scale(2.5), xy, x2y);
  CHECK(a.is_monomial());
  CHECK_FALSE(b.is_monomial());
  CHECK(b.eval(2.0, 3.0) == doctest::Approx(2.5 * 4.0 * 3.0));

  auto [c, d] = apply_iso_to_pair(IsoStep::i5_shear(-1.0), xy, x2y);
  CHECK(c.is_monomial());
  CHECK_FALSE(d.is_monomial());
  CHECK(d.eval(2.0, 3.0) == doctest::Approx(4.0 * 3.0 - 2.0 * 3.0));

  auto [e, f] = apply_iso_to_pair(IsoStep::i3_separable({0.0, 1.0}, {5.0}), xy, x2y);
  CHECK(e.is_monomial());
  CHECK_FALSE(f.is_monomial());
  CHECK(f.eval(2.0, 3.0) == doctest::Approx(12.0 + 2.0 + 5.0));
}

TEST_CASE("vertex maps of the chain steps") {
  const Vertex p{Partite::Point, 8.0, 2.0, 3.0};

  SUBCASE("I4 swaps the second and third coordinates") {
    const auto vm = VertexMap::of(IsoStep::i4_swap());
    const Vertex q = vm.forward(p);
    CHECK(q.c1 == 8.0);
    CHECK(q.c2 == 3.0);
    CHECK(q.c3 == 2.0);
    const Vertex r = vm.backward(q);
    CHECK(r.c2 == 2.0);
    CHECK(r.c3 == 3.0);
    CHECK_FALSE(vm.swaps_partite());
  }

  SUBCASE("I1 exchanges partite sets") {
    const auto vm = VertexMap::of(IsoStep::i1_star());
    const Vertex q = vm.forward(p);
    CHECK(q.partite == Partite::Line);
    CHECK(q.c1 == 8.0);
    CHECK(vm.swaps_partite());
    CHECK(vm.backward(q).partite == Partite::Point);
  }

  SUBCASE("L5 inverse takes the signed odd root on points") {
    const auto vm = VertexMap::of(IsoStep::l5_odd_root(1));
    const Vertex q = vm.backward(p);
    CHECK(q.c1 == doctest::Approx(2.0));
    CHECK(q.c2 == 2.0);
    CHECK(q.c3 == 3.0);
    const Vertex fwd = vm.forward(q);
    CHECK(fwd.c1 == doctest::Approx(8.0));
    const Vertex l{Partite::Line, 8.0, 2.0, 3.0};
    CHECK(vm.backward(l).c1 == 8.0);  // lines untouched
  }

  SUBCASE("only chain steps get vertex maps") {
    CHECK_THROWS_AS(VertexMap::of(IsoStep::i2_scale(2.0)), std::invalid_argument);
    CHECK_THROWS_AS(VertexMap::of(IsoStep::i5_shear(1.0)), std::invalid_argument);
  }
}

TEST_CASE("L5 vertex map round-trips on random vertices") {
  const auto vm = VertexMap::of(IsoStep::l5_odd_root(2));
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const Vertex v{rng.uniform_int(0, 1) ? Partite::Point : Partite::Line,
                   rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vertex back = vm.backward(vm.forward(v));
    CHECK(std::fabs(back.c1 - v.c1) <= 1e-9 * std::max(1.0, std::fabs(v.c1)));
    CHECK(back.c2 == v.c2);
    CHECK(back.c3 == v.c3);
  }
}

TEST_CASE("automorphism examples on (XY, XY^2)") {
  const auto a1 = Automorphism::A1(2.0);
  Vertex p = automorphism_A(a1, Vertex{Partite::Point, 1, 0, 0});
  CHECK(p.c1 == 3.0);
  CHECK(p.c2 == 0.0);
  CHECK(p.c3 == 0.0);
  Vertex l = automorphism_A(a1, Vertex{Partite::Line, 1, 1, 1});
  CHECK(l.c1 == 1.0);
  CHECK(l.c2 == 3.0);
  CHECK(l.c3 == 3.0);

  const auto a2 = Automorphism::A2(1.0);
  p = automorphism_A(a2, Vertex{Partite::Point, 1, 1, 1});
  CHECK(p.c1 == 1.0);
  CHECK(p.c2 == 2.0);
  CHECK(p.c3 == 4.0);

  const auto a3 = Automorphism::A3(0.0, 0.0);
  const Vertex v{Partite::Line, 2, 5, 7};
  l = automorphism_A(a3, v);
  CHECK(l.c1 == v.c1);
  CHECK(l.c2 == v.c2);
  CHECK(l.c3 == v.c3);
}

TEST_CASE("automorphisms preserve adjacency exactly on integer inputs") {
  // adjacency of (XY, XY^2): p2 + l2 = p1 l1 and p3 + l3 = p1 l1^2
  const MonomialPair g{1, 1, 1, 2};
  const MonomialFn f2 = f2_of(g), f3 = f3_of(g);
  for (int p1 = -3; p1 <= 3; ++p1)
    for (int l1 = -3; l1 <= 3; ++l1)
      for (int p2 = -2; p2 <= 2; ++p2)
        for (int p3 = -2; p3 <= 2; ++p3) {
          const Vertex P{Partite::Point, double(p1), double(p2), double(p3)};
          const Vertex L{Partite::Line, double(l1), f2.eval(p1, l1) - p2,
                         f3.eval(p1, l1) - p3};
          for (const auto& phi : {Automorphism::A1(2), Automorphism::A2(-3),
                                  Automorphism::A3(4, -1)}) {
            const Vertex Pi = automorphism_A(phi, P);
            const Vertex Li = automorphism_A(phi, L);
            CHECK(Pi.c2 + Li.c2 == f2.eval(Pi.c1, Li.c1));
            CHECK(Pi.c3 + Li.c3 == f3.eval(Pi.c1, Li.c1));
          }
        }
}

TEST_CASE("sampled adjacency checks") {
  const MonomialPair src{3, 1, 3, 2};
  const MonomialPair dst{1, 1, 1, 2};

  SUBCASE("the odd-root map carries (X^3 Y, X^3 Y^2) onto (XY, XY^2)") {
    Rng rng(43);
    const auto vm = VertexMap::of(IsoStep::l5_odd_root(1));
    const auto res = check_adjacency_preserved(vm, src, dst, 1000, rng);
    CHECK(res.ok);
    CHECK(res.worst_residual <= 1e-9);
  }

  SUBCASE("A1 is an endomorphism of (XY, XY^2)") {
    Rng rng(47);
    const auto phi = Automorphism::A1(1.75);
    const auto res = check_adjacency_preserved(
        [&phi](const Vertex& v) { return automorphism_A(phi, v); }, dst, dst,
        1000, rng);
    CHECK(res.ok);
  }

  SUBCASE("a deliberately broken map fails") {
    Rng rng(53);
    const double a = 2.0;
    const auto broken = [a](const Vertex& v) {
      Vertex w = v;
      if (v.partite == Partite::Point) {
        w.c1 = v.c1 + a;
      } else {
        w.c2 = v.c2 + a * v.c1;  // l3 term dropped
      }
      return w;
    };
    const auto res = check_adjacency_preserved(broken, dst, dst, 1000, rng);
    CHECK_FALSE(res.ok);
  }
}

TEST_CASE("classify chains preserve adjacency end to end") {
  Rng rng(59);
  for (int s = 1; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t)
      for (int u = 1; u <= 6; ++u)
        for (int v = 1; v <= 6; ++v) {
          const MonomialPair p{s, t, u, v};
          const auto r = classify(p);
          if (r.girth != 8) continue;
          const auto chain = canonical_chain_girth8(p);
          const MonomialPair canon{1, 2 * r.canonical->k + 1, 1, 2 * r.canonical->n};
          const auto res =
              check_adjacency_preserved(VertexMap(chain), p, canon, 200, rng);
          CHECK(res.ok);
        }
}

TEST_CASE("point and line transitivity via composed automorphisms") {
  // points: A1 aligns the first coordinate, A3 finishes; lines: A2 then A3
  Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    const Vertex p{Partite::Point, rng.uniform(-5, 5), rng.uniform(-5, 5),
                   rng.uniform(-5, 5)};
    const Vertex target{Partite::Point, rng.uniform(-5, 5), rng.uniform(-5, 5),
                        rng.uniform(-5, 5)};
    Vertex cur = automorphism_A(Automorphism::A1(target.c1 - p.c1), p);
    cur = automorphism_A(Automorphism::A3(cur.c2 - target.c2, cur.c3 - target.c3), cur);
    CHECK(cur.c1 == doctest::Approx(target.c1));
    CHECK(cur.c2 == doctest::Approx(target.c2));
    CHECK(cur.c3 == doctest::Approx(target.c3));

    const Vertex l{Partite::Line, rng.uniform(-5, 5), rng.uniform(-5, 5),
                   rng.uniform(-5, 5)};
    const Vertex ltarget{Partite::Line, rng.uniform(-5, 5), rng.uniform(-5, 5),
                         rng.uniform(-5, 5)};
    Vertex lc = automorphism_A(Automorphism::A2(ltarget.c1 - l.c1), l);
    lc = automorphism_A(Automorphism::A3(ltarget.c2 - lc.c2, ltarget.c3 - lc.c3), lc);
    CHECK(lc.c1 == doctest::Approx(ltarget.c1));
    CHECK(lc.c2 == doctest::Approx(ltarget.c2));
    CHECK(lc.c3 == doctest::Approx(ltarget.c3));
  }
}
