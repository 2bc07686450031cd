// Acceptance suite: one line per criterion, exit code = number of failures.
//
//  1. classification totality and coherence over [1,6]^4
//  2. verified witnesses for every tuple in [1,6]^4
//  3. finite-field BFS girth vs Delta brute force, q in {3,5,7}, [1,4]^4
//  4. no-6-cycle certificates for every girth-8 tuple
//  5. fixed values of the three case root functions
//  6. the complex 4-cycle against the real girth-6 classification
//  7. isomorphism and automorphism adjacency preservation
//  8. byte-identical output for a fixed seed
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "adg/cli.hpp"
#include "adg/classify.hpp"
#include "adg/delta.hpp"
#include "adg/ffgraph.hpp"
#include "adg/isomorph.hpp"
#include "adg/roots.hpp"
#include "adg/witness.hpp"

using namespace adg;

namespace {

struct Criterion {
  const char* name;
  bool (*run)(std::string& why);
  double budget_seconds;  // 0 = unbounded
};

bool even(int x) { return x % 2 == 0; }
bool odd(int x) { return x % 2 == 1; }

bool criterion1(std::string& why) {
  int count8 = 0, independent8 = 0;
  for (int s = 1; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t)
      for (int u = 1; u <= 6; ++u)
        for (int v = 1; v <= 6; ++v) {
          const bool cases[12] = {
              (even(s) || even(t)) && (even(u) || even(v)),
              even(s) && even(t) && odd(u) && odd(v),
              odd(s) && odd(t) && even(u) && even(v),
              odd(s) && odd(t) && odd(u) && odd(v),
              even(s) && odd(t) && odd(u) && odd(v) && (t != v || s < u),
              even(t) && odd(s) && odd(u) && odd(v) && (s != u || t < v),
              even(u) && odd(s) && odd(t) && odd(v) && (t != v || u < s),
              even(v) && odd(s) && odd(t) && odd(u) && (s != u || v < t),
              even(s) && odd(t) && odd(u) && odd(v) && t == v && s > u,
              even(t) && odd(s) && odd(u) && odd(v) && s == u && t > v,
              even(u) && odd(s) && odd(t) && odd(v) && t == v && u > s,
              even(v) && odd(s) && odd(t) && odd(u) && s == u && v > t};
          int fired = 0;
          for (bool c : cases) fired += c;
          if (fired != 1) {
            why = "case predicates fired " + std::to_string(fired) + " times";
            return false;
          }
          if (cases[8] || cases[9] || cases[10] || cases[11]) ++independent8;

          const MonomialPair p{s, t, u, v};
          const auto r = classify(p);
          static const CaseLabel order[12] = {
              CaseLabel::P1,  CaseLabel::P2a, CaseLabel::P2b, CaseLabel::P2c,
              CaseLabel::P2d, CaseLabel::P2e, CaseLabel::P2f, CaseLabel::P2g,
              CaseLabel::P3a, CaseLabel::P3b, CaseLabel::P3c, CaseLabel::P3d};
          int which = 0;
          while (!cases[which]) ++which;
          if (r.label != order[which]) {
            why = "label mismatch at some tuple";
            return false;
          }
          if (r.girth == 8) ++count8;

          if (classify({t, s, v, u}).girth != r.girth ||
              classify({u, v, s, t}).girth != r.girth) {
            why = "girth not invariant under index swaps";
            return false;
          }
        }
  if (count8 != 72 || independent8 != 72) {
    why = "girth-8 count " + std::to_string(count8) + " vs independent " +
          std::to_string(independent8) + " (want 72)";
    return false;
  }
  return true;
}

bool criterion2(std::string& why) {
  for (int s = 1; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t)
      for (int u = 1; u <= 6; ++u)
        for (int v = 1; v <= 6; ++v) {
          const MonomialPair p{s, t, u, v};
          const auto r = classify(p);
          CycleWitness w;
          try {
            if (r.girth == 4)
              w = witness_girth4(p);
            else if (r.girth == 8)
              w = witness_girth8(p);
            else if (r.normalized)
              w = witness_girth6_mixed(p);
            else
              w = witness_girth6_same_parity(p);
          } catch (const std::exception& e) {
            why = "construction failed at (" + std::to_string(s) + "," +
                  std::to_string(t) + "," + std::to_string(u) + "," +
                  std::to_string(v) + "): " + e.what();
            return false;
          }
          const auto rep = verify_witness(w, 1e-9, 1e-6);
          if (!rep.pass || rep.cycle_length != r.girth) {
            why = "verification failed at (" + std::to_string(s) + "," +
                  std::to_string(t) + "," + std::to_string(u) + "," +
                  std::to_string(v) + "): residual " +
                  std::to_string(rep.max_residual) + ", separation " +
                  std::to_string(rep.min_separation);
            return false;
          }
        }
  return true;
}

bool criterion3(std::string& why) {
  for (int q : {3, 5, 7})
    for (int s = 1; s <= 4; ++s)
      for (int t = 1; t <= 4; ++t)
        for (int u = 1; u <= 4; ++u)
          for (int v = 1; v <= 4; ++v) {
            const MonomialPair p{s, t, u, v};
            const auto g = bfs_girth(build_graph(q, p));
            if (!g) {
              why = "unexpected acyclic graph";
              return false;
            }
            const bool d2 = bruteforce_delta_cycles(q, p, 2);
            if ((*g == 4) != d2) {
              why = "4-cycle disagreement at q=" + std::to_string(q);
              return false;
            }
            if (q <= 5) {
              const bool d3 = bruteforce_delta_cycles(q, p, 3);
              if ((*g == 6) != (!d2 && d3)) {
                why = "6-cycle disagreement at q=" + std::to_string(q);
                return false;
              }
            }
          }
  return true;
}

bool criterion4(std::string& why) {
  for (int s = 1; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t)
      for (int u = 1; u <= 6; ++u)
        for (int v = 1; v <= 6; ++v) {
          const MonomialPair p{s, t, u, v};
          if (classify(p).girth != 8) continue;
          const auto rep = certify_no_6cycle(p, 100, 42);
          if (!rep.pass) {
            why = "certificate failed at (" + std::to_string(s) + "," +
                  std::to_string(t) + "," + std::to_string(u) + "," +
                  std::to_string(v) + "): " +
                  std::to_string(rep.monotonic_violations) + "/" +
                  std::to_string(rep.positivity_violations) + "/" +
                  std::to_string(rep.determinant_violations) + " violations";
            return false;
          }
        }
  return true;
}

bool criterion5(std::string& why) {
  // first case: value at 0 is exactly -2 for every parameter choice
  for (int k = 0; k <= 7; ++k)
    for (int n = 1; n <= 7; ++n)
      if (ScalarEquation::prop4(k, n)(0.0) != -2.0) {
        why = "prop4 value at 0 not -2";
        return false;
      }
  // second case: negative at -1 wherever that case applies (n > k, m < j)
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 3; ++k)
      for (int m = 0; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
          if (!(n > k && m < j)) continue;
          if (!(ScalarEquation::prop5(j, k, m, n)(-1.0) < 0.0)) {
            why = "prop5 value at -1 not negative";
            return false;
          }
        }
  // third case: root at 1 and negative slope (n > k, m > j)
  const double h = 1e-6;
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 3; ++k)
      for (int m = 0; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
          if (!(n > k && m > j)) continue;
          const auto D = ScalarEquation::prop6(j, k, m, n);
          if (std::fabs(D(1.0)) > 1e-12) {
            why = "prop6 value at 1 not zero";
            return false;
          }
          if (!((D(1.0 + h) - D(1.0 - h)) / (2 * h) < 0.0)) {
            why = "prop6 slope at 1 not negative";
            return false;
          }
        }
  return true;
}

bool criterion6(std::string& why) {
  const std::complex<double> one{1.0, 0.0};
  const std::complex<double> omega{-0.5, std::sqrt(3.0) / 2.0};
  const std::complex<double> minus_one{-1.0, 0.0};
  if (std::abs(delta2_complex({3, 3}, one, omega, one, minus_one)) > 1e-12 ||
      std::abs(delta2_complex({6, 6}, one, omega, one, minus_one)) > 1e-12) {
    why = "complex Delta_2 did not vanish";
    return false;
  }
  const auto r = classify({3, 3, 6, 6});
  if (r.girth != 6 || r.label != CaseLabel::P2b) {
    why = "(3,3,6,6) not classified girth six";
    return false;
  }
  return true;
}

bool criterion7(std::string& why) {
  const MonomialPair base{1, 1, 1, 2};

  Rng rng(42);
  for (const auto& phi : {Automorphism::A1(1.25), Automorphism::A2(-0.75),
                          Automorphism::A3(2.0, -3.0)}) {
    const auto res = check_adjacency_preserved(
        [&phi](const Vertex& v) { return automorphism_A(phi, v); }, base, base,
        1000, rng);
    if (!res.ok) {
      why = "automorphism broke adjacency";
      return false;
    }
  }

  const auto vm = VertexMap::of(IsoStep::l5_odd_root(1));
  for (int i = 0; i < 1000; ++i) {
    const Vertex v{i % 2 ? Partite::Point : Partite::Line, rng.uniform(-5, 5),
                   rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vertex back = vm.backward(vm.forward(v));
    if (std::fabs(back.c1 - v.c1) > 1e-9 * std::max(1.0, std::fabs(v.c1))) {
      why = "odd-root map does not round-trip";
      return false;
    }
  }

  for (int s = 1; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t)
      for (int u = 1; u <= 6; ++u)
        for (int v = 1; v <= 6; ++v) {
          const MonomialPair p{s, t, u, v};
          const auto r = classify(p);
          if (r.girth != 8) continue;
          const MonomialPair canon{1, 2 * r.canonical->k + 1, 1, 2 * r.canonical->n};
          const auto res = check_adjacency_preserved(
              VertexMap(canonical_chain_girth8(p)), p, canon, 1000, rng);
          if (!res.ok) {
            why = "transform chain broke adjacency at (" + std::to_string(s) +
                  "," + std::to_string(t) + "," + std::to_string(u) + "," +
                  std::to_string(v) + ")";
            return false;
          }
        }
  return true;
}

bool criterion8(std::string& why) {
  RunConfig cfg;
  cfg.seed = 42;
  const auto once = [&cfg]() {
    std::string out;
    out += table_csv(6);
    for (const MonomialPair p :
         {MonomialPair{2, 1, 1, 2}, MonomialPair{1, 1, 1, 2}, MonomialPair{1, 3, 1, 2},
          MonomialPair{3, 1, 1, 2}, MonomialPair{1, 1, 3, 2}, MonomialPair{3, 1, 3, 4}})
      out += witness_record(p, cfg);
    out += certify8_record({1, 1, 1, 2}, 100, cfg);
    bool agree = false;
    out += oracle_csv(3, 3, &agree);
    out += agree ? "agree\n" : "disagree\n";
    out += curve_csv(4, 0, 1, 0, 1, -3, 0, 300);
    out += curve_csv(6, 0, 0, 1, 1, -20, 2, 220);
    return out;
  };
  const std::string a = once(), b = once();
  if (a != b) {
    why = "two runs with the same seed differ";
    return false;
  }
  if (a.find("disagree") != std::string::npos) {
    why = "oracle disagreement inside determinism run";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"classification totality & coherence", criterion1, 1.0},
      {"witness completeness over [1,6]^4", criterion2, 30.0},
      {"finite-field oracle equivalence", criterion3, 300.0},
      {"girth-8 certificates", criterion4, 0.0},
      {"case root function anchors", criterion5, 0.0},
      {"complex 4-cycle vs real girth", criterion6, 0.0},
      {"isomorphism/automorphism suite", criterion7, 0.0},
      {"deterministic output", criterion8, 0.0},
  };

  int failures = 0;
  int idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && c.budget_seconds > 0.0 && secs > c.budget_seconds) {
      ok = false;
      why = "runtime budget " + std::to_string(c.budget_seconds) + "s exceeded";
    }
    std::printf("criterion %d (%s): %s (%.2fs)%s%s\n", idx, c.name,
                ok ? "PASS" : "FAIL", secs, why.empty() ? "" : " -- ",
                why.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
