// Exact finite-field oracle: build Gamma_{F_q}(X^s Y^t, X^u Y^v) for a small
// prime q, compute its girth by breadth-first search, and brute-force the
// Delta cycle conditions. The Delta equivalences hold over any ring, so BFS
// girth against Delta brute force is an independent check of that machinery
// (it says nothing about the real girth - see the complex counterexample).
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "adg/core.hpp"

namespace adg {

bool is_prime(int q);

/// base^e mod q for prime q; exponents of nonzero bases are reduced mod q-1.
int pow_mod(int base, int e, int q);

/// Bipartite q-regular graph on 2q^3 vertices: points a = (a1,a2,a3) indexed
/// first, lines x = [x1,x2,x3] offset by q^3. Point a is adjacent to line
/// [x1, f2(a1,x1)-a2, f3(a1,x1)-a3] for each x1 in F_q.
struct FiniteFieldGraph {
  int q = 3;
  MonomialPair pair;
  std::vector<std::int32_t> adjacency;  // flat, q neighbors per vertex

  int vertex_count() const { return 2 * q * q * q; }
  long edge_count() const { return static_cast<long>(q) * q * q * q; }
  std::span<const std::int32_t> neighbors(int v) const {
    return {adjacency.data() + static_cast<std::size_t>(v) * q,
            static_cast<std::size_t>(q)};
  }
};

FiniteFieldGraph build_graph(int q, const MonomialPair& pair);

/// Exact girth via BFS from every vertex with parent-edge exclusion;
/// nullopt if the graph is acyclic.
std::optional<int> bfs_girth(const FiniteFieldGraph& g);

/// Exhaustive test of the k-cycle Delta condition over F_q: true iff
/// distinct a,b(,c) and distinct x,y(,z) satisfy Delta_k = 0 for both
/// monomials. k = 2 needs q <= 13, k = 3 needs q <= 9.
bool bruteforce_delta_cycles(int q, const MonomialPair& pair, int k);

}  // namespace adg
