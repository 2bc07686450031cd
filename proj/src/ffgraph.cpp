#include "adg/ffgraph.hpp"

#include <algorithm>
#include <limits>

namespace adg {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int pow_mod(int base, int e, int q) {
  base %= q;
  if (base < 0) base += q;
  if (base == 0) return e == 0 ? 1 : 0;
  if (e == 0) return 1;
  // Fermat: nonzero bases satisfy a^(q-1) = 1.
  int er = e % (q - 1);
  if (er == 0) er = q - 1;
  long long acc = 1, b = base;
  while (er > 0) {
    if (er & 1) acc = acc * b % q;
    b = b * b % q;
    er >>= 1;
  }
  return static_cast<int>(acc);
}

FiniteFieldGraph build_graph(int q, const MonomialPair& pair) {
  if (!is_prime(q) || q < 3 || q > 13)
    throw std::invalid_argument("build_graph: q must be a prime in [3,13]");
  pair.validate();

  FiniteFieldGraph g;
  g.q = q;
  g.pair = pair;
  const int n3 = q * q * q;
  g.adjacency.assign(static_cast<std::size_t>(2 * n3) * q, 0);

  // f2t[a1][x1], f3t[a1][x1]
  std::vector<int> f2t(q * q), f3t(q * q);
  for (int a1 = 0; a1 < q; ++a1)
    for (int x1 = 0; x1 < q; ++x1) {
      f2t[a1 * q + x1] = pow_mod(a1, pair.s, q) * pow_mod(x1, pair.t, q) % q;
      f3t[a1 * q + x1] = pow_mod(a1, pair.u, q) * pow_mod(x1, pair.v, q) % q;
    }

  for (int a1 = 0; a1 < q; ++a1)
    for (int a2 = 0; a2 < q; ++a2)
      for (int a3 = 0; a3 < q; ++a3) {
        const int p = (a1 * q + a2) * q + a3;
        for (int x1 = 0; x1 < q; ++x1) {
          const int x2 = (f2t[a1 * q + x1] - a2 + q) % q;
          const int x3 = (f3t[a1 * q + x1] - a3 + q) % q;
          const int l = n3 + (x1 * q + x2) * q + x3;
          g.adjacency[static_cast<std::size_t>(p) * q + x1] = l;
        }
      }

  // Lines get the mirrored edges: for line [x1,x2,x3] and each a1, the point
  // is (a1, f2-x2, f3-x3).
  for (int x1 = 0; x1 < q; ++x1)
    for (int x2 = 0; x2 < q; ++x2)
      for (int x3 = 0; x3 < q; ++x3) {
        const int l = n3 + (x1 * q + x2) * q + x3;
        for (int a1 = 0; a1 < q; ++a1) {
          const int a2 = (f2t[a1 * q + x1] - x2 + q) % q;
          const int a3 = (f3t[a1 * q + x1] - x3 + q) % q;
          g.adjacency[static_cast<std::size_t>(l) * q + a1] = (a1 * q + a2) * q + a3;
        }
      }
  return g;
}

std::optional<int> bfs_girth(const FiniteFieldGraph& g) {
  const int V = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(V), parent(V);
  std::vector<int> queue(V);

  for (int src = 0; src < V && best > 4; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    queue[tail++] = src;
    dist[src] = 0;
    parent[src] = -1;
    while (head < tail) {
      const int u = queue[head++];
      if (2 * dist[u] >= best) break;  // no shorter cycle reachable deeper
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool bruteforce_delta_cycles(int q, const MonomialPair& pair, int k) {
  if (!is_prime(q)) throw std::invalid_argument("bruteforce: q must be prime");
  if (k == 2 && q > 13) throw std::invalid_argument("bruteforce: k=2 needs q <= 13");
  if (k == 3 && q > 9) throw std::invalid_argument("bruteforce: k=3 needs q <= 9");
  if (k != 2 && k != 3) throw std::invalid_argument("bruteforce: k must be 2 or 3");
  pair.validate();

  std::vector<int> ps(q), pt(q), pu(q), pv(q);
  for (int v = 0; v < q; ++v) {
    ps[v] = pow_mod(v, pair.s, q);
    pt[v] = pow_mod(v, pair.t, q);
    pu[v] = pow_mod(v, pair.u, q);
    pv[v] = pow_mod(v, pair.v, q);
  }

  if (k == 2) {
    // (a^s - b^s)(x^t - y^t) = 0 = (a^u - b^u)(x^v - y^v), a != b, x != y
    for (int a = 0; a < q; ++a)
      for (int b = a + 1; b < q; ++b)
        for (int x = 0; x < q; ++x)
          for (int y = x + 1; y < q; ++y) {
            const int d2 = (ps[a] - ps[b]) * (pt[x] - pt[y]) % q;
            if (d2 != 0) continue;
            const int d3 = (pu[a] - pu[b]) * (pv[x] - pv[y]) % q;
            if (d3 == 0) return true;
          }
    return false;
  }

  // x^j(a^i-b^i) + y^j(b^i-c^i) + z^j(c^i-a^i) for both monomials,
  // over all ordered distinct triples.
  const auto d3_zero = [q](const std::vector<int>& pi, const std::vector<int>& pj,
                           int a, int b, int c, int x, int y, int z) {
    const long long s = static_cast<long long>(pj[x]) * (pi[a] - pi[b]) +
                        static_cast<long long>(pj[y]) * (pi[b] - pi[c]) +
                        static_cast<long long>(pj[z]) * (pi[c] - pi[a]);
    return s % q == 0;
  };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        if (a == b || b == c || a == c) continue;
        for (int x = 0; x < q; ++x)
          for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z) {
              if (x == y || y == z || x == z) continue;
              if (d3_zero(ps, pt, a, b, c, x, y, z) &&
                  d3_zero(pu, pv, a, b, c, x, y, z))
                return true;
            }
      }
  return false;
}

}  // namespace adg
