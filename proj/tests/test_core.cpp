#include <doctest.h>

#include "adg/core.hpp"

using namespace adg;

TEST_CASE("parity signature") {
  CHECK(parity_signature({2, 1, 1, 2}) == std::array<int, 4>{0, 1, 1, 0});
  CHECK(parity_signature({1, 1, 1, 2}) == std::array<int, 4>{1, 1, 1, 0});
  CHECK(parity_signature({3, 3, 6, 6}) == std::array<int, 4>{1, 1, 0, 0});
}

TEST_CASE("parity signature invariant under adding 2 to any exponent") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const int s = rng.uniform_int(1, 11), t = rng.uniform_int(1, 11);
    const int u = rng.uniform_int(1, 11), v = rng.uniform_int(1, 11);
    const auto base = parity_signature({s, t, u, v});
    CHECK(parity_signature({s + 2, t, u, v}) == base);
    CHECK(parity_signature({s, t + 2, u, v}) == base);
    CHECK(parity_signature({s, t, u + 2, v}) == base);
    CHECK(parity_signature({s, t, u, v + 2}) == base);
  }
}

TEST_CASE("pair validation") {
  CHECK_NOTHROW(MonomialPair::checked(1, 1, 1, 1));
  CHECK_NOTHROW(MonomialPair::checked(15, 15, 15, 15));
  CHECK_THROWS_AS(MonomialPair::checked(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(MonomialPair::checked(1, 1, 1, 16), std::invalid_argument);
  CHECK_THROWS_AS(MonomialPair::checked(1, -2, 1, 1), std::invalid_argument);
  CHECK_NOTHROW(MonomialPair::checked(1, 1, 1, 16, 20));  // cap is configurable
}

TEST_CASE("iso step factories validate parameters") {
  CHECK_THROWS_AS(IsoStep::i2_scale(0.0), std::invalid_argument);
  CHECK_THROWS_AS(IsoStep::l5_odd_root(-1), std::invalid_argument);
  CHECK(IsoStep::l5_odd_root(1).name() == "L5(1)");
  CHECK(IsoStep::i4_swap().name() == "I4");
}

TEST_CASE("deterministic rng replays") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next() == b.next());
    CHECK(a.uniform(-3.0, 3.0) == b.uniform(-3.0, 3.0));
  }
}
