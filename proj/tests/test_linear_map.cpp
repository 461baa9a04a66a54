#include <doctest.h>

#include <random>

#include "homtwist/errors.hpp"
#include "homtwist/linear_map.hpp"
#include "test_helpers.hpp"

using namespace homtwist;
using homtwist::testing::random_map;

namespace {

// Independent oracles: plain index loops, no reuse of the library routines.

LinearMap compose_oracle(const LinearMap& g, const LinearMap& f) {
  LinearMap out(g.codomain_dim(), f.domain_dim());
  for (int i = 0; i < g.codomain_dim(); ++i)
    for (int j = 0; j < f.domain_dim(); ++j) {
      Rational sum(0);
      for (int k = 0; k < g.domain_dim(); ++k) sum += g.at(i, k) * f.at(k, j);
      out.at(i, j) = sum;
    }
  return out;
}

LinearMap kron_oracle(const LinearMap& a, const LinearMap& b) {
  LinearMap out(a.codomain_dim() * b.codomain_dim(), a.domain_dim() * b.domain_dim());
  for (int i = 0; i < a.codomain_dim(); ++i)
    for (int j = 0; j < a.domain_dim(); ++j)
      for (int k = 0; k < b.codomain_dim(); ++k)
        for (int l = 0; l < b.domain_dim(); ++l)
          out.at(i * b.codomain_dim() + k, j * b.domain_dim() + l) = a.at(i, j) * b.at(k, l);
  return out;
}

}  // namespace

TEST_SUITE("linear_map") {

TEST_CASE("compose basics") {
  std::mt19937_64 rng(7);
  LinearMap f = random_map(rng, 3, 3, -2, 2);
  CHECK(compose(identity(3), f) == f);
  CHECK(compose(f, identity(3)) == f);
  CHECK(compose(twist(2, 3), twist(3, 2)) == identity(6));
  CHECK_THROWS_AS(compose(LinearMap(2, 3), LinearMap(2, 3)), DimensionMismatch);
}

TEST_CASE("compose matches the triple-sum oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    LinearMap g = random_map(rng, 3, 3, -2, 2);
    LinearMap f = random_map(rng, 3, 3, -2, 2);
    CHECK(compose(g, f) == compose_oracle(g, f));
  }
}

TEST_CASE("kron basics") {
  CHECK(kron(identity(2), identity(3)) == identity(6));
  CHECK(kron(LinearMap::from_rows({{2}}), LinearMap::from_rows({{3}})) ==
        LinearMap::from_rows({{6}}));
}

TEST_CASE("kron matches the quadruple-loop oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    LinearMap a = random_map(rng, 2, 2, -2, 2);
    LinearMap b = random_map(rng, 2, 2, -2, 2);
    CHECK(kron(a, b) == kron_oracle(a, b));
  }
  // rectangular shapes too
  for (int trial = 0; trial < 10; ++trial) {
    LinearMap a = random_map(rng, 2, 3, -2, 2);
    LinearMap b = random_map(rng, 3, 1, -2, 2);
    CHECK(kron(a, b) == kron_oracle(a, b));
  }
}

TEST_CASE("twist is the expected permutation") {
  for (int n = 1; n <= 4; ++n) CHECK(twist(1, n) == identity(n));
  LinearMap t22 = twist(2, 2);
  CHECK(t22.at(0, 0) == Rational(1));
  CHECK(t22.at(2, 1) == Rational(1));  // flat 1 -> flat 2
  CHECK(t22.at(1, 2) == Rational(1));  // flat 2 -> flat 1
  CHECK(t22.at(3, 3) == Rational(1));
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) CHECK(compose(twist(m, n), twist(n, m)) == identity(m * n));
}

TEST_CASE("identity basics") {
  CHECK(identity(1) == LinearMap::from_rows({{1}}));
  for (int n = 1; n <= 4; ++n) CHECK(compose(identity(n), identity(n)) == identity(n));
  CHECK(kron(identity(2), identity(2)) == identity(4));
}

TEST_CASE("difference basics and oracle") {
  std::mt19937_64 rng(17);
  LinearMap f = random_map(rng, 3, 3, -2, 2);
  CHECK(difference(f, f).is_zero());
  CHECK(difference(identity(2), zero(2, 2)) == identity(2));
  CHECK_THROWS_AS(difference(LinearMap(2, 3), LinearMap(3, 2)), DimensionMismatch);

  LinearMap g = random_map(rng, 3, 3, -2, 2);
  LinearMap d = difference(f, g);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(d.at(r, c) == f.at(r, c) - g.at(r, c));
}

TEST_CASE("mixed-product law, all dims up to 3") {
  std::mt19937_64 rng(19);
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n)
        for (int l2 = 1; l2 <= 3; ++l2)
          for (int m2 = 1; m2 <= 3; ++m2)
            for (int n2 = 1; n2 <= 3; ++n2) {
              LinearMap a = random_map(rng, n, m, -2, 2);
              LinearMap b = random_map(rng, m, l, -2, 2);
              LinearMap c = random_map(rng, n2, m2, -2, 2);
              LinearMap d = random_map(rng, m2, l2, -2, 2);
              CHECK(kron(compose(a, b), compose(c, d)) == compose(kron(a, c), kron(b, d)));
            }
}

TEST_CASE("twist naturality, all dims up to 3") {
  std::mt19937_64 rng(23);
  for (int m = 1; m <= 3; ++m)
    for (int mp = 1; mp <= 3; ++mp)
      for (int n = 1; n <= 3; ++n)
        for (int np = 1; np <= 3; ++np) {
          LinearMap f = random_map(rng, mp, m, -2, 2);
          LinearMap g = random_map(rng, np, n, -2, 2);
          CHECK(compose(twist(mp, np), kron(f, g)) == compose(kron(g, f), twist(m, n)));
        }
}

TEST_CASE("kron is strictly associative on flat indices") {
  std::mt19937_64 rng(29);
  LinearMap a = random_map(rng, 2, 2, -2, 2);
  LinearMap b = random_map(rng, 3, 2, -2, 2);
  LinearMap c = random_map(rng, 2, 3, -2, 2);
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
}

TEST_CASE("vstack stacks codomains") {
  LinearMap top = LinearMap::from_rows({{1, 2}});
  LinearMap bottom = LinearMap::from_rows({{3, 4}, {5, 6}});
  LinearMap stacked = vstack(top, bottom);
  CHECK(stacked == LinearMap::from_rows({{1, 2}, {3, 4}, {5, 6}}));
  CHECK_THROWS_AS(vstack(LinearMap(1, 2), LinearMap(1, 3)), DimensionMismatch);
}

}  // TEST_SUITE
