#include <doctest.h>

#include <random>

#include "oddcover/error.hpp"
#include "oddcover/gf2.hpp"
#include "support.hpp"

using namespace oddcover;

namespace {

Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Gf2Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, coin(rng));
  }
  return m;
}

Gf2Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        m.set(i, j);
        m.set(j, i);
      }
    }
  }
  return m;
}

testing::Dense to_dense(const Gf2Matrix& m) {
  testing::Dense d(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j);
  }
  return d;
}

}  // namespace

TEST_CASE("vector basics") {
  Gf2Vector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.popcount() == 3);
  CHECK(v.support() == std::vector<std::size_t>{0, 64, 129});
  v.flip(64);
  CHECK_FALSE(v.get(64));
  Gf2Vector w(130);
  w.set(0);
  w.set(5);
  CHECK(v.dot(w) == true);
  CHECK((v ^ v).is_zero());
  const int bits[] = {1, 0, 1};
  CHECK(Gf2Vector::from_bits(bits).support() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("rank agrees with a plain row-reduction oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = rng() % 90, c = rng() % 90;
    const double p = trial % 4 == 0 ? 0.05 : 0.5;
    const Gf2Matrix m = random_matrix(rng, r, c, p);
    CHECK(rank(m) == testing::naive_rank(to_dense(m)));
    CHECK(rank(m.transpose()) == rank(m));
  }
  CHECK(rank(Gf2Matrix::identity(100)) == 100);
  CHECK(rank(Gf2Matrix(5, 0)) == 0);
}

TEST_CASE("product and transpose match the definitions") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t a = 1 + rng() % 70, b = 1 + rng() % 70, c = 1 + rng() % 70;
    const Gf2Matrix x = random_matrix(rng, a, b);
    const Gf2Matrix y = random_matrix(rng, b, c);
    const Gf2Matrix z = x * y;
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        int s = 0;
        for (std::size_t t = 0; t < b; ++t) s ^= x.get(i, t) & y.get(t, j);
        REQUIRE(z.get(i, j) == static_cast<bool>(s));
      }
    }
    CHECK(x.transpose().transpose() == x);
    CHECK((x * y).transpose() == y.transpose() * x.transpose());
  }
}

TEST_CASE("solve_subset against exhaustive subset enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = rng() % 9, c = 1 + rng() % 12;
    const Gf2Matrix rows = random_matrix(rng, r, c, trial % 2 ? 0.3 : 0.6);
    Gf2Vector target(c);
    for (std::size_t j = 0; j < c; ++j) target.set(j, rng() & 1);
    bool reachable = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
      Gf2Vector acc(c);
      for (std::size_t i = 0; i < r; ++i) {
        if (mask >> i & 1) acc ^= rows.row_vector(i);
      }
      if (acc == target) reachable = true;
    }
    const auto s = solve_subset(rows, target);
    CHECK(s.has_value() == reachable);
    if (s) {
      Gf2Vector acc(c);
      for (std::size_t i : *s) acc ^= rows.row_vector(i);
      CHECK(acc == target);
    }
  }
}

TEST_CASE("symplectic decomposition: rank/2 pairs, exact reassembly, Gram identity") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 25;
    const Gf2Matrix a = random_symmetric(rng, n, trial % 3 ? 0.5 : 0.15);
    const auto d = symplectic_decompose(a);
    const std::size_t r = rank(a);
    CHECK(r % 2 == 0);
    CHECK(d.pairs.size() * 2 == r);
    CHECK(d.reassemble(n) == a);
    CHECK(symplectic_gram(d.as_matrix(n)) == a);
  }
}

TEST_CASE("symplectic decomposition rejects bad input") {
  Gf2Matrix a(3, 3);
  a.set(0, 1);
  CHECK_THROWS_AS(symplectic_decompose(a), InvalidArgument);
  Gf2Matrix b(2, 2);
  b.set(0, 0);
  CHECK_THROWS_AS(symplectic_decompose(b), InvalidArgument);
  CHECK_THROWS_AS(symplectic_decompose(Gf2Matrix(2, 3)), InvalidArgument);
}

TEST_CASE("permuted reindexes rows and columns together") {
  std::mt19937_64 rng(8);
  const Gf2Matrix a = random_symmetric(rng, 10);
  std::vector<std::size_t> perm{3, 1, 4, 0, 5, 9, 2, 6, 8, 7};
  const Gf2Matrix p = a.permuted(perm);
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = 0; j < 10; ++j) CHECK(p.get(i, j) == a.get(perm[i], perm[j]));
  }
  CHECK(rank(p) == rank(a));
}
