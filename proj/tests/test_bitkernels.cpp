#include <doctest.h>

#include <cstdlib>
#include <string_view>
#include <random>
#include <vector>

#include "oddcover/bitkernels.hpp"

using namespace oddcover::kernels;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<Word> v(n);
  std::bernoulli_distribution sparse(density);
  for (Word& w : v) w = sparse(rng) ? rng() : 0;
  return v;
}

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> t{&scalar_kernels()};
  if (const KernelTable* a = avx2_kernels()) t.push_back(a);
  return t;
}

}  // namespace

TEST_CASE("scalar kernels match bit-by-bit definitions") {
  std::mt19937_64 rng(1);
  const KernelTable& k = scalar_kernels();
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u}) {
    auto a = random_words(rng, n, 0.7);
    auto b = random_words(rng, n, 0.7);
    std::size_t pop = 0;
    unsigned parity = 0;
    bool any_and = false, any_andnot = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (int bit = 0; bit < 64; ++bit) {
        const bool x = a[i] >> bit & 1, y = b[i] >> bit & 1;
        pop += x;
        parity ^= (x && y);
        any_and |= x && y;
        any_andnot |= x && !y;
      }
    }
    CHECK(k.popcount(a.data(), n) == pop);
    CHECK(k.dot(a.data(), b.data(), n) == parity);
    std::vector<Word> d(n);
    CHECK(k.and_to(d.data(), a.data(), b.data(), n) == any_and);
    CHECK(k.andnot_to(d.data(), a.data(), b.data(), n) == any_andnot);
    CHECK(k.is_zero(a.data(), n) == (pop == 0));
    CHECK(k.equal(a.data(), a.data(), n));
  }
}

TEST_CASE("every available kernel table agrees with the scalar reference") {
  std::mt19937_64 rng(42);
  const KernelTable& ref = scalar_kernels();
  for (const KernelTable* t : tables()) {
    CAPTURE(t->name);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rng() % 70);
      const double density = trial % 3 == 0 ? 0.02 : 0.8;
      auto a = random_words(rng, n, density);
      auto b = random_words(rng, n, density);
      if (trial % 5 == 0) b = a;

      CHECK(t->popcount(a.data(), n) == ref.popcount(a.data(), n));
      CHECK(t->dot(a.data(), b.data(), n) == ref.dot(a.data(), b.data(), n));
      CHECK(t->is_zero(a.data(), n) == ref.is_zero(a.data(), n));
      CHECK(t->equal(a.data(), b.data(), n) == ref.equal(a.data(), b.data(), n));

      std::vector<Word> x1 = a, x2 = a;
      t->xor_into(x1.data(), b.data(), n);
      ref.xor_into(x2.data(), b.data(), n);
      CHECK(x1 == x2);

      std::vector<Word> d1(n, 0xdead), d2(n, 0xbeef);
      CHECK(t->and_to(d1.data(), a.data(), b.data(), n) == ref.and_to(d2.data(), a.data(), b.data(), n));
      CHECK(d1 == d2);
      CHECK(t->andnot_to(d1.data(), a.data(), b.data(), n) == ref.andnot_to(d2.data(), a.data(), b.data(), n));
      CHECK(d1 == d2);
    }
  }
}

TEST_CASE("in-place use is allowed for and/andnot") {
  std::mt19937_64 rng(7);
  for (const KernelTable* t : tables()) {
    auto a = random_words(rng, 9, 1.0);
    auto b = random_words(rng, 9, 1.0);
    auto expect = a;
    for (std::size_t i = 0; i < 9; ++i) expect[i] &= ~b[i];
    t->andnot_to(a.data(), a.data(), b.data(), 9);
    CHECK(a == expect);
  }
}

TEST_CASE("dispatcher honours the scalar override") {
  const char* env = std::getenv("ODDCOVER_SIMD");
  if (env && std::string_view(env) == "scalar") {
    CHECK(active().name == scalar_kernels().name);
  } else if (avx2_kernels()) {
    CHECK(active().name == avx2_kernels()->name);
  } else {
    CHECK(active().name == scalar_kernels().name);
  }
}
