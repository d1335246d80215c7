#include "oddcover/bitkernels.hpp"

#include <bit>
#include <cstdlib>
#include <string_view>

namespace oddcover::kernels {

namespace {

void xor_into_scalar(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

bool and_to_scalar(Word* dst, const Word* a, const Word* b, std::size_t n) {
  Word acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = a[i] & b[i];
    acc |= dst[i];
  }
  return acc != 0;
}

bool andnot_to_scalar(Word* dst, const Word* a, const Word* b, std::size_t n) {
  Word acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = a[i] & ~b[i];
    acc |= dst[i];
  }
  return acc != 0;
}

unsigned dot_scalar(const Word* a, const Word* b, std::size_t n) {
  Word acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc ^= a[i] & b[i];
  return static_cast<unsigned>(std::popcount(acc) & 1);
}

std::size_t popcount_scalar(const Word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

bool is_zero_scalar(const Word* a, std::size_t n) {
  Word acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= a[i];
  return acc == 0;
}

bool equal_scalar(const Word* a, const Word* b, std::size_t n) {
  Word acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= a[i] ^ b[i];
  return acc == 0;
}

constexpr KernelTable kScalar{
    "scalar",         xor_into_scalar, and_to_scalar, andnot_to_scalar,
    dot_scalar,       popcount_scalar, is_zero_scalar, equal_scalar,
};

const KernelTable& select_kernels() {
  if (const char* env = std::getenv("ODDCOVER_SIMD"); env && std::string_view(env) == "scalar") {
    return kScalar;
  }
  if (const KernelTable* simd = avx2_kernels()) return *simd;
  return kScalar;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable& active() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace oddcover::kernels
