#include "oddcover/bitkernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define ODDCOVER_HAVE_AVX2_PATH 1
#include <immintrin.h>
#endif


namespace oddcover::kernels {

#ifdef ODDCOVER_HAVE_AVX2_PATH

namespace {

#define ODDCOVER_AVX2 __attribute__((target("avx2,popcnt")))

ODDCOVER_AVX2 void xor_into_avx2(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

ODDCOVER_AVX2 bool and_to_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i r = _mm256_and_si256(x, y);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    acc = _mm256_or_si256(acc, r);
  }
  Word tail = 0;
  for (; i < n; ++i) {
    dst[i] = a[i] & b[i];
    tail |= dst[i];
  }
  return tail != 0 || !_mm256_testz_si256(acc, acc);
}

ODDCOVER_AVX2 bool andnot_to_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // andnot computes ~first & second
    __m256i r = _mm256_andnot_si256(y, x);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    acc = _mm256_or_si256(acc, r);
  }
  Word tail = 0;
  for (; i < n; ++i) {
    dst[i] = a[i] & ~b[i];
    tail |= dst[i];
  }
  return tail != 0 || !_mm256_testz_si256(acc, acc);
}

ODDCOVER_AVX2 unsigned dot_avx2(const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  Word folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; i < n; ++i) folded ^= a[i] & b[i];
  return static_cast<unsigned>(__builtin_popcountll(folded) & 1);
}

ODDCOVER_AVX2 std::size_t popcount_avx2(const Word* a, std::size_t n) {
  // AVX2 has no vector popcount; the gain here is only from unrolling.
  std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c0 += static_cast<std::size_t>(__builtin_popcountll(a[i]));
    c1 += static_cast<std::size_t>(__builtin_popcountll(a[i + 1]));
    c2 += static_cast<std::size_t>(__builtin_popcountll(a[i + 2]));
    c3 += static_cast<std::size_t>(__builtin_popcountll(a[i + 3]));
  }
  for (; i < n; ++i) c0 += static_cast<std::size_t>(__builtin_popcountll(a[i]));
  return c0 + c1 + c2 + c3;
}

ODDCOVER_AVX2 bool is_zero_avx2(const Word* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
  }
  Word tail = 0;
  for (; i < n; ++i) tail |= a[i];
  return tail == 0 && _mm256_testz_si256(acc, acc);
}

ODDCOVER_AVX2 bool equal_avx2(const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_or_si256(acc, _mm256_xor_si256(x, y));
  }
  Word tail = 0;
  for (; i < n; ++i) tail |= a[i] ^ b[i];
  return tail == 0 && _mm256_testz_si256(acc, acc);
}

#undef ODDCOVER_AVX2

constexpr KernelTable kAvx2{
    "avx2",   xor_into_avx2, and_to_avx2,   andnot_to_avx2,
    dot_avx2, popcount_avx2, is_zero_avx2, equal_avx2,
};

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  }();
  return supported ? &kAvx2 : nullptr;
}

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace oddcover::kernels
