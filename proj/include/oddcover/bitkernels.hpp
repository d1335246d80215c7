#pragma once

// Word-parallel kernels over packed GF(2) rows.
//
// Every kernel has a portable scalar reference implementation. An AVX2
// variant is compiled on x86-64 and selected at runtime when the CPU
// supports it. Both variants must produce bit-identical results; the
// equivalence tests in tests/test_bitkernels.cpp enforce this.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace oddcover::kernels {

using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

struct KernelTable {
  std::string_view name;
  // dst ^= src
  void (*xor_into)(Word* dst, const Word* src, std::size_t n);
  // dst = a & b; returns true iff the result is nonzero
  bool (*and_to)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst = a & ~b; returns true iff the result is nonzero
  bool (*andnot_to)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // parity of popcount(a & b), i.e. the F2 dot product
  unsigned (*dot)(const Word* a, const Word* b, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  bool (*is_zero)(const Word* a, std::size_t n);
  bool (*equal)(const Word* a, const Word* b, std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Selected once on first use. ODDCOVER_SIMD=scalar forces the reference path.
const KernelTable& active();

// Convenience wrappers over the active table.
inline void xor_into(std::span<Word> dst, std::span<const Word> src) {
  active().xor_into(dst.data(), src.data(), dst.size());
}
inline bool and_to(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  return active().and_to(dst.data(), a.data(), b.data(), dst.size());
}
inline bool andnot_to(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  return active().andnot_to(dst.data(), a.data(), b.data(), dst.size());
}
inline unsigned dot(std::span<const Word> a, std::span<const Word> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline std::size_t popcount(std::span<const Word> a) {
  return active().popcount(a.data(), a.size());
}
inline bool is_zero(std::span<const Word> a) {
  return active().is_zero(a.data(), a.size());
}
inline bool equal(std::span<const Word> a, std::span<const Word> b) {
  return active().equal(a.data(), b.data(), a.size());
}

}  // namespace oddcover::kernels
