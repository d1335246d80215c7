#pragma once

// Bit-packed linear algebra over the two-element field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oddcover/bitkernels.hpp"

namespace oddcover {

using kernels::Word;

class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t length);

  static Gf2Vector from_bits(std::span<const int> bits);

  std::size_t size() const noexcept { return length_; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= Word{1} << (i % 64); }

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  Gf2Vector& operator^=(const Gf2Vector& other);
  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }

  bool is_zero() const { return kernels::is_zero(words_); }
  std::size_t popcount() const { return kernels::popcount(words_); }
  // F2 inner product.
  bool dot(const Gf2Vector& other) const;

  // Indices of set bits, ascending.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

// Row-major bit matrix; each row occupies `stride()` words and bits past
// `cols()` are kept zero.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(std::span<const Gf2Vector> rows, std::size_t cols);
  // Entry (i, j) = x_i y_j over F2.
  static Gf2Matrix outer(const Gf2Vector& x, const Gf2Vector& y);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / 64] ^= Word{1} << (c % 64); }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

  Gf2Vector row_vector(std::size_t r) const;
  Gf2Vector column_vector(std::size_t c) const;
  void set_row(std::size_t r, const Gf2Vector& v);

  Gf2Matrix transpose() const;
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;
  Gf2Matrix& operator^=(const Gf2Matrix& rhs);
  friend Gf2Matrix operator^(Gf2Matrix a, const Gf2Matrix& b) { return a ^= b; }

  bool is_zero() const { return kernels::is_zero(data_); }
  bool is_symmetric() const;
  bool has_zero_diagonal() const;
  bool is_symmetric_zero_diag() const { return is_symmetric() && has_zero_diagonal(); }

  // Rows and columns both reindexed: result(i, j) = this(perm[i], perm[j]).
  Gf2Matrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

std::size_t rank(const Gf2Matrix& m);

// Finds S with XOR of rows[i], i in S, equal to `target`. Among all solutions
// returns the one whose free variables (rows dependent on earlier rows) are
// zero. Returns nullopt when `target` is outside the row space.
std::optional<std::vector<std::size_t>> solve_subset(const Gf2Matrix& rows, const Gf2Vector& target);

// A = sum over pairs of (x y^T + y x^T).
struct SymplecticDecomposition {
  std::vector<std::pair<Gf2Vector, Gf2Vector>> pairs;

  // Columns x_1, y_1, x_2, y_2, ... as an n x 2k matrix.
  Gf2Matrix as_matrix(std::size_t n) const;
  Gf2Matrix reassemble(std::size_t n) const;
};

// Throws InvalidArgument unless `a` is symmetric with zero diagonal.
SymplecticDecomposition symplectic_decompose(const Gf2Matrix& a);

// M (H2 + H2 + ... + H2) M^T for an n x 2k matrix M, H2 the 2x2 swap block.
Gf2Matrix symplectic_gram(const Gf2Matrix& m);

}  // namespace oddcover
