#include "oddcover/gf2.hpp"

#include <algorithm>
#include <bit>

#include "oddcover/error.hpp"

namespace oddcover {

Gf2Vector::Gf2Vector(std::size_t length) : length_(length), words_(kernels::words_for_bits(length), 0) {}

Gf2Vector Gf2Vector::from_bits(std::span<const int> bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1) v.set(i);
  }
  return v;
}

void Gf2Vector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (other.length_ != length_) throw InvalidArgument("Gf2Vector: length mismatch in xor");
  kernels::xor_into(words_, other.words_);
  return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  if (other.length_ != length_) throw InvalidArgument("Gf2Vector: length mismatch in dot");
  return kernels::dot(words_, other.words_) != 0;
}

std::vector<std::size_t> Gf2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(kernels::words_for_bits(cols)), data_(rows * stride_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::span<const Gf2Vector> rows, std::size_t cols) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Gf2Matrix Gf2Matrix::outer(const Gf2Vector& x, const Gf2Vector& y) {
  Gf2Matrix m(x.size(), y.size());
  for (std::size_t r : x.support()) std::ranges::copy(y.words(), m.row(r).begin());
  return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = data_[r * stride_ + c / 64];
  const Word mask = Word{1} << (c % 64);
  w = value ? (w | mask) : (w & ~mask);
}

Gf2Vector Gf2Matrix::row_vector(std::size_t r) const {
  Gf2Vector v(cols_);
  std::ranges::copy(row(r), v.words().begin());
  return v;
}

Gf2Vector Gf2Matrix::column_vector(std::size_t c) const {
  Gf2Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

void Gf2Matrix::set_row(std::size_t r, const Gf2Vector& v) {
  if (v.size() != cols_) throw InvalidArgument("Gf2Matrix::set_row: length mismatch");
  std::ranges::copy(v.words(), row(r).begin());
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r);
    }
  }
  return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("Gf2Matrix: shape mismatch in product");
  Gf2Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) kernels::xor_into(out.row(i), rhs.row(j));
    }
  }
  return out;
}

Gf2Matrix& Gf2Matrix::operator^=(const Gf2Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("Gf2Matrix: shape mismatch in xor");
  kernels::xor_into(data_, rhs.data_);
  return *this;
}

bool Gf2Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (get(i, j) != get(j, i)) return false;
    }
  }
  return true;
}

bool Gf2Matrix::has_zero_diagonal() const {
  const std::size_t n = std::min(rows_, cols_);
  for (std::size_t i = 0; i < n; ++i) {
    if (get(i, i)) return false;
  }
  return true;
}

Gf2Matrix Gf2Matrix::permuted(std::span<const std::size_t> perm) const {
  if (rows_ != cols_ || perm.size() != rows_) throw InvalidArgument("Gf2Matrix::permuted: bad permutation");
  Gf2Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(perm[i], perm[j])) out.set(i, j);
    }
  }
  return out;
}

std::size_t rank(const Gf2Matrix& m) {
  Gf2Matrix work = m;
  const std::size_t stride = work.stride();
  std::size_t r = 0;
  for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < work.rows() && !work.get(pivot, c)) ++pivot;
    if (pivot == work.rows()) continue;
    if (pivot != r) std::swap_ranges(work.row(pivot).begin(), work.row(pivot).end(), work.row(r).begin());
    // Words before c/64 are already zero in rows below the pivot.
    const std::size_t first_word = c / 64;
    const auto pivot_tail = work.row(r).subspan(first_word, stride - first_word);
    for (std::size_t i = r + 1; i < work.rows(); ++i) {
      if (work.get(i, c)) kernels::xor_into(work.row(i).subspan(first_word, stride - first_word), pivot_tail);
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<std::size_t>> solve_subset(const Gf2Matrix& rows, const Gf2Vector& target) {
  if (target.size() != rows.cols()) throw InvalidArgument("solve_subset: target length differs from row length");

  struct BasisRow {
    Gf2Vector value;
    Gf2Vector combo;
    std::size_t pivot;
  };
  std::vector<BasisRow> basis;
  const std::size_t m = rows.rows();

  auto reduce = [&basis](Gf2Vector& value, Gf2Vector& combo) {
    for (const BasisRow& b : basis) {
      if (value.get(b.pivot)) {
        value ^= b.value;
        combo ^= b.combo;
      }
    }
  };

  for (std::size_t i = 0; i < m; ++i) {
    Gf2Vector value = rows.row_vector(i);
    Gf2Vector combo(m);
    combo.set(i);
    reduce(value, combo);
    if (value.is_zero()) continue;
    const std::size_t pivot = value.support().front();
    basis.push_back({std::move(value), std::move(combo), pivot});
  }

  Gf2Vector residue = target;
  Gf2Vector combo(m);
  reduce(residue, combo);
  if (!residue.is_zero()) return std::nullopt;
  return combo.support();
}

Gf2Matrix SymplecticDecomposition::as_matrix(std::size_t n) const {
  Gf2Matrix m(n, 2 * pairs.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    for (std::size_t i : pairs[t].first.support()) m.set(i, 2 * t);
    for (std::size_t i : pairs[t].second.support()) m.set(i, 2 * t + 1);
  }
  return m;
}

Gf2Matrix SymplecticDecomposition::reassemble(std::size_t n) const {
  Gf2Matrix sum(n, n);
  for (const auto& [x, y] : pairs) {
    sum ^= Gf2Matrix::outer(x, y);
    sum ^= Gf2Matrix::outer(y, x);
  }
  return sum;
}

SymplecticDecomposition symplectic_decompose(const Gf2Matrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("symplectic_decompose: matrix is not square");
  if (!a.is_symmetric()) throw InvalidArgument("symplectic_decompose: matrix is not symmetric");
  if (!a.has_zero_diagonal()) throw InvalidArgument("symplectic_decompose: matrix has a nonzero diagonal entry");

  const std::size_t n = a.rows();
  SymplecticDecomposition out;
  Gf2Matrix b = a;
  std::size_t p = 0;
  while (p < n) {
    // Lexicographically least (p, q) with p < q and b(p, q) = 1. Rows
    // before p stay zero because every update clears rows p and q.
    std::optional<std::size_t> q;
    const auto row = b.row(p);
    for (std::size_t w = 0; w < row.size() && !q; ++w) {
      if (row[w]) q = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    }
    if (!q) {
      ++p;
      continue;
    }
    Gf2Vector x = b.column_vector(p);
    Gf2Vector y = b.column_vector(*q);
    b ^= Gf2Matrix::outer(x, y);
    b ^= Gf2Matrix::outer(y, x);
    out.pairs.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

Gf2Matrix symplectic_gram(const Gf2Matrix& m) {
  if (m.cols() % 2 != 0) throw InvalidArgument("symplectic_gram: column count must be even");
  const std::size_t n = m.rows();
  Gf2Matrix swapped(n, m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(i, c)) swapped.set(i, c ^ 1U);
    }
  }
  Gf2Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (kernels::dot(swapped.row(i), m.row(j))) out.set(i, j);
    }
  }
  return out;
}

}  // namespace oddcover
