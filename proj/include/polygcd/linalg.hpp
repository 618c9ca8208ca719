#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polygcd/integer.hpp"
#include "polygcd/poly.hpp"

namespace polygcd {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  /// Zero matrix. Both dimensions must be positive.
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  /// Rows must be nonempty and of equal length.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Integer> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

/// One row per line, entries separated by single spaces.
std::string to_string(const IntMatrix& m);

/// Reads whitespace-separated integers, one matrix row per nonblank line.
/// Throws InputError on ragged rows, non-integers or empty input.
IntMatrix read_matrix(std::istream& in);

/// (k+l)x(k+l) Sylvester matrix of f (degree k) and g (degree l): the first
/// l rows hold f's coefficients shifted right by 0..l-1, the last k rows hold
/// g's coefficients shifted right by 0..k-1.
IntMatrix sylvester_matrix(const MonicIntPoly& f, const MonicIntPoly& g);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_bareiss(const IntMatrix& m);

/// det of the Sylvester matrix. With verify set, the subresultant PRS value
/// is computed as well and a mismatch throws InvariantBreach.
Integer resultant(const MonicIntPoly& f, const MonicIntPoly& g, bool verify = false);

/// Resultant via the subresultant polynomial remainder sequence; the sign
/// convention matches det(sylvester_matrix(f, g)).
Integer resultant_prs(const IntPoly& f, const IntPoly& g);

}  // namespace polygcd
