#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nervekit {

using Integer = boost::multiprecision::cpp_int;
/// Dense row-major integer matrix.
using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix zero_matrix(std::size_t rows, std::size_t cols);
IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant by fraction-free elimination.
Integer determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix d;  // diagonal, d_11 | d_22 | ..., nonnegative
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols
  std::size_t rank = 0;
};

/// u * a * v = d. The last cols - rank columns of v span the kernel of a.
SmithForm smith_normal_form(const IntMatrix& a);
/// Same, with the column count given explicitly so that matrices without rows keep their shape.
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

/// Integer matrix stored by rows; zero entries are absent.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Adds `value` to entry (r, c).
  void add(std::size_t r, std::size_t c, const Integer& value);
  Integer at(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Integer>& row(std::size_t r) const { return data_[r]; }
  bool is_zero() const;

  IntMatrix dense() const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  bool operator==(const SparseMatrix& other) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::map<std::size_t, Integer>> data_;
};

/// Nonzero diagonal of the Smith form, in divisibility order. Unit pivots are
/// eliminated sparsely first; the remainder goes through the dense reduction.
std::vector<Integer> invariant_factors(const SparseMatrix& a);

}  // namespace nervekit
