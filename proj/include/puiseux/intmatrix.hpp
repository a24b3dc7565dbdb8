#pragma once

#include <vector>

#include "puiseux/exponent.hpp"
#include "puiseux/numeric.hpp"

namespace puiseux {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);
  static IntMatrix scaled_identity(int n, const Int& s);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  /// Copy of this matrix with v as a new rightmost column (v.size() == rows).
  IntMatrix with_appended_column(const ExponentVector& v) const;

  bool operator==(const IntMatrix& other) const;

 private:
  int rows_;
  int cols_;
  std::vector<Int> entries_;
};

/// Invariant factors d_1,...,d_k (k = min(rows, cols)), each nonnegative,
/// with d_i | d_{i+1} while nonzero; d_1...d_l is the gcd of the order-l
/// minors.
std::vector<Int> smith_normal_form(const IntMatrix& a);

/// gcd (nonnegative) of all order-l minors, via the invariant-factor
/// product; 0 iff every l-minor vanishes. Throws std::invalid_argument for
/// l outside [1, min(rows, cols)].
Int gcd_minors(const IntMatrix& a, int order);

/// Same value by direct enumeration of all l x l minors. Kept independent
/// of the Smith-normal-form path so either side can check the other.
Int gcd_minors_oracle(const IntMatrix& a, int order);

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& a);

}  // namespace puiseux
