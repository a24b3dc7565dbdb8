#include "puiseux/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace puiseux {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n) { return scaled_identity(n, 1); }

IntMatrix IntMatrix::scaled_identity(int n, const Int& s) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols()) {
      throw std::invalid_argument("ragged rows");
    }
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntMatrix IntMatrix::with_appended_column(const ExponentVector& v) const {
  if (v.size() != rows_) throw std::invalid_argument("column length does not match row count");
  IntMatrix out(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    out.at(i, cols_) = v[i];
  }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

namespace {

void swap_rows(IntMatrix& a, int i, int j) {
  if (i == j) return;
  for (int k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
}

void swap_cols(IntMatrix& a, int i, int j) {
  if (i == j) return;
  for (int k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
}

// Smallest nonzero |entry| in the trailing submatrix, or false if it is zero.
bool find_pivot(const IntMatrix& a, int s, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = s; i < a.rows(); ++i) {
    for (int j = s; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      Int mag = abs(a.at(i, j));
      if (!found || mag < best) {
        found = true;
        best = std::move(mag);
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Int> smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const int k = std::min(a.rows(), a.cols());
  std::vector<Int> d(static_cast<std::size_t>(k), Int(0));

  for (int s = 0; s < k; ++s) {
    int pi = s, pj = s;
    if (!find_pivot(a, s, pi, pj)) break;  // trailing block is zero; d[s..] stay 0
    swap_rows(a, s, pi);
    swap_cols(a, s, pj);

    for (;;) {
      // Clear column s, then row s, re-pivoting whenever a remainder
      // becomes the new smallest entry.
      bool reduced = true;
      for (int i = s + 1; i < a.rows(); ++i) {
        if (a.at(i, s) == 0) continue;
        Int q = a.at(i, s) / a.at(s, s);
        for (int j = s; j < a.cols(); ++j) a.at(i, j) -= q * a.at(s, j);
        if (a.at(i, s) != 0) reduced = false;
      }
      for (int j = s + 1; j < a.cols(); ++j) {
        if (a.at(s, j) == 0) continue;
        Int q = a.at(s, j) / a.at(s, s);
        for (int i = s; i < a.rows(); ++i) a.at(i, j) -= q * a.at(i, s);
        if (a.at(s, j) != 0) reduced = false;
      }
      if (!reduced) {
        find_pivot(a, s, pi, pj);
        swap_rows(a, s, pi);
        swap_cols(a, s, pj);
        continue;
      }

      // Divisibility fix: the pivot must divide the rest of the block.
      bool divides_all = true;
      for (int i = s + 1; i < a.rows() && divides_all; ++i) {
        for (int j = s + 1; j < a.cols(); ++j) {
          if (a.at(i, j) % a.at(s, s) != 0) {
            for (int c = s; c < a.cols(); ++c) a.at(s, c) += a.at(i, c);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }

    d[static_cast<std::size_t>(s)] = abs(a.at(s, s));
  }
  return d;
}

Int gcd_minors(const IntMatrix& a, int order) {
  if (order < 1 || order > std::min(a.rows(), a.cols())) {
    throw std::invalid_argument("minor order out of range");
  }
  const std::vector<Int> d = smith_normal_form(a);
  Int product = 1;
  for (int i = 0; i < order; ++i) product *= d[static_cast<std::size_t>(i)];
  return product;
}

Int determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant needs a square matrix");
  IntMatrix a = input;
  const int n = a.rows();
  Int sign = 1;
  Int prev = 1;
  for (int s = 0; s < n - 1; ++s) {
    if (a.at(s, s) == 0) {
      int swap = -1;
      for (int i = s + 1; i < n; ++i) {
        if (a.at(i, s) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      swap_rows(a, s, swap);
      sign = -sign;
    }
    for (int i = s + 1; i < n; ++i) {
      for (int j = s + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(s, s) - a.at(i, s) * a.at(s, j)) / prev;
      }
      a.at(i, s) = 0;
    }
    prev = a.at(s, s);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// All size-k index subsets of [0, n), in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - (k - i)) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  return idx;
}

}  // namespace

Int gcd_minors_oracle(const IntMatrix& a, int order) {
  if (order < 1 || order > std::min(a.rows(), a.cols())) {
    throw std::invalid_argument("minor order out of range");
  }
  Int g = 0;
  std::vector<int> rows = first_combination(order);
  do {
    std::vector<int> cols = first_combination(order);
    do {
      IntMatrix sub(order, order);
      for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
          sub.at(i, j) = a.at(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        }
      }
      g = int_gcd(g, determinant(sub));
    } while (next_combination(cols, a.cols()));
  } while (next_combination(rows, a.rows()));
  return g;
}

}  // namespace puiseux
