#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "puiseux/numeric.hpp"

namespace puiseux {

/// A point of N^r: the numerators (i_1,...,i_r) of a fractional exponent
/// tuple over some common denominator m (the denominator lives with the
/// series, not here).
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<Int> entries);
  ExponentVector(std::initializer_list<Int> entries);

  static ExponentVector zero(int length);

  int size() const { return static_cast<int>(entries_.size()); }
  const Int& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& entries() const { return entries_; }

  Int total_degree() const;

  /// Entry-wise reduction mod m (m > 0).
  ExponentVector reduced_mod(const Int& m) const;

  /// Entry-wise exact division; every entry must be divisible by d.
  ExponentVector divided_by(const Int& d) const;

  bool is_zero() const;

  bool operator==(const ExponentVector& other) const { return entries_ == other.entries_; }
  bool operator!=(const ExponentVector& other) const { return !(*this == other); }

  /// Container order only (entry-wise lexicographic); semantic monomial
  /// comparisons go through compare().
  bool operator<(const ExponentVector& other) const;

  std::string to_string() const;  // "(1,0,2)"

 private:
  std::vector<Int> entries_;
};

/// a dominates b componentwise (the natural partial order on N^r).
bool componentwise_leq(const ExponentVector& a, const ExponentVector& b);

enum class MonomialOrdering { Lex, GrLex, GrevLex };

/// GrLex and GrevLex refine total degree; Lex does not.
bool is_graded(MonomialOrdering ord);

MonomialOrdering ordering_from_name(const std::string& name);
std::string ordering_name(MonomialOrdering ord);

/// Strict total order on equal-length vectors. Throws std::invalid_argument
/// on a length mismatch.
std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b,
                             MonomialOrdering ord);

}  // namespace puiseux
