#pragma once

#include <set>
#include <vector>

#include "puiseux/exponent.hpp"
#include "puiseux/numeric.hpp"

namespace puiseux {

/// Subgroup of (Z/mZ)^r materialized as an explicit element set. Oracle
/// representation: exhaustive, exact, and only meant for desk scale
/// (enumeration refuses m^r beyond ~4e6).
class ModSubgroup {
 public:
  ModSubgroup(Int m, int rank, std::set<ExponentVector> elements);

  const Int& modulus() const { return m_; }
  int rank() const { return rank_; }
  const std::set<ExponentVector>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  /// Membership of v reduced mod m.
  bool contains(const ExponentVector& v) const;

  /// Exhaustive closure check (zero element, closure under addition).
  bool is_closed_under_addition() const;

  bool operator==(const ModSubgroup& other) const;

 private:
  Int m_;
  int rank_;
  std::set<ExponentVector> elements_;
};

/// Subgroup of (Z/mZ)^r generated by the given vectors (reduced mod m),
/// computed by closure iteration.
ModSubgroup span(const std::vector<ExponentVector>& generators, const Int& m, int rank);

/// All (a_1,...,a_r) in (Z/mZ)^r with sum a_l * v_l = 0 (mod m) for every
/// input vector: the annihilator of the input, i.e. the Galois group fixing
/// the corresponding monomials.
ModSubgroup stabilizer(const std::vector<ExponentVector>& vectors, const Int& m, int rank);

}  // namespace puiseux
