#pragma once

#include <vector>

#include "puiseux/exponent.hpp"
#include "puiseux/numeric.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

/// Output of the distinguished-exponent filtration.
struct DistinguishedResult {
  Int m;                               ///< denominator the run used
  int rank = 1;                        ///< variable count r
  std::vector<ExponentVector> pairs;   ///< distinguished exponents, selection order
  std::vector<Int> gcd_chain;          ///< r-minor gcd of M_0, M_1, ..., M_s
  Int degree;                          ///< m^r / gcd_chain.back()
};

/// Divide the common factor out of m and the whole support, so the result
/// has gcd(m', entries) = 1 and denotes the same formal series. Throws
/// std::domain_error on the zero series.
PuiseuxSeries normalize_denominator(const PuiseuxSeries& z);

/// Iterative minor-gcd filtration over the support:
/// start M_0 = m*I_r; repeatedly drop every exponent whose column keeps the
/// r-minor gcd of the current matrix fixed (those lie in the lattice already
/// spanned), then select the ordering-minimum of what is left as the next
/// distinguished exponent and append it as a rightmost column. Stops when
/// the drop empties the set.
///
/// The input is used as given: callers wanting the minimal denominator run
/// normalize_denominator first. Duplicate support entries are merged.
DistinguishedResult distinguished_exponents(const std::vector<ExponentVector>& support,
                                            const Int& m, MonomialOrdering ord);

/// Convenience overload on a series' support and denominator.
DistinguishedResult distinguished_exponents(const PuiseuxSeries& z, MonomialOrdering ord);

/// [K[P]:K] = m^r / gcd of the r-minors of [m*I_r | P-columns]; 1 for an
/// empty set.
Int extension_degree(const std::vector<ExponentVector>& exponents, const Int& m);

/// True iff every support exponent lies in the subgroup of (Z/mZ)^r
/// generated by the candidates — i.e. the candidates reach every monomial of
/// the series modulo integral ones.
bool verify_corollary(const std::vector<ExponentVector>& support,
                      const std::vector<ExponentVector>& generators, const Int& m);

}  // namespace puiseux
