#pragma once

#include <vector>

#include "puiseux/distinguished.hpp"
#include "puiseux/exponent.hpp"
#include "puiseux/numeric.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

/// Characteristic data {m; beta_1 < ... < beta_g} of a one-variable branch,
/// with the derived gcd chain e_1 = gcd(m, beta_1), e_l = gcd(e_{l-1}, beta_l).
struct BranchCharacteristic {
  Int m;
  std::vector<Int> betas;
  std::vector<Int> e_chain;
};

/// Builds the characteristic with its e-chain from m and the betas.
BranchCharacteristic make_branch_characteristic(Int m, std::vector<Int> betas);

struct PuiseuxPair {
  Int p;
  Int q;
  bool operator==(const PuiseuxPair& other) const { return p == other.p && q == other.q; }
};

/// Characteristic exponents of a one-variable branch: the distinguished
/// exponents under the natural order on N. Integral branches (m = 1, or all
/// exponents integral) yield empty betas.
BranchCharacteristic characteristic_of_branch(const PuiseuxSeries& z);

/// The pairs (p_1,q_1),...,(p_g,q_g) with beta_l = p_l e_l and
/// e_{l-1} = q_l e_l (e_0 = m). Requires the full characteristic, i.e. the
/// final e equal to 1; throws std::domain_error otherwise.
std::vector<PuiseuxPair> puiseux_pairs(const BranchCharacteristic& c);

/// Per-monomial report for the quasi-ordinary reading of the result.
struct QuasiOrdinaryMonomial {
  ExponentVector exponent;
  bool minimal_in_support;  ///< minimal in the support for the componentwise order
  bool irredundant;         ///< removing it shrinks the generated subgroup
};

struct QuasiOrdinaryResult {
  DistinguishedResult result;
  std::vector<QuasiOrdinaryMonomial> monomials;
};

/// Distinguished exponents under a graded ordering, plus the two
/// characteristic-monomial reports (minimality in the support and
/// irredundancy as generators). Throws std::invalid_argument for a
/// non-graded ordering.
QuasiOrdinaryResult quasi_ordinary_monomials(const PuiseuxSeries& z, MonomialOrdering ord);

}  // namespace puiseux
