#include "puiseux/classical.hpp"

#include <stdexcept>
#include <utility>

#include "puiseux/modgroup.hpp"

namespace puiseux {

BranchCharacteristic make_branch_characteristic(Int m, std::vector<Int> betas) {
  if (m <= 0) throw std::invalid_argument("m must be positive");
  BranchCharacteristic c;
  c.m = std::move(m);
  c.betas = std::move(betas);
  Int e = c.m;
  for (std::size_t i = 0; i < c.betas.size(); ++i) {
    if (c.betas[i] <= 0) throw std::invalid_argument("betas must be positive");
    if (i > 0 && c.betas[i] <= c.betas[i - 1]) {
      throw std::invalid_argument("betas must be strictly increasing");
    }
    e = int_gcd(e, c.betas[i]);
    c.e_chain.push_back(e);
  }
  return c;
}

BranchCharacteristic characteristic_of_branch(const PuiseuxSeries& z) {
  if (z.var_count() != 1) throw std::domain_error("branch characteristic needs a one-variable series");
  if (z.is_zero()) throw std::domain_error("branch characteristic needs a nonzero series");

  // For r = 1 every ordering is the natural order on N.
  DistinguishedResult result = distinguished_exponents(z, MonomialOrdering::Lex);
  std::vector<Int> betas;
  betas.reserve(result.pairs.size());
  for (const auto& v : result.pairs) betas.push_back(v[0]);
  for (std::size_t i = 1; i < betas.size(); ++i) {
    if (betas[i] <= betas[i - 1]) throw std::logic_error("betas not strictly increasing");
  }
  return make_branch_characteristic(z.denominator(), std::move(betas));
}

std::vector<PuiseuxPair> puiseux_pairs(const BranchCharacteristic& c) {
  // Validate against the defining recursion before trusting the chain.
  if (c.e_chain.size() != c.betas.size()) throw std::invalid_argument("e-chain length mismatch");
  Int e_prev = c.m;
  for (std::size_t i = 0; i < c.betas.size(); ++i) {
    if (c.e_chain[i] != int_gcd(e_prev, c.betas[i])) {
      throw std::invalid_argument("e-chain does not match its gcd recursion");
    }
    e_prev = c.e_chain[i];
  }
  const Int e_final = c.e_chain.empty() ? c.m : c.e_chain.back();
  if (e_final != 1) {
    throw std::domain_error("incomplete characteristic: final gcd is " + e_final.str() +
                            ", expected 1 (is the series in minimal denominator form?)");
  }

  std::vector<PuiseuxPair> pairs;
  pairs.reserve(c.betas.size());
  e_prev = c.m;
  for (std::size_t i = 0; i < c.betas.size(); ++i) {
    const Int& e = c.e_chain[i];
    PuiseuxPair pair{c.betas[i] / e, e_prev / e};
    if (pair.q < 2 || int_gcd(pair.p, pair.q) != 1) {
      throw std::invalid_argument("betas do not form a characteristic sequence");
    }
    pairs.push_back(std::move(pair));
    e_prev = e;
  }
  return pairs;
}

QuasiOrdinaryResult quasi_ordinary_monomials(const PuiseuxSeries& z, MonomialOrdering ord) {
  if (!is_graded(ord)) {
    throw std::invalid_argument("quasi-ordinary characteristic monomials need a graded ordering");
  }
  QuasiOrdinaryResult out;
  out.result = distinguished_exponents(z, ord);

  const auto support = z.support();
  const auto& pairs = out.result.pairs;
  const std::size_t full_order = span(pairs, out.result.m, out.result.rank).order();

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    QuasiOrdinaryMonomial entry{pairs[i], true, false};
    for (const auto& w : support) {
      if (w != pairs[i] && componentwise_leq(w, pairs[i])) {
        entry.minimal_in_support = false;
        break;
      }
    }
    std::vector<ExponentVector> rest;
    rest.reserve(pairs.size() - 1);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (j != i) rest.push_back(pairs[j]);
    }
    entry.irredundant = span(rest, out.result.m, out.result.rank).order() < full_order;
    out.monomials.push_back(std::move(entry));
  }
  return out;
}

}  // namespace puiseux
