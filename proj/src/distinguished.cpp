#include "puiseux/distinguished.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "puiseux/intmatrix.hpp"
#include "puiseux/modgroup.hpp"

namespace puiseux {

PuiseuxSeries normalize_denominator(const PuiseuxSeries& z) {
  if (z.is_zero()) throw std::domain_error("cannot normalize the zero series");
  Int g = z.denominator();
  for (const auto& [v, c] : z.coefficients()) {
    for (int i = 0; i < v.size(); ++i) g = int_gcd(g, v[i]);
    if (g == 1) break;
  }
  if (g == 1) return z;
  std::map<ExponentVector, Rat> coeffs;
  for (const auto& [v, c] : z.coefficients()) coeffs.emplace(v.divided_by(g), c);
  return PuiseuxSeries(z.var_count(), z.denominator() / g, std::move(coeffs));
}

DistinguishedResult distinguished_exponents(const std::vector<ExponentVector>& support,
                                            const Int& m, MonomialOrdering ord) {
  if (m <= 0) throw std::invalid_argument("denominator m must be positive");
  std::set<ExponentVector> remaining(support.begin(), support.end());
  if (remaining.empty()) throw std::domain_error("distinguished exponents need a nonempty support");
  const int rank = remaining.begin()->size();
  for (const auto& v : remaining) {
    if (v.size() != rank) throw std::invalid_argument("support vectors differ in length");
  }

  DistinguishedResult result;
  result.m = m;
  result.rank = rank;

  IntMatrix matrix = IntMatrix::scaled_identity(rank, m);
  Int current_gcd = gcd_minors(matrix, rank);  // = m^r
  result.gcd_chain.push_back(current_gcd);

  for (;;) {
    // Drop exponents whose column leaves the r-minor gcd unchanged: they
    // already lie in the lattice spanned by the matrix columns.
    for (auto it = remaining.begin(); it != remaining.end();) {
      if (gcd_minors(matrix.with_appended_column(*it), rank) == current_gcd) {
        it = remaining.erase(it);
      } else {
        ++it;
      }
    }
    if (remaining.empty()) break;

    auto chosen = remaining.begin();
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      if (compare(*it, *chosen, ord) == std::strong_ordering::less) chosen = it;
    }
    result.pairs.push_back(*chosen);
    matrix = matrix.with_appended_column(*chosen);
    current_gcd = gcd_minors(matrix, rank);
    result.gcd_chain.push_back(current_gcd);
  }

  // m*I_r keeps every matrix in the chain at full rank.
  if (current_gcd == 0) throw std::logic_error("r-minor gcd vanished");
  result.degree = int_pow(m, static_cast<unsigned>(rank)) / current_gcd;
  return result;
}

DistinguishedResult distinguished_exponents(const PuiseuxSeries& z, MonomialOrdering ord) {
  return distinguished_exponents(z.support(), z.denominator(), ord);
}

Int extension_degree(const std::vector<ExponentVector>& exponents, const Int& m) {
  if (m <= 0) throw std::invalid_argument("denominator m must be positive");
  if (exponents.empty()) return 1;
  const int rank = exponents.front().size();
  IntMatrix matrix = IntMatrix::scaled_identity(rank, m);
  for (const auto& v : exponents) matrix = matrix.with_appended_column(v);
  return int_pow(m, static_cast<unsigned>(rank)) / gcd_minors(matrix, rank);
}

bool verify_corollary(const std::vector<ExponentVector>& support,
                      const std::vector<ExponentVector>& generators, const Int& m) {
  if (support.empty()) return true;
  const int rank = support.front().size();
  const ModSubgroup lattice = span(generators, m, rank);
  for (const auto& v : support) {
    if (!lattice.contains(v)) return false;
  }
  return true;
}

}  // namespace puiseux
