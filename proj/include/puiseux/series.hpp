#pragma once

#include <map>
#include <vector>

#include "puiseux/exponent.hpp"
#include "puiseux/numeric.hpp"

namespace puiseux {

/// Sparse Puiseux series: sum of c_v * X_1^(v_1/m) ... X_r^(v_r/m) over the
/// support, with a single shared denominator m. Immutable after
/// construction; stored coefficients are never zero, so the key set of
/// coefficients() is exactly the support.
class PuiseuxSeries {
 public:
  /// Zero series in r variables with denominator m.
  PuiseuxSeries(int var_count, Int denominator);

  /// Zero coefficients in `coefficients` are dropped; keys must have
  /// length var_count.
  PuiseuxSeries(int var_count, Int denominator, std::map<ExponentVector, Rat> coefficients);

  /// Coefficient-free entry point: every listed exponent gets coefficient 1.
  static PuiseuxSeries from_support(int var_count, Int denominator,
                                    const std::vector<ExponentVector>& support);

  int var_count() const { return var_count_; }
  const Int& denominator() const { return denominator_; }
  const std::map<ExponentVector, Rat>& coefficients() const { return coefficients_; }

  bool is_zero() const { return coefficients_.empty(); }

  /// The support (exponent tuples with nonzero coefficient), in container order.
  std::vector<ExponentVector> support() const;

  /// Coefficient at v, zero when absent.
  Rat coefficient(const ExponentVector& v) const;

  /// New series with `c * X^v` merged in; a cancelled term drops out.
  PuiseuxSeries with_term(const ExponentVector& v, const Rat& c) const;

  bool operator==(const PuiseuxSeries& other) const;

 private:
  int var_count_;
  Int denominator_;
  std::map<ExponentVector, Rat> coefficients_;
};

}  // namespace puiseux
