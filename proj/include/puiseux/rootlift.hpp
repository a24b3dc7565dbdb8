#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "puiseux/numeric.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

/// Division by a non-invertible element of the extension ring.
class extension_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The coefficient ring Q[y]/(y^n - a): y stands for a chosen n-th root of
/// the nonzero rational a.
struct ExtContext {
  long n = 1;
  Rat a = 1;
  bool operator==(const ExtContext& other) const { return n == other.n && a == other.a; }
};

/// Residue of degree < n in the extension ring. Value type; scalars combine
/// only within one context.
class ExtScalar {
 public:
  static ExtScalar from_rational(const ExtContext& ctx, Rat value);
  static ExtScalar generator(const ExtContext& ctx);  // y itself (= a when n is 1)

  const ExtContext& context() const { return ctx_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Rat as_rational() const;  // requires is_rational()

  ExtScalar operator+(const ExtScalar& other) const;
  ExtScalar operator-(const ExtScalar& other) const;
  ExtScalar operator-() const;
  ExtScalar operator*(const ExtScalar& other) const;

  /// Extended Euclid against y^n - a; throws extension_error when the
  /// element shares a factor with the modulus (cannot happen for nonzero
  /// elements when y^n - a is irreducible).
  ExtScalar inverse() const;

  ExtScalar pow(long k) const;  // k >= 0

  bool operator==(const ExtScalar& other) const;

  /// "0", "1/2", "y", "2*y^2", "1 + 1/2*y - y^2"
  std::string to_string() const;

 private:
  ExtScalar(ExtContext ctx, std::vector<Rat> coeffs);
  void reduce();

  ExtContext ctx_;
  std::vector<Rat> coeffs_;  // ascending powers of y, trimmed, degree < n
};

/// Sparse univariate power series over the rationals: exponent -> nonzero
/// coefficient, exponents nonnegative.
using UniSeries = std::map<long, Rat>;

/// Converts a one-variable series with integral exponents (every numerator
/// divisible by the denominator); run normalize_denominator first for
/// series like T^(2/2).
UniSeries uniseries_from_puiseux(const PuiseuxSeries& z);

/// Truncated n-th root: terms live at exponents mu in lambda0/n + N, so the
/// n-th power has integer exponents throughout.
struct TruncatedRoot {
  long n = 1;
  long lambda0 = 0;                   ///< order of the input series
  ExtContext context;                 ///< ring holding the coefficients
  bool extension_used = false;        ///< leading root adjoined as y (no exact rational root)
  std::map<Rat, ExtScalar> terms;     ///< exponent mu -> coefficient
  long achieved_order = 0;            ///< nu(root^n - input) >= achieved_order
  std::vector<long> lambda_sequence;  ///< lambda_0 < lambda_1 < ... (defect orders)
};

/// Iterative lift: start from an n-th root of the leading coefficient
/// (exact rational if one exists, else the symbolic y), then repeatedly
/// read the initial form of root^n - zeta at order lambda_{s+1} and cancel
/// it with a term at exponent lambda_{s+1} - lambda0 + lambda0/n, until the
/// defect order reaches target_order. Work is truncated beyond
/// target_order + lambda0.
TruncatedRoot nth_root_series(const UniSeries& zeta, long n, long target_order);

/// True iff root^n agrees with zeta below `order` and the exponents of
/// root^n are all nonnegative integers. Uses the exact (untruncated)
/// expansion of root^n.
bool verify_root(const TruncatedRoot& root, const UniSeries& zeta, long order);

/// Exact rational n-th root when one exists (sign-aware; even n needs a
/// nonnegative value).
std::optional<Rat> exact_nth_root(const Rat& value, long n);

}  // namespace puiseux
