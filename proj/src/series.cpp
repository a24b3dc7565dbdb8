#include "puiseux/series.hpp"

#include <stdexcept>
#include <utility>

namespace puiseux {

PuiseuxSeries::PuiseuxSeries(int var_count, Int denominator)
    : var_count_(var_count), denominator_(std::move(denominator)) {
  if (var_count_ < 1) throw std::invalid_argument("series needs at least one variable");
  if (denominator_ <= 0) throw std::invalid_argument("series denominator must be positive");
}

PuiseuxSeries::PuiseuxSeries(int var_count, Int denominator,
                             std::map<ExponentVector, Rat> coefficients)
    : PuiseuxSeries(var_count, std::move(denominator)) {
  for (auto it = coefficients.begin(); it != coefficients.end();) {
    if (it->first.size() != var_count_) {
      throw std::invalid_argument("exponent length does not match variable count");
    }
    it = (it->second == 0) ? coefficients.erase(it) : std::next(it);
  }
  coefficients_ = std::move(coefficients);
}

PuiseuxSeries PuiseuxSeries::from_support(int var_count, Int denominator,
                                          const std::vector<ExponentVector>& support) {
  std::map<ExponentVector, Rat> coeffs;
  for (const auto& v : support) coeffs[v] = 1;
  return PuiseuxSeries(var_count, std::move(denominator), std::move(coeffs));
}

std::vector<ExponentVector> PuiseuxSeries::support() const {
  std::vector<ExponentVector> out;
  out.reserve(coefficients_.size());
  for (const auto& [v, c] : coefficients_) out.push_back(v);
  return out;
}

Rat PuiseuxSeries::coefficient(const ExponentVector& v) const {
  auto it = coefficients_.find(v);
  return it == coefficients_.end() ? Rat(0) : it->second;
}

PuiseuxSeries PuiseuxSeries::with_term(const ExponentVector& v, const Rat& c) const {
  auto coeffs = coefficients_;
  if (auto it = coeffs.find(v); it != coeffs.end()) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  } else if (c != 0) {
    coeffs.emplace(v, c);
  }
  return PuiseuxSeries(var_count_, denominator_, std::move(coeffs));
}

bool PuiseuxSeries::operator==(const PuiseuxSeries& other) const {
  return var_count_ == other.var_count_ && denominator_ == other.denominator_ &&
         coefficients_ == other.coefficients_;
}

}  // namespace puiseux
