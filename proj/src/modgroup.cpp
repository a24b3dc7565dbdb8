#include "puiseux/modgroup.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

namespace puiseux {

namespace {

constexpr long kEnumerationLimit = 4'000'000;

void check_desk_scale(const Int& m, int rank) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (int_pow(m, static_cast<unsigned>(rank)) > kEnumerationLimit) {
    throw std::domain_error("subgroup enumeration needs m^r <= 4e6");
  }
}

void check_lengths(const std::vector<ExponentVector>& vs, int rank) {
  for (const auto& v : vs) {
    if (v.size() != rank) throw std::invalid_argument("vector length does not match rank");
  }
}

ExponentVector add_mod(const ExponentVector& a, const ExponentVector& b, const Int& m) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out.push_back((a[i] + b[i]) % m);
  return ExponentVector(std::move(out));
}

}  // namespace

ModSubgroup::ModSubgroup(Int m, int rank, std::set<ExponentVector> elements)
    : m_(std::move(m)), rank_(rank), elements_(std::move(elements)) {
  if (m_ <= 0) throw std::invalid_argument("modulus must be positive");
  if (rank_ < 1) throw std::invalid_argument("rank must be positive");
  for (const auto& v : elements_) {
    if (v.size() != rank_) throw std::invalid_argument("element length does not match rank");
  }
}

bool ModSubgroup::contains(const ExponentVector& v) const {
  if (v.size() != rank_) throw std::invalid_argument("vector length does not match rank");
  return elements_.count(v.reduced_mod(m_)) > 0;
}

bool ModSubgroup::is_closed_under_addition() const {
  if (elements_.count(ExponentVector::zero(rank_)) == 0) return false;
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (elements_.count(add_mod(a, b, m_)) == 0) return false;
    }
  }
  return true;
}

bool ModSubgroup::operator==(const ModSubgroup& other) const {
  return m_ == other.m_ && rank_ == other.rank_ && elements_ == other.elements_;
}

ModSubgroup span(const std::vector<ExponentVector>& generators, const Int& m, int rank) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  check_desk_scale(m, rank);
  check_lengths(generators, rank);

  std::vector<ExponentVector> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.reduced_mod(m));

  std::set<ExponentVector> elements{ExponentVector::zero(rank)};
  std::deque<ExponentVector> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    ExponentVector x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      ExponentVector y = add_mod(x, g, m);
      if (elements.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return ModSubgroup(m, rank, std::move(elements));
}

ModSubgroup stabilizer(const std::vector<ExponentVector>& vectors, const Int& m, int rank) {
  check_desk_scale(m, rank);
  check_lengths(vectors, rank);

  std::vector<ExponentVector> reduced;
  reduced.reserve(vectors.size());
  for (const auto& v : vectors) reduced.push_back(v.reduced_mod(m));

  std::set<ExponentVector> elements;
  std::vector<Int> candidate(static_cast<std::size_t>(rank), Int(0));
  for (;;) {
    bool annihilates = true;
    for (const auto& v : reduced) {
      Int dot = 0;
      for (int i = 0; i < rank; ++i) dot += candidate[static_cast<std::size_t>(i)] * v[i];
      if (dot % m != 0) {
        annihilates = false;
        break;
      }
    }
    if (annihilates) elements.insert(ExponentVector(candidate));

    // odometer over [0, m)^rank
    int pos = rank - 1;
    while (pos >= 0) {
      if (++candidate[static_cast<std::size_t>(pos)] < m) break;
      candidate[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return ModSubgroup(m, rank, std::move(elements));
}

}  // namespace puiseux
