#include "puiseux/exponent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace puiseux {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

ExponentVector::ExponentVector(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("exponent vector must have length >= 1");
  for (const Int& e : entries_) {
    if (e < 0) throw std::invalid_argument("exponent vector entries must be nonnegative");
  }
}

ExponentVector::ExponentVector(std::initializer_list<Int> entries)
    : ExponentVector(std::vector<Int>(entries)) {}

ExponentVector ExponentVector::zero(int length) {
  if (length < 1) throw std::invalid_argument("exponent vector must have length >= 1");
  return ExponentVector(std::vector<Int>(static_cast<std::size_t>(length), Int(0)));
}

Int ExponentVector::total_degree() const {
  Int sum = 0;
  for (const Int& e : entries_) sum += e;
  return sum;
}

ExponentVector ExponentVector::reduced_mod(const Int& m) const {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  std::vector<Int> out;
  out.reserve(entries_.size());
  for (const Int& e : entries_) out.push_back(e % m);
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::divided_by(const Int& d) const {
  if (d <= 0) throw std::invalid_argument("divisor must be positive");
  std::vector<Int> out;
  out.reserve(entries_.size());
  for (const Int& e : entries_) {
    if (e % d != 0) throw std::invalid_argument("entry not divisible by " + d.str());
    out.push_back(e / d);
  }
  return ExponentVector(std::move(out));
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e == 0; });
}

bool ExponentVector::operator<(const ExponentVector& other) const {
  return std::lexicographical_compare(entries_.begin(), entries_.end(),
                                      other.entries_.begin(), other.entries_.end());
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

bool componentwise_leq(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent vectors differ in length");
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool is_graded(MonomialOrdering ord) { return ord != MonomialOrdering::Lex; }

MonomialOrdering ordering_from_name(const std::string& name) {
  if (name == "lex") return MonomialOrdering::Lex;
  if (name == "grlex") return MonomialOrdering::GrLex;
  if (name == "grevlex") return MonomialOrdering::GrevLex;
  throw std::invalid_argument("unknown monomial ordering: " + name);
}

std::string ordering_name(MonomialOrdering ord) {
  switch (ord) {
    case MonomialOrdering::Lex: return "lex";
    case MonomialOrdering::GrLex: return "grlex";
    case MonomialOrdering::GrevLex: return "grevlex";
  }
  throw std::logic_error("unreachable");
}

namespace {

std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b,
                             MonomialOrdering ord) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent vectors differ in length");
  switch (ord) {
    case MonomialOrdering::Lex:
      return lex_compare(a, b);
    case MonomialOrdering::GrLex: {
      const Int da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
      return lex_compare(a, b);
    }
    case MonomialOrdering::GrevLex: {
      const Int da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
      // Ties break on the rightmost difference; the larger entry there loses.
      for (int i = a.size() - 1; i >= 0; --i) {
        if (a[i] != b[i]) {
          return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
      }
      return std::strong_ordering::equal;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace puiseux
