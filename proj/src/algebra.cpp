#include "lgen/algebra.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <set>

namespace lgen {

namespace {

void normalize(std::int64_t& num, std::int64_t& den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) throw MalformedCharge("rational with zero denominator");
  normalize(num_, den_);
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t lhs_scale = rhs.den_ / g;
  num_ = num_ * lhs_scale + rhs.num_ * (den_ / g);
  den_ = den_ * lhs_scale;
  normalize(num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  const std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_ < 0 ? -rhs.num_ : rhs.num_, den_);
  const std::int64_t a = g1 ? num_ / g1 : num_;
  const std::int64_t d2 = g1 ? rhs.den_ / g1 : rhs.den_;
  const std::int64_t b = g2 ? rhs.num_ / g2 : rhs.num_;
  const std::int64_t d1 = g2 ? den_ / g2 : den_;
  num_ = a * b;
  den_ = d1 * d2;
  normalize(num_, den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero rational");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Hypercharge reduce_fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw MalformedCharge("hypercharge with zero denominator");
  return Rational(numerator, denominator);
}

namespace {

struct PartitionSearch {
  int arity;
  bool symmetric_pairs;
  std::vector<int> remaining;
  EpsilonPattern current;
  std::set<EpsilonPattern> found;

  void run() {
    auto first = std::find_if(remaining.begin(), remaining.end(), [](int r) { return r > 0; });
    if (first == remaining.end()) {
      EpsilonPattern sorted = current;
      std::sort(sorted.begin(), sorted.end());
      found.insert(std::move(sorted));
      return;
    }
    const int lead = static_cast<int>(first - remaining.begin());
    --remaining[lead];
    EpsilonGroup group{lead};
    extend(group, lead);
    ++remaining[lead];
  }

  // Adds companions with non-decreasing object index.
  void extend(EpsilonGroup& group, int from) {
    if (static_cast<int>(group.size()) == arity) {
      current.push_back(group);
      run();
      current.pop_back();
      return;
    }
    for (int obj = from; obj < static_cast<int>(remaining.size()); ++obj) {
      if (remaining[obj] == 0) continue;
      if (symmetric_pairs && std::find(group.begin(), group.end(), obj) != group.end()) continue;
      --remaining[obj];
      group.push_back(obj);
      extend(group, obj);
      group.pop_back();
      ++remaining[obj];
    }
  }
};

}  // namespace

std::vector<EpsilonPattern> epsilon_partitions(const std::vector<int>& slots, int arity,
                                               bool symmetric_pairs) {
  const int total = std::accumulate(slots.begin(), slots.end(), 0);
  if (arity <= 0 || total % arity != 0) return {};
  PartitionSearch search{arity, symmetric_pairs, slots, {}, {}};
  search.run();
  return {search.found.begin(), search.found.end()};
}

std::vector<EpsilonPattern> su3_singlet_patterns(const std::vector<SU3Rep>& reps) {
  std::vector<int> slots;
  slots.reserve(reps.size());
  for (SU3Rep r : reps) slots.push_back(slot_count(r));
  return epsilon_partitions(slots, 3, false);
}

std::vector<EpsilonPattern> su2_singlet_patterns(const std::vector<SU2Rep>& reps) {
  std::vector<int> slots;
  slots.reserve(reps.size());
  for (SU2Rep r : reps) slots.push_back(slot_count(r));
  return epsilon_partitions(slots, 2, true);
}

}  // namespace lgen
