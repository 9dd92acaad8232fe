#pragma once

// Exact rationals and the representation-theory predicates used to decide
// which SU(3) x SU(2) x U(1) contractions exist.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgen {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or "p" for integers.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// U(1) hypercharge label.
using Hypercharge = Rational;

class MalformedCharge : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Reduce numerator/denominator; the sign ends up on the numerator.
/// Throws MalformedCharge on a zero denominator.
Hypercharge reduce_fraction(std::int64_t numerator, std::int64_t denominator);

enum class SU3Rep { Singlet, Triplet, AntiTriplet };
enum class SU2Rep { Singlet, Doublet, Triplet };
enum class GaugeGroup { SU3, SU2, U1 };

/// Number of fundamental index slots: 3bar is two antisymmetric slots,
/// the SU(2) triplet two symmetric slots.
constexpr int slot_count(SU3Rep r) {
  switch (r) {
    case SU3Rep::Singlet: return 0;
    case SU3Rep::Triplet: return 1;
    case SU3Rep::AntiTriplet: return 2;
  }
  return 0;
}

constexpr int slot_count(SU2Rep r) {
  switch (r) {
    case SU2Rep::Singlet: return 0;
    case SU2Rep::Doublet: return 1;
    case SU2Rep::Triplet: return 2;
  }
  return 0;
}

constexpr int epsilon_arity(GaugeGroup g) {
  return g == GaugeGroup::SU3 ? 3 : g == GaugeGroup::SU2 ? 2 : 0;
}

constexpr SU3Rep conjugate(SU3Rep r) {
  return r == SU3Rep::Triplet       ? SU3Rep::AntiTriplet
         : r == SU3Rep::AntiTriplet ? SU3Rep::Triplet
                                    : SU3Rep::Singlet;
}

/// One epsilon symbol: the positions (into the input multiset) of the
/// objects whose slots it absorbs, sorted. A position repeats when two
/// slots of the same object enter the same epsilon.
using EpsilonGroup = std::vector<int>;

/// A full contraction: every slot absorbed by exactly one epsilon.
/// Groups are sorted lexicographically, which is the dedup key.
using EpsilonPattern = std::vector<EpsilonGroup>;

/// All ways to absorb every SU(3) slot of `reps` into 3-index epsilons.
/// An empty result means no singlet exists; a multiset with no slots
/// yields a single empty pattern.
std::vector<EpsilonPattern> su3_singlet_patterns(const std::vector<SU3Rep>& reps);

/// As above for SU(2) with 2-index epsilons. An epsilon holding both
/// symmetric slots of one triplet vanishes and is never produced.
std::vector<EpsilonPattern> su2_singlet_patterns(const std::vector<SU2Rep>& reps);

/// Shared engine: `slots[i]` is the slot count of object i, `arity` the
/// epsilon size, `symmetric_pairs` whether a 2-slot object's pair is
/// symmetric (and so may not share an epsilon).
std::vector<EpsilonPattern> epsilon_partitions(const std::vector<int>& slots, int arity,
                                               bool symmetric_pairs);

}  // namespace lgen
