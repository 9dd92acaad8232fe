#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lgen/algebra.hpp"

namespace lgen {

enum class Spin { Scalar, Fermion };
enum class Helicity { Left, Right };

/// A hypercharge exactly as written when it is not in lowest terms
/// (out-of-distribution inputs such as 2/4). The reduced value lives in
/// Field::u1; this only controls how the charge is spelled.
struct ChargeSpelling {
  int num = 0;
  int den = 1;
  friend auto operator<=>(const ChargeSpelling&, const ChargeSpelling&) = default;
};

/// A matter field, or one occurrence of it inside a term. Quantum numbers
/// are the ones the object actually carries: a daggered field stores the
/// conjugated representations next to daggered = true.
struct Field {
  Spin spin = Spin::Scalar;
  Helicity helicity = Helicity::Left;  // ignored (kept Left) for scalars
  SU3Rep su3 = SU3Rep::Singlet;
  SU2Rep su2 = SU2Rep::Singlet;
  Hypercharge u1;
  std::optional<ChargeSpelling> u1_spelling;
  bool daggered = false;
  std::optional<int> id;

  bool is_fermion() const { return spin == Spin::Fermion; }
  bool is_scalar() const { return spin == Spin::Scalar; }

  friend auto operator<=>(const Field&, const Field&) = default;
};

Field make_scalar(SU3Rep su3, SU2Rep su2, Hypercharge y);
Field make_fermion(Helicity h, SU3Rep su3, SU2Rep su2, Hypercharge y);

/// Hermitian conjugate: 3 <-> 3bar, Y -> -Y, L <-> R, dagger toggled.
/// SU(2) reps are unchanged. An involution.
Field conjugate(const Field& f);

/// Same field up to id tag.
bool same_object(const Field& a, const Field& b);

/// The undaggered field this occurrence comes from (id dropped).
Field underlying(const Field& f);

/// Standard 4D scaling dimension: 1 for scalars, 3/2 for Weyl fermions.
Rational mass_dimension(const Field& f);
Rational mass_dimension(const std::vector<Field>& fields);

/// Undotted spinor index: left-handed, or a daggered right-handed field.
inline bool is_undotted(const Field& f) { return f.is_fermion() && f.helicity == Helicity::Left; }

enum class ChargePolicy { Full, PositiveOnly };

/// Distinct reduced charges p/q with |p| <= 9 and 1 <= q <= 9, plus zero.
/// PositiveOnly keeps zero and the positive ones.
std::vector<Hypercharge> charge_set(ChargePolicy policy);

/// Every (spin/helicity, SU3, SU2, charge) combination: 27 * |charge set|.
std::vector<Field> enumerate_field_universe(ChargePolicy policy);

/// e.g. "fermionL(3bar,2,-1/3)", with a trailing "^dag" when daggered.
std::string to_string(const Field& f);

}  // namespace lgen
