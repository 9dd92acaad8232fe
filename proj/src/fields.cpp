#include "lgen/fields.hpp"

#include <set>

namespace lgen {

Field make_scalar(SU3Rep su3, SU2Rep su2, Hypercharge y) {
  Field f;
  f.spin = Spin::Scalar;
  f.su3 = su3;
  f.su2 = su2;
  f.u1 = y;
  return f;
}

Field make_fermion(Helicity h, SU3Rep su3, SU2Rep su2, Hypercharge y) {
  Field f = make_scalar(su3, su2, y);
  f.spin = Spin::Fermion;
  f.helicity = h;
  return f;
}

Field conjugate(const Field& f) {
  Field c = f;
  c.su3 = conjugate(f.su3);
  c.u1 = -f.u1;
  if (f.u1_spelling) c.u1_spelling = ChargeSpelling{-f.u1_spelling->num, f.u1_spelling->den};
  if (f.is_fermion()) c.helicity = f.helicity == Helicity::Left ? Helicity::Right : Helicity::Left;
  c.daggered = !f.daggered;
  return c;
}

bool same_object(const Field& a, const Field& b) {
  Field x = a, y = b;
  x.id.reset();
  y.id.reset();
  return x == y;
}

Field underlying(const Field& f) {
  Field u = f.daggered ? conjugate(f) : f;
  u.id.reset();
  return u;
}

Rational mass_dimension(const Field& f) { return f.is_scalar() ? Rational(1) : Rational(3, 2); }

Rational mass_dimension(const std::vector<Field>& fields) {
  Rational total;
  for (const Field& f : fields) total += mass_dimension(f);
  return total;
}

std::vector<Hypercharge> charge_set(ChargePolicy policy) {
  std::set<Hypercharge> charges{Hypercharge(0)};
  const int lowest = policy == ChargePolicy::Full ? -9 : 1;
  for (int p = lowest; p <= 9; ++p)
    for (int q = 1; q <= 9; ++q)
      if (p != 0) charges.insert(reduce_fraction(p, q));
  return {charges.begin(), charges.end()};
}

std::vector<Field> enumerate_field_universe(ChargePolicy policy) {
  const std::vector<Hypercharge> charges = charge_set(policy);
  std::vector<Field> out;
  out.reserve(27 * charges.size());
  const SU3Rep su3s[] = {SU3Rep::Singlet, SU3Rep::Triplet, SU3Rep::AntiTriplet};
  const SU2Rep su2s[] = {SU2Rep::Singlet, SU2Rep::Doublet, SU2Rep::Triplet};
  for (int kind = 0; kind < 3; ++kind)
    for (SU3Rep c : su3s)
      for (SU2Rep w : su2s)
        for (const Hypercharge& y : charges) {
          if (kind == 0)
            out.push_back(make_scalar(c, w, y));
          else
            out.push_back(make_fermion(kind == 1 ? Helicity::Left : Helicity::Right, c, w, y));
        }
  return out;
}

std::string to_string(const Field& f) {
  std::string s = f.is_scalar() ? "scalar" : (f.helicity == Helicity::Left ? "fermionL" : "fermionR");
  s += "(";
  s += f.su3 == SU3Rep::Singlet ? "1" : f.su3 == SU3Rep::Triplet ? "3" : "3bar";
  s += ",";
  s += f.su2 == SU2Rep::Singlet ? "1" : f.su2 == SU2Rep::Doublet ? "2" : "3";
  s += ",";
  s += f.u1_spelling ? std::to_string(f.u1_spelling->num) + "/" + std::to_string(f.u1_spelling->den)
                     : f.u1.str();
  s += ")";
  if (f.daggered) s += "^dag";
  if (f.id) s += "#" + std::to_string(*f.id);
  return s;
}

}  // namespace lgen
