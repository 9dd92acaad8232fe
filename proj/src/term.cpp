#include "lgen/term.hpp"

#include <set>
#include <string>

namespace lgen {

GroupSet charged_groups(const Field& f) {
  return GroupSet{f.su3 != SU3Rep::Singlet, f.su2 != SU2Rep::Singlet, !f.u1.is_zero()};
}

std::optional<int> object_id(const TermObject& o) {
  if (const auto* f = std::get_if<Field>(&o)) return f->id;
  if (const auto* d = std::get_if<Derivative>(&o)) return d->id;
  if (const auto* s = std::get_if<SigmaBar>(&o)) return s->id;
  return std::nullopt;
}

void set_object_id(TermObject& o, std::optional<int> id) {
  if (auto* f = std::get_if<Field>(&o)) f->id = id;
  else if (auto* d = std::get_if<Derivative>(&o)) d->id = id;
  else if (auto* s = std::get_if<SigmaBar>(&o)) s->id = id;
}

void require_resolved_ids(const Term& t) {
  std::set<int> present;
  for (const TermObject& o : t.objects)
    if (auto id = object_id(o)) present.insert(*id);
  for (const ContractionEntry& e : t.contractions)
    for (int id : e.ids)
      if (!present.count(id))
        throw DanglingIdError("contraction references ID" + std::to_string(id) +
                              " which no object carries");
}

std::vector<Field> fields_of(const Term& t) {
  std::vector<Field> out;
  for (const TermObject& o : t.objects)
    if (const auto* f = std::get_if<Field>(&o)) out.push_back(*f);
  return out;
}

int derivative_count(const Term& t) {
  int n = 0;
  for (const TermObject& o : t.objects) n += std::holds_alternative<Derivative>(o);
  return n;
}

Rational mass_dimension(const Term& t) {
  return mass_dimension(fields_of(t)) + Rational(derivative_count(t));
}

Hypercharge hypercharge_sum(const Term& t) {
  Hypercharge y;
  for (const TermObject& o : t.objects)
    if (const auto* f = std::get_if<Field>(&o)) y += f->u1;
  return y;
}

bool is_interaction(const Term& t) { return derivative_count(t) == 0 && fields_of(t).size() >= 3; }

bool is_trilinear(const Term& t) { return derivative_count(t) == 0 && fields_of(t).size() == 3; }

void relabel_ids(Term& t, const std::vector<int>& mapping) {
  auto remap = [&](int id) {
    return id >= 0 && id < static_cast<int>(mapping.size()) ? mapping[id] : id;
  };
  for (TermObject& o : t.objects)
    if (auto id = object_id(o)) set_object_id(o, remap(*id));
  for (ContractionEntry& e : t.contractions)
    for (int& id : e.ids) id = remap(id);
}

Term hermitian_conjugate(const Term& t) {
  Term c = t;
  for (TermObject& o : c.objects)
    if (auto* f = std::get_if<Field>(&o)) *f = conjugate(*f);
  return c;
}

}  // namespace lgen
