#include "lgen/lagrangian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "lgen/canonical.hpp"
#include "lgen/invariance.hpp"
#include "lgen/tokenizer.hpp"

namespace lgen {

namespace {

using Sink = std::function<bool(Term)>;  // false stops the enumeration

Derivative derivative_for(const Field& f, int id) {
  const GroupSet g = charged_groups(f);
  return Derivative{g, id};
}

std::vector<SU3Rep> su3_reps(const std::vector<Field>& objs) {
  std::vector<SU3Rep> r;
  for (const Field& f : objs) r.push_back(f.su3);
  return r;
}

std::vector<SU2Rep> su2_reps(const std::vector<Field>& objs) {
  std::vector<SU2Rep> r;
  for (const Field& f : objs) r.push_back(f.su2);
  return r;
}

// Gauge entries for one SU(3) x SU(2) pattern. `ids[k]` is the id of the
// k-th field in the pattern; two-object patterns use the paired 2-id form.
void append_gauge_entries(std::vector<ContractionEntry>& out, const EpsilonPattern& p3,
                          const EpsilonPattern& p2, const std::vector<int>& ids,
                          bool pair_form) {
  for (const EpsilonGroup& g : p3) {
    ContractionEntry e{IndexGroup::SU3, {}};
    if (pair_form) {
      std::vector<int> distinct = g;
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int k : distinct) e.ids.push_back(ids[k]);
    } else {
      for (int k : g) e.ids.push_back(ids[k]);
    }
    out.push_back(std::move(e));
  }
  for (const EpsilonGroup& g : p2) {
    ContractionEntry e{IndexGroup::SU2, {}};
    for (int k : g) e.ids.push_back(ids[k]);
    out.push_back(std::move(e));
  }
}

// The unique pairing of a field with its own conjugate.
void append_self_pairing(Term& t, const Field& dag, const Field& plain, int dag_id,
                         int plain_id) {
  const auto p3 = su3_singlet_patterns({dag.su3, plain.su3});
  const auto p2 = su2_singlet_patterns({dag.su2, plain.su2});
  append_gauge_entries(t.contractions, p3.front(), p2.front(), {dag_id, plain_id}, true);
}

Field with_id(Field f, int id) {
  f.id = id;
  return f;
}

bool any_charged(const std::vector<Field>& fields, GaugeGroup g) {
  return std::any_of(fields.begin(), fields.end(), [g](const Field& f) {
    const GroupSet s = charged_groups(f);
    return g == GaugeGroup::SU3 ? s.su3 : g == GaugeGroup::SU2 ? s.su2 : s.u1;
  });
}

// One term per combined pattern that survives; the first `lorentz`
// entries are prepended unchanged.
bool emit_patterns(const std::vector<Field>& objs, const std::vector<ContractionEntry>& lorentz,
                   bool pair_form, const Sink& sink) {
  const auto p3s = su3_singlet_patterns(su3_reps(objs));
  if (p3s.empty()) return true;
  const auto p2s = su2_singlet_patterns(su2_reps(objs));
  if (p2s.empty()) return true;
  std::vector<int> ids(objs.size());
  std::iota(ids.begin(), ids.end(), 0);
  for (const auto& p3 : p3s)
    for (const auto& p2 : p2s) {
      Term t;
      for (std::size_t k = 0; k < objs.size(); ++k) t.objects.emplace_back(with_id(objs[k], ids[k]));
      t.contractions = lorentz;
      append_gauge_entries(t.contractions, p3, p2, ids, pair_form);
      if (is_identically_vanishing(t)) continue;
      if (!sink(std::move(t))) return false;
    }
  return true;
}

Hypercharge charge_sum(const std::vector<Field>& objs) {
  Hypercharge y;
  for (const Field& f : objs) y += f.u1;
  return y;
}

bool slot_counts_allowed(const std::vector<Field>& objs) {
  int n3 = 0, n2 = 0;
  for (const Field& f : objs) {
    n3 += slot_count(f.su3);
    n2 += slot_count(f.su2);
  }
  return n3 % 3 == 0 && n2 % 2 == 0;
}

// Undotted occurrence of each fermion: the field if left-handed, its
// conjugate otherwise.
std::vector<Field> undotted_fermions(const std::vector<Field>& fields) {
  std::vector<Field> out;
  for (const Field& f : fields)
    if (f.is_fermion()) out.push_back(is_undotted(f) ? f : conjugate(f));
  return out;
}

// phi_i and phi_i^dag for every scalar, undaggered first.
std::vector<Field> scalar_occurrences(const std::vector<Field>& fields) {
  std::vector<Field> out;
  for (const Field& f : fields)
    if (f.is_scalar()) {
      out.push_back(f);
      out.push_back(conjugate(f));
    }
  return out;
}

bool enumerate_mass(const std::vector<Field>& fields, const Sink& sink) {
  for (const Field& f : fields) {
    if (!f.is_scalar()) continue;
    Term t;
    t.objects = {with_id(conjugate(f), 0), with_id(f, 1)};
    append_self_pairing(t, conjugate(f), f, 0, 1);
    if (!sink(std::move(t))) return false;
  }
  const std::vector<Field> und = undotted_fermions(fields);
  for (std::size_t i = 0; i < und.size(); ++i)
    for (std::size_t j = i; j < und.size(); ++j) {
      std::vector<Field> objs{und[i], und[j]};
      if (!charge_sum(objs).is_zero()) continue;
      if (objs[1].daggered && !objs[0].daggered) std::swap(objs[0], objs[1]);
      if (!emit_patterns(objs, {{IndexGroup::Lorentz, {0, 1}}}, true, sink)) return false;
    }
  return true;
}

// Multisets of size k over `pool`, as non-decreasing index vectors.
void for_each_multiset(std::size_t pool, std::size_t k,
                       const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (pool == 0) return;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    if (!fn(idx)) return;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == pool - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < k; ++q) idx[q] = idx[pos - 1];
  }
}

bool enumerate_scalar_products(const std::vector<Field>& occ, std::size_t k, const Sink& sink) {
  bool go = true;
  for_each_multiset(occ.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<Field> objs;
    for (std::size_t i : idx) objs.push_back(occ[i]);
    if (!charge_sum(objs).is_zero() || !slot_counts_allowed(objs)) return true;
    go = emit_patterns(objs, {}, false, sink);
    return go;
  });
  return go;
}

bool enumerate_yukawa(const std::vector<Field>& fields, const Sink& sink) {
  const std::vector<Field> und = undotted_fermions(fields);
  const std::vector<Field> occ = scalar_occurrences(fields);
  for (std::size_t i = 0; i < und.size(); ++i)
    for (std::size_t j = i; j < und.size(); ++j)
      for (const Field& s : occ) {
        const std::vector<Field> objs{und[i], und[j], s};
        if (!charge_sum(objs).is_zero() || !slot_counts_allowed(objs)) continue;
        if (!emit_patterns(objs, {{IndexGroup::Lorentz, {0, 1}}}, false, sink)) return false;
      }
  return true;
}

bool enumerate_interactions(const std::vector<Field>& fields, const Sink& sink) {
  const std::vector<Field> occ = scalar_occurrences(fields);
  return enumerate_scalar_products(occ, 3, sink) && enumerate_yukawa(fields, sink) &&
         enumerate_scalar_products(occ, 4, sink);
}

// Drops terms equal to an earlier one modulo relabeling and h.c.
Sink deduplicating(const Sink& next, std::set<std::string>& seen) {
  return [&seen, next](Term t) {
    if (!seen.insert(canonical_key(t)).second) return true;
    return next(std::move(t));
  };
}

bool enumerate_all(const std::vector<Field>& fields, const Sink& sink) {
  const GaugeGroup groups[] = {GaugeGroup::SU3, GaugeGroup::SU2, GaugeGroup::U1};
  for (GaugeGroup g : groups)
    if (any_charged(fields, g) && !sink(build_gauge_kinetic(g))) return false;
  for (const Field& f : fields)
    if (!sink(f.is_scalar() ? build_scalar_kinetic(f) : build_fermion_kinetic(f))) return false;
  std::set<std::string> seen;
  const Sink dedup = deduplicating(sink, seen);
  return enumerate_mass(fields, dedup) && enumerate_interactions(fields, dedup);
}

void check_input(const std::vector<Field>& fields) {
  if (fields.empty() || fields.size() > kMaxFields)
    throw std::invalid_argument("field list must hold 1 to " + std::to_string(kMaxFields) +
                                " fields");
  std::set<Field> seen;
  for (const Field& f : fields) {
    if (f.daggered || f.id) throw std::invalid_argument("input fields must be bare and undaggered");
    Field key = f;
    key.u1_spelling.reset();
    if (!seen.insert(key).second) throw DuplicateFieldError("duplicate field " + to_string(f));
  }
}

void assign_random_ids(Term& t, std::mt19937_64& rng) {
  std::vector<int> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  relabel_ids(t, perm);
}

}  // namespace

Term build_scalar_kinetic(const Field& f) {
  if (!f.is_scalar()) throw std::invalid_argument("scalar kinetic term needs a scalar");
  const Field dag = conjugate(f);
  Term t;
  t.objects = {derivative_for(f, 0), with_id(dag, 1), derivative_for(f, 2), with_id(f, 3)};
  t.contractions.push_back({IndexGroup::Lorentz, {0, 2}});
  append_self_pairing(t, dag, f, 1, 3);
  return t;
}

Term build_fermion_kinetic(const Field& f) {
  if (!f.is_fermion()) throw std::invalid_argument("fermion kinetic term needs a fermion");
  const Field dag = conjugate(f);
  Term t;
  t.imaginary = true;
  t.objects = {with_id(dag, 0), SigmaBar{1}, derivative_for(f, 2), with_id(f, 3)};
  t.contractions.push_back({IndexGroup::Lorentz, {1, 2}});
  t.contractions.push_back({IndexGroup::Lorentz, {1, 0, 3}});
  append_self_pairing(t, dag, f, 0, 3);
  return t;
}

Term build_gauge_kinetic(GaugeGroup group) {
  GroupSet g;
  g.su3 = group == GaugeGroup::SU3;
  g.su2 = group == GaugeGroup::SU2;
  g.u1 = group == GaugeGroup::U1;
  Term t;
  t.minus = true;
  for (int pair = 0; pair < 2; ++pair) {
    t.objects.emplace_back(CommutatorOpen{});
    t.objects.emplace_back(Derivative{g, 2 * pair});
    t.objects.emplace_back(CommutatorSeparator{});
    t.objects.emplace_back(Derivative{g, 2 * pair + 1});
  }
  t.contractions.push_back({IndexGroup::Lorentz, {0, 2}});
  t.contractions.push_back({IndexGroup::Lorentz, {1, 3}});
  return t;
}

std::vector<Term> build_mass_terms(const std::vector<Field>& fields) {
  std::vector<Term> out;
  std::set<std::string> seen;
  enumerate_mass(fields, deduplicating(
                             [&out](Term t) {
                               out.push_back(std::move(t));
                               return true;
                             },
                             seen));
  return out;
}

std::vector<Term> enumerate_interaction_terms(const std::vector<Field>& fields) {
  std::vector<Term> out;
  std::set<std::string> seen;
  enumerate_interactions(fields, deduplicating(
                                     [&out](Term t) {
                                       out.push_back(std::move(t));
                                       return true;
                                     },
                                     seen));
  return out;
}

bool assemble_within_budget(const std::vector<Field>& fields, std::uint64_t rng_seed,
                            std::size_t token_budget, Lagrangian& out) {
  check_input(fields);
  out.terms.clear();
  std::mt19937_64 rng(rng_seed);
  std::size_t tokens = 2;  // SOS, EOS
  return enumerate_all(fields, [&](Term t) {
    assign_random_ids(t, rng);
    tokens += token_count(t) + ((out.terms.empty() || t.minus) ? 0 : 1);
    out.terms.push_back(std::move(t));
    return tokens < token_budget;
  });
}

bool has_trilinear_term(const std::vector<Field>& fields) {
  bool found = false;
  const Sink stop = [&found](Term) {
    found = true;
    return false;
  };
  enumerate_scalar_products(scalar_occurrences(fields), 3, stop) && enumerate_yukawa(fields, stop);
  return found;
}

Lagrangian assemble_lagrangian(const std::vector<Field>& fields, std::uint64_t rng_seed) {
  Lagrangian l;
  assemble_within_budget(fields, rng_seed, static_cast<std::size_t>(-1), l);
  return l;
}

}  // namespace lgen
