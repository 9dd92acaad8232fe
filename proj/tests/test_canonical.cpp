#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "lgen/canonical.hpp"

using namespace lgen;
using namespace fixtures;

namespace {

// Same term with ids renamed through `perm` and objects shuffled. Runs of
// commutator markers and derivatives keep their relative order since
// position inside a commutator is meaningful.
Term scramble(const Term& t, std::mt19937_64& rng) {
  std::vector<int> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Term out = t;
  relabel_ids(out, perm);
  const bool has_derivative = derivative_count(t) > 0;
  if (!has_derivative) std::shuffle(out.objects.begin(), out.objects.end(), rng);
  std::shuffle(out.contractions.begin(), out.contractions.end(), rng);
  for (ContractionEntry& e : out.contractions) std::shuffle(e.ids.begin(), e.ids.end(), rng);
  return out;
}

}  // namespace

TEST_CASE("the key ignores ids, object order and entry order") {
  std::mt19937_64 rng(3);
  for (const GoldenTerm& g : term_tables()) {
    CAPTURE(g.name);
    const std::string key = canonical_key(g.term);
    for (int k = 0; k < 50; ++k) CHECK(canonical_key(scramble(g.term, rng)) == key);
    CHECK(canonical_key(relabel_first_use(g.term)) == key);
  }
}

TEST_CASE("epsilon over permuted objects") {
  // eps^{abc} phi_a phi_b phi_c written two ways.
  const Field a = scalar(T3, S2, Rational(0)), b = scalar(T3, S2, Rational(1)), c = scalar(T3, S2, Rational(-1));
  Term x;
  x.objects = {with_id(a, 0), with_id(b, 7), with_id(c, 3)};
  x.contractions = {su3({0, 7, 3})};
  Term y;
  y.objects = {with_id(b, 2), with_id(c, 5), with_id(a, 9)};
  y.contractions = {su3({2, 5, 9})};
  CHECK(canonical_key(x) == canonical_key(y));
}

TEST_CASE("hermitian conjugation") {
  for (const GoldenTerm& g : term_tables()) {
    CHECK(canonical_key(hermitian_conjugate(g.term)) == canonical_key(g.term));
    CHECK(object_signature(hermitian_conjugate(g.term)) == object_signature(g.term));
  }
}

TEST_CASE("different contractions get different keys") {
  const Term q = quartic().term;
  Term other = q;
  // Pair phi with Phi^dag instead.
  other.contractions = {su3({5, 7, 8}), su3({7, 8, 2}), su2({5, 7}), su2({5, 7})};
  CHECK(canonical_key(other) == canonical_key(q));
  other.contractions[0] = su3({5, 8, 8});
  other.contractions[1] = su3({7, 7, 2});
  CHECK(canonical_key(other) != canonical_key(q));
  CHECK(object_signature(other) == object_signature(q));

  Term flipped = q;
  std::get<Field>(flipped.objects[0]).u1 = Rational(5);
  CHECK(object_signature(flipped) != object_signature(q));
}

TEST_CASE("equivalent redundant patterns collapse") {
  // With two identical doublets the pairings (0,2)(1,3) and (0,3)(1,2)
  // are one term.
  const Field h = higgs();
  Term a;
  a.objects = {with_id(h, 0), with_id(h, 1), with_id(conjugate(h), 2), with_id(conjugate(h), 3)};
  a.contractions = {su2({0, 2}), su2({1, 3})};
  Term b = a;
  b.contractions = {su2({0, 3}), su2({1, 2})};
  CHECK(canonical_key(a) == canonical_key(b));
}

TEST_CASE("flags and derivative placement matter") {
  Term k = scalar_kinetic().term;
  Term signed_k = k;
  signed_k.minus = true;
  CHECK(canonical_key(signed_k) != canonical_key(k));
  CHECK(object_signature(signed_k) != object_signature(k));

  // The derivative acting on the daggered field versus on the plain one
  // is the same physics under conjugation only.
  Term moved = k;
  std::swap(moved.objects[1], moved.objects[3]);
  CHECK(canonical_key(moved) == canonical_key(k));
}

TEST_CASE("first-use relabeling") {
  const Term t = relabel_first_use(yukawa().term);
  CHECK(object_id(t.objects[0]) == 0);
  CHECK(object_id(t.objects[1]) == 1);
  CHECK(object_id(t.objects[2]) == 2);
  CHECK(t.contractions[1] == su3({1, 1, 2}));
  CHECK(relabel_first_use(t) == t);
}
