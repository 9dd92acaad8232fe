#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lgen/group_element.hpp"
#include "lgen/invariance.hpp"

using namespace lgen;
using namespace fixtures;

TEST_CASE("random group elements are special unitary") {
  std::mt19937_64 rng(1);
  for (int n : {2, 3}) {
    for (int k = 0; k < 20; ++k) {
      const auto u = random_special_unitary<double>(n, rng);
      CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12);
      CHECK(std::abs(u.determinant() - std::complex<double>(1)) < 1e-12);
    }
  }
  const auto p = random_phase<double>(rng);
  CHECK(std::abs(std::abs(p) - 1.0) < 1e-14);
  CHECK(random_group_element(GaugeGroup::SU3, 7).isApprox(random_group_element(GaugeGroup::SU3, 7)));
  CHECK(random_group_element(GaugeGroup::U1, 7).size() == 1);
}

TEST_CASE("worked examples are invariant") {
  for (const GoldenTerm& g : term_tables()) {
    CAPTURE(g.name);
    const InvarianceReport r = analyze_invariance(g.term, 50, 2, 1e-8);
    CHECK(r.well_formed);
    CHECK_FALSE(r.vanishing);
    CHECK(r.u1_conserved);
    CHECK(r.invariant);
    CHECK(r.max_deviation < 1e-10);
  }
}

TEST_CASE("a hypercharge shift breaks invariance") {
  Term t = quartic().term;
  std::get<Field>(t.objects[0]).u1 += Rational(1);
  const InvarianceReport r = analyze_invariance(t, 10, 0, 1e-8);
  CHECK(r.well_formed);
  CHECK_FALSE(r.u1_conserved);
  CHECK_FALSE(r.invariant);
  CHECK(r.max_deviation > 1e-3);
}

TEST_CASE("the 3 x 3bar pairing is a contraction of three slots") {
  const Field q = left(T3, S2, Rational(0));
  Term t;
  t.objects = {with_id(conjugate(q), 1), with_id(q, 2)};
  t.contractions = {su3({1, 2})};
  t.objects.insert(t.objects.begin() + 1, SigmaBar{3});
  t.contractions.push_back(lorentz({3, 1, 2}));
  CHECK(check_invariance_numeric(t));

  Term eps = t;
  eps.contractions[0] = su3({1, 1, 2});
  CHECK(check_invariance_numeric(eps));
}

TEST_CASE("identically vanishing contractions") {
  // Both symmetric slots of a triplet inside one epsilon.
  const Field w = scalar(S3, T2, Rational(0));
  Term t;
  t.objects = {with_id(w, 0), with_id(w, 1)};
  t.contractions = {su2({0, 0}), su2({1, 1})};
  CHECK(is_identically_vanishing(t));
  CHECK(analyze_invariance(t, 5, 0, 1e-8).vanishing);

  // A commuting doublet contracted with itself.
  const Field h = higgs();
  Term hh;
  hh.objects = {with_id(h, 0), with_id(conjugate(h), 1), with_id(h, 2), with_id(conjugate(h), 3)};
  hh.contractions = {su2({0, 2}), su2({1, 3})};
  CHECK(is_identically_vanishing(hh));

  Term good = hh;
  good.contractions = {su2({0, 1}), su2({2, 3})};
  CHECK_FALSE(is_identically_vanishing(good));
  CHECK(check_invariance_numeric(good));
}

TEST_CASE("malformed contractions") {
  const Field h = higgs();
  Term t;
  t.objects = {with_id(h, 0), with_id(conjugate(h), 1)};
  InvarianceReport r = analyze_invariance(t, 3, 0, 1e-8);
  CHECK_FALSE(r.well_formed);
  CHECK_FALSE(r.invariant);
  CHECK(r.diagnostic.find("free gauge index") != std::string::npos);

  t.contractions = {su2({0, 1}), su2({0, 1})};
  r = analyze_invariance(t, 3, 0, 1e-8);
  CHECK_FALSE(r.well_formed);
  CHECK(r.diagnostic.find("over-used") != std::string::npos);

  t.contractions = {su2({0, 5})};
  CHECK_THROWS_AS(analyze_invariance(t, 3, 0, 1e-8), DanglingIdError);

  Term pair;
  pair.objects = {with_id(scalar(T3, S2, Rational(0)), 0), with_id(scalar(T3, S2, Rational(0)), 1)};
  pair.contractions = {su3({0, 1})};
  CHECK_FALSE(analyze_invariance(pair, 3, 0, 1e-8).well_formed);
}

TEST_CASE("terms without gauge slots") {
  Term t = scalar_kinetic().term;
  CHECK(check_invariance_numeric(t));
  std::get<Field>(t.objects[3]).u1 = Rational(1, 2);
  CHECK_FALSE(check_invariance_numeric(t));
}

TEST_CASE("an open SU(3) index on a Yukawa") {
  Term t = yukawa().term;
  t.contractions.erase(t.contractions.begin() + 1);
  CHECK_FALSE(analyze_invariance(t, 3, 0, 1e-8).well_formed);
}
