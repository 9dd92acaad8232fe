#pragma once

// Reference objects and token strings for the worked tokenization
// examples, plus small builders shared by the test binaries.

#include <string>
#include <vector>

#include "lgen/lagrangian.hpp"
#include "lgen/tokenizer.hpp"

namespace fixtures {

using namespace lgen;

inline Field with_id(Field f, int id) {
  f.id = id;
  return f;
}

inline Derivative deriv(GroupSet g, int id) { return Derivative{g, id}; }

inline ContractionEntry lorentz(std::vector<int> ids) { return {IndexGroup::Lorentz, std::move(ids)}; }
inline ContractionEntry su3(std::vector<int> ids) { return {IndexGroup::SU3, std::move(ids)}; }
inline ContractionEntry su2(std::vector<int> ids) { return {IndexGroup::SU2, std::move(ids)}; }

struct Golden {
  std::string name;
  TokenSeq tokens;  // as printed
};

struct GoldenObject : Golden {
  TermObject object;
};

struct GoldenEntry : Golden {
  ContractionEntry entry;
};

struct GoldenTerm : Golden {
  Term term;
  // Full field content whose generated Lagrangian contains this term.
  std::vector<Field> generator_input;
};

// Field helpers with short names.
inline Field scalar(SU3Rep a, SU2Rep b, Rational y) { return make_scalar(a, b, y); }
inline Field left(SU3Rep a, SU2Rep b, Rational y) { return make_fermion(Helicity::Left, a, b, y); }
inline Field right(SU3Rep a, SU2Rep b, Rational y) { return make_fermion(Helicity::Right, a, b, y); }

inline constexpr SU3Rep S3 = SU3Rep::Singlet, T3 = SU3Rep::Triplet, A3 = SU3Rep::AntiTriplet;
inline constexpr SU2Rep S2 = SU2Rep::Singlet, D2 = SU2Rep::Doublet, T2 = SU2Rep::Triplet;

inline std::vector<GoldenObject> object_rows() {
  return {
      {{"scalar antitriplet doublet",
        split_tokens("FIELD, SPIN, 0, SU3, -, 3, SU2, 2, U1, -, 1, /, 3, ID3")},
       with_id(scalar(A3, D2, Rational(-1, 3)), 3)},
      // Printed with HEL 1/2, which is the right-handed spelling.
      {{"fermion triplet of SU(2)", split_tokens("FIELD, SPIN, 1, /, 2, SU2, 3, HEL, 1, /, 2, ID9")},
       with_id(right(S3, T2, Rational(0)), 9)},
      {{"daggered singlet scalar", split_tokens("FIELD, SPIN, 0, U1, 7, /, 5, DAGGER, ID7")},
       with_id(conjugate(scalar(S3, S2, Rational(-7, 5))), 7)},
      {{"SU(2) x U(1) derivative", split_tokens("DERIVATIVE, SU2, U1, ID4")},
       deriv({false, true, true}, 4)},
      {{"full covariant derivative", split_tokens("DERIVATIVE, SU3, SU2, U1, ID1")},
       deriv({true, true, true}, 1)},
      {{"partial derivative", split_tokens("DERIVATIVE, ID5")}, deriv({}, 5)},
      {{"sigma bar", split_tokens("SIGMA_BAR, ID2")}, SigmaBar{2}},
  };
}

inline std::vector<GoldenEntry> entry_rows() {
  return {{{"metric", split_tokens("LORENTZ, ID6, ID4")}, lorentz({6, 4})},
          {{"SU(2) epsilon", split_tokens("SU2, ID0, ID7")}, su2({0, 7})}};
}

inline GoldenTerm fermion_kinetic() {
  const Field psi = left(A3, S2, Rational(3, 4));
  GoldenTerm g;
  g.name = "fermion kinetic";
  g.tokens = split_tokens(
      "i, FIELD, SPIN, 1, /, 2, SU3, 3, U1, -, 3, /, 4, HEL, 1, /, 2, DAGGER, ID9, SIGMA_BAR, ID6, "
      "DERIVATIVE, SU3, U1, ID4, FIELD, SPIN, 1, /, 2, SU3, -, 3, U1, 3, /, 4, HEL, -, 1, /, 2, ID7, "
      "CONTRACTIONS, LORENTZ, ID6, ID4, LORENTZ, ID6, ID9, ID7, SU3, ID9, ID7");
  g.term.imaginary = true;
  g.term.objects = {with_id(conjugate(psi), 9), SigmaBar{6}, deriv({true, false, true}, 4), with_id(psi, 7)};
  g.term.contractions = {lorentz({6, 4}), lorentz({6, 9, 7}), su3({9, 7})};
  g.generator_input = {psi};
  return g;
}

inline GoldenTerm scalar_kinetic() {
  const Field phi = scalar(S3, S2, Rational(0));
  GoldenTerm g;
  g.name = "scalar kinetic";
  g.tokens = split_tokens(
      "DERIVATIVE, ID4, FIELD, SPIN, 0, DAGGER, ID1, DERIVATIVE, ID7, FIELD, SPIN, 0, ID5, "
      "CONTRACTIONS, LORENTZ, ID4, ID7");
  g.term.objects = {deriv({}, 4), with_id(conjugate(phi), 1), deriv({}, 7), with_id(phi, 5)};
  g.term.contractions = {lorentz({4, 7})};
  g.generator_input = {phi};
  return g;
}

inline GoldenTerm gauge_kinetic() {
  const GroupSet w{false, true, false};
  GoldenTerm g;
  g.name = "SU(2) gauge kinetic";
  g.tokens = split_tokens(
      "-, COMMUTATOR_A, DERIVATIVE, SU2, ID6, COMMUTATOR_B, DERIVATIVE, SU2, ID5, "
      "COMMUTATOR_A, DERIVATIVE, SU2, ID1, COMMUTATOR_B, DERIVATIVE, SU2, ID0, "
      "CONTRACTIONS, LORENTZ, ID6, ID1, LORENTZ, ID5, ID0");
  g.term.minus = true;
  g.term.objects = {CommutatorOpen{}, deriv(w, 6), CommutatorSeparator{}, deriv(w, 5),
                    CommutatorOpen{}, deriv(w, 1), CommutatorSeparator{}, deriv(w, 0)};
  g.term.contractions = {lorentz({6, 1}), lorentz({5, 0})};
  g.generator_input = {scalar(S3, D2, Rational(0))};
  return g;
}

inline GoldenTerm yukawa() {
  const Field psi = left(S3, T2, Rational(0));
  const Field chi = right(T3, T2, Rational(0));
  const Field phi = scalar(T3, T2, Rational(0));
  GoldenTerm g;
  g.name = "Yukawa";
  g.tokens = split_tokens(
      "FIELD, SPIN, 1, /, 2, SU2, 3, HEL, -, 1, /, 2, ID0, "
      "FIELD, SPIN, 1, /, 2, SU3, -, 3, SU2, 3, HEL, -, 1, /, 2, DAGGER, ID2, "
      "FIELD, SPIN, 0, SU3, 3, SU2, 3, ID6, "
      "CONTRACTIONS, LORENTZ, ID0, ID2, SU3, ID2, ID2, ID6, SU2, ID0, ID2, SU2, ID0, ID6, SU2, ID2, ID6");
  g.term.objects = {with_id(psi, 0), with_id(conjugate(chi), 2), with_id(phi, 6)};
  g.term.contractions = {lorentz({0, 2}), su3({2, 2, 6}), su2({0, 2}), su2({0, 6}), su2({2, 6})};
  g.generator_input = {psi, chi, phi};
  return g;
}

inline GoldenTerm quartic() {
  // Printed with SU2 3 tokens; the doublet label in the heading does not
  // match them, and the tokens are kept.
  const Field phi = scalar(T3, T2, Rational(6));
  const Field big = scalar(A3, S2, Rational(-7, 2));
  GoldenTerm g;
  g.name = "scalar quartic";
  g.tokens = split_tokens(
      "FIELD, SPIN, 0, SU3, 3, SU2, 3, U1, 6, ID5, "
      "FIELD, SPIN, 0, SU3, -, 3, SU2, 3, U1, -, 6, DAGGER, ID7, "
      "FIELD, SPIN, 0, SU3, -, 3, U1, -, 7, /, 2, ID8, "
      "FIELD, SPIN, 0, SU3, 3, U1, 7, /, 2, DAGGER, ID2, "
      "CONTRACTIONS, SU3, ID5, ID7, ID8, SU3, ID7, ID8, ID2, SU2, ID5, ID7, SU2, ID5, ID7");
  g.term.objects = {with_id(phi, 5), with_id(conjugate(phi), 7), with_id(big, 8), with_id(conjugate(big), 2)};
  g.term.contractions = {su3({5, 7, 8}), su3({7, 8, 2}), su2({5, 7}), su2({5, 7})};
  g.generator_input = {phi, big};
  return g;
}

inline std::vector<GoldenTerm> term_tables() {
  return {fermion_kinetic(), scalar_kinetic(), gauge_kinetic(), yukawa(), quartic()};
}

// In-distribution charge -> printed non-minimal spellings.
inline std::vector<std::pair<std::string, std::string>> ood_table_rows() {
  return {{"1", "2 / 2, 3 / 3, 4 / 4, 5 / 5, 6 / 6, 7 / 7, 8 / 8, 9 / 9"},
          {"1 / 2", "2 / 4, 3 / 6, 4 / 8"},
          {"1 / 3", "2 / 6, 3 / 9"},
          {"1 / 4", "2 / 8"},
          {"2", "4 / 2, 6 / 3, 8 / 4"},
          {"2 / 3", "4 / 6, 6 / 9"},
          {"3", "6 / 2, 9 / 3"},
          {"3 / 2", "6 / 4, 9 / 6"},
          {"3 / 4", "6 / 8"},
          {"4", "8 / 2"},
          {"4 / 3", "8 / 6"}};
}

// Standard-model-like content used across tests.
inline Field quark_doublet() { return left(T3, D2, Rational(1, 3)); }
inline Field up_right() { return right(T3, S2, Rational(4, 3)); }
inline Field higgs() { return scalar(S3, D2, Rational(1)); }

}  // namespace fixtures
