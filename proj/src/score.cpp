#include "lgen/score.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "lgen/canonical.hpp"

namespace lgen {

namespace {

template <typename KeyFn>
std::size_t multiset_intersection(const Lagrangian& a, const Lagrangian& b, KeyFn key) {
  std::map<std::string, std::size_t> counts;
  for (const Term& t : b.terms) ++counts[key(t)];
  std::size_t hits = 0;
  for (const Term& t : a.terms) {
    auto it = counts.find(key(t));
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++hits;
    }
  }
  return hits;
}

}  // namespace

ScoreReport score(const Lagrangian& predicted, const Lagrangian& expected) {
  if (expected.terms.empty()) throw std::invalid_argument("expected Lagrangian has no terms");
  ScoreReport r;
  r.n_expected = expected.terms.size();
  r.n_predicted = predicted.terms.size();
  r.n_correct_objects = multiset_intersection(predicted, expected, object_signature);
  r.n_correct_contractions = multiset_intersection(predicted, expected, canonical_key);
  r.n_extra = r.n_predicted > r.n_expected ? r.n_predicted - r.n_expected : 0;

  const auto n = static_cast<std::int64_t>(r.n_expected);
  r.s_object = Rational(static_cast<std::int64_t>(r.n_correct_objects), n);
  r.s_contraction = Rational(static_cast<std::int64_t>(r.n_correct_contractions), n);
  r.p_length = Rational(static_cast<std::int64_t>(r.n_extra), n);
  r.s_lagrangian = r.s_contraction - r.p_length;
  return r;
}

}  // namespace lgen
