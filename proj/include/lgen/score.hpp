#pragma once

#include <cstddef>

#include "lgen/algebra.hpp"
#include "lgen/term.hpp"

namespace lgen {

struct ScoreReport {
  Rational s_object;
  Rational s_contraction;
  Rational p_length;
  Rational s_lagrangian;
  std::size_t n_expected = 0;
  std::size_t n_predicted = 0;
  std::size_t n_correct_objects = 0;
  std::size_t n_correct_contractions = 0;
  std::size_t n_extra = 0;
};

/// Counts are multiset intersections of canonical keys (contractions) and
/// object signatures (objects); every score is a count over n_expected.
/// Throws std::invalid_argument when `expected` has no terms.
ScoreReport score(const Lagrangian& predicted, const Lagrangian& expected);

}  // namespace lgen
