#pragma once

// Numerical gauge-invariance oracle. Every field becomes a random complex
// tensor with one axis per fundamental slot; the term's epsilon and
// pairing entries are contracted explicitly, before and after a random
// SU(3) x SU(2) x U(1) transformation.

#include <cstdint>
#include <string>

#include "lgen/term.hpp"

namespace lgen {

struct InvarianceReport {
  bool well_formed = false;   // every gauge slot absorbed exactly once
  bool vanishing = false;     // contraction is identically zero
  bool u1_conserved = false;  // exact rational charge sum is zero
  bool invariant = false;
  double max_deviation = 0.0;
  std::string diagnostic;
};

/// Throws DanglingIdError when a contraction names a missing object.
InvarianceReport analyze_invariance(const Term& t, int trials, std::uint64_t seed, double tol);

/// analyze_invariance(...).invariant
bool check_invariance_numeric(const Term& t, int trials = 100, std::uint64_t seed = 0,
                              double tol = 1e-8);

/// True when the contraction evaluates to zero for generic field values,
/// e.g. an SU(2) epsilon across both slots of one triplet, or an
/// antisymmetric contraction of a boson with itself.
bool is_identically_vanishing(const Term& t, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace lgen
