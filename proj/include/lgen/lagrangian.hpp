#pragma once

// Construction of every renormalizable term for a set of fields: kinetic
// terms (matter and gauge), mass terms and interactions. Builders use ids
// 0..k-1; assemble_lagrangian draws the random ids.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lgen/term.hpp"

namespace lgen {

class DuplicateFieldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// D^mu phi^dag D_mu phi. Throws std::invalid_argument for a fermion.
Term build_scalar_kinetic(const Field& f);

/// i psi^dag sigmabar^mu D_mu psi. Throws std::invalid_argument for a scalar.
Term build_fermion_kinetic(const Field& f);

/// -1/2 Tr([D_mu, D_nu][D^mu, D^nu]) for one group.
Term build_gauge_kinetic(GaugeGroup group);

/// phi^dag phi for every scalar, then every invariant bilinear of two
/// undotted fermion occurrences (one term per contraction pattern).
std::vector<Term> build_mass_terms(const std::vector<Field>& fields);

/// Trilinear and quartic scalar terms and Yukawa terms, one per surviving
/// SU(3) x SU(2) pattern, one representative per hermitian-conjugate pair.
std::vector<Term> enumerate_interaction_terms(const std::vector<Field>& fields);

/// Gauge kinetic, matter kinetic, mass and interaction terms with fresh
/// random ids 0-9 per term. Throws DuplicateFieldError on repeated fields
/// and std::invalid_argument on an empty, too long or daggered input.
Lagrangian assemble_lagrangian(const std::vector<Field>& fields, std::uint64_t rng_seed);

/// assemble_lagrangian, stopping early once `token_budget` tokens have
/// been produced; returns false in that case. Used by the sampler to
/// reject oversized field sets cheaply.
bool assemble_within_budget(const std::vector<Field>& fields, std::uint64_t rng_seed,
                            std::size_t token_budget, Lagrangian& out);

/// Whether any three-field interaction (scalar trilinear or Yukawa)
/// exists for `fields`, without building the rest of the Lagrangian.
bool has_trilinear_term(const std::vector<Field>& fields);

inline constexpr std::size_t kMaxFields = 10;

}  // namespace lgen
