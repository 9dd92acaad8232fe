#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "lgen/fields.hpp"

namespace lgen {

/// Gauge groups a covariant derivative carries. Empty means a plain
/// partial derivative.
struct GroupSet {
  bool su3 = false;
  bool su2 = false;
  bool u1 = false;

  bool empty() const { return !su3 && !su2 && !u1; }
  friend auto operator<=>(const GroupSet&, const GroupSet&) = default;
};

/// Groups under which `f` transforms non-trivially.
GroupSet charged_groups(const Field& f);

struct Derivative {
  GroupSet groups;
  std::optional<int> id;
  friend auto operator<=>(const Derivative&, const Derivative&) = default;
};

struct SigmaBar {
  std::optional<int> id;
  friend auto operator<=>(const SigmaBar&, const SigmaBar&) = default;
};

struct CommutatorOpen {
  friend auto operator<=>(const CommutatorOpen&, const CommutatorOpen&) = default;
};

struct CommutatorSeparator {
  friend auto operator<=>(const CommutatorSeparator&, const CommutatorSeparator&) = default;
};

using TermObject = std::variant<Field, Derivative, SigmaBar, CommutatorOpen, CommutatorSeparator>;

std::optional<int> object_id(const TermObject& o);
void set_object_id(TermObject& o, std::optional<int> id);
inline bool is_field(const TermObject& o) { return std::holds_alternative<Field>(o); }
inline bool is_commutator_marker(const TermObject& o) {
  return std::holds_alternative<CommutatorOpen>(o) || std::holds_alternative<CommutatorSeparator>(o);
}

enum class IndexGroup { Lorentz, SU3, SU2 };

/// Indices contracted between the objects named by `ids`: a metric or
/// spinor epsilon for Lorentz, an epsilon (3 ids) or a 3 x 3bar pairing
/// (2 ids) for SU(3), an epsilon for SU(2). A repeated id means two slots
/// of that object.
struct ContractionEntry {
  IndexGroup group = IndexGroup::Lorentz;
  std::vector<int> ids;
  friend auto operator<=>(const ContractionEntry&, const ContractionEntry&) = default;
};

struct Term {
  bool imaginary = false;  // leading i
  bool minus = false;      // leading -
  std::vector<TermObject> objects;
  std::vector<ContractionEntry> contractions;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Lagrangian {
  std::vector<Term> terms;
  friend bool operator==(const Lagrangian&, const Lagrangian&) = default;
};

class DanglingIdError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DanglingIdError if a contraction names an id no object carries.
void require_resolved_ids(const Term& t);

std::vector<Field> fields_of(const Term& t);
int derivative_count(const Term& t);

/// Fields count 1 or 3/2, derivatives 1.
Rational mass_dimension(const Term& t);

/// Sum of the hypercharges the field objects carry.
Hypercharge hypercharge_sum(const Term& t);

/// Three or more fields and no derivatives.
bool is_interaction(const Term& t);
/// Interaction with exactly three fields.
bool is_trilinear(const Term& t);

/// Rename ids through `mapping` (mapping[old] = new), in objects and
/// contractions.
void relabel_ids(Term& t, const std::vector<int>& mapping);

/// Conjugate every field; contractions and flags are kept.
Term hermitian_conjugate(const Term& t);

}  // namespace lgen
