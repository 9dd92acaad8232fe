#pragma once

// Canonical forms of terms modulo object order, id relabeling, entry order
// and hermitian conjugation.

#include <string>

#include "lgen/term.hpp"

namespace lgen {

/// Equal for two terms iff they differ only by the equivalences above.
/// Contraction entries are compared as unordered index sets, so signs
/// from epsilon orientation are ignored.
std::string canonical_key(const Term& t);

/// canonical_key with contractions stripped: the multiset of objects and
/// the term's i / - flags, minimized over hermitian conjugation.
std::string object_signature(const Term& t);

/// Object-relabeled copy with ids 0..k-1 in order of appearance.
Term relabel_first_use(const Term& t);

}  // namespace lgen
