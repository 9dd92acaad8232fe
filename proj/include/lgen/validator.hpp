#pragma once

// Reasonableness checks on a raw token sequence. Each check runs on a
// lenient segmentation so one defect does not mask the others.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgen/tokenizer.hpp"

namespace lgen {

enum class Check {
  SymbolInfo,         // each object carries the right kinds of tokens
  QuantumNumbers,     // valid rep digits, single-digit charges
  ContractionIds,     // entries name objects of the same term
  MassDimension,      // every term has integer mass dimension
  ContextLength,      // EOS reached below the context length
  CommutatorPairing,  // every COMMUTATOR_A meets a COMMUTATOR_B
  NoHallucination,    // sane structure, at most 12 objects, unique ids
};

inline constexpr std::size_t kCheckCount = 7;
inline constexpr std::size_t kMaxObjectsPerTerm = 12;

std::string_view to_string(Check c);

struct CheckResult {
  bool passed = true;
  std::string diagnostic;
};

struct ValidationReport {
  std::array<CheckResult, kCheckCount> checks;
  bool u1_conserved = false;  // false when the sequence does not parse
  std::optional<ParseError> parse_error;

  const CheckResult& operator[](Check c) const { return checks[static_cast<std::size_t>(c)]; }
  bool reasonable() const;
};

ValidationReport validate_reasonable(const TokenSeq& seq);

struct U1Report {
  std::vector<bool> per_term;
  bool all = true;
};

U1Report check_u1_conservation(const Lagrangian& l);

}  // namespace lgen
