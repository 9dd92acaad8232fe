#pragma once

// Token vocabulary, serialization of fields, terms and Lagrangians, and the
// strict parser that inverts it.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgen/term.hpp"

namespace lgen {

using Token = std::string;
using TokenSeq = std::vector<Token>;

/// Sequences must stay strictly below this length.
inline constexpr std::size_t kContextLength = 2048;

/// The closed vocabulary in integer-id order.
const std::vector<std::string>& vocabulary();
bool is_token(std::string_view s);

class UnknownTokenError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Token <-> integer id, stable across runs. Throws UnknownTokenError.
std::vector<int> encode_ids(const TokenSeq& seq);
TokenSeq decode_ids(const std::vector<int>& ids);

/// Splits on commas and whitespace.
TokenSeq split_tokens(std::string_view text);
std::string join_tokens(const TokenSeq& seq, std::string_view sep = ", ");

TokenSeq tokenize_field(const Field& f);
TokenSeq tokenize_term(const Term& t);
TokenSeq tokenize_lagrangian(const Lagrangian& l);
/// Bare field blocks, as used on the input side of a record.
TokenSeq tokenize_fields(const std::vector<Field>& fields);

std::size_t token_count(const Term& t);

enum class ParseErrorKind { UnknownToken, Structure, DanglingId, UnpairedCommutator, Truncation };

std::string_view to_string(ParseErrorKind k);

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::Structure;
  std::size_t position = 0;  // token index
  std::string message;
};

class ParseException : public std::runtime_error {
public:
  explicit ParseException(ParseError e);
  const ParseError& error() const { return error_; }

private:
  ParseError error_;
};

/// Throws ParseException.
Lagrangian parse_lagrangian(const TokenSeq& seq);
std::vector<Field> parse_fields(const TokenSeq& seq);

struct ParseResult {
  Lagrangian lagrangian;
  std::optional<ParseError> error;
  bool ok() const { return !error; }
};

ParseResult parse(const TokenSeq& seq);

}  // namespace lgen
