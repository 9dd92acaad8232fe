#include "lgen/validator.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lgen {

namespace {

bool is_id(const Token& t) {
  return t.size() == 3 && t[0] == 'I' && t[1] == 'D' && std::isdigit(static_cast<unsigned char>(t[2]));
}
bool is_digit(const Token& t) { return t.size() == 1 && std::isdigit(static_cast<unsigned char>(t[0])); }
bool is_object_keyword(const Token& t) {
  return t == "FIELD" || t == "DERIVATIVE" || t == "SIGMA_BAR" || t == "COMMUTATOR_A" ||
         t == "COMMUTATOR_B";
}
bool is_entry_group(const Token& t) { return t == "LORENTZ" || t == "SU3" || t == "SU2"; }

using Span = std::vector<Token>;

struct LObject {
  Span tokens;  // keyword first
};

struct LEntry {
  Token group;
  std::vector<int> ids;
};

struct LTerm {
  std::vector<LObject> objects;
  std::vector<LEntry> entries;
};

struct Segmentation {
  std::vector<LTerm> terms;
  bool ok = true;
  std::string problem;
};

Segmentation segment(const TokenSeq& seq) {
  Segmentation s;
  auto fail = [&](std::string why) {
    s.ok = false;
    s.problem = std::move(why);
    return s;
  };
  for (const Token& t : seq)
    if (!is_token(t)) return fail("unknown token '" + t + "'");

  std::size_t pos = 0, end = seq.size();
  if (pos < end && seq[pos] == "SOS") ++pos;
  else return fail("missing SOS");
  auto eos = std::find(seq.begin() + pos, seq.end(), Token("EOS"));
  if (eos != seq.end()) {
    if (eos + 1 != seq.end()) return fail("tokens after EOS");
    end = static_cast<std::size_t>(eos - seq.begin());
  }
  if (pos == end) return s;

  while (true) {
    LTerm term;
    if (pos < end && seq[pos] == "-") ++pos;
    if (pos < end && seq[pos] == "i") ++pos;
    while (pos < end && seq[pos] != "CONTRACTIONS") {
      if (!is_object_keyword(seq[pos])) return fail("stray token '" + seq[pos] + "' among objects");
      LObject o;
      o.tokens.push_back(seq[pos++]);
      while (pos < end && !is_object_keyword(seq[pos]) && seq[pos] != "CONTRACTIONS") {
        if (seq[pos] == "+" || seq[pos] == "SOS") return fail("stray '" + seq[pos] + "' inside an object");
        o.tokens.push_back(seq[pos++]);
      }
      term.objects.push_back(std::move(o));
    }
    if (pos == end) return fail("term without CONTRACTIONS");
    ++pos;
    while (pos < end && is_entry_group(seq[pos])) {
      LEntry e{seq[pos++], {}};
      while (pos < end && is_id(seq[pos])) e.ids.push_back(seq[pos++][2] - '0');
      term.entries.push_back(std::move(e));
    }
    s.terms.push_back(std::move(term));
    if (pos == end) return s;
    if (seq[pos] == "+") {
      if (++pos == end) return fail("dangling '+'");
    } else if (seq[pos] != "-") {
      return fail("stray token '" + seq[pos] + "' after contractions");
    }
  }
}

// A field split into (key, payload) blocks; an ID is its own block.
struct Block {
  Token key;
  Span payload;
};

std::vector<Block> field_blocks(const Span& tokens) {
  static const std::set<Token> keys{"SPIN", "SU3", "SU2", "U1", "HEL", "DAGGER"};
  std::vector<Block> out;
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    if (keys.count(tokens[k]) || is_id(tokens[k]) || out.empty()) out.push_back({tokens[k], {}});
    else out.back().payload.push_back(tokens[k]);
  }
  return out;
}

// -? digit+ (/ digit+)?
bool is_fraction_shape(const Span& p, std::size_t& num_digits, std::size_t& den_digits) {
  std::size_t k = 0;
  if (k < p.size() && p[k] == "-") ++k;
  const std::size_t a = k;
  while (k < p.size() && is_digit(p[k])) ++k;
  num_digits = k - a;
  if (num_digits == 0) return false;
  den_digits = 0;
  if (k == p.size()) return true;
  if (p[k] != "/") return false;
  const std::size_t b = ++k;
  while (k < p.size() && is_digit(p[k])) ++k;
  den_digits = k - b;
  return den_digits > 0 && k == p.size();
}

bool equals(const Span& p, std::initializer_list<const char*> want) {
  return p.size() == want.size() && std::equal(p.begin(), p.end(), want.begin());
}

struct FieldFacts {
  bool symbol_ok = true;
  bool quantum_ok = true;
  std::optional<Rational> dimension;
  std::optional<int> id;
  std::string why;
};

FieldFacts inspect_field(const Span& tokens) {
  FieldFacts f;
  const std::vector<Block> blocks = field_blocks(tokens);
  auto symbol = [&](std::string why) {
    if (f.symbol_ok) f.why = std::move(why);
    f.symbol_ok = false;
  };
  auto quantum = [&](std::string why) {
    if (f.quantum_ok && f.symbol_ok) f.why = std::move(why);
    f.quantum_ok = false;
  };

  static const std::vector<Token> order{"SPIN", "SU3", "SU2", "U1", "HEL", "DAGGER", "ID"};
  int last = -1;
  bool fermion = false, has_hel = false;
  for (const Block& b : blocks) {
    const Token key = is_id(b.key) ? Token("ID") : b.key;
    const int rank = static_cast<int>(std::find(order.begin(), order.end(), key) - order.begin());
    if (rank >= static_cast<int>(order.size())) {
      symbol("unexpected token '" + b.key + "' in field");
      continue;
    }
    if (rank <= last) symbol("field block '" + key + "' out of order or repeated");
    last = rank;
    std::size_t nd = 0, dd = 0;
    if (key == "SPIN") {
      if (b.payload.empty()) symbol("SPIN without value");
      else if (equals(b.payload, {"0"})) f.dimension = Rational(1);
      else if (equals(b.payload, {"1", "/", "2"})) {
        fermion = true;
        f.dimension = Rational(3, 2);
      } else if (is_fraction_shape(b.payload, nd, dd)) quantum("spin must be 0 or 1/2");
      else symbol("malformed SPIN value");
    } else if (key == "SU3") {
      if (!is_fraction_shape(b.payload, nd, dd)) symbol("malformed SU3 value");
      else if (!equals(b.payload, {"3"}) && !equals(b.payload, {"-", "3"})) quantum("SU3 rep must be 3 or -3");
    } else if (key == "SU2") {
      if (!is_fraction_shape(b.payload, nd, dd)) symbol("malformed SU2 value");
      else if (!equals(b.payload, {"2"}) && !equals(b.payload, {"3"})) quantum("SU2 rep must be 2 or 3");
    } else if (key == "U1") {
      if (!is_fraction_shape(b.payload, nd, dd)) symbol("malformed U1 value");
      else if (nd != 1 || dd > 1) quantum("U1 charge needs single-digit numerator and denominator");
      else if (dd == 1 && b.payload.back() == "0") quantum("U1 zero denominator");
    } else if (key == "HEL") {
      has_hel = true;
      if (!is_fraction_shape(b.payload, nd, dd)) symbol("malformed HEL value");
      else if (!equals(b.payload, {"1", "/", "2"}) && !equals(b.payload, {"-", "1", "/", "2"}))
        quantum("helicity must be 1/2 or -1/2");
    } else {
      if (!b.payload.empty()) symbol("unexpected tokens after " + key);
      if (key == "ID") f.id = b.key[2] - '0';
    }
  }
  if (blocks.empty() || blocks.front().key != "SPIN") symbol("field without SPIN");
  if (fermion && !has_hel) symbol("fermion without HEL");
  if (!fermion && has_hel && f.dimension) symbol("HEL on a scalar");
  if (!f.id) symbol("field without ID");
  return f;
}

struct ObjectFacts {
  bool symbol_ok = true;
  std::optional<int> id;
  bool counts = true;  // commutator markers do not count as objects
  std::string why;
};

ObjectFacts inspect_operator(const Span& tokens) {
  ObjectFacts o;
  const Token& key = tokens.front();
  if (key == "COMMUTATOR_A" || key == "COMMUTATOR_B") {
    o.counts = false;
    if (tokens.size() != 1) {
      o.symbol_ok = false;
      o.why = key + " carries tokens";
    }
    return o;
  }
  std::size_t k = 1;
  if (key == "DERIVATIVE") {
    for (const char* g : {"SU3", "SU2", "U1"})
      if (k < tokens.size() && tokens[k] == g) ++k;
  }
  if (k < tokens.size() && is_id(tokens[k])) o.id = tokens[k++][2] - '0';
  if (k != tokens.size() || !o.id) {
    o.symbol_ok = false;
    o.why = key + " has unexpected or missing tokens";
  }
  return o;
}

void record(CheckResult& c, bool ok, const std::string& why) {
  if (ok || !c.passed) return;
  c.passed = false;
  c.diagnostic = why;
}

}  // namespace

std::string_view to_string(Check c) {
  switch (c) {
    case Check::SymbolInfo: return "symbol_information";
    case Check::QuantumNumbers: return "quantum_numbers";
    case Check::ContractionIds: return "contraction_ids";
    case Check::MassDimension: return "mass_dimension";
    case Check::ContextLength: return "context_length";
    case Check::CommutatorPairing: return "commutator_pairing";
    case Check::NoHallucination: return "no_hallucination";
  }
  return "";
}

bool ValidationReport::reasonable() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport validate_reasonable(const TokenSeq& seq) {
  ValidationReport r;
  auto at = [&](Check c) -> CheckResult& { return r.checks[static_cast<std::size_t>(c)]; };

  auto eos = std::find(seq.begin(), seq.end(), Token("EOS"));
  if (eos == seq.end()) record(at(Check::ContextLength), false, "no EOS");
  else if (static_cast<std::size_t>(eos - seq.begin()) >= kContextLength)
    record(at(Check::ContextLength), false, "EOS beyond the context length");

  bool pending = false;
  for (const Token& t : seq) {
    if (t == "COMMUTATOR_A") {
      record(at(Check::CommutatorPairing), !pending, "COMMUTATOR_A without COMMUTATOR_B");
      pending = true;
    } else if (t == "COMMUTATOR_B") {
      record(at(Check::CommutatorPairing), pending, "COMMUTATOR_B without COMMUTATOR_A");
      pending = false;
    } else if (t == "CONTRACTIONS" || t == "EOS") {
      record(at(Check::CommutatorPairing), !pending, "COMMUTATOR_A without COMMUTATOR_B");
      pending = false;
    }
  }
  record(at(Check::CommutatorPairing), !pending, "COMMUTATOR_A without COMMUTATOR_B");

  const Segmentation s = segment(seq);
  if (!s.ok) {
    for (Check c : {Check::SymbolInfo, Check::QuantumNumbers, Check::ContractionIds,
                    Check::MassDimension, Check::NoHallucination})
      record(at(c), false, "unreadable structure: " + s.problem);
  }

  for (std::size_t ti = 0; s.ok && ti < s.terms.size(); ++ti) {
    const LTerm& term = s.terms[ti];
    const std::string where = "term " + std::to_string(ti) + ": ";
    std::set<int> ids;
    std::size_t counted = 0;
    bool duplicate = false;
    Rational dim;
    bool dim_known = true;
    for (const LObject& o : term.objects) {
      std::optional<int> id;
      if (o.tokens.front() == "FIELD") {
        const FieldFacts f = inspect_field(o.tokens);
        record(at(Check::SymbolInfo), f.symbol_ok, where + f.why);
        record(at(Check::QuantumNumbers), f.quantum_ok, where + f.why);
        if (f.dimension) dim += *f.dimension;
        else dim_known = false;
        id = f.id;
        ++counted;
      } else {
        const ObjectFacts f = inspect_operator(o.tokens);
        record(at(Check::SymbolInfo), f.symbol_ok, where + f.why);
        if (o.tokens.front() == "DERIVATIVE") dim += Rational(1);
        id = f.id;
        counted += f.counts;
      }
      if (id && !ids.insert(*id).second) duplicate = true;
    }
    for (const LEntry& e : term.entries) {
      record(at(Check::SymbolInfo), !e.ids.empty(), where + e.group + " entry without ids");
      const std::size_t n = e.ids.size();
      const bool arity = e.group == "SU2" ? n == 2 : (n == 2 || n == 3);
      record(at(Check::ContractionIds), arity, where + e.group + " entry with " + std::to_string(n) + " ids");
      for (int id : e.ids)
        record(at(Check::ContractionIds), ids.count(id) > 0,
               where + "ID" + std::to_string(id) + " is not carried by any object");
    }
    if (dim_known)
      record(at(Check::MassDimension), dim.is_integer(), where + "mass dimension " + dim.str());
    record(at(Check::NoHallucination), counted <= kMaxObjectsPerTerm,
           where + std::to_string(counted) + " objects");
    record(at(Check::NoHallucination), !duplicate, where + "repeated object id");
  }

  const ParseResult parsed = parse(seq);
  r.parse_error = parsed.error;
  r.u1_conserved = parsed.ok() && check_u1_conservation(parsed.lagrangian).all;
  return r;
}

U1Report check_u1_conservation(const Lagrangian& l) {
  U1Report r;
  for (const Term& t : l.terms) {
    const bool ok = hypercharge_sum(t).is_zero();
    r.per_term.push_back(ok);
    r.all = r.all && ok;
  }
  return r;
}

}  // namespace lgen
