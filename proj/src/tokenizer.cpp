#include "lgen/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace lgen {

namespace {

std::vector<std::string> make_vocabulary() {
  std::vector<std::string> v{"i", "+", "-", "/", "COMMUTATOR_A", "COMMUTATOR_B"};
  for (int d = 0; d <= 9; ++d) v.push_back(std::to_string(d));
  for (int d = 0; d <= 9; ++d) v.push_back("ID" + std::to_string(d));
  for (const char* s : {"FIELD", "SPIN", "HEL", "DAGGER", "DERIVATIVE", "SIGMA_BAR", "SU3", "SU2",
                        "U1", "LORENTZ", "CONTRACTIONS", "SOS", "EOS"})
    v.emplace_back(s);
  return v;
}

const std::unordered_map<std::string, int>& token_index() {
  static const std::unordered_map<std::string, int> index = [] {
    std::unordered_map<std::string, int> m;
    const auto& v = vocabulary();
    for (std::size_t k = 0; k < v.size(); ++k) m.emplace(v[k], static_cast<int>(k));
    return m;
  }();
  return index;
}

void emit_number(TokenSeq& out, long long n) {
  for (char c : std::to_string(n)) out.emplace_back(1, c);
}

void emit_id(TokenSeq& out, const std::optional<int>& id) {
  if (!id) return;
  if (*id < 0 || *id > 9) throw std::invalid_argument("id tag out of range: " + std::to_string(*id));
  out.push_back("ID" + std::to_string(*id));
}

void emit_fraction(TokenSeq& out, long long num, long long den) {
  if (num < 0) out.emplace_back("-");
  emit_number(out, num < 0 ? -num : num);
  if (den != 1) {
    out.emplace_back("/");
    emit_number(out, den);
  }
}

void emit_groups(TokenSeq& out, const GroupSet& g) {
  if (g.su3) out.emplace_back("SU3");
  if (g.su2) out.emplace_back("SU2");
  if (g.u1) out.emplace_back("U1");
}

void emit_object(TokenSeq& out, const TermObject& o) {
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Field>) {
          const TokenSeq f = tokenize_field(x);
          out.insert(out.end(), f.begin(), f.end());
        } else if constexpr (std::is_same_v<T, Derivative>) {
          out.emplace_back("DERIVATIVE");
          emit_groups(out, x.groups);
          emit_id(out, x.id);
        } else if constexpr (std::is_same_v<T, SigmaBar>) {
          out.emplace_back("SIGMA_BAR");
          emit_id(out, x.id);
        } else if constexpr (std::is_same_v<T, CommutatorOpen>) {
          out.emplace_back("COMMUTATOR_A");
        } else {
          out.emplace_back("COMMUTATOR_B");
        }
      },
      o);
}

std::string_view group_token(IndexGroup g) {
  switch (g) {
    case IndexGroup::Lorentz: return "LORENTZ";
    case IndexGroup::SU3: return "SU3";
    case IndexGroup::SU2: return "SU2";
  }
  return "LORENTZ";
}

bool is_digit_token(const Token& t) {
  return t.size() == 1 && std::isdigit(static_cast<unsigned char>(t[0]));
}

class Parser {
public:
  explicit Parser(const TokenSeq& seq) : seq_(seq) {
    for (std::size_t k = 0; k < seq_.size(); ++k)
      if (!is_token(seq_[k]))
        fail(ParseErrorKind::UnknownToken, k, "unknown token '" + seq_[k] + "'");
  }

  Lagrangian lagrangian() {
    expect("SOS");
    Lagrangian l;
    if (accept("EOS")) return finish(l);
    l.terms.push_back(term());
    while (true) {
      if (accept("EOS")) return finish(l);
      if (accept("+")) {
        l.terms.push_back(term());
      } else if (is("-")) {
        l.terms.push_back(term());
      } else {
        structure("expected '+', '-' or EOS between terms");
      }
    }
  }

  std::vector<Field> fields() {
    std::vector<Field> out;
    while (pos_ < seq_.size()) {
      if (!is("FIELD")) structure("expected FIELD");
      out.push_back(field());
    }
    return out;
  }

private:
  const TokenSeq& seq_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(ParseErrorKind kind, std::size_t at, std::string msg) const {
    throw ParseException(ParseError{kind, at, std::move(msg)});
  }
  [[noreturn]] void structure(std::string msg) const {
    if (pos_ >= seq_.size()) fail(ParseErrorKind::Truncation, pos_, "sequence ends before EOS");
    fail(ParseErrorKind::Structure, pos_, std::move(msg) + ", got '" + seq_[pos_] + "'");
  }

  bool is(std::string_view t) const { return pos_ < seq_.size() && seq_[pos_] == t; }
  bool accept(std::string_view t) {
    if (!is(t)) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view t) {
    if (!accept(t)) structure("expected '" + std::string(t) + "'");
  }

  Lagrangian finish(Lagrangian& l) {
    if (pos_ != seq_.size()) fail(ParseErrorKind::Structure, pos_, "tokens after EOS");
    return std::move(l);
  }

  long long number() {
    if (pos_ >= seq_.size() || !is_digit_token(seq_[pos_])) structure("expected a digit");
    long long n = 0;
    while (pos_ < seq_.size() && is_digit_token(seq_[pos_])) {
      n = n * 10 + (seq_[pos_][0] - '0');
      if (n > 1'000'000'000LL) structure("number too large");
      ++pos_;
    }
    return n;
  }

  std::optional<int> id() {
    if (pos_ < seq_.size() && seq_[pos_].size() == 3 && seq_[pos_].rfind("ID", 0) == 0)
      return seq_[pos_++][2] - '0';
    return std::nullopt;
  }

  Field field() {
    expect("FIELD");
    expect("SPIN");
    Field f;
    if (accept("0")) {
      f.spin = Spin::Scalar;
    } else {
      expect("1");
      expect("/");
      expect("2");
      f.spin = Spin::Fermion;
    }
    if (accept("SU3")) {
      if (accept("3")) f.su3 = SU3Rep::Triplet;
      else if (accept("-")) {
        expect("3");
        f.su3 = SU3Rep::AntiTriplet;
      } else {
        structure("SU3 representation must be 3 or -3");
      }
    }
    if (accept("SU2")) {
      const std::size_t at = pos_;
      const long long n = number();
      if (n == 2) f.su2 = SU2Rep::Doublet;
      else if (n == 3) f.su2 = SU2Rep::Triplet;
      else fail(ParseErrorKind::Structure, at, "SU2 representation must be 2 or 3");
    }
    if (accept("U1")) {
      const bool negative = accept("-");
      long long num = number();
      long long den = 1;
      if (accept("/")) {
        const std::size_t at = pos_;
        den = number();
        if (den == 0) fail(ParseErrorKind::Structure, at, "zero denominator");
      }
      if (negative) num = -num;
      f.u1 = Rational(num, den);
      if (den != f.u1.den() || num == 0)
        f.u1_spelling = ChargeSpelling{static_cast<int>(num), static_cast<int>(den)};
    }
    if (accept("HEL")) {
      if (!f.is_fermion()) fail(ParseErrorKind::Structure, pos_ - 1, "HEL on a scalar");
      f.helicity = accept("-") ? Helicity::Left : Helicity::Right;
      expect("1");
      expect("/");
      expect("2");
    } else if (f.is_fermion()) {
      structure("fermion without HEL");
    }
    f.daggered = accept("DAGGER");
    f.id = id();
    return f;
  }

  GroupSet groups() {
    GroupSet g;
    g.su3 = accept("SU3");
    g.su2 = accept("SU2");
    g.u1 = accept("U1");
    return g;
  }

  Term term() {
    const std::size_t start = pos_;
    Term t;
    t.minus = accept("-");
    t.imaginary = accept("i");
    std::optional<std::size_t> open_at;
    while (!accept("CONTRACTIONS")) {
      if (is("FIELD")) {
        t.objects.emplace_back(field());
      } else if (accept("DERIVATIVE")) {
        const GroupSet g = groups();
        t.objects.emplace_back(Derivative{g, id()});
      } else if (accept("SIGMA_BAR")) {
        if (is("SU3") || is("SU2") || is("U1")) structure("SIGMA_BAR carries no group");
        t.objects.emplace_back(SigmaBar{id()});
      } else if (is("COMMUTATOR_A")) {
        if (open_at) fail(ParseErrorKind::UnpairedCommutator, pos_, "COMMUTATOR_A without COMMUTATOR_B");
        open_at = pos_++;
        t.objects.emplace_back(CommutatorOpen{});
      } else if (is("COMMUTATOR_B")) {
        if (!open_at) fail(ParseErrorKind::UnpairedCommutator, pos_, "COMMUTATOR_B without COMMUTATOR_A");
        open_at.reset();
        ++pos_;
        t.objects.emplace_back(CommutatorSeparator{});
      } else {
        structure("expected an object or CONTRACTIONS");
      }
    }
    if (open_at) fail(ParseErrorKind::UnpairedCommutator, *open_at, "COMMUTATOR_A without COMMUTATOR_B");
    while (is("LORENTZ") || is("SU3") || is("SU2")) {
      const std::size_t at = pos_;
      ContractionEntry e;
      e.group = accept("LORENTZ") ? IndexGroup::Lorentz
                : accept("SU3")   ? IndexGroup::SU3
                                  : (++pos_, IndexGroup::SU2);
      while (auto i = id()) e.ids.push_back(*i);
      const std::size_t n = e.ids.size();
      const bool ok = e.group == IndexGroup::SU2 ? n == 2 : (n == 2 || n == 3);
      if (!ok) fail(ParseErrorKind::Structure, at, "contraction entry with " + std::to_string(n) + " ids");
      t.contractions.push_back(std::move(e));
    }
    try {
      require_resolved_ids(t);
    } catch (const DanglingIdError& e) {
      fail(ParseErrorKind::DanglingId, start, e.what());
    }
    return t;
  }
};

}  // namespace

const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> v = make_vocabulary();
  return v;
}

bool is_token(std::string_view s) { return token_index().count(std::string(s)) > 0; }

std::vector<int> encode_ids(const TokenSeq& seq) {
  std::vector<int> out;
  out.reserve(seq.size());
  const auto& index = token_index();
  for (const Token& t : seq) {
    auto it = index.find(t);
    if (it == index.end()) throw UnknownTokenError("unknown token '" + t + "'");
    out.push_back(it->second);
  }
  return out;
}

TokenSeq decode_ids(const std::vector<int>& ids) {
  const auto& v = vocabulary();
  TokenSeq out;
  out.reserve(ids.size());
  for (int id : ids) {
    if (id < 0 || id >= static_cast<int>(v.size()))
      throw UnknownTokenError("token id out of range: " + std::to_string(id));
    out.push_back(v[id]);
  }
  return out;
}

TokenSeq split_tokens(std::string_view text) {
  TokenSeq out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string join_tokens(const TokenSeq& seq, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) out += sep;
    out += seq[k];
  }
  return out;
}

TokenSeq tokenize_field(const Field& f) {
  TokenSeq out{"FIELD", "SPIN"};
  if (f.is_scalar()) {
    out.emplace_back("0");
  } else {
    out.insert(out.end(), {"1", "/", "2"});
  }
  if (f.su3 == SU3Rep::Triplet) out.insert(out.end(), {"SU3", "3"});
  if (f.su3 == SU3Rep::AntiTriplet) out.insert(out.end(), {"SU3", "-", "3"});
  if (f.su2 != SU2Rep::Singlet) {
    out.emplace_back("SU2");
    out.emplace_back(f.su2 == SU2Rep::Doublet ? "2" : "3");
  }
  if (f.u1_spelling) {
    out.emplace_back("U1");
    emit_fraction(out, f.u1_spelling->num, f.u1_spelling->den);
  } else if (!f.u1.is_zero()) {
    out.emplace_back("U1");
    emit_fraction(out, f.u1.num(), f.u1.den());
  }
  if (f.is_fermion()) {
    out.emplace_back("HEL");
    if (f.helicity == Helicity::Left) out.emplace_back("-");
    out.insert(out.end(), {"1", "/", "2"});
  }
  if (f.daggered) out.emplace_back("DAGGER");
  emit_id(out, f.id);
  return out;
}

TokenSeq tokenize_term(const Term& t) {
  require_resolved_ids(t);
  TokenSeq out;
  if (t.minus) out.emplace_back("-");
  if (t.imaginary) out.emplace_back("i");
  for (const TermObject& o : t.objects) emit_object(out, o);
  out.emplace_back("CONTRACTIONS");
  for (const ContractionEntry& e : t.contractions) {
    out.emplace_back(group_token(e.group));
    for (int id : e.ids) emit_id(out, id);
  }
  return out;
}

TokenSeq tokenize_lagrangian(const Lagrangian& l) {
  TokenSeq out{"SOS"};
  for (std::size_t k = 0; k < l.terms.size(); ++k) {
    if (k && !l.terms[k].minus) out.emplace_back("+");
    const TokenSeq t = tokenize_term(l.terms[k]);
    out.insert(out.end(), t.begin(), t.end());
  }
  out.emplace_back("EOS");
  return out;
}

TokenSeq tokenize_fields(const std::vector<Field>& fields) {
  TokenSeq out;
  for (const Field& f : fields) {
    const TokenSeq t = tokenize_field(f);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

std::size_t token_count(const Term& t) { return tokenize_term(t).size(); }

std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::UnknownToken: return "unknown_token";
    case ParseErrorKind::Structure: return "structure";
    case ParseErrorKind::DanglingId: return "dangling_id";
    case ParseErrorKind::UnpairedCommutator: return "unpaired_commutator";
    case ParseErrorKind::Truncation: return "truncation";
  }
  return "structure";
}

ParseException::ParseException(ParseError e)
    : std::runtime_error(std::string(to_string(e.kind)) + " at token " + std::to_string(e.position) +
                         ": " + e.message),
      error_(std::move(e)) {}

Lagrangian parse_lagrangian(const TokenSeq& seq) { return Parser(seq).lagrangian(); }

std::vector<Field> parse_fields(const TokenSeq& seq) { return Parser(seq).fields(); }

ParseResult parse(const TokenSeq& seq) {
  ParseResult r;
  try {
    r.lagrangian = parse_lagrangian(seq);
  } catch (const ParseException& e) {
    r.error = e.error();
  }
  return r;
}

}  // namespace lgen
