#include "lgen/json_io.hpp"

#include <stdexcept>

namespace lgen {

namespace {

int su3_code(SU3Rep r) { return r == SU3Rep::Singlet ? 1 : r == SU3Rep::Triplet ? 3 : -3; }
int su2_code(SU2Rep r) { return slot_count(r) + 1; }

SU3Rep su3_from_code(int c) {
  switch (c) {
    case 1: return SU3Rep::Singlet;
    case 3: return SU3Rep::Triplet;
    case -3: return SU3Rep::AntiTriplet;
  }
  throw std::invalid_argument("su3 must be 1, 3 or -3");
}

SU2Rep su2_from_code(int c) {
  switch (c) {
    case 1: return SU2Rep::Singlet;
    case 2: return SU2Rep::Doublet;
    case 3: return SU2Rep::Triplet;
  }
  throw std::invalid_argument("su2 must be 1, 2 or 3");
}

template <typename Map>
json histogram(const Map& m) {
  json h = json::object();
  for (const auto& [k, v] : m) h[std::to_string(k)] = v;
  return h;
}

}  // namespace

json rational_json(const Rational& r) { return json{{"exact", r.str()}, {"value", r.to_double()}}; }

json to_json(const Field& f) {
  json j;
  j["spin"] = f.is_scalar() ? "0" : "1/2";
  if (f.is_fermion()) j["helicity"] = f.helicity == Helicity::Left ? "L" : "R";
  j["su3"] = su3_code(f.su3);
  j["su2"] = su2_code(f.su2);
  j["u1_num"] = f.u1.num();
  j["u1_den"] = f.u1.den();
  if (f.u1_spelling) j["u1_spelling"] = {f.u1_spelling->num, f.u1_spelling->den};
  if (f.daggered) j["daggered"] = true;
  return j;
}

Field field_from_json(const json& j) {
  try {
    const std::string spin = j.at("spin").get<std::string>();
    const SU3Rep su3 = su3_from_code(j.at("su3").get<int>());
    const SU2Rep su2 = su2_from_code(j.at("su2").get<int>());
    const Hypercharge y = reduce_fraction(j.at("u1_num").get<std::int64_t>(), j.at("u1_den").get<std::int64_t>());
    Field f;
    if (spin == "0") {
      f = make_scalar(su3, su2, y);
    } else if (spin == "1/2") {
      const std::string h = j.at("helicity").get<std::string>();
      if (h != "L" && h != "R") throw std::invalid_argument("helicity must be L or R");
      f = make_fermion(h == "L" ? Helicity::Left : Helicity::Right, su3, su2, y);
    } else {
      throw std::invalid_argument("spin must be \"0\" or \"1/2\"");
    }
    if (j.contains("u1_spelling")) {
      const auto& s = j.at("u1_spelling");
      f.u1_spelling = ChargeSpelling{s.at(0).get<int>(), s.at(1).get<int>()};
    }
    f.daggered = j.value("daggered", false);
    return f;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad field object: ") + e.what());
  }
}

json to_json(const DatasetRecord& r) {
  json j;
  j["input_fields"] = json::array();
  for (const Field& f : r.input_fields) j["input_fields"].push_back(to_json(f));
  j["input_tokens"] = r.input_tokens;
  j["output_tokens"] = r.output_tokens;
  j["meta"] = {{"n_fields", r.meta.n_fields},
               {"has_trilinear", r.meta.has_trilinear},
               {"n_terms", r.meta.n_terms},
               {"seed", r.meta.seed}};
  return j;
}

DatasetRecord record_from_json(const json& j) {
  DatasetRecord r;
  try {
    for (const json& f : j.at("input_fields")) r.input_fields.push_back(field_from_json(f));
    r.input_tokens = j.at("input_tokens").get<TokenSeq>();
    r.output_tokens = j.at("output_tokens").get<TokenSeq>();
    const json& m = j.at("meta");
    r.meta.n_fields = m.at("n_fields").get<std::size_t>();
    r.meta.has_trilinear = m.at("has_trilinear").get<bool>();
    r.meta.n_terms = m.at("n_terms").get<std::size_t>();
    r.meta.seed = m.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
  return r;
}

json to_json(const DatasetStats& s) {
  std::size_t total = 0;
  for (const auto& [k, v] : s.field_count) total += v;
  return json{{"records", total},
              {"field_count", histogram(s.field_count)},
              {"term_count", histogram(s.term_count)},
              {"token_length_bucket", kTokenLengthBucket},
              {"token_length", histogram(s.token_length)},
              {"multi_field_records", s.multi_field_records},
              {"multi_field_trilinear", s.multi_field_trilinear},
              {"trilinear_fraction", s.trilinear_fraction()}};
}

json to_json(const ScoreReport& r) {
  return json{{"s_object", rational_json(r.s_object)},
              {"s_contraction", rational_json(r.s_contraction)},
              {"p_length", rational_json(r.p_length)},
              {"s_lagrangian", rational_json(r.s_lagrangian)},
              {"n_expected", r.n_expected},
              {"n_predicted", r.n_predicted},
              {"n_correct_objects", r.n_correct_objects},
              {"n_correct_contractions", r.n_correct_contractions},
              {"n_extra", r.n_extra}};
}

json to_json(const ValidationReport& r) {
  json checks = json::object();
  for (std::size_t k = 0; k < kCheckCount; ++k) {
    const CheckResult& c = r.checks[k];
    json entry{{"passed", c.passed}};
    if (!c.passed) entry["diagnostic"] = c.diagnostic;
    checks[std::string(to_string(static_cast<Check>(k)))] = entry;
  }
  json j{{"reasonable", r.reasonable()}, {"u1_conserved", r.u1_conserved}, {"checks", checks}};
  if (r.parse_error)
    j["parse_error"] = {{"kind", std::string(to_string(r.parse_error->kind))},
                        {"position", r.parse_error->position},
                        {"message", r.parse_error->message}};
  return j;
}

}  // namespace lgen
