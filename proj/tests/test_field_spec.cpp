#include <doctest.h>

#include "fixtures.hpp"
#include "lgen/field_spec.hpp"
#include "lgen/json_io.hpp"

using namespace lgen;
using namespace fixtures;

TEST_CASE("field lists in compact text") {
  const auto f = parse_field_spec("fermionL 3 2 1/3; fermionR 3 1 4/3;scalar 1 2 1");
  CHECK(f == std::vector<Field>{quark_doublet(), up_right(), higgs()});
  CHECK(format_field_spec(f) == "fermionL 3 2 1/3; fermionR 3 1 4/3; scalar 1 2 1");
  CHECK(parse_field_spec(format_field_spec(f)) == f);

  const auto bar = parse_field_spec("scalar 3bar 1 -2/6");
  CHECK(bar[0].su3 == SU3Rep::AntiTriplet);
  CHECK(bar[0].u1 == Rational(-1, 3));
  CHECK(bar[0].u1_spelling == ChargeSpelling{-2, 6});
  CHECK(format_field_spec(bar) == "scalar -3 1 -2/6");
  CHECK(parse_field_spec("scalar 1 1 0")[0].u1.is_zero());
  CHECK_FALSE(parse_field_spec("scalar 1 1 0")[0].u1_spelling.has_value());
}

TEST_CASE("compact text errors carry a position") {
  auto position = [](const std::string& s) {
    try {
      parse_field_spec(s);
    } catch (const FieldSpecError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("") == 0);
  CHECK(position("scalar 1 2") == 0);
  CHECK(position("scalar 4 2 1") == 7);
  CHECK(position("scalar 1 2 1; vector 1 1 0") == 14);
  CHECK(position("scalar 1 2 x") == 11);
  CHECK(position("scalar 1 2 1/0") == 11);
  CHECK(position("scalar 1 2 1;; scalar 1 1 1") == 13);
}

TEST_CASE("JSON forms") {
  Field f = conjugate(quark_doublet());
  f.u1_spelling = ChargeSpelling{-2, 6};
  const json j = to_json(f);
  CHECK(j["spin"] == "1/2");
  CHECK(j["su3"] == -3);
  CHECK(field_from_json(j) == f);
  CHECK_THROWS_AS(field_from_json(json{{"spin", "1"}}), std::invalid_argument);

  DatasetRecord r;
  REQUIRE(make_record({quark_doublet(), higgs()}, 3, r));
  const DatasetRecord back = record_from_json(json::parse(to_json(r).dump()));
  CHECK(back.input_fields == r.input_fields);
  CHECK(back.output_tokens == r.output_tokens);
  CHECK(back.meta.seed == 3);
  CHECK(rational_json(Rational(-3, 6))["exact"] == "-1/2");
}
