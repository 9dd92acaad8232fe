#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "lgen/sampler.hpp"
#include "ood_table.hpp"

using namespace lgen;
using namespace fixtures;

TEST_CASE("strategies") {
  const auto s = SamplingStrategy::sampled();
  double total = 0;
  for (auto [n, p] : s.field_count_probs) total += p;
  CHECK(total == doctest::Approx(1.0));
  CHECK(s.field_count_probs.at(4) == doctest::Approx(0.11));
  CHECK(s.trilinear_target == 0.5);
  CHECK(SamplingStrategy::by_name("uniform").charge_policy == ChargePolicy::PositiveOnly);
  CHECK_FALSE(SamplingStrategy::uniform().trilinear_target.has_value());
  CHECK_THROWS_AS(SamplingStrategy::by_name("gaussian"), std::invalid_argument);
}

TEST_CASE("field counts follow the strategy") {
  // Binomial standard error at 200k draws is about 0.1 percentage points.
  Rng rng(1);
  const auto s = SamplingStrategy::sampled();
  std::map<std::size_t, int> hist;
  const int draws = 200000;
  for (int k = 0; k < draws; ++k) ++hist[sample_field_count(s, rng)];
  for (auto [n, p] : s.field_count_probs) CHECK(std::abs(hist[n] / double(draws) - p) < 0.005);
}

TEST_CASE("sampled fields") {
  Rng rng(2);
  const auto s = SamplingStrategy::sampled();
  std::size_t scalars = 0, total = 0, negative = 0;
  for (int k = 0; k < 5000; ++k) {
    const auto fields = sample_field_content(s, 4, rng);
    CHECK(std::set<Field>(fields.begin(), fields.end()).size() == 4);
    for (const Field& f : fields) {
      CHECK_FALSE(f.daggered);
      CHECK_FALSE(f.u1_spelling.has_value());
      CHECK(std::abs(f.u1.num()) <= 9);
      CHECK(f.u1.den() <= 9);
      scalars += f.is_scalar();
      negative += f.u1.num() < 0;
      ++total;
    }
  }
  CHECK(std::abs(scalars / double(total) - 0.5) < 0.02);
  CHECK(negative > 0);

  const auto u = SamplingStrategy::uniform();
  for (int k = 0; k < 2000; ++k)
    for (const Field& f : sample_field_content(u, rng)) CHECK(f.u1 > Rational(0));
}

TEST_CASE("datasets are reproducible and fit the context") {
  const auto s = SamplingStrategy::sampled();
  const Dataset a = sample_dataset(s, 150, 9);
  const Dataset b = sample_dataset(s, 150, 9);
  REQUIRE(a.records.size() == 150);
  CHECK_FALSE(a.retry_cap_hit);
  std::set<std::vector<Field>> multi;
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    const DatasetRecord& r = a.records[k];
    CHECK(r.output_tokens == b.records[k].output_tokens);
    CHECK(r.output_tokens.size() < kContextLength);
    CHECK(r.output_tokens.front() == "SOS");
    CHECK(r.output_tokens.back() == "EOS");
    CHECK(r.input_tokens == tokenize_fields(r.input_fields));
    CHECK(r.meta.n_fields == r.input_fields.size());
    CHECK(parse_lagrangian(r.output_tokens).terms.size() == r.meta.n_terms);
    if (r.meta.n_fields >= s.dedup_min_fields) {
      std::vector<Field> sorted = r.input_fields;
      std::sort(sorted.begin(), sorted.end());
      CHECK(multi.insert(sorted).second);
    }
  }
  CHECK(sample_dataset(s, 20, 10).records.front().output_tokens != a.records.front().output_tokens);
}

TEST_CASE("trilinear enrichment") {
  const Dataset d = sample_dataset(SamplingStrategy::sampled(), 600, 4);
  const DatasetStats st = dataset_stats(d.records);
  CHECK(st.multi_field_records > 100);
  CHECK(std::abs(st.trilinear_fraction() - 0.5) < 0.05);
}

TEST_CASE("statistics") {
  CHECK(dataset_stats({}).trilinear_fraction() == 0.0);
  DatasetRecord r;
  REQUIRE(make_record({quark_doublet(), up_right(), higgs()}, 1, r));
  CHECK(r.meta.has_trilinear);
  const DatasetStats s = dataset_stats({r, r});
  CHECK(s.field_count.at(3) == 2);
  CHECK(s.multi_field_records == 2);
  CHECK(s.trilinear_fraction() == 1.0);
  CHECK(s.token_length.begin()->first % kTokenLengthBucket == 0);
}

TEST_CASE("oversized content is rejected") {
  std::vector<Field> big;
  for (int k = 1; k <= 10; ++k) big.push_back(scalar(T3, T2, Rational(k, 9)));
  DatasetRecord r;
  CHECK_FALSE(make_record(big, 0, r));
}

TEST_CASE("non-minimal spellings reproduce the conversion table") {
  const auto table = ood_table();
  Rng rng(6);
  std::size_t eligible = 0;
  for (const Rational& y : charge_set(ChargePolicy::Full)) {
    CAPTURE(y.str());
    const Rational magnitude = y < Rational(0) ? -y : y;
    std::set<ChargeSpelling> want;
    if (auto it = table.find(magnitude); it != table.end())
      for (ChargeSpelling c : it->second) want.insert({y < Rational(0) ? -c.num : c.num, c.den});

    const auto direct = ood_spellings(y);
    CHECK(std::set<ChargeSpelling>(direct.begin(), direct.end()) == want);

    // Reachable through random inflation.
    std::set<ChargeSpelling> reached;
    const Field f = scalar(S3, S2, y);
    if (want.empty()) {
      CHECK_THROWS_AS(inflate_charges_ood({f}, 1, rng), std::invalid_argument);
      continue;
    }
    ++eligible;
    for (int k = 0; k < 200; ++k) {
      const Field g = inflate_charges_ood({f}, 1, rng).front();
      REQUIRE(g.u1_spelling.has_value());
      CHECK(g.u1 == y);
      CHECK(Rational(g.u1_spelling->num, g.u1_spelling->den) == y);
      reached.insert(*g.u1_spelling);
    }
    CHECK(reached == want);
  }
  CHECK(eligible == 22);
}

TEST_CASE("inflation touches exactly k fields") {
  Rng rng(8);
  const std::vector<Field> fields{higgs(), quark_doublet(), up_right(), scalar(S3, S2, Rational(5, 7))};
  const auto out = inflate_charges_ood(fields, 3, rng);
  int spelled = 0;
  for (const Field& f : out) spelled += f.u1_spelling.has_value();
  CHECK(spelled == 3);
  CHECK_FALSE(out[3].u1_spelling.has_value());
  CHECK_THROWS_AS(inflate_charges_ood(fields, 4, rng), std::invalid_argument);
}
