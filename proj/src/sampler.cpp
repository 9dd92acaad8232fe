#include "lgen/sampler.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lgen/lagrangian.hpp"

namespace lgen {

SamplingStrategy SamplingStrategy::sampled() {
  SamplingStrategy s;
  s.name = "sampled";
  s.field_count_probs = {{1, 0.25}, {2, 0.25}, {3, 0.25}, {4, 0.11}, {5, 0.07}, {6, 0.07}};
  s.charge_policy = ChargePolicy::Full;
  s.trilinear_target = 0.5;
  return s;
}

SamplingStrategy SamplingStrategy::uniform() {
  SamplingStrategy s;
  s.name = "uniform";
  for (int n = 1; n <= 6; ++n) s.field_count_probs[n] = 1.0 / 6.0;
  s.charge_policy = ChargePolicy::PositiveOnly;
  return s;
}

SamplingStrategy SamplingStrategy::by_name(const std::string& name) {
  if (name == "sampled") return sampled();
  if (name == "uniform") return uniform();
  throw std::invalid_argument("unknown strategy '" + name + "' (expected sampled or uniform)");
}

std::size_t sample_field_count(const SamplingStrategy& s, Rng& rng) {
  std::vector<int> counts;
  std::vector<double> weights;
  for (auto [n, p] : s.field_count_probs) {
    counts.push_back(n);
    weights.push_back(p);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  return static_cast<std::size_t>(counts[pick(rng)]);
}

namespace {

Field sample_field(const SamplingStrategy& s, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> rep(0, 2);
  std::uniform_int_distribution<int> numerator(s.charge_policy == ChargePolicy::Full ? -9 : 1, 9);
  std::uniform_int_distribution<int> denominator(1, 9);

  const bool fermion = coin(rng);
  const Helicity h = fermion && coin(rng) ? Helicity::Right : Helicity::Left;
  const auto su3 = static_cast<SU3Rep>(rep(rng));
  const auto su2 = static_cast<SU2Rep>(rep(rng));
  const int p = numerator(rng);
  const int q = denominator(rng);
  const Hypercharge y = reduce_fraction(p, q);
  return fermion ? make_fermion(h, su3, su2, y) : make_scalar(su3, su2, y);
}

std::string content_key(std::vector<Field> fields) {
  std::sort(fields.begin(), fields.end());
  std::string key;
  for (const Field& f : fields) key += to_string(f) + ";";
  return key;
}

}  // namespace

std::vector<Field> sample_field_content(const SamplingStrategy& s, std::size_t n_fields, Rng& rng) {
  std::vector<Field> out;
  while (out.size() < n_fields) {
    Field f = sample_field(s, rng);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

std::vector<Field> sample_field_content(const SamplingStrategy& s, Rng& rng) {
  const std::size_t n = sample_field_count(s, rng);
  return sample_field_content(s, n, rng);
}

bool make_record(const std::vector<Field>& fields, std::uint64_t seed, DatasetRecord& out) {
  Lagrangian l;
  if (!assemble_within_budget(fields, seed, kContextLength, l)) return false;
  out.output_tokens = tokenize_lagrangian(l);
  if (out.output_tokens.size() >= kContextLength) return false;
  out.input_fields = fields;
  out.input_tokens = tokenize_fields(fields);
  out.meta.n_fields = fields.size();
  out.meta.n_terms = l.terms.size();
  out.meta.seed = seed;
  out.meta.has_trilinear = std::any_of(l.terms.begin(), l.terms.end(), is_trilinear);
  return true;
}

Dataset sample_dataset(const SamplingStrategy& s, std::size_t n, std::uint64_t seed) {
  Dataset d;
  Rng rng(seed);
  std::set<std::string> seen;
  std::size_t multi = 0, multi_tri = 0;
  d.records.reserve(n);

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t n_fields = sample_field_count(s, rng);
    std::optional<bool> want_trilinear;
    if (s.trilinear_target && n_fields > 2)
      want_trilinear = static_cast<double>(multi_tri) < *s.trilinear_target * static_cast<double>(multi + 1);

    for (std::size_t attempt = 1;; ++attempt) {
      if (attempt > 2 * s.retry_cap) {
        d.retry_cap_hit = true;
        break;
      }
      const bool relaxed = attempt > s.retry_cap;
      const std::uint64_t record_seed = rng();
      const std::vector<Field> fields = sample_field_content(s, n_fields, rng);
      ++d.draws;

      const bool dedup = n_fields >= s.dedup_min_fields;
      std::string key;
      if (dedup) {
        key = content_key(fields);
        if (seen.count(key)) continue;
      }
      if (want_trilinear && !relaxed && has_trilinear_term(fields) != *want_trilinear) continue;

      DatasetRecord rec;
      if (!make_record(fields, record_seed, rec)) continue;
      if (relaxed) d.retry_cap_hit = true;
      if (dedup) seen.insert(key);
      if (n_fields > 2) {
        ++multi;
        multi_tri += rec.meta.has_trilinear;
      }
      d.records.push_back(std::move(rec));
      break;
    }
  }
  return d;
}

std::vector<ChargeSpelling> ood_spellings(const Hypercharge& y) {
  std::vector<ChargeSpelling> out;
  if (y.is_zero()) return out;
  const std::int64_t p = y.num() < 0 ? -y.num() : y.num();
  const std::int64_t q = y.den();
  for (std::int64_t k = 2; k * p <= 9 && k * q <= 9; ++k)
    out.push_back(ChargeSpelling{static_cast<int>(y.num() < 0 ? -k * p : k * p), static_cast<int>(k * q)});
  return out;
}

std::vector<Field> inflate_charges_ood(const std::vector<Field>& fields, std::size_t k, Rng& rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < fields.size(); ++i)
    if (!ood_spellings(fields[i].u1).empty()) eligible.push_back(i);
  if (eligible.size() < k)
    throw std::invalid_argument("only " + std::to_string(eligible.size()) +
                                " fields have a non-minimal charge spelling, " + std::to_string(k) +
                                " requested");
  std::shuffle(eligible.begin(), eligible.end(), rng);
  std::vector<Field> out = fields;
  for (std::size_t j = 0; j < k; ++j) {
    Field& f = out[eligible[j]];
    const std::vector<ChargeSpelling> options = ood_spellings(f.u1);
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    f.u1_spelling = options[pick(rng)];
  }
  return out;
}

double DatasetStats::trilinear_fraction() const {
  return multi_field_records ? static_cast<double>(multi_field_trilinear) / static_cast<double>(multi_field_records)
                             : 0.0;
}

DatasetStats dataset_stats(const std::vector<DatasetRecord>& records) {
  DatasetStats s;
  for (const DatasetRecord& r : records) {
    ++s.field_count[r.meta.n_fields];
    ++s.term_count[r.meta.n_terms];
    ++s.token_length[r.output_tokens.size() / kTokenLengthBucket * kTokenLengthBucket];
    if (r.meta.n_fields > 2) {
      ++s.multi_field_records;
      s.multi_field_trilinear += r.meta.has_trilinear;
    }
  }
  return s;
}

}  // namespace lgen
