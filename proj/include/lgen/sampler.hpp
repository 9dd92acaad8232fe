#pragma once

// Dataset generation: random field content, context-length filter,
// trilinear enrichment and out-of-distribution charge spellings.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lgen/tokenizer.hpp"

namespace lgen {

struct SamplingStrategy {
  std::string name;
  std::map<int, double> field_count_probs;
  ChargePolicy charge_policy = ChargePolicy::Full;
  std::optional<double> trilinear_target;  // among records with > 2 fields
  // Records with at least this many fields are unique by field multiset.
  // One-field content is too small a space to deduplicate at scale.
  std::size_t dedup_min_fields = 2;
  std::size_t retry_cap = 1000;  // draws per record before giving up

  static SamplingStrategy sampled();
  static SamplingStrategy uniform();
  /// Throws std::invalid_argument for an unknown name.
  static SamplingStrategy by_name(const std::string& name);
};

struct RecordMeta {
  std::size_t n_fields = 0;
  bool has_trilinear = false;
  std::size_t n_terms = 0;
  std::uint64_t seed = 0;
};

struct DatasetRecord {
  std::vector<Field> input_fields;
  TokenSeq input_tokens;
  TokenSeq output_tokens;
  RecordMeta meta;
};

struct Dataset {
  std::vector<DatasetRecord> records;
  bool retry_cap_hit = false;
  std::size_t draws = 0;
};

using Rng = std::mt19937_64;

std::vector<Field> sample_field_content(const SamplingStrategy& s, Rng& rng);
std::vector<Field> sample_field_content(const SamplingStrategy& s, std::size_t n_fields, Rng& rng);
std::size_t sample_field_count(const SamplingStrategy& s, Rng& rng);

Dataset sample_dataset(const SamplingStrategy& s, std::size_t n, std::uint64_t seed);

/// One record for a fixed field list; false if it does not fit the context.
bool make_record(const std::vector<Field>& fields, std::uint64_t seed, DatasetRecord& out);

/// Non-minimal spellings k*p / k*q (k >= 2) within single digits. Empty
/// for zero and for charges with no such spelling.
std::vector<ChargeSpelling> ood_spellings(const Hypercharge& y);

/// Rewrites `k` randomly chosen eligible fields with a random non-minimal
/// spelling. Throws std::invalid_argument if fewer than k are eligible.
std::vector<Field> inflate_charges_ood(const std::vector<Field>& fields, std::size_t k, Rng& rng);

struct DatasetStats {
  std::map<std::size_t, std::size_t> field_count;
  std::map<std::size_t, std::size_t> term_count;
  std::map<std::size_t, std::size_t> token_length;  // bucketed by 64
  std::size_t multi_field_records = 0;               // more than two fields
  std::size_t multi_field_trilinear = 0;
  double trilinear_fraction() const;
};

inline constexpr std::size_t kTokenLengthBucket = 64;

DatasetStats dataset_stats(const std::vector<DatasetRecord>& records);

}  // namespace lgen
