// lgen: generate, sample, score and validate tokenized Lagrangians.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lgen/field_spec.hpp"
#include "lgen/json_io.hpp"
#include "lgen/lagrangian.hpp"

namespace {

using namespace lgen;

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kMalformed = 3, kDuplicate = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) lines.pop_back();
  return lines;
}

// A line is either token text or a JSONL record carrying output_tokens.
TokenSeq line_tokens(const std::string& line) {
  const auto first = line.find_first_not_of(" \t");
  if (first != std::string::npos && line[first] == '{') {
    try {
      return json::parse(line).at("output_tokens").get<TokenSeq>();
    } catch (const json::exception& e) {
      throw MalformedInput(std::string("bad JSON line: ") + e.what());
    }
  }
  return split_tokens(line);
}

int cmd_generate(const std::string& spec, std::uint64_t seed, const std::string& format,
                 const std::string& out) {
  if (spec.find_first_not_of(" \t;") == std::string::npos) {
    std::cerr << "generate: empty field specification\n";
    return kUsage;
  }
  std::vector<Field> fields;
  try {
    fields = parse_field_spec(spec);
  } catch (const FieldSpecError& e) {
    std::cerr << "generate: malformed field specification " << e.what() << "\n";
    return kMalformed;
  }
  Lagrangian l;
  try {
    l = assemble_lagrangian(fields, seed);
  } catch (const DuplicateFieldError& e) {
    std::cerr << "generate: " << e.what() << "\n";
    return kDuplicate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "generate: " << e.what() << "\n";
    return kMalformed;
  }
  const TokenSeq tokens = tokenize_lagrangian(l);
  if (format == "json") {
    json j;
    j["fields"] = json::array();
    for (const Field& f : fields) j["fields"].push_back(to_json(f));
    j["seed"] = seed;
    j["n_terms"] = l.terms.size();
    j["terms"] = json::array();
    for (const Term& t : l.terms) j["terms"].push_back(join_tokens(tokenize_term(t)));
    j["tokens"] = tokens;
    write_output(out, j.dump(2) + "\n");
  } else {
    write_output(out, join_tokens(tokens) + "\n");
  }
  return kOk;
}

int cmd_sample(const std::string& strategy_name, std::size_t n, std::uint64_t seed,
               const std::string& out, std::size_t ood_fields) {
  SamplingStrategy strategy;
  try {
    strategy = SamplingStrategy::by_name(strategy_name);
  } catch (const std::invalid_argument& e) {
    std::cerr << "sample: " << e.what() << "\n";
    return kUsage;
  }
  if (n == 0) {
    std::cerr << "sample: --n must be positive\n";
    return kUsage;
  }
  Dataset d = sample_dataset(strategy, n, seed);
  if (ood_fields > 0) {
    // Keep records with enough eligible charges, regenerated with the
    // non-minimal spellings.
    Rng rng(seed ^ 0x00d5eedULL);
    std::vector<DatasetRecord> kept;
    for (const DatasetRecord& r : d.records) {
      std::vector<Field> inflated;
      try {
        inflated = inflate_charges_ood(r.input_fields, ood_fields, rng);
      } catch (const std::invalid_argument&) {
        continue;
      }
      DatasetRecord rec;
      if (make_record(inflated, r.meta.seed, rec)) kept.push_back(std::move(rec));
    }
    d.records = std::move(kept);
  }

  std::ostringstream body;
  for (const DatasetRecord& r : d.records) body << to_json(r).dump() << "\n";
  write_output(out, body.str());

  json stats = to_json(dataset_stats(d.records));
  stats["strategy"] = strategy.name;
  stats["seed"] = seed;
  stats["requested"] = n;
  stats["draws"] = d.draws;
  stats["retry_cap_hit"] = d.retry_cap_hit;
  if (ood_fields) stats["ood_fields"] = ood_fields;
  write_output(out + ".stats.json", stats.dump(2) + "\n");
  if (d.retry_cap_hit) std::cerr << "sample: warning: retry cap reached, dataset may be partial\n";
  return kOk;
}

int cmd_score(const std::string& predicted_path, const std::string& expected_path,
              const std::string& out) {
  const std::vector<std::string> predicted = read_lines(predicted_path);
  const std::vector<std::string> expected = read_lines(expected_path);
  if (predicted.size() != expected.size())
    throw MalformedInput("line count mismatch: " + std::to_string(predicted.size()) + " predicted vs " +
                         std::to_string(expected.size()) + " expected");

  json pairs = json::array();
  double sums[4] = {0, 0, 0, 0};
  std::size_t perfect = 0;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const ParseResult e = parse(line_tokens(expected[k]));
    if (!e.ok())
      throw MalformedInput("expected line " + std::to_string(k + 1) + ": " + e.error->message);
    if (e.lagrangian.terms.empty())
      throw MalformedInput("expected line " + std::to_string(k + 1) + " has no terms");
    const TokenSeq ptoks = line_tokens(predicted[k]);
    const ParseResult p = parse(ptoks);
    const ScoreReport r = score(p.ok() ? p.lagrangian : Lagrangian{}, e.lagrangian);
    json entry = to_json(r);
    entry["line"] = k + 1;
    if (!p.ok()) entry["validation"] = to_json(validate_reasonable(ptoks));
    pairs.push_back(std::move(entry));
    sums[0] += r.s_object.to_double();
    sums[1] += r.s_contraction.to_double();
    sums[2] += r.p_length.to_double();
    sums[3] += r.s_lagrangian.to_double();
    perfect += r.s_lagrangian == Rational(1);
  }
  const double n = expected.empty() ? 1.0 : static_cast<double>(expected.size());
  json agg{{"pairs", expected.size()},
           {"mean_s_object", sums[0] / n},
           {"mean_s_contraction", sums[1] / n},
           {"mean_p_length", sums[2] / n},
           {"mean_s_lagrangian", sums[3] / n},
           {"perfect_fraction", static_cast<double>(perfect) / n}};
  write_output(out, json{{"pairs", pairs}, {"aggregate", agg}}.dump(2) + "\n");
  return kOk;
}

int cmd_validate(const std::string& path, const std::string& out) {
  const std::vector<std::string> lines = read_lines(path);
  json reports = json::array();
  std::size_t reasonable = 0, conserving = 0;
  std::size_t per_check[kCheckCount] = {};
  for (std::size_t k = 0; k < lines.size(); ++k) {
    TokenSeq toks;
    try {
      toks = line_tokens(lines[k]);
    } catch (const MalformedInput&) {
      toks = {};
    }
    const ValidationReport r = validate_reasonable(toks);
    json entry = to_json(r);
    entry["line"] = k + 1;
    reports.push_back(std::move(entry));
    reasonable += r.reasonable();
    conserving += r.u1_conserved;
    for (std::size_t c = 0; c < kCheckCount; ++c) per_check[c] += r.checks[c].passed;
  }
  const double n = lines.empty() ? 1.0 : static_cast<double>(lines.size());
  json checks = json::object();
  for (std::size_t c = 0; c < kCheckCount; ++c)
    checks[std::string(to_string(static_cast<Check>(c)))] = 100.0 * static_cast<double>(per_check[c]) / n;
  json agg{{"lines", lines.size()},
           {"reasonable_percent", 100.0 * static_cast<double>(reasonable) / n},
           {"u1_conserving_percent", 100.0 * static_cast<double>(conserving) / n},
           {"check_pass_percent", checks}};
  write_output(out, json{{"lines", reports}, {"aggregate", agg}}.dump(2) + "\n");
  return kOk;
}

int cmd_vocab(const std::string& format, const std::string& out) {
  const auto& v = vocabulary();
  if (format == "json") {
    json j = json::array();
    for (std::size_t k = 0; k < v.size(); ++k) j.push_back({{"id", k}, {"token", v[k]}});
    write_output(out, j.dump(2) + "\n");
  } else {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += std::to_string(k) + "\t" + v[k] + "\n";
    write_output(out, s);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and evaluate tokenized SU(3) x SU(2) x U(1) Lagrangians"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out, format = "text", strategy = "sampled", predicted, expected, input;
  std::vector<std::string> specs;
  std::size_t n = 1000, ood = 0;

  auto* gen = app.add_subcommand("generate", "Build the Lagrangian for a field list");
  gen->add_option("fields", specs, "Entries like \"scalar 1 2 1; fermionL 3 2 1/3\", one or more arguments")
      ->required();
  gen->add_option("--seed", seed, "Seed for id assignment");
  gen->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  gen->add_option("--out", out, "Output file (default stdout)");

  auto* smp = app.add_subcommand("sample", "Write a JSONL dataset and a stats sidecar");
  smp->add_option("--strategy", strategy, "sampled or uniform");
  smp->add_option("--n", n, "Number of records");
  smp->add_option("--seed", seed, "Dataset seed");
  smp->add_option("--out", out, "Output JSONL path")->required();
  smp->add_option("--ood", ood, "Rewrite this many charges per record with non-minimal spellings");

  auto* scr = app.add_subcommand("score", "Score predicted against expected Lagrangians by line");
  scr->add_option("predicted", predicted, "Predicted token file")->required();
  scr->add_option("expected", expected, "Expected token file")->required();
  scr->add_option("--out", out, "Output file (default stdout)");

  auto* val = app.add_subcommand("validate", "Reasonableness and U(1) report per line");
  val->add_option("file", input, "Token file")->required();
  val->add_option("--out", out, "Output file (default stdout)");

  auto* voc = app.add_subcommand("vocab", "Print the token id mapping");
  voc->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  voc->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      std::string spec;
      for (const std::string& s : specs) spec += (spec.empty() ? "" : ";") + s;
      return cmd_generate(spec, seed, format, out);
    }
    if (*smp) return cmd_sample(strategy, n, seed, out, ood);
    if (*scr) return cmd_score(predicted, expected, out);
    if (*val) return cmd_validate(input, out);
    if (*voc) return cmd_vocab(format, out);
  } catch (const IoError& e) {
    std::cerr << "lgen: " << e.what() << "\n";
    return kIo;
  } catch (const MalformedInput& e) {
    std::cerr << "lgen: " << e.what() << "\n";
    return kMalformed;
  }
  return kUsage;
}
