// Copyright 2026 The shapestego Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shapestego/shapestego.hpp"

namespace shapestego::cli {

enum ExitCode : int {
  kOk = 0,
  kCapacity = 2,
  kBadFrame = 3,
  kBadArgs = 4,
  kIo = 5,
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

/// Writes via a sibling temp file and renames, so a failed command never
/// leaves a partial output behind. Empty path means standard output.
inline void write_output(const std::string& path, std::string_view data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp.string());
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!f.flush()) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed for " + path);
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename onto " + path);
  }
}

/// Flags shared by embed and extract.
struct MethodFlags {
  std::string method;
  std::string carrier;
  std::string lexicon_path;
  std::string pair = "FK";
  double gap_mean = 4.9;
  std::size_t words_per_sentence = 14;
  std::size_t min_word = 2;
  std::size_t max_word = 6;

  void attach(CLI::App* app) {
    app->add_option("--method", method, "curve|vertical|quadruple|feature|interword|"
                                        "intersentence|designated")
        ->required()
        ->check(CLI::IsMember({"curve", "vertical", "quadruple", "feature", "interword",
                               "intersentence", "designated"}));
    app->add_option("--carrier", carrier, "sift|direct|sentence-substitute|sentence-prepend")
        ->check(CLI::IsMember({"sift", "direct", "sentence-substitute", "sentence-prepend"}));
    app->add_option("--lexicon", lexicon_path, "lexicon file (<scheme>:<group>:<word> lines)");
    app->add_option("--pair", pair, "designated characters for 0 and 1, e.g. FK");
    app->add_option("--gap-mean", gap_mean, "mean noise letters per bit (designated)")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--words-per-sentence", words_per_sentence)->check(CLI::PositiveNumber);
    app->add_option("--min-word-len", min_word)->check(CLI::PositiveNumber);
    app->add_option("--max-word-len", max_word)->check(CLI::PositiveNumber);
  }

  MethodSpec spec() const {
    const bool scheme_method = method == "curve" || method == "vertical" || method == "quadruple";
    if (!scheme_method) {
      if (!carrier.empty()) {
        throw std::invalid_argument("--carrier applies to curve, vertical and quadruple only");
      }
      return parse_method_spec(method);
    }
    return parse_method_spec((carrier.empty() ? std::string("sift") : carrier) + "/" + method);
  }

  MethodParams params(const Lexicon*& storage, std::optional<Lexicon>& owned) const {
    MethodParams p;
    p.word_len = {min_word, max_word};
    p.words_per_sentence = words_per_sentence;
    if (pair.size() != 2) throw std::invalid_argument("--pair takes exactly two letters");
    p.pair = DesignatedPair{pair[0], pair[1], gap_mean}.normalized();
    if (!lexicon_path.empty()) {
      std::istringstream in(read_file(lexicon_path));
      owned = Lexicon::parse(in);
      storage = &*owned;
    }
    p.lexicon = storage;
    return p;
  }
};

inline std::vector<std::size_t> default_cover_for(const std::vector<std::size_t>& sizes) {
  const BenchConfig defaults;
  std::vector<std::size_t> covers;
  for (std::size_t m : sizes) {
    const auto it = std::find(defaults.message_sizes.begin(), defaults.message_sizes.end(), m);
    if (it == defaults.message_sizes.end()) {
      throw std::invalid_argument("no default cover size for message size " + std::to_string(m) +
                                  "; pass --covers");
    }
    covers.push_back(defaults.cover_sizes[static_cast<std::size_t>(
        it - defaults.message_sizes.begin())]);
  }
  return covers;
}

/// Runs one command line; returns the process exit code. `args` excludes
/// the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Letter-shape text steganography toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = kDefaultSeed.value;

  // embed ------------------------------------------------------------------
  auto* embed = app.add_subcommand("embed", "hide a framed message in cover text");
  MethodFlags embed_flags;
  embed_flags.attach(embed);
  std::string embed_in, embed_out, embed_cover;
  std::size_t embed_gen = 0;
  embed->add_option("--in", embed_in, "message file")->required();
  embed->add_option("--out", embed_out, "stego output file (default stdout)");
  auto* cover_opt = embed->add_option("--cover", embed_cover, "cover text file");
  embed->add_option("--gen-cover", embed_gen, "generate a cover of this many bytes")
      ->check(CLI::PositiveNumber)
      ->excludes(cover_opt);
  embed->add_option("--seed", seed);

  // extract ----------------------------------------------------------------
  auto* extract = app.add_subcommand("extract", "recover a framed message from stego text");
  MethodFlags extract_flags;
  extract_flags.attach(extract);
  std::string extract_in, extract_out;
  extract->add_option("--in", extract_in, "stego file")->required();
  extract->add_option("--out", extract_out, "message output file (default stdout)");
  extract->add_option("--seed", seed);

  // classify ---------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "show group and code for each letter");
  std::string classify_scheme, classify_text;
  classify->add_option("--scheme", classify_scheme)
      ->required()
      ->check(CLI::IsMember({"curve", "vertical", "quadruple"}));
  classify->add_option("--text", classify_text)->required();

  // gen-cover --------------------------------------------------------------
  auto* gencover = app.add_subcommand("gen-cover", "write a seeded random cover");
  std::string gen_kind, gen_out;
  std::size_t gen_bytes = 0, gen_wps = 14, gen_min = 2, gen_max = 6;
  gencover->add_option("--kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"letters", "words", "sentences"}));
  gencover->add_option("--bytes", gen_bytes)->required()->check(CLI::PositiveNumber);
  gencover->add_option("--seed", seed);
  gencover->add_option("--out", gen_out);
  gencover->add_option("--words-per-sentence", gen_wps)->check(CLI::PositiveNumber);
  gencover->add_option("--min-word-len", gen_min)->check(CLI::PositiveNumber);
  gencover->add_option("--max-word-len", gen_max)->check(CLI::PositiveNumber);

  // capacity ---------------------------------------------------------------
  auto* capacity = app.add_subcommand("capacity", "mean and spread of capacity over seeds");
  MethodFlags cap_flags;
  std::size_t cap_cover = 0, cap_seeds = 1;
  capacity->add_option("--cover-bytes", cap_cover)->required()->check(CLI::PositiveNumber);
  capacity->add_option("--method", cap_flags.method)
      ->check(CLI::IsMember({"curve", "vertical", "quadruple", "feature", "interword",
                             "intersentence", "designated"}));
  capacity->add_option("--carrier", cap_flags.carrier)
      ->check(CLI::IsMember({"sift", "direct", "sentence-substitute", "sentence-prepend"}));
  capacity->add_option("--seeds", cap_seeds, "number of seeds, counting up from --seed")
      ->check(CLI::PositiveNumber);
  capacity->add_option("--seed", seed);
  capacity->add_option("--gap-mean", cap_flags.gap_mean)->check(CLI::NonNegativeNumber);
  capacity->add_option("--pair", cap_flags.pair);
  capacity->add_option("--words-per-sentence", cap_flags.words_per_sentence)
      ->check(CLI::PositiveNumber);
  capacity->add_option("--min-word-len", cap_flags.min_word)->check(CLI::PositiveNumber);
  capacity->add_option("--max-word-len", cap_flags.max_word)->check(CLI::PositiveNumber);

  // bench ------------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "run the capacity suite");
  std::vector<std::size_t> bench_sizes, bench_covers;
  std::vector<std::string> bench_methods;
  std::size_t bench_seeds = 1;
  unsigned bench_threads = 1;
  std::string bench_out, bench_svg, bench_metric = "bytes_hidden";
  MethodFlags bench_flags;
  bench->add_option("--sizes", bench_sizes, "message sizes")->delimiter(',');
  bench->add_option("--covers", bench_covers, "cover sizes matching --sizes")->delimiter(',');
  bench->add_option("--methods", bench_methods, "e.g. sift/curve,feature")->delimiter(',');
  bench->add_option("--seeds", bench_seeds, "number of seeds, counting up from --seed")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed);
  bench->add_option("--threads", bench_threads)->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "CSV output (default stdout)");
  bench->add_option("--svg", bench_svg, "SVG chart output");
  bench->add_option("--metric", bench_metric, "chart metric")
      ->check(CLI::IsMember({"bytes_hidden", "elapsed_micros"}));
  bench->add_option("--gap-mean", bench_flags.gap_mean)->check(CLI::NonNegativeNumber);
  bench->add_option("--pair", bench_flags.pair);
  bench->add_option("--words-per-sentence", bench_flags.words_per_sentence)
      ->check(CLI::PositiveNumber);
  bench->add_option("--min-word-len", bench_flags.min_word)->check(CLI::PositiveNumber);
  bench->add_option("--max-word-len", bench_flags.max_word)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadArgs;
  }

  try {
    if (embed->parsed()) {
      const MethodSpec spec = embed_flags.spec();
      const Lexicon* lex = nullptr;
      std::optional<Lexicon> owned;
      const MethodParams params = embed_flags.params(lex, owned);
      const auto kind = natural_cover(spec.method);
      if (kind && embed_cover.empty() && embed_gen == 0) {
        throw std::invalid_argument(spec.label() + " needs --cover or --gen-cover");
      }
      const std::string message = read_file(embed_in);
      std::string cover;
      if (!embed_cover.empty()) {
        cover = read_file(embed_cover);
      } else if (kind) {
        cover = gen_cover(CoverSpec{*kind, embed_gen, params.word_len, params.words_per_sentence},
                          derive(Seed{seed}, kCoverStream));
      }
      const BitString payload = frame(to_bytes(message));
      std::optional<std::size_t> budget;
      if (!kind && embed_gen > 0) budget = embed_gen;
      const EmbedResult r =
          embed_with(spec, payload, cover, derive(Seed{seed}, kEmbedStream), params, budget);
      write_output(embed_out, r.stego, out);
      err << "embedded=" << r.bits_embedded << " consumed=" << r.cover_consumed
          << " skipped=" << r.skipped << "\n";
      return kOk;
    }

    if (extract->parsed()) {
      const MethodSpec spec = extract_flags.spec();
      const Lexicon* lex = nullptr;
      std::optional<Lexicon> owned;
      const MethodParams params = extract_flags.params(lex, owned);
      const std::string stego = read_file(extract_in);
      const Bytes message = deframe(extract_with(spec, stego, params));
      write_output(extract_out, to_text(message), out);
      return kOk;
    }

    if (classify->parsed()) {
      const Scheme& scheme = Scheme::get(parse_scheme(classify_scheme));
      std::string line;
      for (char c : classify_text) {
        if (!is_ascii_letter(c)) continue;
        const Group& g = group_of(c, scheme);
        if (!line.empty()) line.push_back(' ');
        line += std::string(1, c) + ":" + g.id + ":" + g.bits().to_string();
      }
      out << line << "\n";
      return kOk;
    }

    if (gencover->parsed()) {
      const CoverSpec spec{parse_cover_kind(gen_kind), gen_bytes, {gen_min, gen_max}, gen_wps};
      write_output(gen_out, gen_cover(spec, derive(Seed{seed}, kCoverStream)), out);
      return kOk;
    }

    if (capacity->parsed()) {
      const Lexicon* lex = nullptr;
      std::optional<Lexicon> owned;
      const MethodParams params = cap_flags.params(lex, owned);
      std::vector<MethodSpec> specs;
      if (cap_flags.method.empty()) {
        if (!cap_flags.carrier.empty()) throw std::invalid_argument("--carrier needs --method");
        specs = table_methods();
      } else {
        specs.push_back(cap_flags.spec());
      }
      for (const MethodSpec& spec : specs) {
        std::vector<double> caps;
        for (std::size_t i = 0; i < cap_seeds; ++i) {
          caps.push_back(static_cast<double>(capacity_of(spec, cap_cover, Seed{seed + i}, params)));
        }
        double mean = 0;
        for (double c : caps) mean += c;
        mean /= static_cast<double>(caps.size());
        double var = 0;
        for (double c : caps) var += (c - mean) * (c - mean);
        const double sd = caps.size() > 1 ? std::sqrt(var / static_cast<double>(caps.size() - 1)) : 0;
        out << spec.label() << " cover_bytes=" << cap_cover << " seeds=" << cap_seeds
            << " mean=" << detail::fmt_num(mean) << " stddev=" << detail::fmt_num(sd) << "\n";
      }
      return kOk;
    }

    if (bench->parsed()) {
      BenchConfig config;
      const Lexicon* lex = nullptr;
      std::optional<Lexicon> owned;
      config.params = bench_flags.params(lex, owned);
      if (!bench_sizes.empty()) {
        config.message_sizes = bench_sizes;
        config.cover_sizes = bench_covers.empty() ? default_cover_for(bench_sizes) : bench_covers;
      } else if (!bench_covers.empty()) {
        throw std::invalid_argument("--covers needs --sizes");
      }
      if (!bench_methods.empty()) {
        config.methods.clear();
        for (const auto& m : bench_methods) config.methods.push_back(parse_method_spec(m));
      }
      config.seeds.clear();
      for (std::size_t i = 0; i < bench_seeds; ++i) config.seeds.push_back(Seed{seed + i});
      config.threads = bench_threads;
      const auto records = run_suite(config);
      for (const auto& r : records) {
        if (!r.failure.empty()) err << "row " << r.series() << " failed: " << r.failure << "\n";
      }
      std::ostringstream csv;
      write_csv(records, csv);
      write_output(bench_out, csv.str(), out);
      if (!bench_svg.empty()) {
        std::ostringstream svg;
        render_chart(records,
                     bench_metric == "bytes_hidden" ? ChartMetric::BytesHidden
                                                    : ChartMetric::ElapsedMicros,
                     svg);
        write_output(bench_svg, svg.str(), out);
      }
      return kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.is_capacity()) return kCapacity;
    switch (e.code()) {
      case Errc::Truncated:
      case Errc::MalformedGap:
      case Errc::RaggedLength: return kBadFrame;
      case Errc::BadLexicon:
      case Errc::TooLong: return kBadArgs;
      default: return kBadArgs;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadArgs;
  }
  return kBadArgs;
}

}  // namespace shapestego::cli
