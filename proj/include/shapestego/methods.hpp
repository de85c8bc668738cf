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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shapestego/alphabet.hpp"
#include "shapestego/baselines.hpp"
#include "shapestego/covergen.hpp"
#include "shapestego/schemes.hpp"

namespace shapestego {

enum class Method {
  Sift,
  Direct,
  SentenceSubstitute,
  SentencePrepend,
  Feature,
  InterWord,
  InterSentence,
  Designated,
};

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::Sift: return "sift";
    case Method::Direct: return "direct";
    case Method::SentenceSubstitute: return "sentence-substitute";
    case Method::SentencePrepend: return "sentence-prepend";
    case Method::Feature: return "feature";
    case Method::InterWord: return "interword";
    case Method::InterSentence: return "intersentence";
    case Method::Designated: return "designated";
  }
  return "?";
}

/// A carrier plus, for the letter-shape carriers, the scheme it runs.
struct MethodSpec {
  Method method = Method::Sift;
  std::optional<SchemeKind> scheme;

  bool uses_scheme() const noexcept {
    return method == Method::Sift || method == Method::Direct ||
           method == Method::SentenceSubstitute || method == Method::SentencePrepend;
  }

  std::string label() const {
    std::string s(method_name(method));
    if (scheme) s += "/" + std::string(scheme_name(*scheme));
    return s;
  }

  const Scheme& scheme_ref() const {
    if (!scheme) throw std::invalid_argument(label() + " needs a scheme");
    return Scheme::get(*scheme);
  }

  unsigned bits_per_symbol() const { return scheme ? scheme_ref().bits_per_symbol() : 1; }

  friend bool operator==(const MethodSpec&, const MethodSpec&) = default;
};

/// Parses "sift/curve", "feature", ...
inline MethodSpec parse_method_spec(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view head = text.substr(0, slash);
  MethodSpec spec;
  bool found = false;
  for (Method m : {Method::Sift, Method::Direct, Method::SentenceSubstitute,
                   Method::SentencePrepend, Method::Feature, Method::InterWord,
                   Method::InterSentence, Method::Designated}) {
    if (method_name(m) == head) {
      spec.method = m;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown method: " + std::string(text));
  if (slash != std::string_view::npos) spec.scheme = parse_scheme(text.substr(slash + 1));
  if (spec.uses_scheme() != spec.scheme.has_value()) {
    throw std::invalid_argument("method " + std::string(head) +
                                (spec.uses_scheme() ? " needs" : " takes no") + " scheme");
  }
  return spec;
}

/// The seven methods compared in the capacity tables.
inline std::vector<MethodSpec> table_methods() {
  return {{Method::Sift, SchemeKind::Curve},
          {Method::Sift, SchemeKind::VerticalLine},
          {Method::Sift, SchemeKind::Quadruple},
          {Method::Feature, std::nullopt},
          {Method::InterWord, std::nullopt},
          {Method::InterSentence, std::nullopt},
          {Method::Designated, std::nullopt}};
}

/// Cover-generation and method parameters shared by every run.
struct MethodParams {
  WordLengthRange word_len{};
  std::size_t words_per_sentence = 14;
  DesignatedPair pair{};
  const Lexicon* lexicon = nullptr;  // null selects the built-in lexicon

  const Lexicon& lexicon_ref() const { return lexicon ? *lexicon : Lexicon::builtin(); }
};

/// Cover material a method reads. Direct and designated generate their own
/// text, so they take none.
inline std::optional<CoverKind> natural_cover(Method m) {
  switch (m) {
    case Method::Sift: return CoverKind::Letters;
    case Method::Feature: return CoverKind::Words;
    case Method::SentenceSubstitute:
    case Method::SentencePrepend:
    case Method::InterWord:
    case Method::InterSentence: return CoverKind::Sentences;
    case Method::Direct:
    case Method::Designated: return std::nullopt;
  }
  return std::nullopt;
}

inline std::string gen_natural_cover(const MethodSpec& spec, std::size_t cover_bytes, Seed seed,
                                     const MethodParams& params) {
  const auto kind = natural_cover(spec.method);
  if (!kind) return {};
  return gen_cover(CoverSpec{*kind, cover_bytes, params.word_len, params.words_per_sentence},
                   seed);
}

/// Embeds `payload` with any method. `budget` bounds the output of the
/// generating carriers (direct, designated); the others are bounded by
/// `cover`.
inline EmbedResult embed_with(const MethodSpec& spec, const BitString& payload,
                              std::string_view cover, Seed seed, const MethodParams& params,
                              std::optional<std::size_t> budget = std::nullopt) {
  switch (spec.method) {
    case Method::Sift: return sift_embed(payload, spec.scheme_ref(), cover);
    case Method::Direct: {
      const unsigned k = spec.bits_per_symbol();
      if (budget && (payload.size() + k - 1) / k > *budget) {
        throw Error(Errc::CoverExhausted,
                    "direct carrier limited to " + std::to_string(*budget) + " characters",
                    *budget * k);
      }
      return direct_embed(payload, spec.scheme_ref(), seed);
    }
    case Method::SentenceSubstitute:
      return sentence_embed(payload, spec.scheme_ref(), cover, params.lexicon_ref(),
                            SentenceMode::Substitute, seed);
    case Method::SentencePrepend:
      return sentence_embed(payload, spec.scheme_ref(), cover, params.lexicon_ref(),
                            SentenceMode::Prepend, seed);
    case Method::Feature: return feature_embed(payload, cover);
    case Method::InterWord: return interword_embed(payload, cover);
    case Method::InterSentence: return intersentence_embed(payload, cover);
    case Method::Designated: return designated_embed(payload, params.pair, seed, budget);
  }
  throw std::invalid_argument("unknown method");
}

inline BitString extract_with(const MethodSpec& spec, std::string_view stego,
                              const MethodParams& params) {
  switch (spec.method) {
    case Method::Sift:
    case Method::Direct: return scheme_extract(stego, spec.scheme_ref());
    case Method::SentenceSubstitute:
    case Method::SentencePrepend: return sentence_extract(stego, spec.scheme_ref());
    case Method::Feature: return feature_extract(stego);
    case Method::InterWord: return interword_extract(stego);
    case Method::InterSentence: return intersentence_extract(stego);
    case Method::Designated: return designated_extract(stego, params.pair);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace shapestego
