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
#include <stdexcept>
#include <string>
#include <string_view>

#include "shapestego/random.hpp"

namespace shapestego {

enum class CoverKind { Letters, Words, Sentences };

struct WordLengthRange {
  std::size_t min = 2;
  std::size_t max = 6;
};

struct CoverSpec {
  CoverKind kind = CoverKind::Letters;
  std::size_t target_bytes = 0;
  WordLengthRange word_len{};
  std::size_t words_per_sentence = 14;

  void validate() const {
    if (target_bytes == 0) throw std::invalid_argument("cover target_bytes must be > 0");
    if (word_len.min < 1 || word_len.min > word_len.max) {
      throw std::invalid_argument("word length range must satisfy 1 <= min <= max");
    }
    if (kind == CoverKind::Sentences && words_per_sentence < 1) {
      throw std::invalid_argument("words_per_sentence must be >= 1");
    }
  }
};

inline std::string_view cover_kind_name(CoverKind kind) {
  switch (kind) {
    case CoverKind::Letters: return "letters";
    case CoverKind::Words: return "words";
    case CoverKind::Sentences: return "sentences";
  }
  return "?";
}

inline CoverKind parse_cover_kind(std::string_view name) {
  if (name == "letters") return CoverKind::Letters;
  if (name == "words") return CoverKind::Words;
  if (name == "sentences") return CoverKind::Sentences;
  throw std::invalid_argument("unknown cover kind: " + std::string(name));
}

namespace detail {

inline void append_random_word(Rng& rng, WordLengthRange range, std::string& out) {
  const std::size_t len = rng.between(range.min, range.max);
  for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<char>('a' + rng.below(26)));
}

}  // namespace detail

/// Exactly `target_bytes` independent uniform draws from A-Z, no separators.
inline std::string gen_letter_stream(Seed seed, std::size_t target_bytes) {
  if (target_bytes == 0) throw std::invalid_argument("cover target_bytes must be > 0");
  Rng rng(seed);
  std::string out(target_bytes, 'A');
  for (char& c : out) c = static_cast<char>('A' + rng.below(26));
  return out;
}

/// Space-separated lowercase pseudo-words; the longest prefix of whole words
/// that fits in `target_bytes`.
inline std::string gen_word_corpus(Seed seed, std::size_t target_bytes,
                                   WordLengthRange range = {}) {
  CoverSpec{CoverKind::Words, target_bytes, range}.validate();
  Rng rng(seed);
  std::string out;
  out.reserve(target_bytes);
  std::string w;
  for (;;) {
    w.clear();
    detail::append_random_word(rng, range, w);
    const std::size_t extra = w.size() + (out.empty() ? 0 : 1);
    if (out.size() + extra > target_bytes) break;
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

/// Sentences of `words_per_sentence` pseudo-words, first word capitalized,
/// each terminated by ". ". Truncated at the last whole sentence that fits.
inline std::string gen_sentence_corpus(Seed seed, std::size_t target_bytes,
                                       std::size_t words_per_sentence = 14,
                                       WordLengthRange range = {}) {
  CoverSpec{CoverKind::Sentences, target_bytes, range, words_per_sentence}.validate();
  Rng rng(seed);
  std::string out;
  out.reserve(target_bytes);
  std::string sentence;
  for (;;) {
    sentence.clear();
    for (std::size_t i = 0; i < words_per_sentence; ++i) {
      if (i != 0) sentence.push_back(' ');
      detail::append_random_word(rng, range, sentence);
    }
    sentence[0] = static_cast<char>(sentence[0] - 'a' + 'A');
    sentence += ". ";
    if (out.size() + sentence.size() > target_bytes) break;
    out += sentence;
  }
  return out;
}

inline std::string gen_cover(const CoverSpec& spec, Seed seed) {
  spec.validate();
  switch (spec.kind) {
    case CoverKind::Letters: return gen_letter_stream(seed, spec.target_bytes);
    case CoverKind::Words: return gen_word_corpus(seed, spec.target_bytes, spec.word_len);
    case CoverKind::Sentences:
      return gen_sentence_corpus(seed, spec.target_bytes, spec.words_per_sentence, spec.word_len);
  }
  return {};
}

}  // namespace shapestego
