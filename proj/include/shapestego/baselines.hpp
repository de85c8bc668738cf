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

#include "shapestego/alphabet.hpp"
#include "shapestego/bitstream.hpp"
#include "shapestego/error.hpp"
#include "shapestego/random.hpp"
#include "shapestego/schemes.hpp"
#include "shapestego/text.hpp"

namespace shapestego {

// Feature coding (word case) ------------------------------------------------

/// Bit 1 puts a word in proper case, bit 0 in lower case. Only tokens that
/// begin with a letter carry a bit; words past the payload are lowercased.
inline EmbedResult feature_embed(const BitString& payload, std::string_view word_cover) {
  const Tokenized t = tokenize(word_cover);
  std::size_t eligible = 0;
  for (const Span& tok : t.tokens) eligible += is_ascii_letter(word_cover[tok.begin]) ? 1 : 0;
  if (eligible < payload.size()) {
    throw Error(Errc::NotEnoughWords,
                "need " + std::to_string(payload.size()) + " words, cover has " +
                    std::to_string(eligible),
                eligible);
  }

  EmbedResult r;
  r.stego.assign(word_cover);
  std::size_t bit = 0;
  for (const Span& tok : t.tokens) {
    if (!is_ascii_letter(word_cover[tok.begin])) continue;
    for (std::size_t i = tok.begin; i < tok.end; ++i) r.stego[i] = to_lower_ascii(r.stego[i]);
    if (bit < payload.size()) {
      if (payload[bit]) r.stego[tok.begin] = to_upper_ascii(r.stego[tok.begin]);
      ++bit;
      r.cover_consumed = tok.end;
    }
  }
  r.bits_embedded = payload.size();
  return r;
}

inline BitString feature_extract(std::string_view stego) {
  BitString out;
  for (const Span& tok : tokenize(stego).tokens) {
    const char c = stego[tok.begin];
    if (is_ascii_letter(c)) out.push_back(c >= 'A' && c <= 'Z');
  }
  return out;
}

// Open-space methods --------------------------------------------------------

namespace detail {

enum class GapRole { InterWord, InterSentence };

inline bool gap_has_role(std::string_view text, const Tokenized& t, std::size_t gap_index,
                         GapRole role) {
  // Gap i follows token i. Inter-word gaps must also precede another token.
  const bool after_terminator = ends_sentence(t.tokens[gap_index].in(text));
  if (role == GapRole::InterSentence) return after_terminator;
  return !after_terminator && gap_index + 1 < t.tokens.size();
}

inline EmbedResult space_embed(const BitString& payload, std::string_view cover, GapRole role) {
  const Tokenized t = tokenize(cover);
  std::size_t slots = 0;
  for (std::size_t g = 0; g < t.gaps.size(); ++g) slots += gap_has_role(cover, t, g, role) ? 1 : 0;
  if (slots < payload.size()) {
    const Errc code = role == GapRole::InterWord ? Errc::NotEnoughGaps : Errc::NotEnoughSentences;
    throw Error(code,
                "need " + std::to_string(payload.size()) + " slots, cover has " +
                    std::to_string(slots),
                slots);
  }

  EmbedResult r;
  r.stego.reserve(cover.size() + payload.size());
  const std::size_t lead = t.tokens.empty() ? cover.size() : t.tokens.front().begin;
  r.stego.append(cover.substr(0, lead));
  std::size_t bit = 0;
  for (std::size_t i = 0; i < t.tokens.size(); ++i) {
    r.stego.append(t.tokens[i].in(cover));
    if (i >= t.gaps.size()) break;
    const Span gap = t.gaps[i];
    if (!gap_has_role(cover, t, i, role)) {
      r.stego.append(gap.in(cover));
      continue;
    }
    const bool one = bit < payload.size() && payload[bit];
    r.stego.append(one ? "  " : " ");
    if (bit < payload.size()) {
      ++bit;
      r.cover_consumed = gap.end;
    }
  }
  r.bits_embedded = payload.size();
  return r;
}

inline BitString space_extract(std::string_view stego, GapRole role) {
  const Tokenized t = tokenize(stego);
  BitString out;
  for (std::size_t g = 0; g < t.gaps.size(); ++g) {
    if (!gap_has_role(stego, t, g, role)) continue;
    const std::string_view gap = t.gaps[g].in(stego);
    if (gap == " ") {
      out.push_back(false);
    } else if (gap == "  ") {
      out.push_back(true);
    } else {
      throw Error(Errc::MalformedGap, "whitespace run of width " + std::to_string(gap.size()) +
                                          " at offset " + std::to_string(t.gaps[g].begin),
                  out.size());
    }
  }
  return out;
}

}  // namespace detail

/// One space between words for 0, two for 1. The space after a sentence
/// terminator is left to the inter-sentence method.
inline EmbedResult interword_embed(const BitString& payload, std::string_view cover) {
  return detail::space_embed(payload, cover, detail::GapRole::InterWord);
}

inline BitString interword_extract(std::string_view stego) {
  return detail::space_extract(stego, detail::GapRole::InterWord);
}

/// One space after a sentence terminator for 0, two for 1.
inline EmbedResult intersentence_embed(const BitString& payload, std::string_view cover) {
  return detail::space_embed(payload, cover, detail::GapRole::InterSentence);
}

inline BitString intersentence_extract(std::string_view stego) {
  return detail::space_extract(stego, detail::GapRole::InterSentence);
}

// Designated-character random sequence -------------------------------------

struct DesignatedPair {
  char zero_char = 'F';
  char one_char = 'K';
  double gap_mean = 4.9;

  DesignatedPair normalized() const {
    DesignatedPair p{to_upper_ascii(zero_char), to_upper_ascii(one_char), gap_mean};
    if (!is_ascii_letter(p.zero_char) || !is_ascii_letter(p.one_char)) {
      throw std::invalid_argument("designated characters must be letters");
    }
    if (p.zero_char == p.one_char) {
      throw std::invalid_argument("designated characters must differ");
    }
    if (!(p.gap_mean >= 0.0)) throw std::invalid_argument("gap_mean must be >= 0");
    return p;
  }
};

/// Random uppercase text in which two designated letters carry the bits and
/// every other letter is noise. Each bit is preceded by a geometric number of
/// noise letters (mean `gap_mean`); one more noise run closes the text.
///
/// With a `budget`, throws CoverExhausted once the next bit would push the
/// output past that many characters.
inline EmbedResult designated_embed(const BitString& payload, const DesignatedPair& pair,
                                    Seed seed, std::optional<std::size_t> budget = std::nullopt) {
  const DesignatedPair p = pair.normalized();
  std::string noise;
  for (char c = 'A'; c <= 'Z'; ++c) {
    if (c != p.zero_char && c != p.one_char) noise.push_back(c);
  }
  Rng rng(seed);
  EmbedResult r;
  auto emit_noise = [&](std::uint64_t n, std::string& into) {
    for (std::uint64_t i = 0; i < n; ++i) into.push_back(noise[rng.below(noise.size())]);
  };
  std::string chunk;
  for (std::size_t i = 0; i < payload.size(); ++i) {
    chunk.clear();
    emit_noise(rng.geometric(p.gap_mean), chunk);
    chunk.push_back(payload[i] ? p.one_char : p.zero_char);
    if (budget && r.stego.size() + chunk.size() > *budget) {
      throw Error(Errc::CoverExhausted,
                  "budget of " + std::to_string(*budget) + " characters exhausted after " +
                      std::to_string(i) + " bits",
                  i);
    }
    r.stego += chunk;
    r.skipped += chunk.size() - 1;
  }
  chunk.clear();
  emit_noise(rng.geometric(p.gap_mean), chunk);
  if (budget) chunk.resize(std::min(chunk.size(), *budget - r.stego.size()));
  r.stego += chunk;
  r.skipped += chunk.size();
  r.bits_embedded = payload.size();
  r.cover_consumed = r.stego.size();
  return r;
}

inline BitString designated_extract(std::string_view stego, const DesignatedPair& pair) {
  const DesignatedPair p = pair.normalized();
  BitString out;
  for (char c : stego) {
    if (c == p.zero_char) {
      out.push_back(false);
    } else if (c == p.one_char) {
      out.push_back(true);
    }
  }
  return out;
}

}  // namespace shapestego
