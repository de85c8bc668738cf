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

#include <array>
#include <cstddef>
#include <istream>
#include <iterator>
#include <ranges>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "shapestego/alphabet.hpp"
#include "shapestego/bitstream.hpp"
#include "shapestego/error.hpp"
#include "shapestego/random.hpp"
#include "shapestego/text.hpp"

namespace shapestego {

struct EmbedResult {
  std::string stego;
  std::size_t bits_embedded = 0;
  std::size_t cover_consumed = 0;  // cover characters drawn
  std::size_t skipped = 0;         // cover characters rejected
};

/// Zero-pads `payload` at the tail to a whole number of symbols.
inline BitString pad_to_symbols(const BitString& payload, unsigned bits_per_symbol) {
  BitString out = payload;
  while (out.size() % bits_per_symbol != 0) out.push_back(false);
  return out;
}

namespace detail {

// Group index for each possible symbol value.
inline std::array<int, 4> group_index_by_code(const Scheme& scheme) {
  std::array<int, 4> by_code{-1, -1, -1, -1};
  for (std::size_t g = 0; g < scheme.groups().size(); ++g) {
    by_code[scheme.groups()[g].code] = static_cast<int>(g);
  }
  return by_code;
}

}  // namespace detail

/// Random-character-sequence carrier, skip variant. For every payload symbol
/// the cover is read forward until a letter of the symbol's group turns up;
/// that letter goes to the stego text, the rejected ones are dropped.
///
/// Throws CoverExhausted with the number of bits placed if the cover runs out.
template <std::ranges::input_range Cover>
  requires std::convertible_to<std::ranges::range_reference_t<Cover>, char>
EmbedResult sift_embed(const BitString& payload, const Scheme& scheme, Cover&& cover) {
  const unsigned k = scheme.bits_per_symbol();
  const BitString bits = pad_to_symbols(payload, k);
  const auto by_code = detail::group_index_by_code(scheme);

  EmbedResult r;
  r.stego.reserve(bits.size() / k);
  auto it = std::ranges::begin(cover);
  const auto last = std::ranges::end(cover);
  for (std::size_t pos = 0; pos < bits.size(); pos += k) {
    const int want = by_code[bits.symbol(pos, k)];
    for (;;) {
      if (it == last) {
        throw Error(Errc::CoverExhausted,
                    "cover ended after " + std::to_string(r.cover_consumed) +
                        " characters with " + std::to_string(pos) + " of " +
                        std::to_string(bits.size()) + " bits placed",
                    pos);
      }
      const char c = static_cast<char>(*it);
      ++it;
      ++r.cover_consumed;
      if (scheme.index_of(c) == want) {
        r.stego.push_back(c);
        break;
      }
      ++r.skipped;
    }
  }
  r.bits_embedded = bits.size();
  return r;
}

/// Random-character-sequence carrier, generation variant: each symbol becomes
/// one letter drawn uniformly from its group.
inline EmbedResult direct_embed(const BitString& payload, const Scheme& scheme, Seed seed) {
  const unsigned k = scheme.bits_per_symbol();
  const BitString bits = pad_to_symbols(payload, k);
  Rng rng(seed);
  EmbedResult r;
  r.stego.reserve(bits.size() / k);
  for (std::size_t pos = 0; pos < bits.size(); pos += k) {
    const std::string& letters = scheme.group_for_code(bits.symbol(pos, k)).letters;
    r.stego.push_back(letters[rng.below(letters.size())]);
  }
  r.bits_embedded = bits.size();
  r.cover_consumed = r.stego.size();
  return r;
}

/// Blind decoder for both sift and direct stego: every letter, in order,
/// contributes its group code. Non-letters are ignored.
inline BitString scheme_extract(std::string_view stego, const Scheme& scheme) {
  BitString out;
  out.reserve(stego.size() * scheme.bits_per_symbol());
  for (char c : stego) {
    const int idx = scheme.index_of(c);
    if (idx >= 0) out.push_symbol(scheme.groups()[static_cast<std::size_t>(idx)].code,
                                  scheme.bits_per_symbol());
  }
  return out;
}

/// Per-group replacement words for the sentence-case carrier.
class Lexicon {
 public:
  Lexicon() = default;

  /// Built-in word list, at least five words per group of every scheme.
  static const Lexicon& builtin() {
    static const Lexicon lex = [] {
      Lexicon l;
      auto add_all = [&l](SchemeKind kind, char id, std::initializer_list<const char*> words) {
        for (const char* w : words) l.add(kind, id, w);
      };
      // The first entry of each list is the substitute-mode choice.
      add_all(SchemeKind::Curve, 'A',
              {"Some", "But", "Clearly", "Despite", "Given", "Once", "Perhaps", "Rarely", "Surely",
               "Usually"});
      add_all(SchemeKind::Curve, 'B',
              {"This", "The", "Then", "All", "Every", "Finally", "However", "Indeed", "Later",
               "Meanwhile", "Now", "When", "Yet"});
      add_all(SchemeKind::VerticalLine, 'A',
              {"So", "Also", "Certainly", "Generally", "However", "Meanwhile", "Now", "Often",
               "Usually", "When", "Yet"});
      add_all(SchemeKind::VerticalLine, 'B',
              {"The", "But", "During", "Each", "Finally", "It", "Just", "Later", "Perhaps",
               "Really", "Then", "This"});
      add_all(SchemeKind::Quadruple, 'A',
              {"Some", "Clearly", "During", "Generally", "Often", "Still", "Usually"});
      add_all(SchemeKind::Quadruple, 'B',
              {"All", "But", "Each", "Finally", "However", "Perhaps", "Rarely"});
      add_all(SchemeKind::Quadruple, 'C', {"The", "It", "Just", "Later", "Then", "Yet", "Today"});
      add_all(SchemeKind::Quadruple, 'D',
              {"We", "Meanwhile", "Now", "When", "Naturally", "Mostly", "Very"});
      return l;
    }();
    return lex;
  }

  /// Parses `<scheme>:<group-id>:<word>` lines; '#' starts a comment line.
  static Lexicon parse(std::istream& in) {
    Lexicon l;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      const std::string_view entry = std::string_view(line).substr(first, last - first + 1);
      const auto c1 = entry.find(':');
      const auto c2 = c1 == std::string_view::npos ? c1 : entry.find(':', c1 + 1);
      if (c2 == std::string_view::npos || c2 != c1 + 2) {
        throw Error(Errc::BadLexicon, "line " + std::to_string(lineno) +
                                          ": expected <scheme>:<group-id>:<word>");
      }
      SchemeKind kind;
      try {
        kind = parse_scheme(entry.substr(0, c1));
      } catch (const std::invalid_argument& e) {
        throw Error(Errc::BadLexicon, "line " + std::to_string(lineno) + ": " + e.what());
      }
      try {
        l.add(kind, entry[c1 + 1], std::string(entry.substr(c2 + 1)));
      } catch (const Error& e) {
        throw Error(Errc::BadLexicon, "line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    return l;
  }

  static Lexicon parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
  }

  /// Adds a word under a group; the word must be all letters and start with
  /// a letter of that group.
  void add(SchemeKind kind, char group_id, std::string word) {
    const Scheme& scheme = Scheme::get(kind);
    const auto& groups = scheme.groups();
    std::size_t g = 0;
    while (g < groups.size() && groups[g].id != to_upper_ascii(group_id)) ++g;
    if (g == groups.size()) {
      throw Error(Errc::BadLexicon,
                  "scheme " + scheme.name() + " has no group '" + std::string(1, group_id) + "'");
    }
    if (word.empty() || !std::ranges::all_of(word, is_ascii_letter)) {
      throw Error(Errc::BadLexicon, "word '" + word + "' must be ASCII letters only");
    }
    if (!groups[g].contains(word[0])) {
      throw Error(Errc::BadLexicon, "word '" + word + "' does not start with a letter of " +
                                        scheme.name() + " group " + std::string(1, groups[g].id));
    }
    slot(kind, g).push_back(std::move(word));
  }

  /// Words for the group at `group_index` of the scheme.
  const std::vector<std::string>& words(SchemeKind kind, std::size_t group_index) const {
    return words_[static_cast<std::size_t>(kind)][group_index];
  }

 private:
  std::vector<std::string>& slot(SchemeKind kind, std::size_t g) {
    return words_[static_cast<std::size_t>(kind)][g];
  }

  std::array<std::array<std::vector<std::string>, 4>, 3> words_{};
};

enum class SentenceMode { Substitute, Prepend };

namespace detail {

inline std::string match_initial_case(std::string word, char like) {
  word[0] = (like >= 'A' && like <= 'Z') ? to_upper_ascii(word[0]) : to_lower_ascii(word[0]);
  return word;
}

}  // namespace detail

/// Sentence-case carrier. The i-th letter-bearing sentence carries the i-th
/// symbol through its first letter. Mismatching sentences get their first
/// word replaced (Substitute) or a group word placed in front of it
/// (Prepend). Sentences past the payload are copied unchanged.
///
/// Substitute always takes the first word in the lexicon group; Prepend
/// picks one at random from `seed`.
inline EmbedResult sentence_embed(const BitString& payload, const Scheme& scheme,
                                  std::string_view sentences, const Lexicon& lexicon,
                                  SentenceMode mode, Seed seed = kDefaultSeed) {
  const unsigned k = scheme.bits_per_symbol();
  const BitString bits = pad_to_symbols(payload, k);
  const std::size_t symbols = bits.size() / k;

  std::vector<std::size_t> starts;  // first-letter offsets of usable sentences
  std::vector<Span> spans;
  for (const Span& s : split_sentences(sentences)) {
    const std::size_t fl = first_letter(sentences, s);
    if (fl == std::string_view::npos) continue;
    starts.push_back(fl);
    spans.push_back(s);
  }
  if (starts.size() < symbols) {
    throw Error(Errc::NotEnoughSentences,
                "need " + std::to_string(symbols) + " sentences, cover has " +
                    std::to_string(starts.size()),
                starts.size() * k);
  }

  const auto by_code = detail::group_index_by_code(scheme);
  Rng rng(seed);
  EmbedResult r;
  r.stego.reserve(sentences.size() + symbols * 8);
  std::size_t copied = 0;
  for (std::size_t i = 0; i < symbols; ++i) {
    const int want = by_code[bits.symbol(i * k, k)];
    const std::size_t fl = starts[i];
    if (scheme.index_of(sentences[fl]) == want) continue;
    const auto& words = lexicon.words(scheme.kind(), static_cast<std::size_t>(want));
    if (words.empty()) {
      throw Error(Errc::EmptyLexiconGroup,
                  "lexicon has no words for " + scheme.name() + " group " +
                      std::string(1, scheme.groups()[static_cast<std::size_t>(want)].id),
                  i * k);
    }
    const std::size_t word_end = letter_run_end(sentences, fl);
    r.stego.append(sentences.substr(copied, fl - copied));
    if (mode == SentenceMode::Substitute) {
      r.stego += detail::match_initial_case(words.front(), sentences[fl]);
    } else {
      r.stego += detail::match_initial_case(words[rng.below(words.size())], sentences[fl]);
      r.stego.push_back(' ');
      for (std::size_t j = fl; j < word_end; ++j) r.stego.push_back(to_lower_ascii(sentences[j]));
    }
    copied = word_end;
  }
  r.stego.append(sentences.substr(copied));
  r.bits_embedded = bits.size();
  r.cover_consumed = symbols == 0 ? 0 : spans[symbols - 1].end;
  return r;
}

/// Reads the first letter of every sentence. Sentences without letters are
/// skipped; the caller deframes to drop bits from unused tail sentences.
inline BitString sentence_extract(std::string_view stego, const Scheme& scheme) {
  BitString out;
  for (const Span& s : split_sentences(stego)) {
    const std::size_t fl = first_letter(stego, s);
    if (fl == std::string_view::npos) continue;
    out.push_symbol(group_of(stego[fl], scheme).code, scheme.bits_per_symbol());
  }
  return out;
}

}  // namespace shapestego
