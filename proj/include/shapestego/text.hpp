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
#include <string>
#include <string_view>
#include <vector>

#include "shapestego/alphabet.hpp"

namespace shapestego {

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline bool is_terminator(char c) noexcept { return c == '.' || c == '!' || c == '?'; }

/// Half-open byte range into a text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  std::string_view in(std::string_view text) const { return text.substr(begin, size()); }
  friend bool operator==(Span, Span) = default;
};

/// Sentences run from the first non-space character up to and including a
/// terminator ('.', '!', '?') that is followed by whitespace or end of text.
/// Unterminated trailing text counts as a final sentence.
inline std::vector<Span> split_sentences(std::string_view text) {
  std::vector<Span> out;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    while (pos < n && is_space(text[pos])) ++pos;
    if (pos == n) break;
    const std::size_t start = pos;
    while (pos < n && !(is_terminator(text[pos]) && (pos + 1 == n || is_space(text[pos + 1])))) {
      ++pos;
    }
    if (pos < n) ++pos;  // include the terminator
    out.push_back({start, pos});
  }
  return out;
}

/// Offset of the first ASCII letter in `span`, or npos.
inline std::size_t first_letter(std::string_view text, Span span) {
  for (std::size_t i = span.begin; i < span.end; ++i) {
    if (is_ascii_letter(text[i])) return i;
  }
  return std::string_view::npos;
}

/// End of the letter run starting at `pos`.
inline std::size_t letter_run_end(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_ascii_letter(text[pos])) ++pos;
  return pos;
}

/// Whitespace-delimited tokens and the whitespace runs between them.
struct Tokenized {
  std::vector<Span> tokens;
  // gaps[i] sits between tokens[i] and tokens[i+1]; the final entry, if
  // present, is trailing whitespace after the last token.
  std::vector<Span> gaps;
};

inline Tokenized tokenize(std::string_view text) {
  Tokenized t;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n && is_space(text[pos])) ++pos;
  while (pos < n) {
    const std::size_t start = pos;
    while (pos < n && !is_space(text[pos])) ++pos;
    t.tokens.push_back({start, pos});
    const std::size_t ws = pos;
    while (pos < n && is_space(text[pos])) ++pos;
    if (pos > ws) t.gaps.push_back({ws, pos});
  }
  return t;
}

inline bool ends_sentence(std::string_view token) {
  return !token.empty() && is_terminator(token.back());
}

}  // namespace shapestego
