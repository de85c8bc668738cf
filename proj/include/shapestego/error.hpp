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

namespace shapestego {

enum class Errc {
  NonLetter,
  UnknownCode,
  RaggedLength,
  TooLong,
  Truncated,
  CoverExhausted,
  NotEnoughSentences,
  NotEnoughWords,
  NotEnoughGaps,
  EmptyLexiconGroup,
  MalformedGap,
  BadLexicon,
  EmptyInput,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonLetter: return "NonLetter";
    case Errc::UnknownCode: return "UnknownCode";
    case Errc::RaggedLength: return "RaggedLength";
    case Errc::TooLong: return "TooLong";
    case Errc::Truncated: return "Truncated";
    case Errc::CoverExhausted: return "CoverExhausted";
    case Errc::NotEnoughSentences: return "NotEnoughSentences";
    case Errc::NotEnoughWords: return "NotEnoughWords";
    case Errc::NotEnoughGaps: return "NotEnoughGaps";
    case Errc::EmptyLexiconGroup: return "EmptyLexiconGroup";
    case Errc::MalformedGap: return "MalformedGap";
    case Errc::BadLexicon: return "BadLexicon";
    case Errc::EmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

// Raised by every operation in the library. Carrier-capacity failures
// (CoverExhausted, NotEnough*) also report how many payload bits were placed
// before the carrier ran out.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t bits_done = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        bits_done_(bits_done) {}

  Errc code() const noexcept { return code_; }
  std::size_t bits_done() const noexcept { return bits_done_; }

  bool is_capacity() const noexcept {
    return code_ == Errc::CoverExhausted || code_ == Errc::NotEnoughSentences ||
           code_ == Errc::NotEnoughWords || code_ == Errc::NotEnoughGaps;
  }

 private:
  Errc code_;
  std::size_t bits_done_;
};

}  // namespace shapestego
