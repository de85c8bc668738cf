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

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shapestego/bitstream.hpp"
#include "shapestego/error.hpp"

namespace shapestego {

enum class SchemeKind { Curve, VerticalLine, Quadruple };

inline bool is_ascii_letter(char c) noexcept {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

inline char to_upper_ascii(char c) noexcept {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

inline char to_lower_ascii(char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

/// One letter class of a scheme. `code` is the symbol value the class
/// carries, `width` bits wide.
struct Group {
  char id;
  unsigned code;
  unsigned width;
  std::string letters;  // uppercase, sorted

  BitString bits() const {
    BitString b;
    b.push_symbol(code, width);
    return b;
  }
  bool contains(char letter) const {
    return letters.find(to_upper_ascii(letter)) != std::string::npos;
  }
};

/// A letter-shape codebook: a partition of A-Z into 2^k groups, each group
/// carrying a distinct k-bit code. Immutable once built.
class Scheme {
 public:
  Scheme(SchemeKind kind, std::string name, std::vector<Group> groups)
      : kind_(kind), name_(std::move(name)), groups_(std::move(groups)) {
    if (groups_.size() != 2 && groups_.size() != 4) {
      throw std::invalid_argument("scheme must have 2 or 4 groups");
    }
    bits_per_symbol_ = groups_.size() == 2 ? 1 : 2;
    index_.fill(-1);
    std::vector<bool> seen_code(groups_.size(), false);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      Group& grp = groups_[g];
      if (grp.width != bits_per_symbol_ || grp.code >= groups_.size() || seen_code[grp.code]) {
        throw std::invalid_argument("scheme " + name_ + ": bad code on group " +
                                    std::string(1, grp.id));
      }
      seen_code[grp.code] = true;
      std::sort(grp.letters.begin(), grp.letters.end());
      for (char c : grp.letters) {
        if (c < 'A' || c > 'Z' || index_[c - 'A'] != -1) {
          throw std::invalid_argument("scheme " + name_ + ": letter " + std::string(1, c) +
                                      " is invalid or listed twice");
        }
        index_[c - 'A'] = static_cast<int>(g);
      }
    }
    if (std::any_of(index_.begin(), index_.end(), [](int i) { return i < 0; })) {
      throw std::invalid_argument("scheme " + name_ + " does not cover A-Z");
    }
  }

  // Round shape / curvature. 'J' counts as curved here.
  static const Scheme& curve() {
    static const Scheme s(SchemeKind::Curve, "curve",
                          {{'A', 0, 1, "BCDGJOPQRSU"}, {'B', 1, 1, "AEFHIKLMNTVWXYZ"}});
    return s;
  }

  // Exactly one vertical straight stroke (group B) or not (group A).
  static const Scheme& vertical_line() {
    static const Scheme s(SchemeKind::VerticalLine, "vertical",
                          {{'A', 0, 1, "ACGHMNOQSUVWXYZ"}, {'B', 1, 1, "BDEFIJKLPRT"}});
    return s;
  }

  // Curved / middle horizontal bar / one vertical stroke / diagonal.
  static const Scheme& quadruple() {
    static const Scheme s(SchemeKind::Quadruple, "quadruple",
                          {{'A', 0b00, 2, "CDGOQSU"},
                           {'B', 0b01, 2, "ABEFHPR"},
                           {'C', 0b10, 2, "IJKLTY"},
                           {'D', 0b11, 2, "MNVWXZ"}});
    return s;
  }

  static const Scheme& get(SchemeKind kind) {
    switch (kind) {
      case SchemeKind::Curve: return curve();
      case SchemeKind::VerticalLine: return vertical_line();
      case SchemeKind::Quadruple: return quadruple();
    }
    throw std::invalid_argument("unknown scheme kind");
  }

  SchemeKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  unsigned bits_per_symbol() const noexcept { return bits_per_symbol_; }
  const std::vector<Group>& groups() const noexcept { return groups_; }

  /// Group index for a letter, or -1 for anything outside A-Z/a-z.
  int index_of(char c) const noexcept {
    return is_ascii_letter(c) ? index_[to_upper_ascii(c) - 'A'] : -1;
  }

  /// Group carrying `code`; throws UnknownCode.
  const Group& group_for_code(unsigned code) const {
    for (const Group& g : groups_) {
      if (g.code == code) return g;
    }
    throw Error(Errc::UnknownCode, "no group of " + name_ + " carries code " +
                                       std::to_string(code));
  }

 private:
  SchemeKind kind_;
  std::string name_;
  std::vector<Group> groups_;
  unsigned bits_per_symbol_ = 1;
  std::array<int, 26> index_{};
};

inline const Group& group_of(char letter, const Scheme& scheme) {
  const int idx = scheme.index_of(letter);
  if (idx < 0) {
    throw Error(Errc::NonLetter, "'" + std::string(1, letter) + "' is not an ASCII letter");
  }
  return scheme.groups()[static_cast<std::size_t>(idx)];
}

inline BitString bits_of(char letter, const Scheme& scheme) {
  return group_of(letter, scheme).bits();
}

/// Inverse lookup: the uppercase letters whose group carries `code`.
inline const std::string& letters_for(const BitString& code, const Scheme& scheme) {
  if (code.size() != scheme.bits_per_symbol()) {
    throw Error(Errc::UnknownCode, "code '" + code.to_string() + "' has the wrong width for " +
                                       scheme.name());
  }
  return scheme.group_for_code(code.symbol(0, scheme.bits_per_symbol())).letters;
}

inline std::string_view scheme_name(SchemeKind kind) { return Scheme::get(kind).name(); }

/// Accepts "curve", "vertical" (or "vertical-line"), "quadruple".
inline SchemeKind parse_scheme(std::string_view name) {
  if (name == "curve") return SchemeKind::Curve;
  if (name == "vertical" || name == "vertical-line") return SchemeKind::VerticalLine;
  if (name == "quadruple") return SchemeKind::Quadruple;
  throw std::invalid_argument("unknown scheme: " + std::string(name));
}

}  // namespace shapestego
