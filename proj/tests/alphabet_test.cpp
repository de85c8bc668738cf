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

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "shapestego/alphabet.hpp"

namespace shapestego {
namespace {

const Scheme& all_schemes(int i) {
  return i == 0 ? Scheme::curve() : i == 1 ? Scheme::vertical_line() : Scheme::quadruple();
}

TEST(Alphabet, GroupOfTableExamples) {
  const Group& b = group_of('B', Scheme::curve());
  EXPECT_EQ(b.id, 'A');
  EXPECT_EQ(b.bits().to_string(), "0");

  const Group& i = group_of('I', Scheme::vertical_line());
  EXPECT_EQ(i.id, 'B');
  EXPECT_EQ(i.bits().to_string(), "1");

  const Group& m = group_of('M', Scheme::quadruple());
  EXPECT_EQ(m.id, 'D');
  EXPECT_EQ(m.bits().to_string(), "11");
}

TEST(Alphabet, BitsOfExamples) {
  EXPECT_EQ(bits_of('A', Scheme::curve()).to_string(), "1");
  EXPECT_EQ(bits_of('a', Scheme::curve()).to_string(), "1");
  EXPECT_EQ(bits_of('S', Scheme::quadruple()).to_string(), "00");
}

TEST(Alphabet, LettersForExamples) {
  EXPECT_EQ(letters_for(BitString::parse("0"), Scheme::curve()), "BCDGJOPQRSU");
  EXPECT_EQ(letters_for(BitString::parse("10"), Scheme::quadruple()), "IJKLTY");
  EXPECT_EQ(letters_for(BitString::parse("0"), Scheme::vertical_line()), "ACGHMNOQSUVWXYZ");
}

TEST(Alphabet, GroupSizes) {
  auto sizes = [](const Scheme& s) {
    std::vector<std::size_t> out;
    for (unsigned code = 0; code < (1U << s.bits_per_symbol()); ++code) {
      BitString b;
      b.push_symbol(code, s.bits_per_symbol());
      out.push_back(letters_for(b, s).size());
    }
    return out;
  };
  EXPECT_EQ(sizes(Scheme::curve()), (std::vector<std::size_t>{11, 15}));
  EXPECT_EQ(sizes(Scheme::vertical_line()), (std::vector<std::size_t>{15, 11}));
  EXPECT_EQ(sizes(Scheme::quadruple()), (std::vector<std::size_t>{7, 7, 6, 6}));
}

TEST(Alphabet, MatchesLiteralTables) {
  const std::vector<std::string>* tables[] = {&oracle::kCurve, &oracle::kVertical,
                                              &oracle::kQuadruple};
  for (int s = 0; s < 3; ++s) {
    const Scheme& scheme = all_schemes(s);
    for (char c = 'A'; c <= 'Z'; ++c) {
      EXPECT_EQ(static_cast<int>(group_of(c, scheme).code), oracle::group_index(*tables[s], c))
          << scheme.name() << " " << c;
    }
  }
}

TEST(Alphabet, PartitionInvariants) {
  for (int s = 0; s < 3; ++s) {
    const Scheme& scheme = all_schemes(s);
    std::set<char> seen;
    std::size_t total = 0;
    std::set<unsigned> codes;
    for (const Group& g : scheme.groups()) {
      EXPECT_EQ(g.width, scheme.bits_per_symbol());
      codes.insert(g.code);
      total += g.letters.size();
      seen.insert(g.letters.begin(), g.letters.end());
    }
    EXPECT_EQ(total, 26U) << scheme.name();
    EXPECT_EQ(seen.size(), 26U) << scheme.name();
    EXPECT_EQ(codes.size(), scheme.groups().size());
  }
  EXPECT_EQ(Scheme::curve().groups().size(), 2U);
  EXPECT_EQ(Scheme::vertical_line().groups().size(), 2U);
  EXPECT_EQ(Scheme::quadruple().groups().size(), 4U);
  EXPECT_EQ(Scheme::quadruple().bits_per_symbol(), 2U);
}

TEST(Alphabet, EveryLetterInItsOwnCodeSetCaseInsensitive) {
  for (int s = 0; s < 3; ++s) {
    const Scheme& scheme = all_schemes(s);
    for (char c = 'A'; c <= 'Z'; ++c) {
      const char lower = static_cast<char>(c - 'A' + 'a');
      EXPECT_NE(letters_for(bits_of(c, scheme), scheme).find(c), std::string::npos);
      EXPECT_EQ(bits_of(c, scheme), bits_of(lower, scheme));
    }
  }
}

TEST(Alphabet, TablesKeptVerbatimAcrossSchemes) {
  // J is curved in the curve table yet a one-stroke letter in the quadruple one.
  EXPECT_EQ(group_of('J', Scheme::curve()).id, 'A');
  EXPECT_EQ(group_of('J', Scheme::quadruple()).id, 'C');
  EXPECT_EQ(group_of('Y', Scheme::vertical_line()).id, 'A');
  EXPECT_EQ(group_of('Y', Scheme::quadruple()).id, 'C');
}

TEST(Alphabet, Errors) {
  for (char c : {'1', ' ', '.', '\xC3', '@', '['}) {
    try {
      group_of(c, Scheme::curve());
      ADD_FAILURE() << "expected NonLetter for " << static_cast<int>(c);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NonLetter);
    }
  }
  try {
    letters_for(BitString::parse("0"), Scheme::quadruple());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownCode);
  }
}

TEST(Alphabet, RejectsMalformedCustomScheme) {
  EXPECT_THROW(Scheme(SchemeKind::Curve, "bad", {{'A', 0, 1, "ABC"}, {'B', 1, 1, "CDEFGHIJKLMNOPQRSTUVWXYZ"}}),
               std::invalid_argument);
  EXPECT_THROW(Scheme(SchemeKind::Curve, "short", {{'A', 0, 1, "AB"}, {'B', 1, 1, "CD"}}),
               std::invalid_argument);
  EXPECT_THROW(Scheme(SchemeKind::Curve, "dupcode",
                      {{'A', 0, 1, "ABCDEFGHIJKLM"}, {'B', 0, 1, "NOPQRSTUVWXYZ"}}),
               std::invalid_argument);
}

}  // namespace
}  // namespace shapestego
