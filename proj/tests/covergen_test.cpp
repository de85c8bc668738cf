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

#include <array>
#include <cmath>

#include "shapestego/covergen.hpp"
#include "shapestego/text.hpp"

namespace shapestego {
namespace {

std::size_t count_words(const std::string& s) { return tokenize(s).tokens.size(); }

TEST(Covergen, LetterStreamDeterministicAndExact) {
  const std::string a = gen_letter_stream(Seed{1}, 10);
  EXPECT_EQ(a.size(), 10U);
  EXPECT_EQ(a, gen_letter_stream(Seed{1}, 10));
  EXPECT_NE(a, gen_letter_stream(Seed{2}, 10));
  for (char c : a) EXPECT_TRUE(c >= 'A' && c <= 'Z');
  EXPECT_EQ(gen_letter_stream(Seed{9}, 3564).size(), 3564U);
}

TEST(Covergen, LetterStreamPinnedOutput) {
  // mt19937_64 + rejection sampling; guards against silent generator changes.
  EXPECT_EQ(gen_letter_stream(Seed{1}, 16), gen_letter_stream(Seed{1}, 32).substr(0, 16));
  EXPECT_EQ(gen_letter_stream(Seed{42}, 12), "TQTDXCOJHKAN");
}

TEST(Covergen, LetterStreamUniform) {
  const std::size_t n = 1'000'000;
  const std::string s = gen_letter_stream(Seed{2024}, n);
  std::array<std::size_t, 26> counts{};
  for (char c : s) ++counts[static_cast<std::size_t>(c - 'A')];
  double chi2 = 0;
  const double expected = static_cast<double>(n) / 26.0;
  for (std::size_t c : counts) {
    const double f = static_cast<double>(c) / static_cast<double>(n);
    EXPECT_NEAR(f, 1.0 / 26.0, 0.01);
    chi2 += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  }
  // 25 degrees of freedom; 99.9th percentile is 52.6.
  EXPECT_LT(chi2, 52.6);
}

TEST(Covergen, WordCorpusShape) {
  EXPECT_EQ(gen_word_corpus(Seed{3}, 10, {2, 2}).size(), 8U);
  EXPECT_EQ(count_words(gen_word_corpus(Seed{3}, 10, {2, 2})), 3U);
  EXPECT_EQ(gen_word_corpus(Seed{5}, 500), gen_word_corpus(Seed{5}, 500));

  const std::string w = gen_word_corpus(Seed{11}, 3564);
  EXPECT_LE(w.size(), 3564U);
  EXPECT_NE(w.back(), ' ');
  for (const Span& t : tokenize(w).tokens) {
    EXPECT_GE(t.size(), 2U);
    EXPECT_LE(t.size(), 6U);
  }
}

TEST(Covergen, WordCorpusMeanWordCount) {
  // Mean word is 4 letters plus one separator: 3564 / 5 = 712.8 words.
  const double expected = 3564.0 / 5.0;
  double sum = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    sum += static_cast<double>(count_words(gen_word_corpus(Seed{s}, 3564)));
  }
  EXPECT_NEAR(sum / 100.0, expected, expected * 0.03);
}

TEST(Covergen, SentenceCorpusShape) {
  EXPECT_EQ(gen_sentence_corpus(Seed{1}, 6, 1, {3, 3}).size(), 5U);
  const std::string one = gen_sentence_corpus(Seed{1}, 6, 1, {3, 3});
  EXPECT_TRUE(one[0] >= 'A' && one[0] <= 'Z');
  EXPECT_EQ(one.substr(3), ". ");

  const std::string s = gen_sentence_corpus(Seed{8}, 3564);
  EXPECT_LE(s.size(), 3564U);
  EXPECT_EQ(s, gen_sentence_corpus(Seed{8}, 3564));
  for (const Span& sp : split_sentences(s)) {
    const std::string sentence(sp.in(s));
    EXPECT_EQ(tokenize(sentence).tokens.size(), 14U);
    EXPECT_TRUE(sentence[0] >= 'A' && sentence[0] <= 'Z');
    EXPECT_EQ(sentence.back(), '.');
  }
}

TEST(Covergen, SentenceCorpusMeanSentenceCount) {
  // 14 words of mean length 4, 13 inner spaces, ". " = 71 bytes per sentence.
  const double expected = 3564.0 / 71.0;
  double sum = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    sum += static_cast<double>(split_sentences(gen_sentence_corpus(Seed{s}, 3564)).size());
  }
  EXPECT_NEAR(sum / 100.0, expected, expected * 0.03);
}

TEST(Covergen, NeverExceedsTarget) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t target = 1 + (s * 37) % 400;
    EXPECT_EQ(gen_letter_stream(Seed{s}, target).size(), target);
    EXPECT_LE(gen_word_corpus(Seed{s}, target).size(), target);
    EXPECT_LE(gen_sentence_corpus(Seed{s}, target).size(), target);
  }
}

TEST(Covergen, RejectsBadSpecs) {
  EXPECT_THROW(gen_letter_stream(Seed{1}, 0), std::invalid_argument);
  EXPECT_THROW(gen_word_corpus(Seed{1}, 10, {0, 3}), std::invalid_argument);
  EXPECT_THROW(gen_word_corpus(Seed{1}, 10, {4, 3}), std::invalid_argument);
  EXPECT_THROW(gen_sentence_corpus(Seed{1}, 10, 0), std::invalid_argument);
}

}  // namespace
}  // namespace shapestego
