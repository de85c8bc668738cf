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

#include <regex>
#include <sstream>

#include "oracles.hpp"
#include "shapestego/bench.hpp"

namespace shapestego {
namespace {

const MethodSpec kSiftCurve{Method::Sift, SchemeKind::Curve};
const MethodSpec kFeature{Method::Feature, std::nullopt};
const MethodSpec kInterSentence{Method::InterSentence, std::nullopt};

TEST(Capacity, SiftCurveNearTableValue) {
  const double analytic = 3564.0 / (8.0 * oracle::chars_per_bit(oracle::kCurve));
  double sum = 0;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const auto c = static_cast<double>(capacity_of(kSiftCurve, 3564, Seed{s}));
    EXPECT_NEAR(c, 232.0, 232.0 * 0.15);
    sum += c;
  }
  EXPECT_NEAR(sum / 10, analytic, analytic * 0.05);
}

TEST(Capacity, BaselinesAtLargestCover) {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const std::size_t f = capacity_of(kFeature, 3564, Seed{s});
    EXPECT_GE(f, 85U);
    EXPECT_LE(f, 95U);
    const std::size_t is = capacity_of(kInterSentence, 3564, Seed{s});
    EXPECT_GE(is, 4U);
    EXPECT_LE(is, 7U);
  }
}

TEST(Capacity, BaselineOrderingAtLargestCover) {
  // feature > inter-word >= designated >> inter-sentence, on 20-seed means.
  auto mean = [](Method m) {
    double sum = 0;
    for (std::uint64_t s = 1; s <= 20; ++s) {
      sum += static_cast<double>(capacity_of({m, std::nullopt}, 3564, Seed{s}));
    }
    return sum / 20;
  };
  const double feature = mean(Method::Feature), word = mean(Method::InterWord),
               designated = mean(Method::Designated), sentence = mean(Method::InterSentence);
  EXPECT_GT(feature, word);
  EXPECT_GE(word, designated);
  EXPECT_GT(designated, 10 * sentence);
}

TEST(Capacity, ExactCountsAgainstCover) {
  // Feature capacity is floor(words / 8) for the same generated cover.
  const Seed seed{77};
  const std::string words = gen_word_corpus(derive(seed, kCoverStream), 3564);
  EXPECT_EQ(capacity_of(kFeature, 3564, seed), tokenize(words).tokens.size() / 8);
  const std::string sentences = gen_sentence_corpus(derive(seed, kCoverStream), 3564);
  EXPECT_EQ(capacity_of(kInterSentence, 3564, seed), split_sentences(sentences).size() / 8);
}

TEST(Capacity, GenerationCarriersAreBudgetBound) {
  EXPECT_EQ(capacity_of({Method::Direct, SchemeKind::Curve}, 3564, Seed{1}), 3564U / 8);
  EXPECT_EQ(capacity_of({Method::Direct, SchemeKind::Quadruple}, 3564, Seed{1}), 3564U * 2 / 8);
  EXPECT_EQ(capacity_of({Method::SentenceSubstitute, SchemeKind::Quadruple}, 3564, Seed{1}),
            split_sentences(gen_sentence_corpus(derive(Seed{1}, kCoverStream), 3564)).size() * 2 /
                8);
  EXPECT_THROW(capacity_of(kFeature, 0, Seed{1}), std::invalid_argument);
}

TEST(Suite, EmptyMethodList) {
  BenchConfig cfg;
  cfg.methods.clear();
  EXPECT_TRUE(run_suite(cfg).empty());
}

TEST(Suite, DefaultShapeAndTableRows) {
  BenchConfig cfg;
  const auto recs = run_suite(cfg);
  ASSERT_EQ(recs.size(), 35U);
  for (const auto& r : recs) {
    EXPECT_TRUE(r.failure.empty()) << r.failure;
    EXPECT_LE(r.bytes_hidden, r.message_bytes);
    EXPECT_LE(r.bytes_hidden, r.cover_bytes * 2 / 8);
  }
  for (const auto& r : recs) {
    if (r.series() == "sift/curve" && r.message_bytes == 1000) {
      EXPECT_NEAR(static_cast<double>(r.bytes_hidden), 232.0, 232.0 * 0.15);
    }
    if (r.series() == "intersentence" && r.message_bytes == 200) {
      EXPECT_LE(r.bytes_hidden, 2U);
    }
  }
  EXPECT_EQ(recs.front().message_bytes, 200U);
  EXPECT_EQ(recs.front().series(), "sift/curve");
  EXPECT_EQ(recs.back().series(), "designated");
}

TEST(Suite, DeterministicExceptTimingAndThreadIndependent) {
  BenchConfig cfg;
  cfg.seeds = {Seed{1}, Seed{2}, Seed{3}};
  auto a = run_suite(cfg);
  cfg.threads = 4;
  auto b = run_suite(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].series(), b[i].series());
    EXPECT_EQ(a[i].message_bytes, b[i].message_bytes);
    EXPECT_EQ(a[i].bytes_hidden, b[i].bytes_hidden);
    EXPECT_EQ(a[i].seed, b[i].seed);
  }
}

TEST(Suite, MessageSmallerThanCapacityIsFullyHidden) {
  BenchConfig cfg;
  cfg.message_sizes = {10};
  cfg.cover_sizes = {3564};
  cfg.methods = {kSiftCurve, kFeature};
  for (const auto& r : run_suite(cfg)) EXPECT_EQ(r.bytes_hidden, 10U);
}

TEST(Suite, RejectsMismatchedSizes) {
  BenchConfig cfg;
  cfg.cover_sizes.pop_back();
  EXPECT_THROW(run_suite(cfg), std::invalid_argument);
}

std::vector<BenchRecord> sample_records() {
  return {{"sift", "curve", 1000, 3564, 232, 17, Seed{1}, ""},
          {"feature", "", 1000, 3564, 90, 5, Seed{1}, ""},
          {"odd,name", "with \"quotes\"", 1, 2, 0, 3, Seed{18446744073709551615ULL}, ""}};
}

TEST(Csv, HeaderAndRows) {
  std::ostringstream empty;
  write_csv({}, empty);
  EXPECT_EQ(empty.str(), "method,scheme,message_bytes,cover_bytes,bytes_hidden,elapsed_micros,seed\r\n");

  std::ostringstream one;
  write_csv({sample_records()[0]}, one);
  EXPECT_EQ(oracle::parse_csv(one.str()).size(), 2U);
  EXPECT_EQ(one.str().substr(one.str().find('\n') + 1), "sift,curve,1000,3564,232,17,1\r\n");
}

TEST(Csv, ParseRoundTrip) {
  const auto recs = sample_records();
  std::ostringstream out;
  write_csv(recs, out);
  const auto rows = oracle::parse_csv(out.str());
  ASSERT_EQ(rows.size(), recs.size() + 1);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& row = rows[i + 1];
    ASSERT_EQ(row.size(), 7U);
    EXPECT_EQ(row[0], recs[i].method);
    EXPECT_EQ(row[1], recs[i].scheme);
    EXPECT_EQ(std::stoull(row[2]), recs[i].message_bytes);
    EXPECT_EQ(std::stoull(row[3]), recs[i].cover_bytes);
    EXPECT_EQ(std::stoull(row[4]), recs[i].bytes_hidden);
    EXPECT_EQ(std::stoull(row[6]), recs[i].seed.value);
  }
}

struct Bar {
  std::string series;
  double height;
};

std::vector<Bar> bars_of(const std::string& svg) {
  static const std::regex re(
      "<rect x=\"[0-9.]+\" y=\"[0-9.]+\" width=\"[0-9.]+\" height=\"([0-9.]+)\" "
      "fill=\"#[0-9a-f]+\"><title>([^<]+) @ [0-9]+: [0-9.]+</title></rect>");
  std::vector<Bar> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
       ++it) {
    out.push_back({(*it)[2].str(), std::stod((*it)[1].str())});
  }
  return out;
}

TEST(Chart, EmptyInput) {
  std::ostringstream out;
  try {
    render_chart({}, ChartMetric::BytesHidden, out);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyInput);
  }
}

TEST(Chart, SingleRecordSingleBar) {
  std::ostringstream out;
  render_chart({sample_records()[0]}, ChartMetric::BytesHidden, out);
  const auto bars = bars_of(out.str());
  ASSERT_EQ(bars.size(), 1U);
  EXPECT_EQ(bars[0].series, "sift/curve");
  EXPECT_NE(out.str().find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""),
            std::string::npos);
  EXPECT_NE(out.str().find("Message size (bytes)"), std::string::npos);
}

TEST(Chart, TableEightShapeTallestIsCurve) {
  // Capacity column of the 1000-byte table.
  const std::vector<BenchRecord> recs = {
      {"feature", "", 1000, 3564, 90, 0, Seed{1}, ""},
      {"intersentence", "", 1000, 3564, 6, 0, Seed{1}, ""},
      {"interword", "", 1000, 3564, 79, 0, Seed{1}, ""},
      {"designated", "", 1000, 3564, 76, 0, Seed{1}, ""},
      {"sift", "curve", 1000, 3564, 232, 0, Seed{1}, ""},
      {"sift", "vertical", 1000, 3564, 220, 0, Seed{1}, ""},
      {"sift", "quadruple", 1000, 3564, 205, 0, Seed{1}, ""},
  };
  std::ostringstream a, b;
  render_chart(recs, ChartMetric::BytesHidden, a);
  render_chart(recs, ChartMetric::BytesHidden, b);
  EXPECT_EQ(a.str(), b.str());
  const auto bars = bars_of(a.str());
  ASSERT_EQ(bars.size(), 7U);
  const auto tallest = std::max_element(bars.begin(), bars.end(), [](const Bar& x, const Bar& y) {
    return x.height < y.height;
  });
  EXPECT_EQ(tallest->series, "sift/curve");
}

TEST(Chart, AveragesSeedsPerGroup) {
  std::vector<BenchRecord> recs = {{"sift", "curve", 200, 660, 40, 0, Seed{1}, ""},
                                   {"sift", "curve", 200, 660, 44, 0, Seed{2}, ""},
                                   {"sift", "curve", 400, 1320, 80, 0, Seed{1}, ""}};
  std::ostringstream out;
  render_chart(recs, ChartMetric::BytesHidden, out);
  EXPECT_NE(out.str().find("sift/curve @ 200: 42.00"), std::string::npos);
  EXPECT_EQ(bars_of(out.str()).size(), 2U);
}

}  // namespace
}  // namespace shapestego
