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
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <future>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "shapestego/bitstream.hpp"
#include "shapestego/error.hpp"
#include "shapestego/methods.hpp"
#include "shapestego/random.hpp"

namespace shapestego {

// Sub-stream tags for seed derivation.
inline constexpr std::uint64_t kCoverStream = 1;
inline constexpr std::uint64_t kPayloadStream = 2;
inline constexpr std::uint64_t kEmbedStream = 3;
inline constexpr std::uint64_t kMessageStream = 4;

struct BenchRecord {
  std::string method;
  std::string scheme;  // empty for the baselines
  std::size_t message_bytes = 0;
  std::size_t cover_bytes = 0;
  std::size_t bytes_hidden = 0;
  std::int64_t elapsed_micros = 0;
  Seed seed{};
  std::string failure;  // set when the row could not run; not part of the CSV

  std::string series() const { return scheme.empty() ? method : method + "/" + scheme; }
};

struct BenchConfig {
  std::vector<std::size_t> message_sizes{200, 400, 600, 800, 1000};
  std::vector<std::size_t> cover_sizes{660, 1320, 1980, 2640, 3564};
  std::vector<Seed> seeds{kDefaultSeed};
  std::vector<MethodSpec> methods = table_methods();
  MethodParams params{};
  unsigned threads = 1;

  void validate() const {
    if (message_sizes.size() != cover_sizes.size()) {
      throw std::invalid_argument("message_sizes and cover_sizes differ in length");
    }
    for (std::size_t c : cover_sizes) {
      if (c == 0) throw std::invalid_argument("cover sizes must be > 0");
    }
  }
};

namespace detail {

inline BitString random_bits(Seed seed, std::size_t n) {
  Rng rng(seed);
  BitString bits;
  bits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) bits.push_back(rng.coin());
  return bits;
}

// Embeds as much of `payload` as the carrier takes; returns the bits placed.
inline std::size_t embed_until_full(const MethodSpec& spec, const BitString& payload,
                                    std::string_view cover, std::size_t cover_bytes, Seed seed,
                                    const MethodParams& params) {
  try {
    return embed_with(spec, payload, cover, seed, params, cover_bytes).bits_embedded;
  } catch (const Error& e) {
    if (!e.is_capacity()) throw;
    return e.bits_done();
  }
}

}  // namespace detail

/// Bytes a freshly generated cover of `cover_bytes` holds under `spec`:
/// random bits are embedded until the carrier runs out. The frame header is
/// not counted.
inline std::size_t capacity_of(const MethodSpec& spec, std::size_t cover_bytes, Seed seed,
                               const MethodParams& params = {}) {
  if (cover_bytes == 0) throw std::invalid_argument("cover_bytes must be > 0");
  const std::string cover =
      gen_natural_cover(spec, cover_bytes, derive(seed, kCoverStream), params);
  // No carrier holds more than one symbol per cover character, so this
  // payload always overflows.
  const std::size_t k = spec.bits_per_symbol();
  const BitString payload = detail::random_bits(derive(seed, kPayloadStream), (cover_bytes + 1) * k);
  return detail::embed_until_full(spec, payload, cover, cover_bytes, derive(seed, kEmbedStream),
                                  params) /
         8;
}

/// One row: random message, generated cover, timed embed of as much of the
/// message as fits.
inline BenchRecord run_row(const MethodSpec& spec, std::size_t message_bytes,
                           std::size_t cover_bytes, Seed seed, const MethodParams& params) {
  BenchRecord rec;
  rec.method = std::string(method_name(spec.method));
  rec.scheme = spec.scheme ? std::string(scheme_name(*spec.scheme)) : std::string();
  rec.message_bytes = message_bytes;
  rec.cover_bytes = cover_bytes;
  rec.seed = seed;
  try {
    Rng rng(derive(seed, kMessageStream));
    Bytes message(message_bytes);
    for (auto& b : message) b = static_cast<std::uint8_t>(rng.below(256));
    const BitString payload = bytes_to_bits(message);
    const std::string cover =
        gen_natural_cover(spec, cover_bytes, derive(seed, kCoverStream), params);

    const auto start = std::chrono::steady_clock::now();
    const std::size_t bits = detail::embed_until_full(spec, payload, cover, cover_bytes,
                                                      derive(seed, kEmbedStream), params);
    const auto stop = std::chrono::steady_clock::now();
    rec.elapsed_micros =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    rec.bytes_hidden = std::min(message_bytes, bits / 8);
  } catch (const std::exception& e) {
    rec.failure = e.what();
  }
  return rec;
}

/// Runs every (size, method, seed) row. Output order follows the config
/// (sizes outermost, seeds innermost) regardless of `threads`.
inline std::vector<BenchRecord> run_suite(const BenchConfig& config) {
  config.validate();
  struct Job {
    MethodSpec spec;
    std::size_t message_bytes;
    std::size_t cover_bytes;
    Seed seed;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < config.message_sizes.size(); ++i) {
    for (const MethodSpec& m : config.methods) {
      for (Seed s : config.seeds) {
        jobs.push_back({m, config.message_sizes[i], config.cover_sizes[i], s});
      }
    }
  }
  std::vector<BenchRecord> out(jobs.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(config.threads,
                                                           static_cast<unsigned>(jobs.size())));
  auto work = [&](std::size_t first) {
    for (std::size_t j = first; j < jobs.size(); j += workers) {
      out[j] = run_row(jobs[j].spec, jobs[j].message_bytes, jobs[j].cover_bytes, jobs[j].seed,
                       config.params);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> pending;
    for (unsigned w = 0; w < workers; ++w) pending.push_back(std::async(std::launch::async, work, w));
    for (auto& f : pending) f.get();
  }
  return out;
}

// CSV ----------------------------------------------------------------------

inline constexpr std::string_view kCsvHeader =
    "method,scheme,message_bytes,cover_bytes,bytes_hidden,elapsed_micros,seed";

inline std::string csv_field(std::string_view v) {
  if (v.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(v);
  std::string q = "\"";
  for (char c : v) {
    if (c == '"') q.push_back('"');
    q.push_back(c);
  }
  q.push_back('"');
  return q;
}

inline void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << kCsvHeader << "\r\n";
  for (const BenchRecord& r : records) {
    out << csv_field(r.method) << ',' << csv_field(r.scheme) << ',' << r.message_bytes << ','
        << r.cover_bytes << ',' << r.bytes_hidden << ',' << r.elapsed_micros << ','
        << r.seed.value << "\r\n";
  }
  if (!out) throw std::runtime_error("CSV write failed");
}

// SVG bar chart ------------------------------------------------------------

enum class ChartMetric { BytesHidden, ElapsedMicros };

namespace detail {

inline std::string fmt_num(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline double nice_ceiling(double v) {
  if (v <= 0) return 1;
  const double mag = std::pow(10.0, std::floor(std::log10(v)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (m * mag >= v) return m * mag;
  }
  return 10 * mag;
}

}  // namespace detail

/// Grouped bar chart: one group per message size, one bar per series, bar
/// height = mean of `metric` over seeds. Output is a pure function of the
/// records.
inline void render_chart(const std::vector<BenchRecord>& records, ChartMetric metric,
                         std::ostream& out) {
  if (records.empty()) throw Error(Errc::EmptyInput, "no records to chart");

  std::vector<std::string> series;
  std::vector<std::size_t> sizes;
  std::map<std::pair<std::size_t, std::string>, std::pair<double, std::size_t>> acc;
  for (const BenchRecord& r : records) {
    const std::string s = r.series();
    if (std::find(series.begin(), series.end(), s) == series.end()) series.push_back(s);
    if (std::find(sizes.begin(), sizes.end(), r.message_bytes) == sizes.end()) {
      sizes.push_back(r.message_bytes);
    }
    auto& [sum, n] = acc[{r.message_bytes, s}];
    sum += metric == ChartMetric::BytesHidden ? static_cast<double>(r.bytes_hidden)
                                              : static_cast<double>(r.elapsed_micros);
    ++n;
  }
  std::sort(sizes.begin(), sizes.end());
  double peak = 0;
  for (const auto& [key, v] : acc) peak = std::max(peak, v.first / static_cast<double>(v.second));
  const double ymax = detail::nice_ceiling(peak);

  constexpr double kBar = 16, kGroupGap = 24, kLeft = 70, kTop = 40, kPlotH = 300;
  constexpr double kLegendW = 190, kBottom = 60;
  const double group_w = static_cast<double>(series.size()) * kBar + kGroupGap;
  const double plot_w = static_cast<double>(sizes.size()) * group_w;
  const double width = kLeft + plot_w + 20 + kLegendW;
  const double height = kTop + kPlotH + kBottom;
  static constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                             "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                             "#bcbd22", "#17becf"};
  const std::string y_label =
      metric == ChartMetric::BytesHidden ? "Bytes hidden" : "Embedding time (microseconds)";

  using detail::fmt_num;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt_num(width, 0)
      << "\" height=\"" << fmt_num(height, 0) << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fmt_num(width, 0) << "\" height=\""
      << fmt_num(height, 0) << "\" fill=\"white\"/>\n"
      << "<text x=\"" << fmt_num(kLeft, 0) << "\" y=\"22\" font-size=\"14\">" << y_label
      << " by message size</text>\n";

  // Axes and y ticks.
  const double x0 = kLeft, y0 = kTop + kPlotH;
  out << "<line x1=\"" << fmt_num(x0) << "\" y1=\"" << fmt_num(kTop) << "\" x2=\"" << fmt_num(x0)
      << "\" y2=\"" << fmt_num(y0) << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << fmt_num(x0) << "\" y1=\"" << fmt_num(y0) << "\" x2=\""
      << fmt_num(x0 + plot_w) << "\" y2=\"" << fmt_num(y0) << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 5; ++t) {
    const double v = ymax * t / 5.0;
    const double y = y0 - kPlotH * t / 5.0;
    out << "<line x1=\"" << fmt_num(x0 - 4) << "\" y1=\"" << fmt_num(y) << "\" x2=\""
        << fmt_num(x0) << "\" y2=\"" << fmt_num(y) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fmt_num(x0 - 6) << "\" y=\"" << fmt_num(y + 4)
        << "\" text-anchor=\"end\">" << fmt_num(v, v == std::floor(v) ? 0 : 1) << "</text>\n";
  }
  out << "<text transform=\"translate(16," << fmt_num(kTop + kPlotH / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << y_label << "</text>\n"
      << "<text x=\"" << fmt_num(x0 + plot_w / 2) << "\" y=\"" << fmt_num(height - 12)
      << "\" text-anchor=\"middle\">Message size (bytes)</text>\n";

  for (std::size_t g = 0; g < sizes.size(); ++g) {
    const double gx = x0 + kGroupGap / 2 + static_cast<double>(g) * group_w;
    for (std::size_t s = 0; s < series.size(); ++s) {
      const auto it = acc.find({sizes[g], series[s]});
      if (it == acc.end()) continue;
      const double v = it->second.first / static_cast<double>(it->second.second);
      const double h = kPlotH * v / ymax;
      out << "<rect x=\"" << fmt_num(gx + static_cast<double>(s) * kBar) << "\" y=\""
          << fmt_num(y0 - h) << "\" width=\"" << fmt_num(kBar - 2) << "\" height=\""
          << fmt_num(h) << "\" fill=\"" << kPalette[s % std::size(kPalette)] << "\"><title>"
          << detail::xml_escape(series[s]) << " @ " << sizes[g] << ": " << fmt_num(v)
          << "</title></rect>\n";
    }
    out << "<text x=\"" << fmt_num(gx + static_cast<double>(series.size()) * kBar / 2)
        << "\" y=\"" << fmt_num(y0 + 16) << "\" text-anchor=\"middle\">" << sizes[g]
        << "</text>\n";
  }

  const double lx = x0 + plot_w + 20;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double ly = kTop + 18.0 * static_cast<double>(s);
    out << "<rect x=\"" << fmt_num(lx) << "\" y=\"" << fmt_num(ly) << "\" width=\"12\" "
        << "height=\"12\" fill=\"" << kPalette[s % std::size(kPalette)] << "\"/>\n"
        << "<text x=\"" << fmt_num(lx + 18) << "\" y=\"" << fmt_num(ly + 10) << "\">"
        << detail::xml_escape(series[s]) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace shapestego
