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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shapestego/error.hpp"

namespace shapestego {

/// An exact-length ordered sequence of bits. No implicit padding.
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1' characters, e.g. "0110".
  static BitString parse(std::string_view text) {
    BitString out;
    out.bits_.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("BitString::parse: not a bit: " +
                                    std::string(1, c));
      }
      out.bits_.push_back(c == '1');
    }
    return out;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }

  void push_back(bool bit) { bits_.push_back(bit); }
  void append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  }
  void reserve(std::size_t n) { bits_.reserve(n); }

  /// Appends `value` as `width` bits, most significant first.
  void push_symbol(unsigned value, unsigned width) {
    for (unsigned i = width; i-- > 0;) bits_.push_back(((value >> i) & 1U) != 0);
  }

  /// Reads `width` bits starting at `pos`, most significant first.
  unsigned symbol(std::size_t pos, unsigned width) const {
    unsigned v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | (bits_[pos + i] ? 1U : 0U);
    return v;
  }

  BitString prefix(std::size_t n) const {
    BitString out;
    out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<bool> bits_;
};

using Bytes = std::vector<std::uint8_t>;

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline std::string to_text(std::span<const std::uint8_t> b) {
  return std::string(b.begin(), b.end());
}

/// Expands each byte to 8 bits, MSB first.
inline BitString bytes_to_bits(std::span<const std::uint8_t> data) {
  BitString out;
  out.reserve(data.size() * 8);
  for (std::uint8_t byte : data) out.push_symbol(byte, 8);
  return out;
}

inline Bytes bits_to_bytes(const BitString& bits) {
  if (bits.size() % 8 != 0) {
    throw Error(Errc::RaggedLength,
                "bit length " + std::to_string(bits.size()) + " is not a multiple of 8");
  }
  Bytes out;
  out.reserve(bits.size() / 8);
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    out.push_back(static_cast<std::uint8_t>(bits.symbol(i, 8)));
  }
  return out;
}

inline constexpr std::size_t kFrameHeaderBits = 16;
inline constexpr std::size_t kMaxFramePayload = 0xFFFF;

/// Length-prefixed frame: 16-bit big-endian byte count, then the payload.
inline BitString frame(std::span<const std::uint8_t> message) {
  if (message.size() > kMaxFramePayload) {
    throw Error(Errc::TooLong, "message of " + std::to_string(message.size()) +
                                   " bytes exceeds 65535");
  }
  BitString out;
  out.reserve(kFrameHeaderBits + message.size() * 8);
  out.push_symbol(static_cast<unsigned>(message.size()), 16);
  out.append(bytes_to_bits(message));
  return out;
}

/// Reads one frame from the front of `bits`. Anything past the frame is
/// ignored, since extractors read the whole carrier.
inline Bytes deframe(const BitString& bits) {
  if (bits.size() < kFrameHeaderBits) {
    throw Error(Errc::Truncated, "fewer than 16 bits available for the header");
  }
  const std::size_t length = bits.symbol(0, 16);
  const std::size_t needed = kFrameHeaderBits + 8 * length;
  if (bits.size() < needed) {
    throw Error(Errc::Truncated, "frame declares " + std::to_string(length) +
                                     " bytes but only " +
                                     std::to_string((bits.size() - kFrameHeaderBits) / 8) +
                                     " are present");
  }
  Bytes out;
  out.reserve(length);
  for (std::size_t i = kFrameHeaderBits; i < needed; i += 8) {
    out.push_back(static_cast<std::uint8_t>(bits.symbol(i, 8)));
  }
  return out;
}

}  // namespace shapestego
