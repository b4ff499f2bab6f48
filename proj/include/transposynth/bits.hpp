// Copyright 2026 The transposynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace transposynth {

/**
 * Fixed-width bit string of at most 64 bits. Bit i is qubit i; the text form
 * is least-index-first, so "011" has bit 0 clear and bits 1, 2 set.
 */
class BitString {
 public:
  static constexpr unsigned max_width = 64;

  constexpr BitString() = default;
  constexpr BitString(unsigned width, std::uint64_t bits)
      : width_(width), bits_(bits & mask(width)) {
    if (width > max_width) throw std::invalid_argument("bit string wider than 64");
  }

  /** Parses a string of '0'/'1' characters. Throws on anything else. */
  static BitString parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty bit string");
    if (text.size() > max_width) {
      throw std::invalid_argument("bit string longer than 64 characters");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        bits |= std::uint64_t{1} << i;
      } else if (text[i] != '0') {
        throw std::invalid_argument(
            "invalid character '" + std::string(1, text[i]) +
            "' in bit string");
      }
    }
    return BitString(static_cast<unsigned>(text.size()), bits);
  }

  constexpr unsigned width() const { return width_; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool operator[](unsigned i) const { return (bits_ >> i) & 1U; }

  constexpr BitString with(unsigned i, bool value) const {
    std::uint64_t b = value ? (bits_ | (std::uint64_t{1} << i))
                            : (bits_ & ~(std::uint64_t{1} << i));
    return BitString(width_, b);
  }

  std::string to_string() const {
    std::string out(width_, '0');
    for (unsigned i = 0; i < width_; ++i) {
      if ((*this)[i]) out[i] = '1';
    }
    return out;
  }

  friend constexpr bool operator==(BitString, BitString) = default;

  static constexpr std::uint64_t mask(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0}
                       : (std::uint64_t{1} << width) - 1;
  }

 private:
  unsigned width_ = 0;
  std::uint64_t bits_ = 0;
};

inline unsigned hamming_distance(BitString a, BitString b) {
  return static_cast<unsigned>(std::popcount(a.bits() ^ b.bits()));
}

/** A computational basis state of a whole register. */
using BasisState = BitString;

}  // namespace transposynth
