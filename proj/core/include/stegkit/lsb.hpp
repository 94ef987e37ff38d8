// Copyright 2026 The Stegkit Authors. All Rights Reserved.
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

#ifndef STEGKIT_LSB_HPP_
#define STEGKIT_LSB_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "stegkit/media.hpp"

namespace stegkit {

// Number of cover LSBs given to the message, 1..8.
class BitBudget {
 public:
  explicit BitBudget(int n);
  int value() const noexcept { return n_; }
  // 2^n - 1: the bits of each cover pixel that carry payload.
  std::uint8_t plane_mask() const noexcept {
    return static_cast<std::uint8_t>((1u << n_) - 1u);
  }
  friend bool operator==(BitBudget, BitBudget) = default;

 private:
  int n_;
};

// Sequence of 0/1 values.
class BitMessage {
 public:
  BitMessage() = default;
  explicit BitMessage(std::vector<std::uint8_t> bits);

  // Bits of each byte, most significant first.
  static BitMessage from_bytes(std::span<const std::uint8_t> bytes);
  // Parses a string of '0'/'1' characters.
  static BitMessage from_string(std::string_view bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  // Packs MSB-first; a trailing partial byte is zero-filled.
  std::vector<std::uint8_t> to_bytes() const;

  friend bool operator==(const BitMessage&, const BitMessage&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Image-in-image n-bit plane substitution. The cover keeps its top 8-n bits
// and the message's top n bits land in the cover's low n bits:
//   stego = (cover & ~(2^n - 1)) | (message >> (8 - n))
// Both images must be 8-bit and equally sized.
Image embed_plane(const Image& cover, const Image& message, BitBudget n);

// Inverse of embed_plane: (stego << (8 - n)) & 0xFF. Returns the message with
// its low 8-n bits zeroed.
Image extract_plane(const Image& stego, BitBudget n);

// One payload bit per pixel, in raster order. Pixels past the payload are
// left untouched.
Image embed_bits(const Image& cover, const BitMessage& payload);
BitMessage extract_bits(const Image& stego, std::size_t count);

// Each payload bit is written to `repeat` consecutive pixels and read back
// by majority vote. `repeat` must be odd.
Image embed_bits_repeated(const Image& cover, const BitMessage& payload,
                          std::size_t repeat);
BitMessage extract_bits_repeated(const Image& stego, std::size_t count,
                                 std::size_t repeat);

std::uint64_t capacity_bits(const Image& carrier, BitBudget n);

struct AudioCapacity {
  std::uint64_t total_bits = 0;
  std::uint64_t bits_per_second = 0;
};
AudioCapacity capacity_bits(const AudioClip& carrier, BitBudget n);

}  // namespace stegkit

#endif  // STEGKIT_LSB_HPP_
