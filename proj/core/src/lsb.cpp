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

#include "stegkit/lsb.hpp"

#include <string>

#include "stegkit/error.hpp"

namespace stegkit {
namespace {

void require_8bit(const Image& img, const char* role) {
  if (img.bit_depth() != 8) {
    throw Error(ErrorKind::kUnsupported,
                std::string(role) + " must be 8-bit, got " +
                    std::to_string(img.bit_depth()) + "-bit");
  }
}

std::string dims(const Image& img) {
  return std::to_string(img.width()) + "x" + std::to_string(img.height());
}

void require_fits(std::size_t needed, std::size_t available) {
  if (needed > available) {
    throw Error(ErrorKind::kCapacity,
                "payload needs " + std::to_string(needed) +
                    " pixels, carrier has " + std::to_string(available));
  }
}

}  // namespace

BitBudget::BitBudget(int n) : n_(n) {
  if (n < 1 || n > 8) {
    throw Error(ErrorKind::kInvalidArgument,
                "n = " + std::to_string(n) + " outside [1, 8]");
  }
}

BitMessage::BitMessage(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "bit value " + std::to_string(b) + " is not 0 or 1");
    }
  }
}

BitMessage BitMessage::from_bytes(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int k = 7; k >= 0; --k) bits.push_back((byte >> k) & 1u);
  }
  return BitMessage(std::move(bits));
}

BitMessage BitMessage::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string("bit string contains '") + c + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitMessage(std::move(bits));
}

std::vector<std::uint8_t> BitMessage::to_bytes() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out[i / 8] |= static_cast<std::uint8_t>(bits_[i] << (7 - i % 8));
  }
  return out;
}

Image embed_plane(const Image& cover, const Image& message, BitBudget n) {
  require_8bit(cover, "cover");
  require_8bit(message, "message");
  if (!cover.same_shape(message)) {
    throw Error(ErrorKind::kDimension, "cover is " + dims(cover) +
                                           " but message is " +
                                           dims(message));
  }
  const unsigned keep = static_cast<std::uint8_t>(~n.plane_mask());
  const int shift = 8 - n.value();
  auto c = cover.pixels();
  auto m = message.pixels();
  std::vector<std::uint16_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] = static_cast<std::uint16_t>((c[i] & keep) | (m[i] >> shift));
  }
  return Image(cover.width(), cover.height(), 8, std::move(out));
}

Image extract_plane(const Image& stego, BitBudget n) {
  require_8bit(stego, "stego");
  const int shift = 8 - n.value();
  auto s = stego.pixels();
  std::vector<std::uint16_t> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i] = static_cast<std::uint16_t>((s[i] << shift) & 0xFFu);
  }
  return Image(stego.width(), stego.height(), 8, std::move(out));
}

Image embed_bits(const Image& cover, const BitMessage& payload) {
  return embed_bits_repeated(cover, payload, 1);
}

BitMessage extract_bits(const Image& stego, std::size_t count) {
  return extract_bits_repeated(stego, count, 1);
}

Image embed_bits_repeated(const Image& cover, const BitMessage& payload,
                          std::size_t repeat) {
  require_8bit(cover, "cover");
  if (repeat == 0 || repeat % 2 == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "repetition factor " + std::to_string(repeat) +
                    " must be odd and positive");
  }
  require_fits(payload.size() * repeat, cover.size());
  std::vector<std::uint16_t> out(cover.pixels().begin(),
                                 cover.pixels().end());
  for (std::size_t i = 0; i < payload.size(); ++i) {
    for (std::size_t r = 0; r < repeat; ++r) {
      std::uint16_t& px = out[i * repeat + r];
      px = static_cast<std::uint16_t>((px & 0xFEu) | payload[i]);
    }
  }
  return Image(cover.width(), cover.height(), 8, std::move(out));
}

BitMessage extract_bits_repeated(const Image& stego, std::size_t count,
                                 std::size_t repeat) {
  require_8bit(stego, "stego");
  if (repeat == 0 || repeat % 2 == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "repetition factor " + std::to_string(repeat) +
                    " must be odd and positive");
  }
  require_fits(count * repeat, stego.size());
  auto s = stego.pixels();
  std::vector<std::uint8_t> bits(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t ones = 0;
    for (std::size_t r = 0; r < repeat; ++r) ones += s[i * repeat + r] & 1u;
    bits[i] = ones * 2 > repeat ? 1 : 0;
  }
  return BitMessage(std::move(bits));
}

std::uint64_t capacity_bits(const Image& carrier, BitBudget n) {
  return static_cast<std::uint64_t>(carrier.width()) * carrier.height() *
         static_cast<std::uint64_t>(n.value());
}

AudioCapacity capacity_bits(const AudioClip& carrier, BitBudget n) {
  const auto bits = static_cast<std::uint64_t>(n.value());
  return {carrier.size() * bits, carrier.sample_rate() * bits};
}

}  // namespace stegkit
