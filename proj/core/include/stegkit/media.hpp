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

#ifndef STEGKIT_MEDIA_HPP_
#define STEGKIT_MEDIA_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace stegkit {

using Bytes = std::vector<std::uint8_t>;

// Grayscale raster, row-major. bit_depth is 8 or 16 and every pixel is
// below 2^bit_depth; the constructor enforces both.
class Image {
 public:
  Image() = default;
  Image(std::size_t width, std::size_t height, int bit_depth,
        std::vector<std::uint16_t> pixels);

  // Image of the given size with every pixel set to `value`.
  static Image filled(std::size_t width, std::size_t height, int bit_depth,
                      std::uint16_t value);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  int bit_depth() const noexcept { return bit_depth_; }
  std::uint32_t max_value() const noexcept {
    return (std::uint32_t{1} << bit_depth_) - 1;
  }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::span<const std::uint16_t> pixels() const noexcept { return pixels_; }
  std::uint16_t at(std::size_t x, std::size_t y) const {
    return pixels_[y * width_ + x];
  }

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  int bit_depth_ = 8;
  std::vector<std::uint16_t> pixels_;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::span<const Rgb> pixels() const noexcept { return pixels_; }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Rgb> pixels_;
};

// Mono clip with samples in [-1, 1).
class AudioClip {
 public:
  AudioClip() = default;
  AudioClip(std::uint32_t sample_rate, std::vector<double> samples);

  std::uint32_t sample_rate() const noexcept { return sample_rate_; }
  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const double> samples() const noexcept { return samples_; }

  friend bool operator==(const AudioClip&, const AudioClip&) = default;

 private:
  std::uint32_t sample_rate_ = 1;
  std::vector<double> samples_;
};

// Largest double strictly below 1.0; the upper clamp for audio samples.
inline constexpr double kMaxSample = 1.0 - 0x1p-53;

// Clamps every value into [-1, kMaxSample] and returns how many were moved.
std::size_t clamp_samples(std::span<double> samples);

// BT.601 luma: round(0.299 r + 0.587 g + 0.114 b).
Image rgb_to_gray(const RgbImage& img);

// Binary PGM (P5). maxval 255 maps to bit_depth 8, 65535 to 16 (big-endian).
Image load_pgm(std::span<const std::uint8_t> bytes);
Bytes save_pgm(const Image& img);

// Binary PPM (P6), maxval 255 only.
RgbImage load_ppm(std::span<const std::uint8_t> bytes);
Bytes save_ppm(const RgbImage& img);

// RIFF/WAVE, PCM, mono, 16-bit. Samples map as int16 / 32768.
AudioClip load_wav(std::span<const std::uint8_t> bytes);
Bytes save_wav(const AudioClip& clip);

// Quantizes a real sample the way save_wav does.
std::int16_t quantize_pcm16(double sample) noexcept;

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);

}  // namespace stegkit

#endif  // STEGKIT_MEDIA_HPP_
