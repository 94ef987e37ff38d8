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

#ifndef STEGKIT_METRICS_HPP_
#define STEGKIT_METRICS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "stegkit/media.hpp"

namespace stegkit {

// PSNR reported for identical signals, and the ceiling for any PSNR.
inline constexpr double kPsnrCapDb = 99.0;

// Mean squared error, accumulated in double.
double mse(std::span<const double> x, std::span<const double> y);
// Pixelwise MSE of two equally shaped images (any bit depth).
double mse(const Image& x, const Image& y);

// 10 log10(L^2 / mse) with L = 2^bit_depth - 1, capped at kPsnrCapDb.
double psnr(double mse_value, int bit_depth);

// Direct form for 8-bit images:
//   10 log10(255^2 M N / sum (p - q)^2), capped at kPsnrCapDb.
double psnr_image(const Image& p, const Image& q);

struct Histogram {
  std::array<std::uint64_t, 256> bins{};

  std::uint64_t total() const noexcept;
  // One "value,count" line per bin.
  std::string to_csv() const;
};

Histogram histogram(const Image& img);

// Sum over bins of |a - b|.
std::uint64_t l1_distance(const Histogram& a, const Histogram& b);

// One embedding run: cover-vs-stego distortion and message-vs-recovered
// fidelity plus wall-clock seconds for the whole pipeline.
struct QualityReport {
  std::optional<int> n;
  double mse_cover_stego = 0.0;
  double psnr_cover_stego = kPsnrCapDb;
  double mse_message_recovered = 0.0;
  double psnr_message_recovered = kPsnrCapDb;
  double elapsed_s = 0.0;

  static std::string csv_header();
  std::string to_csv_row() const;
};

}  // namespace stegkit

#endif  // STEGKIT_METRICS_HPP_
