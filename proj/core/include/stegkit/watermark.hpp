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

#ifndef STEGKIT_WATERMARK_HPP_
#define STEGKIT_WATERMARK_HPP_

#include <cstddef>
#include <vector>

#include "stegkit/lsb.hpp"
#include "stegkit/media.hpp"
#include "stegkit/recipe.hpp"
#include "stegkit/transforms.hpp"

namespace stegkit {

inline constexpr double kDefaultAlpha = 0.05;
// Default DCT replacement band as a fraction of the cover length.
inline constexpr double kDefaultCoeffFraction = 0.10;

// Stego carrier plus the recipe needed to undo the embedding. `clamped`
// counts carrier samples forced back into range after synthesis; any nonzero
// value means extraction is no longer exact.
template <typename Carrier>
struct Embedded {
  Carrier stego;
  EmbedRecipe recipe;
  std::size_t clamped = 0;
};

// LSB plane substitution packaged with its recipe.
Embedded<Image> embed_image_in_image(const Image& cover, const Image& message,
                                     BitBudget n);
Image extract_image_in_image(const Image& stego, const EmbedRecipe& recipe);

// The lowest `coeff_count` DCT coefficients of the mark overwrite the highest
// `coeff_count` coefficients of the cover, order preserved.
Embedded<AudioClip> embed_audio_in_audio(const AudioClip& cover,
                                         const AudioClip& mark,
                                         std::size_t coeff_count);
// The transplanted coefficients, read back from the top of the stego
// spectrum.
std::vector<double> extract_audio_in_audio_coefficients(
    const AudioClip& stego, const EmbedRecipe& recipe);
// Recovered watermark: the coeff_count-term DCT low-pass approximation of
// the original mark.
AudioClip extract_audio_in_audio(const AudioClip& stego,
                                 const EmbedRecipe& recipe);

// Pixel k (row-major) is written as alpha * pixel / 255 into detail
// coefficient k of a one-stage DWT of the cover audio.
Embedded<AudioClip> embed_image_in_audio(const AudioClip& cover,
                                         const Image& mark, double alpha,
                                         const FilterPair& filters = haar());
Image extract_image_in_audio(const AudioClip& stego, const EmbedRecipe& recipe);

// The cover is flattened row-major to [0, 1], sample k is written as
// alpha * sample into detail coefficient k, and the synthesis is requantized
// to a 16-bit image.
Embedded<Image> embed_audio_in_image(const Image& cover, const AudioClip& mark,
                                     double alpha,
                                     const FilterPair& filters = haar());
AudioClip extract_audio_in_image(const Image& stego, const EmbedRecipe& recipe);

// Detail coefficients that survive synthesis for a carrier of this length.
// Odd lengths lose the ones whose filter support touches the zero pad.
std::size_t detail_capacity(std::size_t carrier_length,
                            const FilterPair& filters);

// Float-domain variants used by the quantizing entry points above. They
// expose the carrier before it is rounded to integer pixels.
std::vector<double> embed_detail(std::span<const double> carrier,
                                 std::span<const double> payload,
                                 const FilterPair& filters);
std::vector<double> extract_detail(std::span<const double> carrier,
                                   std::size_t count,
                                   const FilterPair& filters);

}  // namespace stegkit

#endif  // STEGKIT_WATERMARK_HPP_
