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

#include "stegkit/watermark.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stegkit/error.hpp"

namespace stegkit {
namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::kInvalidArgument,
                "embedding strength must be positive");
  }
}


const FilterPair& recipe_filter(const EmbedRecipe& recipe) {
  try {
    return filter_by_name(*recipe.filter);
  } catch (const Error&) {
    throw Error(ErrorKind::kRecipe,
                "recipe: unknown filter '" + *recipe.filter + "'");
  }
}

std::vector<double> normalized(const Image& img) {
  const double scale = 1.0 / static_cast<double>(img.max_value());
  std::vector<double> out(img.size());
  auto px = img.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) out[i] = px[i] * scale;
  return out;
}

}  // namespace

std::size_t detail_capacity(std::size_t carrier_length,
                            const FilterPair& filters) {
  const std::size_t bands = (carrier_length + 1) / 2;
  if (carrier_length % 2 == 0) return bands;
  // The zero pad is dropped after synthesis, so no payload may reach it.
  const std::size_t padded = carrier_length + 1;
  std::size_t usable = bands;
  for (std::size_t k = 1; k < filters.h1().size(); k += 2) {
    const std::size_t n = (padded - 1 + padded - k % padded) % padded / 2;
    usable = std::min(usable, n);
  }
  return usable;
}

std::vector<double> embed_detail(std::span<const double> carrier,
                                 std::span<const double> payload,
                                 const FilterPair& filters) {
  const std::size_t usable = detail_capacity(carrier.size(), filters);
  if (payload.size() > usable) {
    throw Error(ErrorKind::kCapacity,
                "payload of " + std::to_string(payload.size()) +
                    " values exceeds " + std::to_string(usable) +
                    " usable detail coefficients");
  }
  if (payload.empty()) return {carrier.begin(), carrier.end()};
  WaveletBands bands = dwt_analyze(carrier, filters);
  std::copy(payload.begin(), payload.end(), bands.detail.begin());
  return dwt_synthesize(bands, filters);
}

std::vector<double> extract_detail(std::span<const double> carrier,
                                   std::size_t count,
                                   const FilterPair& filters) {
  if (count > detail_capacity(carrier.size(), filters)) {
    throw Error(ErrorKind::kDimension,
                "carrier of " + std::to_string(carrier.size()) +
                    " samples holds fewer than " + std::to_string(count) +
                    " detail coefficients");
  }
  if (count == 0) return {};
  WaveletBands bands = dwt_analyze(carrier, filters);
  bands.detail.resize(count);
  return std::move(bands.detail);
}

// --- image in image --------------------------------------------------------

Embedded<Image> embed_image_in_image(const Image& cover, const Image& message,
                                     BitBudget n) {
  Embedded<Image> out{embed_plane(cover, message, n), {}, 0};
  out.recipe.mode = Mode::kImageInImage;
  out.recipe.n = n.value();
  out.recipe.width = message.width();
  out.recipe.height = message.height();
  return out;
}

Image extract_image_in_image(const Image& stego, const EmbedRecipe& recipe) {
  require_mode(recipe, Mode::kImageInImage);
  recipe.validate();
  if (stego.width() != *recipe.width || stego.height() != *recipe.height) {
    throw Error(ErrorKind::kDimension,
                "stego is " + std::to_string(stego.width()) + "x" +
                    std::to_string(stego.height()) + " but recipe expects " +
                    std::to_string(*recipe.width) + "x" +
                    std::to_string(*recipe.height));
  }
  return extract_plane(stego, BitBudget(*recipe.n));
}

// --- audio in audio --------------------------------------------------------

Embedded<AudioClip> embed_audio_in_audio(const AudioClip& cover,
                                         const AudioClip& mark,
                                         std::size_t coeff_count) {
  if (cover.sample_rate() != mark.sample_rate()) {
    throw Error(ErrorKind::kInvalidArgument,
                "sample rate mismatch: cover " +
                    std::to_string(cover.sample_rate()) + " Hz, mark " +
                    std::to_string(mark.sample_rate()) + " Hz");
  }
  if (coeff_count > cover.size() || coeff_count > mark.size()) {
    throw Error(ErrorKind::kCapacity,
                "coeff_count " + std::to_string(coeff_count) +
                    " exceeds cover (" + std::to_string(cover.size()) +
                    ") or mark (" + std::to_string(mark.size()) + ") length");
  }
  Embedded<AudioClip> out{cover, {}, 0};
  out.recipe.mode = Mode::kAudioInAudio;
  out.recipe.coeff_count = coeff_count;
  out.recipe.samples = mark.size();
  out.recipe.sample_rate = mark.sample_rate();
  if (coeff_count == 0) return out;

  std::vector<double> spectrum = dct_forward(cover.samples());
  const std::vector<double> mark_spectrum = dct_forward(mark.samples());
  std::copy_n(mark_spectrum.begin(), coeff_count,
              spectrum.end() - static_cast<std::ptrdiff_t>(coeff_count));
  std::vector<double> samples = dct_inverse(spectrum);
  out.clamped = clamp_samples(samples);
  out.stego = AudioClip(cover.sample_rate(), std::move(samples));
  return out;
}

std::vector<double> extract_audio_in_audio_coefficients(
    const AudioClip& stego, const EmbedRecipe& recipe) {
  require_mode(recipe, Mode::kAudioInAudio);
  recipe.validate();
  const std::size_t count = *recipe.coeff_count;
  if (stego.size() < count) {
    throw Error(ErrorKind::kDimension,
                "stego has " + std::to_string(stego.size()) +
                    " samples, recipe needs " + std::to_string(count));
  }
  if (count == 0) return {};
  const std::vector<double> spectrum = dct_forward(stego.samples());
  return {spectrum.end() - static_cast<std::ptrdiff_t>(count), spectrum.end()};
}

AudioClip extract_audio_in_audio(const AudioClip& stego,
                                 const EmbedRecipe& recipe) {
  const std::vector<double> coeffs =
      extract_audio_in_audio_coefficients(stego, recipe);
  const std::size_t length = *recipe.samples;
  if (length == 0) return AudioClip(*recipe.sample_rate, {});
  std::vector<double> spectrum(length, 0.0);
  std::copy(coeffs.begin(), coeffs.end(), spectrum.begin());
  std::vector<double> samples =
      coeffs.empty() ? std::vector<double>(length, 0.0)
                     : dct_inverse(spectrum);
  clamp_samples(samples);
  return AudioClip(*recipe.sample_rate, std::move(samples));
}

// --- image in audio --------------------------------------------------------

Embedded<AudioClip> embed_image_in_audio(const AudioClip& cover,
                                         const Image& mark, double alpha,
                                         const FilterPair& filters) {
  require_alpha(alpha);
  if (mark.bit_depth() != 8) {
    throw Error(ErrorKind::kUnsupported, "image watermark must be 8-bit");
  }
  std::vector<double> payload(mark.size());
  auto px = mark.pixels();
  for (std::size_t k = 0; k < px.size(); ++k) {
    payload[k] = alpha * (px[k] / 255.0);
  }
  std::vector<double> samples = embed_detail(cover.samples(), payload, filters);

  Embedded<AudioClip> out;
  out.clamped = clamp_samples(samples);
  out.stego = AudioClip(cover.sample_rate(), std::move(samples));
  out.recipe.mode = Mode::kImageInAudio;
  out.recipe.alpha = alpha;
  out.recipe.width = mark.width();
  out.recipe.height = mark.height();
  out.recipe.filter = filters.name();
  return out;
}

Image extract_image_in_audio(const AudioClip& stego,
                             const EmbedRecipe& recipe) {
  require_mode(recipe, Mode::kImageInAudio);
  recipe.validate();
  const FilterPair& filters = recipe_filter(recipe);
  const std::size_t count = *recipe.width * *recipe.height;
  const std::vector<double> detail =
      extract_detail(stego.samples(), count, filters);
  std::vector<std::uint16_t> pixels(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double v = std::round(255.0 * detail[k] / *recipe.alpha);
    pixels[k] = static_cast<std::uint16_t>(std::clamp(v, 0.0, 255.0));
  }
  return Image(*recipe.width, *recipe.height, 8, std::move(pixels));
}

// --- audio in image --------------------------------------------------------

Embedded<Image> embed_audio_in_image(const Image& cover, const AudioClip& mark,
                                     double alpha, const FilterPair& filters) {
  require_alpha(alpha);
  std::vector<double> payload(mark.samples().begin(), mark.samples().end());
  for (double& s : payload) s *= alpha;
  const std::vector<double> carrier =
      embed_detail(normalized(cover), payload, filters);

  Embedded<Image> out;
  std::vector<std::uint16_t> pixels(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    const double v = std::round(carrier[i] * 65535.0);
    const double c = std::clamp(v, 0.0, 65535.0);
    if (c != v) ++out.clamped;
    pixels[i] = static_cast<std::uint16_t>(c);
  }
  out.stego = Image(cover.width(), cover.height(), 16, std::move(pixels));
  out.recipe.mode = Mode::kAudioInImage;
  out.recipe.alpha = alpha;
  out.recipe.samples = mark.size();
  out.recipe.sample_rate = mark.sample_rate();
  out.recipe.filter = filters.name();
  return out;
}

AudioClip extract_audio_in_image(const Image& stego,
                                 const EmbedRecipe& recipe) {
  require_mode(recipe, Mode::kAudioInImage);
  recipe.validate();
  if (stego.bit_depth() != 16) {
    throw Error(ErrorKind::kUnsupported,
                "audio-in-image extraction needs a 16-bit stego image");
  }
  const FilterPair& filters = recipe_filter(recipe);
  std::vector<double> samples =
      extract_detail(normalized(stego), *recipe.samples, filters);
  for (double& s : samples) s /= *recipe.alpha;
  clamp_samples(samples);
  return AudioClip(*recipe.sample_rate, std::move(samples));
}

}  // namespace stegkit
