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

#ifndef STEGKIT_RECIPE_HPP_
#define STEGKIT_RECIPE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace stegkit {

enum class Mode { kImageInImage, kAudioInAudio, kImageInAudio, kAudioInImage };

// "image_in_image" etc. parse_mode also accepts the hyphenated spelling.
std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

// Everything an extractor needs to undo an embedding. Fields a mode does not
// use stay empty.
//
//   image_in_image: n, width, height
//   audio_in_audio: coeff_count, samples, sample_rate
//   image_in_audio: alpha, width, height, filter
//   audio_in_image: alpha, samples, sample_rate, filter
struct EmbedRecipe {
  Mode mode = Mode::kImageInImage;
  std::optional<int> n;
  std::optional<std::size_t> coeff_count;
  std::optional<double> alpha;
  std::optional<std::size_t> width;
  std::optional<std::size_t> height;
  std::optional<std::size_t> samples;
  std::optional<std::uint32_t> sample_rate;
  std::optional<std::string> filter;

  // Throws ErrorKind::kRecipe when a required field is missing, a foreign
  // field is present, or a value is out of range.
  void validate() const;

  // Sidecar text: one `key=value` line per present field, `mode` first.
  std::string serialize() const;
  static EmbedRecipe parse(std::string_view text);

  friend bool operator==(const EmbedRecipe&, const EmbedRecipe&) = default;
};

// Throws ErrorKind::kModeMismatch unless recipe.mode == expected.
void require_mode(const EmbedRecipe& recipe, Mode expected);

}  // namespace stegkit

#endif  // STEGKIT_RECIPE_HPP_
