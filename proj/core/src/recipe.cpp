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

#include "stegkit/recipe.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "stegkit/error.hpp"

namespace stegkit {
namespace {

[[noreturn]] void recipe_error(const std::string& what) {
  throw Error(ErrorKind::kRecipe, "recipe: " + what);
}

template <typename T>
T parse_unsigned(std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    recipe_error("bad value for " + std::string(key) + ": '" +
                 std::string(text) + "'");
  }
  return value;
}

double parse_real(std::string_view key, std::string_view text) {
  // std::from_chars for double is unavailable on older libstdc++.
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    recipe_error("bad value for " + std::string(key) + ": '" + s + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kImageInImage:
      return "image_in_image";
    case Mode::kAudioInAudio:
      return "audio_in_audio";
    case Mode::kImageInAudio:
      return "image_in_audio";
    case Mode::kAudioInImage:
      return "audio_in_image";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  std::string norm(text);
  for (char& c : norm) {
    if (c == '-') c = '_';
  }
  for (Mode m : {Mode::kImageInImage, Mode::kAudioInAudio, Mode::kImageInAudio,
                 Mode::kAudioInImage}) {
    if (norm == to_string(m)) return m;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown mode '" + std::string(text) + "'");
}

void EmbedRecipe::validate() const {
  const bool want_n = mode == Mode::kImageInImage;
  const bool want_coeffs = mode == Mode::kAudioInAudio;
  const bool want_alpha =
      mode == Mode::kImageInAudio || mode == Mode::kAudioInImage;
  const bool want_dims =
      mode == Mode::kImageInImage || mode == Mode::kImageInAudio;
  const bool want_samples = !want_dims;

  auto check = [this](bool wanted, bool present, const char* key) {
    if (wanted && !present) {
      recipe_error(std::string("missing '") + key + "' for mode " +
                   std::string(to_string(mode)));
    }
    if (!wanted && present) {
      recipe_error(std::string("'") + key + "' is not used by mode " +
                   std::string(to_string(mode)));
    }
  };
  check(want_n, n.has_value(), "n");
  check(want_coeffs, coeff_count.has_value(), "coeff_count");
  check(want_alpha, alpha.has_value(), "alpha");
  check(want_alpha, filter.has_value(), "filter");
  check(want_dims, width.has_value(), "width");
  check(want_dims, height.has_value(), "height");
  check(want_samples, samples.has_value(), "samples");
  check(want_samples, sample_rate.has_value(), "sample_rate");

  if (n && (*n < 1 || *n > 8)) {
    recipe_error("n = " + std::to_string(*n) + " outside [1, 8]");
  }
  if (alpha && !(*alpha > 0.0)) {
    recipe_error("alpha must be positive");
  }
  if (sample_rate && *sample_rate == 0) {
    recipe_error("sample_rate must be positive");
  }
  if (coeff_count && samples && *coeff_count > *samples) {
    recipe_error("coeff_count exceeds watermark length");
  }
}

std::string EmbedRecipe::serialize() const {
  std::string out = "mode=" + std::string(to_string(mode)) + "\n";
  if (n) out += "n=" + std::to_string(*n) + "\n";
  if (coeff_count) out += "coeff_count=" + std::to_string(*coeff_count) + "\n";
  if (alpha) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *alpha);
    out += std::string("alpha=") + buf + "\n";
  }
  if (width) out += "width=" + std::to_string(*width) + "\n";
  if (height) out += "height=" + std::to_string(*height) + "\n";
  if (samples) out += "samples=" + std::to_string(*samples) + "\n";
  if (sample_rate) out += "sample_rate=" + std::to_string(*sample_rate) + "\n";
  if (filter) out += "filter=" + *filter + "\n";
  return out;
}

EmbedRecipe EmbedRecipe::parse(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      recipe_error("line " + std::to_string(line_no) + " has no '='");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (!fields.emplace(key, value).second) {
      recipe_error("duplicate key '" + key + "'");
    }
  }

  EmbedRecipe r;
  auto mode_it = fields.find("mode");
  if (mode_it == fields.end()) recipe_error("missing 'mode'");
  try {
    r.mode = parse_mode(mode_it->second);
  } catch (const Error&) {
    recipe_error("unknown mode '" + mode_it->second + "'");
  }
  for (const auto& [key, value] : fields) {
    if (key == "mode") {
      continue;
    } else if (key == "n") {
      r.n = parse_unsigned<int>(key, value);
    } else if (key == "coeff_count") {
      r.coeff_count = parse_unsigned<std::size_t>(key, value);
    } else if (key == "alpha") {
      r.alpha = parse_real(key, value);
    } else if (key == "width") {
      r.width = parse_unsigned<std::size_t>(key, value);
    } else if (key == "height") {
      r.height = parse_unsigned<std::size_t>(key, value);
    } else if (key == "samples") {
      r.samples = parse_unsigned<std::size_t>(key, value);
    } else if (key == "sample_rate") {
      r.sample_rate = parse_unsigned<std::uint32_t>(key, value);
    } else if (key == "filter") {
      r.filter = value;
    } else {
      recipe_error("unknown key '" + key + "'");
    }
  }
  r.validate();
  return r;
}

void require_mode(const EmbedRecipe& recipe, Mode expected) {
  if (recipe.mode != expected) {
    throw Error(ErrorKind::kModeMismatch,
                "recipe mode " + std::string(to_string(recipe.mode)) +
                    " cannot drive " + std::string(to_string(expected)) +
                    " extraction");
  }
}

}  // namespace stegkit
