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

#include "stegkit/media.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "stegkit/error.hpp"

namespace stegkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return "io";
    case ErrorKind::kMalformed:
      return "malformed";
    case ErrorKind::kTruncated:
      return "truncated";
    case ErrorKind::kUnsupported:
      return "unsupported";
    case ErrorKind::kInvalidArgument:
      return "invalid-argument";
    case ErrorKind::kDimension:
      return "dimension";
    case ErrorKind::kCapacity:
      return "capacity";
    case ErrorKind::kRecipe:
      return "recipe";
    case ErrorKind::kModeMismatch:
      return "mode-mismatch";
  }
  return "unknown";
}

Image::Image(std::size_t width, std::size_t height, int bit_depth,
             std::vector<std::uint16_t> pixels)
    : width_(width),
      height_(height),
      bit_depth_(bit_depth),
      pixels_(std::move(pixels)) {
  if (bit_depth != 8 && bit_depth != 16) {
    throw Error(ErrorKind::kUnsupported,
                "bit depth " + std::to_string(bit_depth) + " not in {8, 16}");
  }
  if (pixels_.size() != width * height) {
    throw Error(ErrorKind::kDimension,
                "pixel count " + std::to_string(pixels_.size()) +
                    " does not match " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
  if (bit_depth == 8) {
    auto it = std::find_if(pixels_.begin(), pixels_.end(),
                           [](std::uint16_t p) { return p > 255; });
    if (it != pixels_.end()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "pixel value " + std::to_string(*it) +
                      " exceeds 8-bit range");
    }
  }
}

Image Image::filled(std::size_t width, std::size_t height, int bit_depth,
                    std::uint16_t value) {
  return Image(width, height, bit_depth,
               std::vector<std::uint16_t>(width * height, value));
}

RgbImage::RgbImage(std::size_t width, std::size_t height,
                   std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (pixels_.size() != width * height) {
    throw Error(ErrorKind::kDimension,
                "pixel count " + std::to_string(pixels_.size()) +
                    " does not match " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
}

AudioClip::AudioClip(std::uint32_t sample_rate, std::vector<double> samples)
    : sample_rate_(sample_rate), samples_(std::move(samples)) {
  if (sample_rate == 0) {
    throw Error(ErrorKind::kInvalidArgument, "sample rate must be positive");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const double s = samples_[i];
    if (!(s >= -1.0 && s < 1.0)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "sample " + std::to_string(i) + " outside [-1, 1)");
    }
  }
}

std::size_t clamp_samples(std::span<double> samples) {
  std::size_t moved = 0;
  for (double& s : samples) {
    const double c = std::isnan(s) ? 0.0 : std::clamp(s, -1.0, kMaxSample);
    if (c != s) {
      s = c;
      ++moved;
    }
  }
  return moved;
}

Image rgb_to_gray(const RgbImage& img) {
  std::vector<std::uint16_t> out;
  out.reserve(img.pixels().size());
  for (const Rgb& p : img.pixels()) {
    const double luma = 0.299 * p.r + 0.587 * p.g + 0.114 * p.b;
    out.push_back(static_cast<std::uint16_t>(
        std::clamp<long>(std::lround(luma), 0, 255)));
  }
  return Image(img.width(), img.height(), 8, std::move(out));
}

// --- Netpbm ---------------------------------------------------------------

namespace {

struct PnmHeader {
  char kind = 0;  // '5' or '6'
  std::size_t width = 0;
  std::size_t height = 0;
  std::uint32_t maxval = 0;
  std::size_t data_offset = 0;
};

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Skips whitespace and '#' comments.
void skip_separators(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    if (is_space(bytes[pos])) {
      ++pos;
    } else if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

std::uint64_t read_header_number(std::span<const std::uint8_t> bytes,
                                 std::size_t& pos, const char* field) {
  skip_separators(bytes, pos);
  if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9') {
    throw Error(ErrorKind::kMalformed,
                std::string("PNM header: missing ") + field);
  }
  std::uint64_t value = 0;
  while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
    value = value * 10 + (bytes[pos] - '0');
    if (value > 0xFFFFFFFFull) {
      throw Error(ErrorKind::kMalformed,
                  std::string("PNM header: ") + field + " too large");
    }
    ++pos;
  }
  return value;
}

PnmHeader parse_pnm_header(std::span<const std::uint8_t> bytes,
                           char expected) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw Error(ErrorKind::kMalformed, "PNM header: missing magic number");
  }
  if (bytes[1] != static_cast<std::uint8_t>(expected)) {
    throw Error(ErrorKind::kUnsupported,
                std::string("unsupported magic P") +
                    static_cast<char>(bytes[1]) + ", expected P" + expected);
  }
  PnmHeader h;
  h.kind = expected;
  std::size_t pos = 2;
  if (pos < bytes.size() && !is_space(bytes[pos]) && bytes[pos] != '#') {
    throw Error(ErrorKind::kMalformed, "PNM header: garbage after magic");
  }
  h.width = read_header_number(bytes, pos, "width");
  h.height = read_header_number(bytes, pos, "height");
  const std::uint64_t maxval = read_header_number(bytes, pos, "maxval");
  if (h.width != 0 && h.height > (std::size_t{1} << 40) / h.width) {
    throw Error(ErrorKind::kMalformed, "PNM header: raster too large");
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (pos >= bytes.size() || !is_space(bytes[pos])) {
    throw Error(ErrorKind::kMalformed,
                "PNM header: expected whitespace before raster");
  }
  h.data_offset = pos + 1;
  h.maxval = static_cast<std::uint32_t>(maxval);
  return h;
}

void append_ascii(Bytes& out, const std::string& s) {
  out.insert(out.end(), s.begin(), s.end());
}

}  // namespace

Image load_pgm(std::span<const std::uint8_t> bytes) {
  const PnmHeader h = parse_pnm_header(bytes, '5');
  int depth = 0;
  if (h.maxval == 255) {
    depth = 8;
  } else if (h.maxval == 65535) {
    depth = 16;
  } else {
    throw Error(ErrorKind::kUnsupported,
                "unsupported PGM maxval " + std::to_string(h.maxval) +
                    " (expected 255 or 65535)");
  }
  const std::size_t count = h.width * h.height;
  const std::size_t sample_bytes = depth == 8 ? 1 : 2;
  const std::size_t available = bytes.size() - h.data_offset;
  if (available / sample_bytes < count) {
    throw Error(ErrorKind::kTruncated,
                "PGM raster truncated: need " +
                    std::to_string(count * sample_bytes) + " bytes, have " +
                    std::to_string(available));
  }
  std::vector<std::uint16_t> pixels(count);
  const std::uint8_t* p = bytes.data() + h.data_offset;
  for (std::size_t i = 0; i < count; ++i) {
    pixels[i] = depth == 8 ? p[i]
                           : static_cast<std::uint16_t>((p[2 * i] << 8) |
                                                        p[2 * i + 1]);
  }
  return Image(h.width, h.height, depth, std::move(pixels));
}

Bytes save_pgm(const Image& img) {
  Bytes out;
  append_ascii(out, "P5\n" + std::to_string(img.width()) + " " +
                        std::to_string(img.height()) + "\n" +
                        std::to_string(img.max_value()) + "\n");
  if (img.bit_depth() == 8) {
    for (std::uint16_t v : img.pixels()) {
      out.push_back(static_cast<std::uint8_t>(v));
    }
  } else {
    for (std::uint16_t v : img.pixels()) {
      out.push_back(static_cast<std::uint8_t>(v >> 8));
      out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    }
  }
  return out;
}

RgbImage load_ppm(std::span<const std::uint8_t> bytes) {
  const PnmHeader h = parse_pnm_header(bytes, '6');
  if (h.maxval != 255) {
    throw Error(ErrorKind::kUnsupported,
                "unsupported PPM maxval " + std::to_string(h.maxval) +
                    " (expected 255)");
  }
  const std::size_t count = h.width * h.height;
  const std::size_t available = bytes.size() - h.data_offset;
  if (available / 3 < count) {
    throw Error(ErrorKind::kTruncated,
                "PPM raster truncated: need " + std::to_string(count * 3) +
                    " bytes, have " + std::to_string(available));
  }
  std::vector<Rgb> pixels(count);
  const std::uint8_t* p = bytes.data() + h.data_offset;
  for (std::size_t i = 0; i < count; ++i) {
    pixels[i] = Rgb{p[3 * i], p[3 * i + 1], p[3 * i + 2]};
  }
  return RgbImage(h.width, h.height, std::move(pixels));
}

Bytes save_ppm(const RgbImage& img) {
  Bytes out;
  append_ascii(out, "P6\n" + std::to_string(img.width()) + " " +
                        std::to_string(img.height()) + "\n255\n");
  for (const Rgb& p : img.pixels()) {
    out.push_back(p.r);
    out.push_back(p.g);
    out.push_back(p.b);
  }
  return out;
}

// --- WAV ------------------------------------------------------------------

namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint32_t read_le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_le16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_le32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xFF);
}

void put_le16(Bytes& out, std::uint16_t v) {
  out.push_back(v & 0xFF);
  out.push_back(v >> 8);
}

bool tag_is(const std::uint8_t* p, const char* tag) {
  return std::equal(p, p + 4, tag);
}

}  // namespace

std::int16_t quantize_pcm16(double sample) noexcept {
  const double scaled = std::round(sample * 32768.0);
  return static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
}

AudioClip load_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(bytes.data(), "RIFF") ||
      !tag_is(bytes.data() + 8, "WAVE")) {
    throw Error(ErrorKind::kMalformed, "WAV: missing RIFF/WAVE header");
  }
  bool have_fmt = false;
  std::uint32_t sample_rate = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::uint32_t chunk_size = read_le32(chunk + 4);
    const std::size_t body = pos + 8;
    if (tag_is(chunk, "fmt ")) {
      if (chunk_size < 16 || body + 16 > bytes.size()) {
        throw Error(ErrorKind::kMalformed, "WAV: fmt chunk too short");
      }
      const std::uint8_t* f = bytes.data() + body;
      const std::uint16_t format = read_le16(f);
      const std::uint16_t channels = read_le16(f + 2);
      sample_rate = read_le32(f + 4);
      const std::uint16_t bits = read_le16(f + 14);
      if (format != kFormatPcm) {
        throw Error(ErrorKind::kUnsupported,
                    "WAV: format code " + std::to_string(format) +
                        " is not PCM (1)");
      }
      if (channels != 1) {
        throw Error(ErrorKind::kUnsupported,
                    "WAV: " + std::to_string(channels) +
                        " channels, only mono is supported");
      }
      if (bits != 16) {
        throw Error(ErrorKind::kUnsupported,
                    "WAV: " + std::to_string(bits) +
                        "-bit samples, only 16-bit is supported");
      }
      if (sample_rate == 0) {
        throw Error(ErrorKind::kMalformed, "WAV: zero sample rate");
      }
      have_fmt = true;
    } else if (tag_is(chunk, "data")) {
      if (!have_fmt) {
        throw Error(ErrorKind::kMalformed, "WAV: data chunk before fmt");
      }
      if (body + chunk_size > bytes.size()) {
        throw Error(ErrorKind::kTruncated,
                    "WAV: data chunk declares " + std::to_string(chunk_size) +
                        " bytes, " + std::to_string(bytes.size() - body) +
                        " present");
      }
      if (chunk_size % 2 != 0) {
        throw Error(ErrorKind::kMalformed, "WAV: odd data chunk size");
      }
      std::vector<double> samples(chunk_size / 2);
      const std::uint8_t* d = bytes.data() + body;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto v = static_cast<std::int16_t>(read_le16(d + 2 * i));
        samples[i] = v / 32768.0;
      }
      return AudioClip(sample_rate, std::move(samples));
    }
    // Chunks are word aligned.
    pos = body + chunk_size + (chunk_size & 1);
  }
  throw Error(ErrorKind::kMalformed,
              have_fmt ? "WAV: no data chunk" : "WAV: no fmt chunk");
}

Bytes save_wav(const AudioClip& clip) {
  const auto data_bytes = static_cast<std::uint32_t>(clip.size() * 2);
  Bytes out;
  out.reserve(44 + data_bytes);
  append_ascii(out, "RIFF");
  put_le32(out, 36 + data_bytes);
  append_ascii(out, "WAVEfmt ");
  put_le32(out, 16);
  put_le16(out, kFormatPcm);
  put_le16(out, 1);
  put_le32(out, clip.sample_rate());
  put_le32(out, clip.sample_rate() * 2);
  put_le16(out, 2);
  put_le16(out, 16);
  append_ascii(out, "data");
  put_le32(out, data_bytes);
  for (double s : clip.samples()) {
    put_le16(out, static_cast<std::uint16_t>(quantize_pcm16(s)));
  }
  return out;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open " + path.string());
  }
  Bytes bytes((std::istreambuf_iterator<char>(in)),
              std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorKind::kIo, "read failed: " + path.string());
  }
  return bytes;
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot create " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorKind::kIo, "write failed: " + path.string());
  }
}

}  // namespace stegkit
