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

#include "cli.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <future>
#include <optional>
#include <ostream>

#include "stegkit/lsb.hpp"
#include "stegkit/recipe.hpp"
#include "stegkit/transforms.hpp"
#include "stegkit/watermark.hpp"

namespace stegkit::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Everything a subcommand may consume; which fields are required depends on
// the subcommand and mode.
struct RunConfig {
  std::string subcommand;
  std::string mode;
  std::string cover;
  std::string message;
  std::string stego;
  std::string recipe;
  std::string out;
  std::vector<std::string> inputs;
  int n = 0;
  double alpha = kDefaultAlpha;
  std::optional<std::size_t> coeff_count;
  std::string filter = "haar";
  bool parallel = false;
};

enum class FileKind { kPgm, kPpm, kWav, kUnknown };

FileKind sniff(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') {
    return FileKind::kPgm;
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') {
    return FileKind::kPpm;
  }
  if (bytes.size() >= 4 && std::equal(bytes.begin(), bytes.begin() + 4,
                                      std::string_view("RIFF").begin())) {
    return FileKind::kWav;
  }
  return FileKind::kUnknown;
}

bool is_image(FileKind kind) {
  return kind == FileKind::kPgm || kind == FileKind::kPpm;
}

[[noreturn]] void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// PGM as-is; PPM is converted to 8-bit gray.
Image decode_image(std::span<const std::uint8_t> bytes,
                   const std::string& path) {
  switch (sniff(bytes)) {
    case FileKind::kPgm:
      return load_pgm(bytes);
    case FileKind::kPpm:
      return rgb_to_gray(load_ppm(bytes));
    default:
      fail(ErrorKind::kUnsupported, path + " is not a PGM/PPM image");
  }
}

Image read_image(const std::string& path) {
  return decode_image(read_file(path), path);
}

AudioClip read_audio(const std::string& path) {
  const Bytes bytes = read_file(path);
  if (sniff(bytes) != FileKind::kWav) {
    fail(ErrorKind::kUnsupported, path + " is not a WAV file");
  }
  return load_wav(bytes);
}

std::string format(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<double> pcm_scale(const AudioClip& clip) {
  std::vector<double> out(clip.samples().begin(), clip.samples().end());
  for (double& s : out) s *= 32768.0;
  return out;
}

// Both images mapped to [0, 65535] so 8- and 16-bit rasters compare.
std::vector<double> wide_scale(const Image& img) {
  const double scale = 65535.0 / img.max_value();
  std::vector<double> out(img.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = img.pixels()[i] * scale;
  }
  return out;
}

struct Fidelity {
  double mse = 0.0;
  double psnr = kPsnrCapDb;
};

Fidelity compare_images(const Image& a, const Image& b) {
  if (!a.same_shape(b)) {
    fail(ErrorKind::kDimension,
         "image sizes differ: " + std::to_string(a.width()) + "x" +
             std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
             "x" + std::to_string(b.height()));
  }
  if (a.size() == 0) return {};
  if (a.bit_depth() == 8 && b.bit_depth() == 8) {
    return {mse(a, b), psnr_image(a, b)};
  }
  const double m = mse(wide_scale(a), wide_scale(b));
  return {m, psnr(m, 16)};
}

Fidelity compare_audio(const AudioClip& a, const AudioClip& b) {
  if (a.size() != b.size()) {
    fail(ErrorKind::kDimension, "clip lengths differ: " +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
  }
  if (a.size() == 0) return {};
  const double m = mse(pcm_scale(a), pcm_scale(b));
  return {m, psnr(m, 16)};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require(const std::string& value, const char* flag,
             const std::string& subcommand) {
  if (value.empty()) {
    fail(ErrorKind::kInvalidArgument,
         subcommand + " requires " + std::string(flag));
  }
}

// --- subcommands -------------------------------------------------------------

int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  // Arguments are validated before any file is touched.
  const Mode mode = parse_mode(cfg.mode);
  require(cfg.cover, "--cover", "embed");
  require(cfg.message, "--message", "embed");
  require(cfg.out, "--out", "embed");
  if (mode == Mode::kImageInImage) {
    if (cfg.n == 0) fail(ErrorKind::kInvalidArgument, "--n is required");
    BitBudget check(cfg.n);
  }
  if (!(cfg.alpha > 0.0)) {
    fail(ErrorKind::kInvalidArgument, "--alpha must be positive");
  }
  const FilterPair& filters = filter_by_name(cfg.filter);
  const std::string recipe_path =
      cfg.recipe.empty() ? cfg.out + ".recipe" : cfg.recipe;

  const auto start = Clock::now();
  QualityReport report;
  Bytes stego_bytes;
  EmbedRecipe recipe;
  std::size_t clamped = 0;

  switch (mode) {
    case Mode::kImageInImage: {
      const Image cover = read_image(cfg.cover);
      const Image message = read_image(cfg.message);
      auto result = embed_image_in_image(cover, message, BitBudget(cfg.n));
      stego_bytes = save_pgm(result.stego);
      recipe = result.recipe;
      const Image recovered =
          extract_image_in_image(load_pgm(stego_bytes), recipe);
      report.n = cfg.n;
      const Fidelity cs = compare_images(cover, result.stego);
      const Fidelity mr = compare_images(message, recovered);
      report.mse_cover_stego = cs.mse;
      report.psnr_cover_stego = cs.psnr;
      report.mse_message_recovered = mr.mse;
      report.psnr_message_recovered = mr.psnr;
      break;
    }
    case Mode::kAudioInAudio: {
      const AudioClip cover = read_audio(cfg.cover);
      const AudioClip mark = read_audio(cfg.message);
      const std::size_t count = cfg.coeff_count.value_or(std::min(
          static_cast<std::size_t>(kDefaultCoeffFraction * cover.size()),
          mark.size()));
      auto result = embed_audio_in_audio(cover, mark, count);
      stego_bytes = save_wav(result.stego);
      recipe = result.recipe;
      clamped = result.clamped;
      const AudioClip written = load_wav(stego_bytes);
      const AudioClip recovered = extract_audio_in_audio(written, recipe);
      const Fidelity cs = compare_audio(cover, written);
      const Fidelity mr = compare_audio(mark, recovered);
      report.mse_cover_stego = cs.mse;
      report.psnr_cover_stego = cs.psnr;
      report.mse_message_recovered = mr.mse;
      report.psnr_message_recovered = mr.psnr;
      break;
    }
    case Mode::kImageInAudio: {
      const AudioClip cover = read_audio(cfg.cover);
      const Image mark = read_image(cfg.message);
      auto result = embed_image_in_audio(cover, mark, cfg.alpha, filters);
      stego_bytes = save_wav(result.stego);
      recipe = result.recipe;
      clamped = result.clamped;
      const AudioClip written = load_wav(stego_bytes);
      const Image recovered = extract_image_in_audio(written, recipe);
      const Fidelity cs = compare_audio(cover, written);
      const Fidelity mr = compare_images(mark, recovered);
      report.mse_cover_stego = cs.mse;
      report.psnr_cover_stego = cs.psnr;
      report.mse_message_recovered = mr.mse;
      report.psnr_message_recovered = mr.psnr;
      break;
    }
    case Mode::kAudioInImage: {
      const Image cover = read_image(cfg.cover);
      const AudioClip mark = read_audio(cfg.message);
      auto result = embed_audio_in_image(cover, mark, cfg.alpha, filters);
      stego_bytes = save_pgm(result.stego);
      recipe = result.recipe;
      clamped = result.clamped;
      const AudioClip recovered =
          extract_audio_in_image(load_pgm(stego_bytes), recipe);
      const Fidelity cs = compare_images(cover, result.stego);
      const Fidelity mr = compare_audio(mark, recovered);
      report.mse_cover_stego = cs.mse;
      report.psnr_cover_stego = cs.psnr;
      report.mse_message_recovered = mr.mse;
      report.psnr_message_recovered = mr.psnr;
      break;
    }
  }

  write_file(cfg.out, stego_bytes);
  const std::string recipe_text = recipe.serialize();
  write_file(recipe_path,
             std::span(reinterpret_cast<const std::uint8_t*>(recipe_text.data()),
                       recipe_text.size()));
  report.elapsed_s = seconds_since(start);
  if (clamped > 0) {
    err << "warning: " << clamped
        << " carrier samples clamped; extraction is not exact\n";
  }
  out << QualityReport::csv_header() << "\n" << report.to_csv_row() << "\n";
  return kExitOk;
}

EmbedRecipe read_recipe(const std::string& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    fail(ErrorKind::kRecipe, "recipe required (" + path + " not found)");
  }
  Bytes bytes;
  try {
    bytes = read_file(path);
  } catch (const Error& e) {
    fail(ErrorKind::kRecipe, std::string("recipe unreadable: ") + e.what());
  }
  return EmbedRecipe::parse(
      std::string_view(reinterpret_cast<const char*>(bytes.data()),
                       bytes.size()));
}

int cmd_extract(const RunConfig& cfg, std::ostream& out) {
  require(cfg.stego, "--stego", "extract");
  require(cfg.out, "--out", "extract");
  const EmbedRecipe recipe =
      read_recipe(cfg.recipe.empty() ? cfg.stego + ".recipe" : cfg.recipe);
  const Bytes stego_bytes = read_file(cfg.stego);
  const FileKind kind = sniff(stego_bytes);
  const bool image_carrier =
      recipe.mode == Mode::kImageInImage || recipe.mode == Mode::kAudioInImage;
  if (image_carrier != is_image(kind) || kind == FileKind::kUnknown) {
    fail(ErrorKind::kModeMismatch,
         "mode mismatch: recipe mode " + std::string(to_string(recipe.mode)) +
             " expects " + (image_carrier ? "an image" : "a WAV") +
             " stego, got " + cfg.stego);
  }

  Bytes payload;
  switch (recipe.mode) {
    case Mode::kImageInImage:
      payload = save_pgm(
          extract_image_in_image(decode_image(stego_bytes, cfg.stego), recipe));
      break;
    case Mode::kAudioInAudio:
      payload = save_wav(extract_audio_in_audio(load_wav(stego_bytes), recipe));
      break;
    case Mode::kImageInAudio:
      payload = save_pgm(extract_image_in_audio(load_wav(stego_bytes), recipe));
      break;
    case Mode::kAudioInImage:
      payload = save_wav(
          extract_audio_in_image(decode_image(stego_bytes, cfg.stego), recipe));
      break;
  }
  write_file(cfg.out, payload);
  out << "extracted " << to_string(recipe.mode) << " payload to " << cfg.out
      << "\n";
  return kExitOk;
}

int cmd_metrics(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 2) {
    fail(ErrorKind::kInvalidArgument, "metrics takes exactly two files");
  }
  const Bytes a = read_file(cfg.inputs[0]);
  const Bytes b = read_file(cfg.inputs[1]);
  const FileKind ka = sniff(a);
  const FileKind kb = sniff(b);
  Fidelity f;
  if (is_image(ka) && is_image(kb)) {
    const Image ia = decode_image(a, cfg.inputs[0]);
    const Image ib = decode_image(b, cfg.inputs[1]);
    if (ia.bit_depth() != ib.bit_depth()) {
      fail(ErrorKind::kInvalidArgument,
           "bit depths differ: " + std::to_string(ia.bit_depth()) + " vs " +
               std::to_string(ib.bit_depth()));
    }
    f = compare_images(ia, ib);
  } else if (ka == FileKind::kWav && kb == FileKind::kWav) {
    f = compare_audio(load_wav(a), load_wav(b));
  } else {
    fail(ErrorKind::kInvalidArgument,
         "kind mismatch: " + cfg.inputs[0] + " and " + cfg.inputs[1] +
             " are not both images or both WAV");
  }
  out << "mse=" << format(f.mse) << "\npsnr_db=" << format(f.psnr) << "\n";
  return kExitOk;
}

int cmd_histogram(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) {
    fail(ErrorKind::kInvalidArgument, "histogram takes exactly one image");
  }
  const std::string csv = histogram(read_image(cfg.inputs[0])).to_csv();
  if (cfg.out.empty()) {
    out << csv;
  } else {
    write_file(cfg.out,
               std::span(reinterpret_cast<const std::uint8_t*>(csv.data()),
                         csv.size()));
  }
  return kExitOk;
}

int cmd_capacity(const RunConfig& cfg, std::ostream& out) {
  const BitBudget n(cfg.n == 0 ? 1 : cfg.n);
  if (cfg.inputs.size() != 1) {
    fail(ErrorKind::kInvalidArgument, "capacity takes exactly one carrier");
  }
  const Bytes bytes = read_file(cfg.inputs[0]);
  const FileKind kind = sniff(bytes);
  if (is_image(kind)) {
    out << capacity_bits(decode_image(bytes, cfg.inputs[0]), n) << " bits\n";
  } else if (kind == FileKind::kWav) {
    const AudioCapacity cap = capacity_bits(load_wav(bytes), n);
    out << cap.total_bits << " bits\n"
        << cap.bits_per_second << " bits/s ("
        << format(cap.bits_per_second / 1000.0) << " kbps)\n";
  } else {
    fail(ErrorKind::kUnsupported,
         cfg.inputs[0] + " is neither a PGM/PPM image nor a WAV file");
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  require(cfg.cover, "--cover", "sweep");
  require(cfg.message, "--message", "sweep");
  const Image cover = read_image(cfg.cover);
  const Image message = read_image(cfg.message);
  const std::vector<QualityReport> rows = sweep(cover, message, cfg.parallel);
  std::string csv =
      "# elapsed_s: wall-clock seconds for embed + extract + metrics at each "
      "n\n" +
      QualityReport::csv_header() + "\n";
  for (const QualityReport& r : rows) csv += r.to_csv_row() + "\n";
  if (cfg.out.empty()) {
    out << csv;
  } else {
    write_file(cfg.out,
               std::span(reinterpret_cast<const std::uint8_t*>(csv.data()),
                         csv.size()));
  }
  return kExitOk;
}

}  // namespace

std::string_view error_class(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return "io";
    case ErrorKind::kMalformed:
    case ErrorKind::kTruncated:
    case ErrorKind::kUnsupported:
      return "format";
    case ErrorKind::kInvalidArgument:
      return "validation";
    case ErrorKind::kDimension:
      return "dimension";
    case ErrorKind::kCapacity:
      return "capacity";
    case ErrorKind::kRecipe:
    case ErrorKind::kModeMismatch:
      return "recipe";
  }
  return "internal";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kRecipe:
    case ErrorKind::kModeMismatch:
      return kExitRecipe;
    default:
      return kExitValidation;
  }
}

QualityReport measure_plane_embedding(const Image& cover, const Image& message,
                                      int n) {
  const auto start = Clock::now();
  const BitBudget budget(n);
  const Image stego = embed_plane(cover, message, budget);
  const Image recovered = extract_plane(stego, budget);
  QualityReport r;
  r.n = n;
  const Fidelity cs = compare_images(cover, stego);
  const Fidelity mr = compare_images(message, recovered);
  r.mse_cover_stego = cs.mse;
  r.psnr_cover_stego = cs.psnr;
  r.mse_message_recovered = mr.mse;
  r.psnr_message_recovered = mr.psnr;
  r.elapsed_s = seconds_since(start);
  return r;
}

std::vector<QualityReport> sweep(const Image& cover, const Image& message,
                                 bool parallel) {
  std::vector<QualityReport> rows;
  rows.reserve(8);
  if (!parallel) {
    for (int n = 1; n <= 8; ++n) {
      rows.push_back(measure_plane_embedding(cover, message, n));
    }
    return rows;
  }
  std::vector<std::future<QualityReport>> jobs;
  for (int n = 1; n <= 8; ++n) {
    jobs.push_back(std::async(std::launch::async, measure_plane_embedding,
                              std::cref(cover), std::cref(message), n));
  }
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Steganography and watermarking toolkit", "stegkit"};
  app.require_subcommand(1);

  auto* embed = app.add_subcommand("embed", "Hide a payload in a carrier");
  embed->add_option("--mode", cfg.mode,
                    "image-in-image | audio-in-audio | image-in-audio | "
                    "audio-in-image")
      ->required();
  embed->add_option("--cover", cfg.cover, "Carrier file (PGM/PPM or WAV)");
  embed->add_option("--message", cfg.message, "Payload file (PGM/PPM or WAV)");
  embed->add_option("--out", cfg.out, "Stego output path");
  embed->add_option("--recipe", cfg.recipe,
                    "Sidecar path (default: <out>.recipe)");
  embed->add_option("--n", cfg.n, "LSBs to substitute (image-in-image)")
      ->check(CLI::Range(1, 8));
  embed->add_option("--alpha", cfg.alpha, "Embedding strength (DWT modes)")
      ->capture_default_str();
  embed->add_option("--coeff-count", cfg.coeff_count,
                    "DCT coefficients to replace (default: 10% of cover)");
  embed->add_option("--filter", cfg.filter, "Wavelet filter pair (haar, db4)")
      ->capture_default_str();

  auto* extract = app.add_subcommand("extract", "Recover a payload");
  extract->add_option("--stego", cfg.stego, "Stego file");
  extract->add_option("--recipe", cfg.recipe,
                      "Sidecar path (default: <stego>.recipe)");
  extract->add_option("--out", cfg.out, "Recovered payload path");

  auto* metrics = app.add_subcommand("metrics", "MSE and PSNR of two files");
  metrics->add_option("files", cfg.inputs, "Two images or two WAV files")
      ->expected(2);

  auto* hist = app.add_subcommand("histogram", "256-bin gray histogram CSV");
  hist->add_option("image", cfg.inputs, "8-bit image")->expected(1);
  hist->add_option("--out", cfg.out, "CSV path (default: stdout)");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Image-in-image quality for n = 1..8");
  sweep_cmd->add_option("--cover", cfg.cover, "Cover image");
  sweep_cmd->add_option("--message", cfg.message, "Message image");
  sweep_cmd->add_option("--out", cfg.out, "CSV path (default: stdout)");
  sweep_cmd->add_flag("--parallel", cfg.parallel, "Run the eight n concurrently");

  auto* capacity = app.add_subcommand("capacity", "Payload capacity in bits");
  capacity->add_option("carrier", cfg.inputs, "Image or WAV carrier")
      ->expected(1);
  capacity->add_option("--n", cfg.n, "LSBs per sample")
      ->check(CLI::Range(1, 8));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error:validation: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*embed) return cmd_embed(cfg, out, err);
    if (*extract) return cmd_extract(cfg, out);
    if (*metrics) return cmd_metrics(cfg, out);
    if (*hist) return cmd_histogram(cfg, out);
    if (*sweep_cmd) return cmd_sweep(cfg, out);
    if (*capacity) return cmd_capacity(cfg, out);
  } catch (const Error& e) {
    err << "error:" << error_class(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error:internal: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "error:internal: no subcommand dispatched\n";
  return kExitInternal;
}

}  // namespace stegkit::cli
