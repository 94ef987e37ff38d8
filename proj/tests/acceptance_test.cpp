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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "stegkit/lsb.hpp"
#include "stegkit/media.hpp"
#include "stegkit/metrics.hpp"
#include "stegkit/transforms.hpp"
#include "stegkit/watermark.hpp"

namespace stegkit {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

void bit_exact_example() {
  const Image cover(8, 1, 8,
                    {0b10010111, 0b10001100, 0b11010010, 0b01001010,
                     0b00100110, 0b01000011, 0b00010101, 0b01010111});
  const std::vector<std::uint16_t> expected = {
      0b10010110, 0b10001101, 0b11010010, 0b01001010,
      0b00100110, 0b01000010, 0b00010100, 0b01010111};
  const BitMessage payload = BitMessage::from_string("01000001");

  const auto start = Clock::now();
  const Image stego = embed_bits(cover, payload);
  const BitMessage back = extract_bits(stego, 8);
  const double elapsed = seconds_since(start);

  const bool pixels_ok = std::equal(expected.begin(), expected.end(),
                                    stego.pixels().begin());
  report(1, pixels_ok && back == payload && elapsed < 1e-3,
         fmt("pixels %s, payload %s, %.1f us", pixels_ok ? "exact" : "differ",
             back == payload ? "recovered" : "lost", elapsed * 1e6));
}

void sweep_structure(std::mt19937_64& rng) {
  const Image cover = oracle::random_image(rng, 645, 645);
  const Image message = oracle::random_image(rng, 645, 645);
  const auto start = Clock::now();
  const auto rows = cli::sweep(cover, message);
  const double elapsed = seconds_since(start);

  bool monotone = rows.size() == 8;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    monotone = monotone &&
               rows[i].mse_message_recovered <= rows[i - 1].mse_message_recovered;
  }
  const QualityReport& last = rows.back();
  const bool endpoint = last.n == 8 && last.mse_message_recovered == 0.0 &&
                        last.psnr_message_recovered == kPsnrCapDb;
  report(2, monotone && endpoint && elapsed < 5.0,
         fmt("recovery MSE %s, n=8 row mse=%g psnr=%g, %.2f s",
             monotone ? "non-increasing" : "NOT monotone",
             last.mse_message_recovered, last.psnr_message_recovered, elapsed));
}

void psnr_consistency(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Image p = oracle::random_image(rng, 16, 16);
    const Image q = oracle::random_image(rng, 16, 16);
    const double direct = psnr_image(p, q);
    const double composed = psnr(mse(p, q), 8);
    worst = std::max(worst, std::abs(direct - composed) / std::abs(composed));
  }
  const double table_value = psnr(222.9934, 8);
  const bool composition_ok = worst <= 1e-12;
  const bool table_ok = std::abs(table_value - 32.7083) <= 5e-4;
  report(3, composition_ok && table_ok,
         fmt("direct vs composed max rel err %.2e (%s); psnr(222.9934, 8) = "
             "%.4f dB vs published 32.7083 (%s)",
             worst, composition_ok ? "ok" : "too large", table_value,
             table_ok ? "ok" : "mismatch"));
}

void lsb_round_trip(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> side(1, 16);
  std::uniform_int_distribution<int> budget(1, 8);
  int bad = 0;
  const auto start = Clock::now();
  for (int t = 0; t < 10000; ++t) {
    const std::size_t w = side(rng);
    const std::size_t h = side(rng);
    const int n = budget(rng);
    const Image cover = oracle::random_image(rng, w, h);
    const Image message = oracle::random_image(rng, w, h);
    const Image stego = embed_plane(cover, message, BitBudget(n));
    const Image back = extract_plane(stego, BitBudget(n));
    const unsigned low = (1u << (8 - n)) - 1u;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      const int distortion =
          std::abs(int(stego.pixels()[i]) - int(cover.pixels()[i]));
      if (back.pixels()[i] != (message.pixels()[i] & ~low & 0xFFu) ||
          distortion > (1 << n) - 1) {
        ++bad;
        break;
      }
    }
  }
  const double elapsed = seconds_since(start);
  report(4, bad == 0 && elapsed < 10.0,
         fmt("%d of 10000 triples wrong, %.2f s", bad, elapsed));
}

void dct_correctness(std::mt19937_64& rng) {
  double oracle_err = 0.0;
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto f = oracle::random_signal(rng, n);
    oracle_err =
        std::max(oracle_err, oracle::max_abs_diff(dct_forward(f), oracle::dct(f)));
  }
  const auto x = oracle::random_signal(rng, 1000);
  const auto spec = dct_forward(x);
  const double inverse_err = oracle::max_abs_diff(dct_inverse(spec), x);
  double ex = 0.0, es = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    ex += x[i] * x[i];
    es += spec[i] * spec[i];
  }
  const double parseval_err = std::abs(es - ex) / ex;
  report(5, oracle_err <= 1e-9 && inverse_err <= 1e-9 && parseval_err <= 1e-9,
         fmt("oracle %.2e, inverse %.2e, Parseval %.2e", oracle_err,
             inverse_err, parseval_err));
}

void dwt_reconstruction(std::mt19937_64& rng) {
  std::vector<std::size_t> lengths = {2, 4, 6, 8, 1000, 4096, 65536};
  std::uniform_int_distribution<std::size_t> half(1, 32768);
  for (int i = 0; i < 10; ++i) lengths.push_back(2 * half(rng));
  double worst = 0.0;
  for (std::size_t n : lengths) {
    const auto s = oracle::random_signal(rng, n);
    worst = std::max(worst, oracle::max_abs_diff(dwt_synthesize(dwt_analyze(s)), s));
  }
  const double r = std::sqrt(2.0);
  const auto b = dwt_analyze(std::vector<double>{4, 2, 6, 8});
  const double hand =
      std::max(oracle::max_abs_diff(b.approx, std::vector<double>{6 / r, 14 / r}),
               oracle::max_abs_diff(b.detail, std::vector<double>{2 / r, -2 / r}));
  report(6, worst <= 1e-9 && hand <= 1e-12,
         fmt("reconstruction %.2e over %zu lengths up to 65536, [4,2,6,8] %.2e",
             worst, lengths.size(), hand));
}

void audio_in_audio(std::mt19937_64& rng) {
  const std::size_t n = 2000;
  const std::size_t count = n / 10;
  double float_err = 0.0;
  double wav_err = 0.0;
  std::size_t clamped = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const AudioClip cover = oracle::random_clip(rng, n, 0.4);
    const AudioClip mark = oracle::random_clip(rng, n, 0.4);
    const auto result = embed_audio_in_audio(cover, mark, count);
    clamped += result.clamped;
    const auto want = oracle::dct_lowpass(mark.samples(), count);
    float_err = std::max(
        float_err, oracle::max_abs_diff(
                       extract_audio_in_audio(result.stego, result.recipe)
                           .samples(),
                       want));
    const AudioClip written = load_wav(save_wav(result.stego));
    wav_err = std::max(
        wav_err,
        oracle::max_abs_diff(
            extract_audio_in_audio(written, result.recipe).samples(), want));
  }
  const double bound = std::sqrt(double(n)) * 0.5 / 32768.0;
  report(7, float_err <= 1e-9 && wav_err <= bound && clamped == 0,
         fmt("float %.2e; after PCM16 %.2e (bound %.2e); %zu clamped",
             float_err, wav_err, bound, clamped));
}

void transform_round_trips(std::mt19937_64& rng) {
  bool float_exact = true;
  int worst_levels = 0;
  double worst_corr = 1.0;
  for (int trial = 0; trial < 5; ++trial) {
    const AudioClip cover = oracle::random_clip(rng, 4096, 0.5);
    const Image mark = oracle::random_image(rng, 40, 40);
    const auto ia = embed_image_in_audio(cover, mark, kDefaultAlpha);
    float_exact = float_exact && ia.clamped == 0 &&
                  extract_image_in_audio(ia.stego, ia.recipe) == mark;
    const Image quantized =
        extract_image_in_audio(load_wav(save_wav(ia.stego)), ia.recipe);
    for (std::size_t i = 0; i < mark.size(); ++i) {
      worst_levels = std::max(
          worst_levels,
          std::abs(int(quantized.pixels()[i]) - int(mark.pixels()[i])));
    }

    const Image host = oracle::random_image(rng, 64, 64, 32, 223);
    const AudioClip tune = oracle::random_clip(rng, 1500, 0.5, 8000);
    const auto detail = embed_detail(
        [&] {
          std::vector<double> v(host.size());
          for (std::size_t i = 0; i < v.size(); ++i) v[i] = host.pixels()[i] / 255.0;
          return v;
        }(),
        [&] {
          std::vector<double> v(tune.samples().begin(), tune.samples().end());
          for (double& s : v) s *= kDefaultAlpha;
          return v;
        }(),
        haar());
    const auto recovered = extract_detail(detail, tune.size(), haar());
    for (std::size_t i = 0; i < tune.size(); ++i) {
      float_exact = float_exact &&
                    std::abs(recovered[i] / kDefaultAlpha - tune.samples()[i]) <=
                        1e-12;
    }
    const auto ai = embed_audio_in_image(host, tune, kDefaultAlpha);
    const AudioClip heard =
        extract_audio_in_image(load_pgm(save_pgm(ai.stego)), ai.recipe);
    worst_corr = std::min(worst_corr,
                          oracle::pearson(heard.samples(), tune.samples()));
  }
  report(8, float_exact && worst_levels <= 2 && worst_corr > 0.999,
         fmt("float round trips %s; PCM16 image error %d levels; 16-bit image "
             "audio correlation %.6f",
             float_exact ? "exact" : "inexact", worst_levels, worst_corr));
}

void capacity() {
  const AudioClip clip(44100, std::vector<double>(44100, 0.0));
  const AudioCapacity cap = capacity_bits(clip, BitBudget(1));
  report(9, cap.bits_per_second == 44100 && cap.total_bits == 44100,
         fmt("%llu bits/s = %.1f kbps",
             static_cast<unsigned long long>(cap.bits_per_second),
             cap.bits_per_second / 1000.0));
}

void repeated_embedding(std::mt19937_64& rng) {
  const Image cover = oracle::random_image(rng, 16, 16);
  const std::size_t repeat = 3;
  const std::size_t count = cover.size() / repeat;
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> bits(count);
  for (auto& b : bits) b = coin(rng);
  const BitMessage payload(bits);

  const auto start = Clock::now();
  const Image stego = embed_bits_repeated(cover, payload, repeat);
  std::size_t lost = 0;
  std::vector<std::uint16_t> px(stego.pixels().begin(), stego.pixels().end());
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] ^= 1u;
    const Image attacked(16, 16, 8, px);
    if (extract_bits_repeated(attacked, count, repeat) != payload) ++lost;
    px[i] ^= 1u;
  }
  const double elapsed = seconds_since(start);
  report(10, lost == 0 && elapsed < 5.0,
         fmt("%zu of %zu single flips corrupted the payload, %.3f s", lost,
             px.size(), elapsed));
}

}  // namespace
}  // namespace stegkit

int main() {
  std::mt19937_64 rng(20260101);
  stegkit::bit_exact_example();
  stegkit::sweep_structure(rng);
  stegkit::psnr_consistency(rng);
  stegkit::lsb_round_trip(rng);
  stegkit::dct_correctness(rng);
  stegkit::dwt_reconstruction(rng);
  stegkit::audio_in_audio(rng);
  stegkit::transform_round_trips(rng);
  stegkit::capacity();
  stegkit::repeated_embedding(rng);
  std::printf("%d criteria failed\n", stegkit::failures);
  return stegkit::failures == 0 ? 0 : 1;
}
