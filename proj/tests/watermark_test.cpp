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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "stegkit/error.hpp"

namespace stegkit {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected stegkit::Error";
  return ErrorKind::kIo;
}

// --- audio in audio ----------------------------------------------------------

TEST(AudioInAudioTest, ZeroCoefficientsLeaveCoverUnchanged) {
  std::mt19937_64 rng(1);
  const AudioClip cover = oracle::random_clip(rng, 64);
  const AudioClip mark = oracle::random_clip(rng, 32);
  const auto result = embed_audio_in_audio(cover, mark, 0);
  EXPECT_EQ(result.stego, cover);
  const AudioClip recovered = extract_audio_in_audio(result.stego,
                                                     result.recipe);
  EXPECT_EQ(recovered.size(), 32u);
  for (double s : recovered.samples()) EXPECT_EQ(s, 0.0);
}

TEST(AudioInAudioTest, SilentMarkLeavesLowPassResidue) {
  std::mt19937_64 rng(2);
  const AudioClip cover = oracle::random_clip(rng, 80, 0.4);
  const AudioClip silence(44100, std::vector<double>(40, 0.0));
  const auto result = embed_audio_in_audio(cover, silence, 16);
  const auto stego_spec = oracle::dct(result.stego.samples());
  for (std::size_t u = 80 - 16; u < 80; ++u) {
    EXPECT_NEAR(stego_spec[u], 0.0, 1e-9);
  }
  const auto residue = oracle::dct_lowpass(cover.samples(), 80 - 16);
  EXPECT_LE(oracle::max_abs_diff(result.stego.samples(), residue), 1e-9);
}

TEST(AudioInAudioTest, FloatRoundTripRecoversLowPassApproximation) {
  std::mt19937_64 rng(3);
  const AudioClip cover = oracle::random_clip(rng, 200, 0.3);
  const AudioClip mark = oracle::random_clip(rng, 120, 0.3);
  const std::size_t count = 20;
  const auto result = embed_audio_in_audio(cover, mark, count);
  ASSERT_EQ(result.clamped, 0u);

  const auto coeffs =
      extract_audio_in_audio_coefficients(result.stego, result.recipe);
  const auto mark_spec = oracle::dct(mark.samples());
  ASSERT_EQ(coeffs.size(), count);
  for (std::size_t k = 0; k < count; ++k) {
    EXPECT_NEAR(coeffs[k], mark_spec[k], 1e-9);
  }
  const AudioClip recovered = extract_audio_in_audio(result.stego,
                                                     result.recipe);
  EXPECT_LE(oracle::max_abs_diff(recovered.samples(),
                                 oracle::dct_lowpass(mark.samples(), count)),
            1e-9);
}

TEST(AudioInAudioTest, OnlyTheReplacedBandChanges) {
  std::mt19937_64 rng(4);
  const AudioClip cover = oracle::random_clip(rng, 150, 0.3);
  const AudioClip mark = oracle::random_clip(rng, 150, 0.3);
  const auto result = embed_audio_in_audio(cover, mark, 30);
  const auto before = oracle::dct(cover.samples());
  const auto after = oracle::dct(result.stego.samples());
  for (std::size_t u = 0; u < 120; ++u) {
    ASSERT_NEAR(after[u], before[u], 1e-9);
  }
}

TEST(AudioInAudioTest, WavQuantizationErrorIsBounded) {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  double bound = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const AudioClip cover = oracle::random_clip(rng, 300, 0.4);
    const AudioClip mark = oracle::random_clip(rng, 300, 0.4);
    const auto result = embed_audio_in_audio(cover, mark, 30);
    const AudioClip written = load_wav(save_wav(result.stego));
    const auto clean =
        extract_audio_in_audio_coefficients(result.stego, result.recipe);
    const auto noisy =
        extract_audio_in_audio_coefficients(written, result.recipe);
    worst = std::max(worst, oracle::max_abs_diff(clean, noisy));
    // |dF(u)| <= ||df||_2 <= sqrt(N) / 65536 for an orthonormal transform.
    bound = std::sqrt(300.0) * 0.5 / 32768.0;
  }
  std::printf("audio-in-audio max coefficient deviation after PCM16: %.3g "
              "(bound %.3g)\n",
              worst, bound);
  EXPECT_LE(worst, bound);
}

TEST(AudioInAudioTest, Preconditions) {
  std::mt19937_64 rng(6);
  const AudioClip cover = oracle::random_clip(rng, 10);
  EXPECT_EQ(kind_of([&] {
              embed_audio_in_audio(cover, oracle::random_clip(rng, 4), 5);
            }),
            ErrorKind::kCapacity);
  EXPECT_EQ(kind_of([&] {
              embed_audio_in_audio(cover,
                                   oracle::random_clip(rng, 4, 0.5, 8000), 1);
            }),
            ErrorKind::kInvalidArgument);
  const auto result = embed_audio_in_audio(cover, cover, 4);
  EmbedRecipe wrong = result.recipe;
  wrong.coeff_count = 20;
  wrong.samples = 20;
  EXPECT_EQ(kind_of([&] { extract_audio_in_audio(cover, wrong); }),
            ErrorKind::kDimension);
  EmbedRecipe lsb{Mode::kImageInImage, 4, {}, {}, 2, 2, {}, {}, {}};
  EXPECT_EQ(kind_of([&] { extract_audio_in_audio(cover, lsb); }),
            ErrorKind::kModeMismatch);
}

// --- image in audio ----------------------------------------------------------

TEST(ImageInAudioTest, DetailCoefficientsCarryScaledPixels) {
  std::mt19937_64 rng(7);
  const AudioClip cover = oracle::random_clip(rng, 100, 0.5);
  const auto black = embed_image_in_audio(cover, Image::filled(5, 4, 8, 0),
                                          0.05);
  const auto white = embed_image_in_audio(cover, Image::filled(5, 4, 8, 255),
                                          0.01);
  const auto db = dwt_analyze(black.stego.samples()).detail;
  const auto dw = dwt_analyze(white.stego.samples()).detail;
  const auto dc = dwt_analyze(cover.samples()).detail;
  for (std::size_t k = 0; k < 20; ++k) {
    EXPECT_NEAR(db[k], 0.0, 1e-12);
    EXPECT_NEAR(dw[k], 0.01, 1e-12);
  }
  for (std::size_t k = 20; k < 50; ++k) EXPECT_NEAR(db[k], dc[k], 1e-12);
}

TEST(ImageInAudioTest, ApproximationBandUntouched) {
  std::mt19937_64 rng(8);
  const AudioClip cover = oracle::random_clip(rng, 512, 0.5);
  const Image mark = oracle::random_image(rng, 16, 16);
  const auto result = embed_image_in_audio(cover, mark, 0.05);
  ASSERT_EQ(result.clamped, 0u);
  EXPECT_LE(oracle::max_abs_diff(dwt_analyze(result.stego.samples()).approx,
                                 dwt_analyze(cover.samples()).approx),
            1e-9);
}

TEST(DetailCapacityTest, OddCarriersLoseCoefficientsTouchingThePad) {
  EXPECT_EQ(detail_capacity(800, haar()), 400u);
  EXPECT_EQ(detail_capacity(800, daubechies4()), 400u);
  EXPECT_EQ(detail_capacity(801, haar()), 400u);
  EXPECT_EQ(detail_capacity(801, daubechies4()), 399u);
  EXPECT_EQ(detail_capacity(1, haar()), 0u);
  EXPECT_EQ(detail_capacity(3, daubechies4()), 0u);

  std::mt19937_64 rng(30);
  for (const std::string& name : filter_names()) {
    const FilterPair& f = filter_by_name(name);
    for (std::size_t n : {5u, 9u, 31u, 101u}) {
      const auto carrier = oracle::random_signal(rng, n);
      const auto payload =
          oracle::random_signal(rng, detail_capacity(n, f));
      const auto stego = embed_detail(carrier, payload, f);
      EXPECT_LE(oracle::max_abs_diff(
                    extract_detail(stego, payload.size(), f), payload),
                1e-12)
          << name << " N=" << n;
      std::vector<double> over(payload.size() + 1, 0.0);
      EXPECT_THROW(embed_detail(carrier, over, f), Error);
    }
  }
}

TEST(ImageInAudioTest, FloatRoundTripIsExact) {
  std::mt19937_64 rng(9);
  for (const std::string& name : filter_names()) {
    const AudioClip cover = oracle::random_clip(rng, 805, 0.5);
    const Image mark = oracle::random_image(rng, 20, 20);
    const auto result =
        embed_image_in_audio(cover, mark, 0.05, filter_by_name(name));
    ASSERT_EQ(result.clamped, 0u);
    EXPECT_EQ(result.recipe.filter, name);
    EXPECT_EQ(extract_image_in_audio(result.stego, result.recipe), mark) << name;
  }
}

TEST(ImageInAudioTest, SurvivesPcm16WithinTwoGrayLevels) {
  std::mt19937_64 rng(10);
  int worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const AudioClip cover = oracle::random_clip(rng, 2048, 0.5);
    const Image mark = oracle::random_image(rng, 32, 32);
    const auto result = embed_image_in_audio(cover, mark, 0.05);
    const Image recovered = extract_image_in_audio(
        load_wav(save_wav(result.stego)), result.recipe);
    for (std::size_t i = 0; i < mark.size(); ++i) {
      worst = std::max(worst,
                       std::abs(recovered.pixels()[i] - mark.pixels()[i]));
    }
  }
  EXPECT_LE(worst, 2);
}

TEST(ImageInAudioTest, ZeroSizeMark) {
  std::mt19937_64 rng(11);
  const AudioClip cover = oracle::random_clip(rng, 10);
  const auto result = embed_image_in_audio(cover, Image(0, 0, 8, {}), 0.05);
  EXPECT_EQ(result.stego, cover);
  const Image back = extract_image_in_audio(result.stego, result.recipe);
  EXPECT_EQ(back.size(), 0u);
}

TEST(ImageInAudioTest, Preconditions) {
  std::mt19937_64 rng(12);
  const AudioClip cover = oracle::random_clip(rng, 10);
  EXPECT_EQ(kind_of([&] {
              embed_image_in_audio(cover, Image::filled(3, 2, 8, 0), 0.05);
            }),
            ErrorKind::kCapacity);
  EXPECT_EQ(kind_of([&] {
              embed_image_in_audio(cover, Image::filled(1, 1, 8, 0), 0.0);
            }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([&] {
              embed_image_in_audio(cover, Image::filled(1, 1, 8, 0), -1.0);
            }),
            ErrorKind::kInvalidArgument);
  auto result = embed_image_in_audio(cover, Image::filled(2, 2, 8, 9), 0.05);
  result.recipe.filter = "nope";
  EXPECT_EQ(kind_of([&] { extract_image_in_audio(cover, result.recipe); }),
            ErrorKind::kRecipe);
  result.recipe.filter = "haar";
  result.recipe.width = 8;
  EXPECT_EQ(kind_of([&] { extract_image_in_audio(cover, result.recipe); }),
            ErrorKind::kDimension);
}

TEST(ImageInAudioTest, PerturbationEnergyScalesWithAlphaSquared) {
  std::mt19937_64 rng(13);
  // Pairwise-constant cover has an all-zero Haar detail band, so the
  // perturbation is exactly alpha times the payload.
  std::vector<double> base = oracle::random_signal(rng, 512, 0.5);
  for (std::size_t i = 0; i + 1 < base.size(); i += 2) base[i + 1] = base[i];
  const AudioClip cover(44100, base);
  const Image mark = oracle::random_image(rng, 16, 16, 1, 255);
  std::vector<double> xs, ys;
  for (double alpha : {0.01, 0.02, 0.05, 0.1}) {
    const auto result = embed_image_in_audio(cover, mark, alpha);
    double e = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double d = result.stego.samples()[i] - base[i];
      e += d * d;
    }
    xs.push_back(std::log(alpha));
    ys.push_back(std::log(e));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  EXPECT_NEAR(sxy / sxx, 2.0, 1e-9);
}

// --- audio in image ----------------------------------------------------------

TEST(AudioInImageTest, FloatDomainRoundTripIsExact) {
  std::mt19937_64 rng(14);
  const auto carrier = oracle::random_signal(rng, 400, 0.5);
  auto payload = oracle::random_signal(rng, 150, 0.05);
  const auto stego = embed_detail(carrier, payload, haar());
  EXPECT_LE(oracle::max_abs_diff(extract_detail(stego, 150, haar()), payload),
            1e-12);
}

TEST(AudioInImageTest, SilentMarkZeroesOccupiedDetail) {
  std::mt19937_64 rng(15);
  const auto carrier = oracle::random_signal(rng, 64, 0.5);
  const std::vector<double> silence(20, 0.0);
  const auto stego = embed_detail(carrier, silence, haar());
  const auto detail = dwt_analyze(stego).detail;
  for (std::size_t k = 0; k < 20; ++k) EXPECT_NEAR(detail[k], 0.0, 1e-12);

  const Image cover = oracle::random_image(rng, 8, 8, 32, 223);
  const auto result =
      embed_audio_in_image(cover, AudioClip(8000, silence), 0.05);
  EXPECT_EQ(result.stego.bit_depth(), 16);
  const AudioClip back = extract_audio_in_image(result.stego, result.recipe);
  // Requantization to 16 bits leaves at most (1/65535) sqrt2 / alpha.
  for (double s : back.samples()) {
    EXPECT_LE(std::abs(s), std::sqrt(2.0) / (65535.0 * 0.05));
  }
}

TEST(AudioInImageTest, QuantizationBoundHolds) {
  std::mt19937_64 rng(16);
  for (double alpha : {0.05, 0.1, 0.2}) {
    const Image cover = oracle::random_image(rng, 64, 64, 32, 223);
    const AudioClip mark = oracle::random_clip(rng, 2048, 0.9, 8000);
    const auto result = embed_audio_in_image(cover, mark, alpha);
    ASSERT_EQ(result.clamped, 0u);
    const AudioClip back = extract_audio_in_image(result.stego, result.recipe);
    EXPECT_LE(oracle::max_abs_diff(back.samples(), mark.samples()),
              std::sqrt(2.0) / (65535.0 * alpha));
  }
}

TEST(AudioInImageTest, SineSurvivesWithHighCorrelation) {
  std::mt19937_64 rng(17);
  const Image cover = oracle::random_image(rng, 16, 16, 32, 223);
  const AudioClip mark(8000, oracle::sine(100, 440.0, 0.5, 8000.0));
  const auto result = embed_audio_in_image(cover, mark, 0.1);
  const AudioClip back = extract_audio_in_image(
      load_pgm(save_pgm(result.stego)), result.recipe);
  EXPECT_GT(oracle::pearson(back.samples(), mark.samples()), 0.999);
  EXPECT_EQ(back.sample_rate(), 8000u);
}

TEST(AudioInImageTest, EmptyMarkAndTampering) {
  std::mt19937_64 rng(18);
  const Image cover = oracle::random_image(rng, 8, 8, 32, 223);
  const auto empty = embed_audio_in_image(cover, AudioClip(8000, {}), 0.05);
  EXPECT_EQ(extract_audio_in_image(empty.stego, empty.recipe).size(), 0u);

  const auto result = embed_audio_in_image(
      cover, oracle::random_clip(rng, 30, 0.5, 8000), 0.05);
  // Equal neighbours give an all-zero Haar detail band.
  std::vector<std::uint16_t> px(result.stego.pixels().begin(),
                                result.stego.pixels().end());
  for (std::size_t i = 0; i + 1 < px.size(); i += 2) px[i + 1] = px[i];
  const Image tampered(8, 8, 16, px);
  const AudioClip silent = extract_audio_in_image(tampered, result.recipe);
  for (double s : silent.samples()) EXPECT_EQ(s, 0.0);
}

TEST(AudioInImageTest, Preconditions) {
  std::mt19937_64 rng(19);
  const Image cover = oracle::random_image(rng, 4, 4);
  EXPECT_EQ(kind_of([&] {
              embed_audio_in_image(cover, oracle::random_clip(rng, 9), 0.05);
            }),
            ErrorKind::kCapacity);
  EXPECT_EQ(kind_of([&] {
              embed_audio_in_image(cover, oracle::random_clip(rng, 2), 0.0);
            }),
            ErrorKind::kInvalidArgument);
  const auto result =
      embed_audio_in_image(cover, oracle::random_clip(rng, 8), 0.05);
  EXPECT_EQ(kind_of([&] { extract_audio_in_image(cover, result.recipe); }),
            ErrorKind::kUnsupported);
  EXPECT_EQ(kind_of([&] {
              extract_image_in_audio(AudioClip(8000, std::vector<double>(32)),
                                     result.recipe);
            }),
            ErrorKind::kModeMismatch);
}

// --- image in image ------------------------------------------------------------

TEST(ImageInImageTest, RecipeDrivesExtraction) {
  std::mt19937_64 rng(20);
  const Image cover = oracle::random_image(rng, 12, 9);
  const Image message = oracle::random_image(rng, 12, 9);
  const auto result = embed_image_in_image(cover, message, BitBudget(3));
  EXPECT_EQ(result.recipe.n, 3);
  EXPECT_EQ(extract_image_in_image(result.stego, result.recipe),
            extract_plane(result.stego, BitBudget(3)));
  EXPECT_THROW(extract_image_in_image(Image::filled(3, 3, 8, 0), result.recipe),
               Error);
}

}  // namespace
}  // namespace stegkit
