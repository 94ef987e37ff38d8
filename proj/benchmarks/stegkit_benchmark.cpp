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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "stegkit/lsb.hpp"
#include "stegkit/metrics.hpp"
#include "stegkit/transforms.hpp"
#include "stegkit/watermark.hpp"

namespace stegkit {
namespace {

Image noise_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level(0, 255);
  std::vector<std::uint16_t> px(w * h);
  for (auto& p : px) p = static_cast<std::uint16_t>(level(rng));
  return Image(w, h, 8, std::move(px));
}

std::vector<double> noise_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<double> out(n);
  for (auto& v : out) v = u(rng);
  return out;
}

void BM_EmbedPlane(benchmark::State& state) {
  const Image cover = noise_image(645, 645, 1);
  const Image message = noise_image(645, 645, 2);
  const BitBudget n(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed_plane(cover, message, n));
  }
  state.SetItemsProcessed(state.iterations() * cover.size());
}
BENCHMARK(BM_EmbedPlane)->Arg(1)->Arg(4)->Arg(8);

void BM_ExtractPlane(benchmark::State& state) {
  const Image stego = noise_image(645, 645, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_plane(stego, BitBudget(4)));
  }
  state.SetItemsProcessed(state.iterations() * stego.size());
}
BENCHMARK(BM_ExtractPlane);

void BM_PsnrImage(benchmark::State& state) {
  const Image a = noise_image(645, 645, 4);
  const Image b = noise_image(645, 645, 5);
  for (auto _ : state) benchmark::DoNotOptimize(psnr_image(a, b));
}
BENCHMARK(BM_PsnrImage);

void BM_DctForward(benchmark::State& state) {
  const auto x = noise_signal(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(dct_forward(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DctForward)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_DwtRoundTrip(benchmark::State& state) {
  const auto x = noise_signal(static_cast<std::size_t>(state.range(0)), 7);
  const FilterPair& f = filter_by_name(state.range(1) == 0 ? "haar" : "db4");
  for (auto _ : state) {
    benchmark::DoNotOptimize(dwt_synthesize(dwt_analyze(x, f), f));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DwtRoundTrip)->Args({1 << 16, 0})->Args({1 << 16, 1});

void BM_ImageInAudio(benchmark::State& state) {
  const AudioClip cover(44100, noise_signal(44100, 8));
  const Image mark = noise_image(100, 100, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed_image_in_audio(cover, mark, kDefaultAlpha));
  }
}
BENCHMARK(BM_ImageInAudio);

}  // namespace
}  // namespace stegkit

BENCHMARK_MAIN();
