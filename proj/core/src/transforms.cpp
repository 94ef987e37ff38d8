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

#include "stegkit/transforms.hpp"

#include <cmath>
#include <numbers>

#include "stegkit/error.hpp"

namespace stegkit {
namespace {

constexpr double kOrthoTolerance = 1e-12;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// cos(k pi / 2N) for k in [0, 4N). Every DCT kernel entry is one of these,
// indexed by u (2i + 1) mod 4N.
std::vector<double> cosine_table(std::size_t n) {
  const std::size_t period = 4 * n;
  std::vector<double> table(period);
  for (std::size_t k = 0; k < period; ++k) {
    table[k] = std::cos(std::numbers::pi * static_cast<double>(k) /
                        (2.0 * static_cast<double>(n)));
  }
  return table;
}

}  // namespace

std::vector<double> dct_forward(std::span<const double> signal) {
  const std::size_t n = signal.size();
  if (n == 0) {
    throw Error(ErrorKind::kInvalidArgument, "DCT of empty signal");
  }
  const auto table = cosine_table(n);
  const std::size_t period = table.size();
  const double scale = std::sqrt(2.0 / static_cast<double>(n));
  std::vector<double> out(n);
  for (std::size_t u = 0; u < n; ++u) {
    // idx tracks u (2i + 1) mod 4N.
    std::size_t idx = u % period;
    const std::size_t step = (2 * u) % period;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += table[idx] * signal[i];
      idx += step;
      if (idx >= period) idx -= period;
    }
    const double a = u == 0 ? kInvSqrt2 : 1.0;
    out[u] = scale * a * acc;
  }
  return out;
}

std::vector<double> dct_inverse(std::span<const double> spectrum) {
  const std::size_t n = spectrum.size();
  if (n == 0) {
    throw Error(ErrorKind::kInvalidArgument, "inverse DCT of empty spectrum");
  }
  const auto table = cosine_table(n);
  const std::size_t period = table.size();
  const double scale = std::sqrt(2.0 / static_cast<double>(n));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    // idx tracks u (2i + 1) mod 4N as u advances.
    std::size_t idx = 0;
    const std::size_t step = (2 * i + 1) % period;
    double acc = spectrum[0] * kInvSqrt2;
    for (std::size_t u = 1; u < n; ++u) {
      idx += step;
      if (idx >= period) idx -= period;
      acc += table[idx] * spectrum[u];
    }
    out[i] = scale * acc;
  }
  return out;
}

FilterPair::FilterPair(std::string name, std::vector<double> h0,
                       std::vector<double> h1)
    : name_(std::move(name)), h0_(std::move(h0)), h1_(std::move(h1)) {
  if (h0_.empty() || h0_.size() != h1_.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "filter pair '" + name_ +
                    "' needs non-empty h0/h1 of equal length");
  }
  double energy = 0.0;
  double cross = 0.0;
  for (std::size_t k = 0; k < h0_.size(); ++k) {
    energy += h0_[k] * h0_[k];
    cross += h0_[k] * h1_[k];
  }
  if (std::abs(energy - 1.0) > kOrthoTolerance ||
      std::abs(cross) > kOrthoTolerance) {
    throw Error(ErrorKind::kInvalidArgument,
                "filter pair '" + name_ + "' is not orthonormal");
  }
}

FilterPair FilterPair::from_scaling(std::string name, std::vector<double> h0) {
  std::vector<double> h1(h0.size());
  for (std::size_t k = 0; k < h0.size(); ++k) {
    const double v = h0[h0.size() - 1 - k];
    h1[k] = k % 2 == 0 ? v : -v;
  }
  return FilterPair(std::move(name), std::move(h0), std::move(h1));
}

const FilterPair& haar() {
  static const FilterPair pair("haar", {kInvSqrt2, kInvSqrt2},
                               {kInvSqrt2, -kInvSqrt2});
  return pair;
}

const FilterPair& daubechies4() {
  static const FilterPair pair = [] {
    const double s3 = std::sqrt(3.0);
    const double d = 4.0 * std::numbers::sqrt2;
    return FilterPair::from_scaling(
        "db4", {(1 + s3) / d, (3 + s3) / d, (3 - s3) / d, (1 - s3) / d});
  }();
  return pair;
}

std::vector<std::string> filter_names() { return {"haar", "db4"}; }

const FilterPair& filter_by_name(std::string_view name) {
  if (name == "haar") return haar();
  if (name == "db4") return daubechies4();
  throw Error(ErrorKind::kInvalidArgument,
              "unknown filter '" + std::string(name) + "'");
}

WaveletBands dwt_analyze(std::span<const double> signal,
                         const FilterPair& filters) {
  if (signal.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "DWT of empty signal");
  }
  const std::size_t len = signal.size() + signal.size() % 2;
  const std::size_t half = len / 2;
  auto h0 = filters.h0();
  auto h1 = filters.h1();
  auto sample = [&](std::size_t m) {
    m %= len;
    return m < signal.size() ? signal[m] : 0.0;
  };

  WaveletBands bands;
  bands.original_length = signal.size();
  bands.approx.assign(half, 0.0);
  bands.detail.assign(half, 0.0);
  for (std::size_t n = 0; n < half; ++n) {
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t k = 0; k < h0.size(); ++k) {
      const double s = sample(2 * n + k);
      lo += h0[k] * s;
      hi += h1[k] * s;
    }
    bands.approx[n] = lo;
    bands.detail[n] = hi;
  }
  return bands;
}

std::vector<double> dwt_synthesize(const WaveletBands& bands,
                                   const FilterPair& filters) {
  const std::size_t half = bands.approx.size();
  if (bands.detail.size() != half) {
    throw Error(ErrorKind::kDimension,
                "band length mismatch: approx " + std::to_string(half) +
                    ", detail " + std::to_string(bands.detail.size()));
  }
  if ((bands.original_length + 1) / 2 != half) {
    throw Error(ErrorKind::kDimension,
                "bands of length " + std::to_string(half) +
                    " cannot reconstruct " +
                    std::to_string(bands.original_length) + " samples");
  }
  const std::size_t len = 2 * half;
  auto h0 = filters.h0();
  auto h1 = filters.h1();
  std::vector<double> out(len, 0.0);
  for (std::size_t n = 0; n < half; ++n) {
    for (std::size_t k = 0; k < h0.size(); ++k) {
      out[(2 * n + k) % len] +=
          h0[k] * bands.approx[n] + h1[k] * bands.detail[n];
    }
  }
  out.resize(bands.original_length);
  return out;
}

}  // namespace stegkit
