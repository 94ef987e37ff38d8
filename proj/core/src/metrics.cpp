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

#include "stegkit/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "stegkit/error.hpp"

namespace stegkit {
namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double capped_db(double ratio) {
  if (!std::isfinite(ratio)) return kPsnrCapDb;
  const double db = 10.0 * std::log10(ratio);
  return db > kPsnrCapDb ? kPsnrCapDb : db;
}

}  // namespace

double mse(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kDimension,
                "length mismatch: " + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()));
  }
  if (x.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "mse of empty signals");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    sum += d * d;
  }
  return sum / static_cast<double>(x.size());
}

double mse(const Image& x, const Image& y) {
  if (!x.same_shape(y)) {
    throw Error(ErrorKind::kDimension,
                std::to_string(x.width()) + "x" + std::to_string(x.height()) +
                    " vs " + std::to_string(y.width()) + "x" +
                    std::to_string(y.height()));
  }
  if (x.size() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "mse of empty images");
  }
  auto a = x.pixels();
  auto b = y.pixels();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

double psnr(double mse_value, int bit_depth) {
  if (mse_value < 0.0 || std::isnan(mse_value)) {
    throw Error(ErrorKind::kInvalidArgument, "negative MSE");
  }
  if (bit_depth < 1 || bit_depth > 32) {
    throw Error(ErrorKind::kInvalidArgument,
                "bit depth " + std::to_string(bit_depth) + " out of range");
  }
  if (mse_value == 0.0) return kPsnrCapDb;
  const double peak = std::ldexp(1.0, bit_depth) - 1.0;
  return capped_db(peak * peak / mse_value);
}

double psnr_image(const Image& p, const Image& q) {
  if (!p.same_shape(q)) {
    throw Error(ErrorKind::kDimension,
                std::to_string(p.width()) + "x" + std::to_string(p.height()) +
                    " vs " + std::to_string(q.width()) + "x" +
                    std::to_string(q.height()));
  }
  if (p.bit_depth() != 8 || q.bit_depth() != 8) {
    throw Error(ErrorKind::kUnsupported, "psnr_image expects 8-bit images");
  }
  auto a = p.pixels();
  auto b = q.pixels();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sum += d * d;
  }
  if (sum == 0.0) return kPsnrCapDb;
  const double mn = static_cast<double>(p.width()) * p.height();
  return capped_db(255.0 * 255.0 * mn / sum);
}

std::uint64_t Histogram::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : bins) sum += c;
  return sum;
}

std::string Histogram::to_csv() const {
  std::string out;
  for (std::size_t v = 0; v < bins.size(); ++v) {
    out += std::to_string(v) + "," + std::to_string(bins[v]) + "\n";
  }
  return out;
}

Histogram histogram(const Image& img) {
  if (img.bit_depth() != 8) {
    throw Error(ErrorKind::kUnsupported,
                "histograms are defined for 8-bit images only");
  }
  Histogram h;
  for (std::uint16_t v : img.pixels()) ++h.bins[v];
  return h;
}

std::uint64_t l1_distance(const Histogram& a, const Histogram& b) {
  std::uint64_t sum = 0;
  for (std::size_t v = 0; v < a.bins.size(); ++v) {
    sum += a.bins[v] > b.bins[v] ? a.bins[v] - b.bins[v]
                                 : b.bins[v] - a.bins[v];
  }
  return sum;
}

std::string QualityReport::csv_header() {
  return "n,mse_cover_stego,psnr_cover_stego,mse_message_recovered,"
         "psnr_message_recovered,elapsed_s";
}

std::string QualityReport::to_csv_row() const {
  return (n ? std::to_string(*n) : std::string()) + "," +
         format_double(mse_cover_stego) + "," +
         format_double(psnr_cover_stego) + "," +
         format_double(mse_message_recovered) + "," +
         format_double(psnr_message_recovered) + "," +
         format_double(elapsed_s);
}

}  // namespace stegkit
