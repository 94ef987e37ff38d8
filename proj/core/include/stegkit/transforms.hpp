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

#ifndef STEGKIT_TRANSFORMS_HPP_
#define STEGKIT_TRANSFORMS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stegkit {

// Orthonormal DCT-II:
//   F(u) = sqrt(2/N) A(u) sum_i f(i) cos(u (2i + 1) pi / 2N),
//   A(0) = 1/sqrt(2), A(u) = 1 otherwise.
// Direct O(N^2) summation over an exact cosine table.
std::vector<double> dct_forward(std::span<const double> signal);

// Transpose of dct_forward (DCT-III with the same normalization).
std::vector<double> dct_inverse(std::span<const double> spectrum);

// Two-channel orthonormal analysis/synthesis bank. h0 is the scaling
// (low-pass) filter and h1 the wavelet (high-pass) filter.
class FilterPair {
 public:
  // Throws unless h0/h1 are non-empty, of equal length, sum(h0^2) = 1 and
  // sum(h0 h1) = 0 within 1e-12.
  FilterPair(std::string name, std::vector<double> h0, std::vector<double> h1);

  // Builds h1[k] = (-1)^k h0[L-1-k] from a scaling filter.
  static FilterPair from_scaling(std::string name, std::vector<double> h0);

  const std::string& name() const noexcept { return name_; }
  std::span<const double> h0() const noexcept { return h0_; }
  std::span<const double> h1() const noexcept { return h1_; }

 private:
  std::string name_;
  std::vector<double> h0_;
  std::vector<double> h1_;
};

// h0 = [1/sqrt2, 1/sqrt2], h1 = [1/sqrt2, -1/sqrt2].
const FilterPair& haar();
// Four-tap Daubechies (two vanishing moments).
const FilterPair& daubechies4();

// Registered banks, looked up by name ("haar", "db4").
std::vector<std::string> filter_names();
const FilterPair& filter_by_name(std::string_view name);

struct WaveletBands {
  std::vector<double> approx;  // scaling coefficients
  std::vector<double> detail;  // wavelet coefficients
  std::size_t original_length = 0;
};

// One decomposition stage with periodic extension:
//   approx[n] = sum_k h0[k] s[(2n + k) mod N]
//   detail[n] = sum_k h1[k] s[(2n + k) mod N]
// Odd-length input is zero-padded to even length first. Deeper stages apply
// the same step to `approx`.
WaveletBands dwt_analyze(std::span<const double> signal,
                         const FilterPair& filters = haar());

// Exact inverse of dwt_analyze, truncated to original_length.
std::vector<double> dwt_synthesize(const WaveletBands& bands,
                                   const FilterPair& filters = haar());

}  // namespace stegkit

#endif  // STEGKIT_TRANSFORMS_HPP_
