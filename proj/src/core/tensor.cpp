// SPDX-License-Identifier: Apache-2.0
#include "core/tensor.hpp"

#include <bit>

namespace sqdm {

namespace {

[[noreturn]] void bad_index(const char* what, int v, int bound) {
  throw_index(std::string(what) + " index " + std::to_string(v) +
              " out of range [0, " + std::to_string(bound) + ")");
}

}  // namespace

std::size_t activation_address(int c, int h, int w, int C, int H, int W) {
  if (c < 0 || c >= C) bad_index("channel", c, C);
  if (h < 0 || h >= H) bad_index("row", h, H);
  if (w < 0 || w >= W) bad_index("column", w, W);
  return (static_cast<std::size_t>(c) * H + h) * W + w;
}

std::size_t weight_address(int c, int k, int r, int s, int C, int K, int R,
                           int S) {
  if (c < 0 || c >= C) bad_index("input channel", c, C);
  if (k < 0 || k >= K) bad_index("output channel", k, K);
  if (r < 0 || r >= R) bad_index("kernel row", r, R);
  if (s < 0 || s >= S) bad_index("kernel column", s, S);
  return ((static_cast<std::size_t>(c) * K + k) * R + r) * S + s;
}

ActivationTensor::ActivationTensor(int channels, int height, int width,
                                   double fill)
    : c_(channels), h_(height), w_(width) {
  if (channels <= 0 || height <= 0 || width <= 0)
    throw_domain("activation tensor dims must be positive");
  data_.assign(static_cast<std::size_t>(channels) * height * width, fill);
}

std::span<double> ActivationTensor::channel(int c) {
  std::size_t base = activation_address(c, 0, 0, c_, h_, w_);
  return {data_.data() + base, per_channel()};
}

std::span<const double> ActivationTensor::channel(int c) const {
  std::size_t base = activation_address(c, 0, 0, c_, h_, w_);
  return {data_.data() + base, per_channel()};
}

WeightTensor::WeightTensor(int in_channels, int out_channels, int kernel_h,
                           int kernel_w, double fill)
    : c_(in_channels), k_(out_channels), r_(kernel_h), s_(kernel_w) {
  if (in_channels <= 0 || out_channels <= 0 || kernel_h <= 0 || kernel_w <= 0)
    throw_domain("weight tensor dims must be positive");
  data_.assign(
      static_cast<std::size_t>(in_channels) * out_channels * kernel_h * kernel_w,
      fill);
}

std::size_t bitmap_popcount(std::span<const std::uint8_t> bitmap,
                            std::size_t bits) {
  std::size_t n = 0;
  for (std::size_t byte = 0; byte * 8 < bits; ++byte) {
    std::uint8_t b = bitmap[byte];
    std::size_t remaining = bits - byte * 8;
    if (remaining < 8) b = static_cast<std::uint8_t>(b & ((1u << remaining) - 1u));
    n += std::popcount(b);
  }
  return n;
}

}  // namespace sqdm
