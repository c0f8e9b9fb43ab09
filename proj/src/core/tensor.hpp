// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace sqdm {

/// Channel-last linear address of activation element (c, h, w) in a C×H×W
/// tensor: width fastest, channel slowest, so channel c occupies the
/// contiguous range [c·H·W, (c+1)·H·W).
std::size_t activation_address(int c, int h, int w, int C, int H, int W);

/// Channel-last linear address of weight element (c, k, r, s) in a C×K×R×S
/// tensor: kernel width fastest, then kernel height, then output channel,
/// then input channel. All weights of one input channel are contiguous.
std::size_t weight_address(int c, int k, int r, int s, int C, int K, int R,
                           int S);

/// Single-sample activation tensor, C channels of H×W elements, stored
/// channel-last. Holds real values or (exactly representable) integer codes.
class ActivationTensor {
 public:
  ActivationTensor() = default;
  ActivationTensor(int channels, int height, int width, double fill = 0.0);

  int channels() const { return c_; }
  int height() const { return h_; }
  int width() const { return w_; }
  std::size_t size() const { return data_.size(); }
  std::size_t per_channel() const {
    return static_cast<std::size_t>(h_) * w_;
  }

  double& at(int c, int h, int w) {
    return data_[activation_address(c, h, w, c_, h_, w_)];
  }
  double at(int c, int h, int w) const {
    return data_[activation_address(c, h, w, c_, h_, w_)];
  }

  std::span<double> channel(int c);
  std::span<const double> channel(int c) const;

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  int c_ = 0, h_ = 0, w_ = 0;
  std::vector<double> data_;
};

/// Convolution weights, C input channels × K output channels × R×S kernel,
/// stored with input channel slowest so each input channel's weights are
/// contiguous (matches the activation fetch order).
class WeightTensor {
 public:
  WeightTensor() = default;
  WeightTensor(int in_channels, int out_channels, int kernel_h, int kernel_w,
               double fill = 0.0);

  int in_channels() const { return c_; }
  int out_channels() const { return k_; }
  int kernel_h() const { return r_; }
  int kernel_w() const { return s_; }
  std::size_t size() const { return data_.size(); }
  std::size_t per_channel() const {
    return static_cast<std::size_t>(k_) * r_ * s_;
  }

  double& at(int c, int k, int r, int s) {
    return data_[weight_address(c, k, r, s, c_, k_, r_, s_)];
  }
  double at(int c, int k, int r, int s) const {
    return data_[weight_address(c, k, r, s, c_, k_, r_, s_)];
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  int c_ = 0, k_ = 0, r_ = 0, s_ = 0;
  std::vector<double> data_;
};

/// Bitmap-compressed channel: one indicator bit per element position plus
/// the nonzero values in position order. Bit i lives in byte i/8 at bit
/// position i%8 (little-endian within the byte).
template <typename T>
struct CompressedChannel {
  std::size_t size = 0;               // uncompressed element count
  std::vector<std::uint8_t> bitmap;   // ceil(size/8) bytes
  std::vector<T> values;              // nonzero elements, position order

  std::size_t stored_values() const { return values.size(); }
  std::size_t bitmap_bytes() const { return bitmap.size(); }
};

inline bool bitmap_bit(std::span<const std::uint8_t> bitmap, std::size_t i) {
  return (bitmap[i >> 3] >> (i & 7)) & 1u;
}

std::size_t bitmap_popcount(std::span<const std::uint8_t> bitmap,
                            std::size_t bits);

template <typename T>
CompressedChannel<T> compress_channel(std::span<const T> elems) {
  CompressedChannel<T> cc;
  cc.size = elems.size();
  cc.bitmap.assign((elems.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] != T(0)) {
      cc.bitmap[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7));
      cc.values.push_back(elems[i]);
    }
  }
  return cc;
}

/// Exact inverse of compress_channel. Rejects bitmap/values disagreement.
template <typename T>
std::vector<T> decompress_channel(const CompressedChannel<T>& cc) {
  if (cc.bitmap.size() != (cc.size + 7) / 8)
    throw_format("compressed channel: bitmap holds " +
                 std::to_string(cc.bitmap.size() * 8) + " bits for " +
                 std::to_string(cc.size) + " elements");
  std::size_t nnz = bitmap_popcount(cc.bitmap, cc.size);
  if (nnz != cc.values.size())
    throw_format("compressed channel: bitmap popcount " +
                 std::to_string(nnz) + " != stored value count " +
                 std::to_string(cc.values.size()));
  std::vector<T> out(cc.size, T(0));
  std::size_t vi = 0;
  for (std::size_t i = 0; i < cc.size; ++i)
    if (bitmap_bit(cc.bitmap, i)) out[i] = cc.values[vi++];
  return out;
}

}  // namespace sqdm
