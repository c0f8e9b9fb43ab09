// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"
#include "core/tensor.hpp"

namespace sqdm {

enum class Granularity { per_tensor, per_channel, per_block };
enum class ScaleKind { real, pow2, fp8_e4m3 };

/// Uniform symmetric integer format plus its scale-factor policy.
/// Named presets (see QuantFormat::named):
///   fp16       passthrough, no codes, cost accounting only
///   int8       8-bit signed, one real scale per channel
///   mxint8     8-bit signed, one power-of-two scale per 32-element block
///   int4       4-bit signed, one real scale per channel
///   int4-vsq   4-bit signed, one real scale per 16-element block
///   int4-fp8s  4-bit signed, one fp8-e4m3 scale per 16-element block
///   uint4-fp8s 4-bit unsigned variant of int4-fp8s
/// Blocks never straddle a channel boundary; the last block of a channel
/// may be short.
struct QuantFormat {
  std::string name = "int8";
  int bits = 8;
  bool is_signed = true;
  Granularity granularity = Granularity::per_channel;
  int block_size = 0;  // per_block only
  ScaleKind scale_kind = ScaleKind::real;
  bool passthrough = false;  // fp16: values pass through untouched

  int q_max() const { return is_signed ? (1 << (bits - 1)) - 1 : (1 << bits) - 1; }
  int code_min() const { return is_signed ? -q_max() : 0; }
  int code_max() const { return q_max(); }
  int representable_codes() const { return 1 << bits; }
  double code_bits() const { return passthrough ? 16.0 : bits; }

  /// Bytes of inline scale storage per group. Per-tensor and per-channel
  /// scales are out-of-band metadata and cost nothing here; block formats
  /// pack one scale per block with the data.
  double scale_bytes_per_group() const;

  static QuantFormat named(std::string_view name);  // config error if unknown
  static const std::vector<std::string>& preset_names();
};

/// Channel-major view used for scale grouping: one row per channel
/// (the slowest dim), row length = product of the faster dims.
struct ChannelView {
  int channels = 0;
  std::size_t per_channel = 0;
  const double* data = nullptr;

  std::size_t size() const { return channels * per_channel; }
};

ChannelView view_of(const ActivationTensor& t);
ChannelView view_of(const WeightTensor& t);

/// Integer codes plus per-group scales. Grouping is derived from the
/// format and the (channels × per_channel) shape; `dims` carries the
/// original tensor dims (C,H,W or C,K,R,S) for consumers that need them.
struct QuantizedTensor {
  QuantFormat format;
  int channels = 0;
  std::size_t per_channel = 0;
  std::vector<int> dims;
  std::vector<std::int32_t> codes;
  std::vector<double> scales;
  std::vector<double> real_values;  // passthrough payload

  std::size_t size() const {
    return static_cast<std::size_t>(channels) * per_channel;
  }
  std::size_t groups_per_channel() const;
  std::size_t group_count() const;
  std::size_t group_of(int channel, std::size_t index_in_channel) const;
  double scale_of(int channel, std::size_t index_in_channel) const {
    return scales[group_of(channel, index_in_channel)];
  }
};

/// round(x/s) with s = max|x|/q_max per scale group, codes clamped to the
/// symmetric range [-q_max, q_max] (signed) or [0, q_max] (unsigned).
/// Rounding is half-to-even. All-zero groups quantize with scale 1.
QuantizedTensor quantize(const ChannelView& x, const QuantFormat& fmt);
QuantizedTensor quantize(const ActivationTensor& x, const QuantFormat& fmt);
QuantizedTensor quantize(const WeightTensor& x, const QuantFormat& fmt);

std::vector<double> dequantize(const QuantizedTensor& q);

/// Nearest fp8 E4M3 value (4 exponent bits, bias 7, 3 mantissa bits),
/// ties to even mantissa, saturating at 448. Values below the smallest
/// positive subnormal round up to it so scales stay positive.
double encode_scale_fp8_e4m3(double s);

/// Smallest power of two >= s, i.e. 2^ceil(log2 s); the group maximum can
/// never overflow the code range under this scale.
double encode_scale_pow2(double s);

double silu(double x);
double relu(double x);

/// Distinct code values present, with no grouping precondition.
int distinct_code_count(const QuantizedTensor& q);

struct CodeUtilization {
  int distinct_codes = 0;
  int representable = 0;
};

/// Whole-tensor level-utilization metric; requires per-tensor granularity.
CodeUtilization code_utilization(const QuantizedTensor& q);

/// 10·log10(Σref² / Σ(ref−approx)²); +infinity when the error is exactly
/// zero. Rejects shape mismatch and an all-zero reference.
double sqnr_db(std::span<const double> reference,
               std::span<const double> approx);

}  // namespace sqdm
