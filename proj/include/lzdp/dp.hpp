#pragma once

// Differentially private length padding.
//
// The compressed payload is followed by 0 || 1^(p-1) with
//   p = max(1, ceil(Z + k)),  Z ~ Laplace(gs/eps),  k = (gs/eps) ln(1/(2 delta)) + gs + 1,
// and then by up to seven more 1 bits to reach a byte boundary. Stripping all
// trailing 1s and one 0 recovers the payload without knowing p.
//
// Laplace noise is drawn in double precision. Floating-point Laplace samplers
// are known to leak through the low-order bits of their output; here only
// ceil(Z + k) is released, but the mechanism is not hardened against such
// attacks.

#include <cstdint>
#include <random>

#include "lzdp/bitstring.hpp"
#include "lzdp/core.hpp"

namespace lzdp {

/// Caller-owned noise source. Concurrent callers need separate instances.
using Rng = std::mt19937_64;

class CorruptPaddingError : public Error {
 public:
  using Error::Error;
};

struct DPParams {
  double epsilon = 1.0;
  double delta = 1e-6;
  std::uint64_t gs_bits = 1;
  std::uint64_t seed = 0;

  /// Throws DomainError unless epsilon > 0, 0 < delta < 1 and gs_bits >= 1.
  void validate() const;
  /// Laplace scale gs/eps.
  double scale() const noexcept { return static_cast<double>(gs_bits) / epsilon; }
  /// The shift k, kept real-valued.
  double shift() const noexcept;
};

struct PaddedBitstring {
  BitString bits;
  std::uint64_t p = 0;  // drawn padding length; for tests only, never serialized
};

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng) noexcept;

/// Inverse-CDF Laplace sample for a given u in (-1/2, 1/2):
/// -scale * sign(u) * ln(1 - 2|u|).
double laplace_from_uniform(double scale, double u);
double laplace_sample(double scale, Rng& rng);

/// max(1, ceil(z + k)) for an already drawn noise value z.
std::uint64_t pad_length_for_noise(const DPParams& params, double z);
std::uint64_t pad_length(const DPParams& params, Rng& rng);

/// payload || 0 || 1^(p-1) || 1^a, a in [0, 8) chosen so the size is a multiple of 8.
PaddedBitstring dp_pad(const BitString& payload, std::uint64_t p);

/// Compresses `text` and pads its block payload (encode_payload) with a fresh p.
PaddedBitstring dp_compress(const Text& text, const CompressionConfig& config,
                            const DPParams& params, Rng& rng);

/// Removes the trailing run of 1 bits and the 0 before it.
/// Throws CorruptPaddingError when there is no 0 bit.
BitString dp_strip(const BitString& padded);

/// Padded container: header with the padded flag, then dp_pad(encode_payload(file), p).
BitString dp_serialize(const CompressedFile& file, const DPParams& params, Rng& rng,
                       std::uint64_t* drawn_p = nullptr);

/// Inverse of dp_serialize; also accepts unpadded containers.
CompressedFile dp_deserialize(const BitString& bits);

}  // namespace lzdp
