#include "lzdp/dp.hpp"

#include <cmath>

#include "lzdp/container.hpp"
#include "lzdp/lz77.hpp"

namespace lzdp {

void DPParams::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  if (gs_bits == 0) throw DomainError("gs_bits must be at least 1");
}

double DPParams::shift() const noexcept {
  const double gs = static_cast<double>(gs_bits);
  return gs / epsilon * std::log(1.0 / (2.0 * delta)) + gs + 1.0;
}

double uniform01(Rng& rng) noexcept {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double laplace_from_uniform(double scale, double u) {
  if (!(scale > 0.0)) throw DomainError("Laplace scale must be positive");
  if (!(u > -0.5 && u < 0.5)) throw DomainError("uniform draw must lie in (-1/2, 1/2)");
  if (u == 0.0) return 0.0;
  const double magnitude = -scale * std::log1p(-2.0 * std::fabs(u));
  return u < 0.0 ? -magnitude : magnitude;
}

double laplace_sample(double scale, Rng& rng) {
  double u;
  do {
    u = uniform01(rng) - 0.5;
  } while (u == -0.5);
  return laplace_from_uniform(scale, u);
}

std::uint64_t pad_length_for_noise(const DPParams& params, double z) {
  const double p = std::ceil(z + params.shift());
  if (!(p > 1.0)) return 1;
  return static_cast<std::uint64_t>(p);
}

std::uint64_t pad_length(const DPParams& params, Rng& rng) {
  params.validate();
  return pad_length_for_noise(params, laplace_sample(params.scale(), rng));
}

PaddedBitstring dp_pad(const BitString& payload, std::uint64_t p) {
  if (p == 0) throw DomainError("padding length must be at least 1");
  PaddedBitstring out{payload, p};
  out.bits.push_back(false);
  out.bits.append_run(true, p - 1);
  out.bits.append_run(true, (8 - out.bits.size() % 8) % 8);
  return out;
}

PaddedBitstring dp_compress(const Text& text, const CompressionConfig& config,
                            const DPParams& params, Rng& rng) {
  params.validate();
  const BitString payload = encode_payload(compress(text, config));
  return dp_pad(payload, pad_length(params, rng));
}

BitString dp_strip(const BitString& padded) {
  std::size_t end = padded.size();
  while (end > 0 && padded[end - 1]) --end;
  if (end == 0) throw CorruptPaddingError("padding has no terminating 0 bit");
  BitString out = padded;
  out.truncate(end - 1);
  return out;
}

BitString dp_serialize(const CompressedFile& file, const DPParams& params, Rng& rng,
                       std::uint64_t* drawn_p) {
  params.validate();
  BitString out;
  write_header(out, file, /*padded=*/true);
  PaddedBitstring padded = dp_pad(encode_payload(file), pad_length(params, rng));
  if (drawn_p) *drawn_p = padded.p;
  out.append(padded.bits);
  return out;
}

CompressedFile dp_deserialize(const BitString& bits) {
  ContainerHeader h = read_header(bits);
  if (!h.padded) return deserialize_blocks(bits);
  BitString body = dp_strip(bits);
  if (body.size() < h.end) throw CorruptPaddingError("padding reaches into the header");
  decode_payload(body, h.end, body.size() - h.end, h.file);
  return std::move(h.file);
}

}  // namespace lzdp
