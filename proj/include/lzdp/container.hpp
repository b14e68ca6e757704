#pragma once

// The LZDP file container.
//
//   magic "LZDP" | version (1 byte) | flags (1 byte) | n (8, BE) | W (8, BE; 0 = unbounded)
//   | K (4, BE) | K alphabet labels (1 byte each)
//   | payload bit length (8, BE)        -- unpadded files only
//   | payload, MSB-first
//
// Flags: bit0 = self-referencing, bit1 = padded. Unpadded files fill the last
// byte with zero bits. Padded files carry payload || 0 || 1...1 and no length
// field; see dp.hpp.

#include <array>
#include <cstdint>

#include "lzdp/bitstring.hpp"
#include "lzdp/core.hpp"

namespace lzdp {

inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {'L', 'Z', 'D', 'P'};
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::uint8_t kFlagSelfReferencing = 0x01;
inline constexpr std::uint8_t kFlagPadded = 0x02;

/// Per block: q and len as bits_per_int(n)-bit fields, then lit as a
/// bits_per_int(K)-bit field. Exactly bit_length(file) bits.
BitString encode_payload(const CompressedFile& file);

/// Parses `payload_bits` bits starting at `start` as blocks for a text of
/// length `header.n` and fills `header.blocks`. Throws ParseError on a partial
/// block or any block invariant violation.
void decode_payload(const BitString& bits, std::size_t start, std::size_t payload_bits,
                    CompressedFile& header);

struct ContainerHeader {
  CompressedFile file;  // blocks empty
  bool padded = false;
  std::size_t end = 0;  // bit offset just past the header (and length field, if any)
};

void write_header(BitString& out, const CompressedFile& file, bool padded);
ContainerHeader read_header(const BitString& bits);

/// Full unpadded container for `file`.
BitString serialize_blocks(const CompressedFile& file);

/// Inverse of serialize_blocks. Padded containers are rejected here; use
/// dp_deserialize for those.
CompressedFile deserialize_blocks(const BitString& bits);

}  // namespace lzdp
