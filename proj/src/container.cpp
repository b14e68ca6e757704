#include "lzdp/container.hpp"

namespace lzdp {

BitString encode_payload(const CompressedFile& file) {
  BitString out;
  if (file.blocks.empty()) return out;
  const unsigned int_bits = bits_per_int(file.n);
  const unsigned lit_bits = bits_per_int(file.alphabet.size());
  const std::uint64_t limit = int_bits >= 64 ? ~0ull : (1ull << int_bits);
  for (const Block& b : file.blocks) {
    if (b.q >= limit || b.len >= limit)
      throw Error("encoding overflow: block field does not fit in " + std::to_string(int_bits) +
                  " bits");
    out.append_bits(b.q, int_bits);
    out.append_bits(b.len, int_bits);
    out.append_bits(b.lit, lit_bits);
  }
  return out;
}

void decode_payload(const BitString& bits, std::size_t start, std::size_t payload_bits,
                    CompressedFile& header) {
  header.blocks.clear();
  if (payload_bits == 0) {
    if (header.n != 0) throw ParseError("empty payload for a non-empty text", start);
    return;
  }
  if (header.n == 0) throw ParseError("payload present for an empty text", start);
  const std::uint64_t bb = block_bits(header.n, header.alphabet.size());
  if (payload_bits % bb != 0)
    throw ParseError("payload is not a whole number of " + std::to_string(bb) + "-bit blocks",
                     start + payload_bits - payload_bits % bb);
  if (start + payload_bits > bits.size()) throw ParseError("truncated payload", bits.size());

  const unsigned int_bits = bits_per_int(header.n);
  const unsigned lit_bits = bits_per_int(header.alphabet.size());
  BitReader reader(bits, start);
  const std::size_t t = payload_bits / bb;
  header.blocks.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    Block b;
    b.q = reader.read_bits(int_bits);
    b.len = reader.read_bits(int_bits);
    const auto lit = reader.read_bits(lit_bits);
    if (lit >= header.alphabet.size())
      throw ParseError("literal outside alphabet in block " + std::to_string(i + 1),
                       start + i * bb);
    b.lit = static_cast<std::uint8_t>(lit);
    header.blocks.push_back(b);
  }
  if (auto v = find_violation(header))
    throw ParseError("block " + std::to_string(v->block + 1) + ": " + v->reason,
                     start + std::min<std::size_t>(v->block, t) * bb);
}

void write_header(BitString& out, const CompressedFile& file, bool padded) {
  out.append_bytes(kContainerMagic);
  out.append_bits(kContainerVersion, 8);
  std::uint8_t flags = 0;
  if (file.config.variant == Variant::SelfReferencing) flags |= kFlagSelfReferencing;
  if (padded) flags |= kFlagPadded;
  out.append_bits(flags, 8);
  out.append_bits(file.n, 64);
  out.append_bits(file.config.window.value_or(0), 64);
  out.append_bits(file.alphabet.size(), 32);
  out.append_bytes(file.alphabet.labels());
}

ContainerHeader read_header(const BitString& bits) {
  BitReader r(bits);
  for (auto m : kContainerMagic)
    if (r.read_bits(8) != m) throw ParseError("bad magic", 0);
  if (auto v = r.read_bits(8); v != kContainerVersion)
    throw ParseError("unsupported version " + std::to_string(v), 32);
  const auto flags = static_cast<std::uint8_t>(r.read_bits(8));
  if (flags & ~(kFlagSelfReferencing | kFlagPadded)) throw ParseError("unknown flag bits", 40);

  ContainerHeader h;
  h.padded = (flags & kFlagPadded) != 0;
  h.file.config.variant =
      (flags & kFlagSelfReferencing) ? Variant::SelfReferencing : Variant::NonOverlapping;
  h.file.n = r.read_bits(64);
  if (auto w = r.read_bits(64); w != 0) h.file.config.window = w;
  const std::size_t k_pos = r.position();
  const auto k = r.read_bits(32);
  if (k == 0 || k > Alphabet::kMaxSize)
    throw ParseError("alphabet size " + std::to_string(k) + " out of range", k_pos);
  std::vector<std::uint8_t> labels(k);
  for (auto& l : labels) l = static_cast<std::uint8_t>(r.read_bits(8));
  try {
    h.file.alphabet = Alphabet(std::move(labels));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), k_pos + 32);
  }
  h.end = r.position();
  return h;
}

BitString serialize_blocks(const CompressedFile& file) {
  BitString out;
  write_header(out, file, /*padded=*/false);
  const BitString payload = encode_payload(file);
  out.append_bits(payload.size(), 64);
  out.append(payload);
  return out;  // trailing bits of the last byte are already zero
}

CompressedFile deserialize_blocks(const BitString& bits) {
  ContainerHeader h = read_header(bits);
  if (h.padded) throw ParseError("container is DP-padded; strip the padding first", 40);
  BitReader r(bits, h.end);
  const auto payload_bits = r.read_bits(64);
  const std::size_t start = r.position();
  if (payload_bits > bits.size() - start) throw ParseError("truncated payload", bits.size());
  decode_payload(bits, start, payload_bits, h.file);
  // Anything after the payload must be the zero fill of the final byte.
  const std::size_t end = start + payload_bits;
  const std::size_t aligned = (end + 7) / 8 * 8;
  if (bits.size() > aligned) throw ParseError("trailing data after payload", aligned);
  for (std::size_t i = end; i < bits.size(); ++i)
    if (bits[i]) throw ParseError("non-zero fill bits", i);
  return std::move(h.file);
}

}  // namespace lzdp
