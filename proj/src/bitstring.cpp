#include "lzdp/bitstring.hpp"

#include "lzdp/core.hpp"

namespace lzdp {

BitString::BitString(std::vector<std::uint8_t> bytes, std::size_t bit_count)
    : bytes_(std::move(bytes)), size_(bit_count) {
  if (bit_count > bytes_.size() * 8) throw DomainError("bit count exceeds storage");
  bytes_.resize((bit_count + 7) / 8);
  if (size_ & 7) bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - (size_ & 7)));
}

BitString BitString::from_string(std::string_view bits) {
  BitString out;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("bit strings contain only '0' and '1'");
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  return BitString(std::vector<std::uint8_t>(bytes.begin(), bytes.end()), bytes.size() * 8);
}

void BitString::push_back(bool bit) {
  if ((size_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
  ++size_;
}

void BitString::append_bits(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) push_back((value >> i) & 1u);
}

void BitString::append_bytes(std::span<const std::uint8_t> bytes) {
  if ((size_ & 7) == 0) {
    bytes_.insert(bytes_.end(), bytes.begin(), bytes.end());
    size_ += bytes.size() * 8;
    return;
  }
  for (auto b : bytes) append_bits(b, 8);
}

void BitString::append(const BitString& other) {
  if ((size_ & 7) == 0) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    size_ += other.size_;
    return;
  }
  for (std::size_t i = 0; i < other.size_; ++i) push_back(other[i]);
}

void BitString::append_run(bool bit, std::size_t count) {
  while (count > 0 && (size_ & 7) != 0) {
    push_back(bit);
    --count;
  }
  bytes_.insert(bytes_.end(), count / 8, bit ? 0xFF : 0x00);
  size_ += (count / 8) * 8;
  for (std::size_t i = 0; i < count % 8; ++i) push_back(bit);
}

void BitString::truncate(std::size_t new_size) {
  if (new_size >= size_) return;
  size_ = new_size;
  bytes_.resize((size_ + 7) / 8);
  if (size_ & 7) bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - (size_ & 7)));
}

std::string BitString::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if ((*this)[i]) out[i] = '1';
  return out;
}

std::uint64_t BitReader::read_bits(unsigned width) {
  if (width > 64) throw DomainError("cannot read more than 64 bits at once");
  if (width > remaining()) throw ParseError("unexpected end of bitstream", pos_);
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | ((*bits_)[pos_++] ? 1u : 0u);
  return v;
}

}  // namespace lzdp
