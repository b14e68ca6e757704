#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lzdp {

/// Growable bit sequence, packed MSB-first into bytes. Unused low bits of the
/// last byte are kept at zero so equal sequences have equal storage.
class BitString {
 public:
  BitString() = default;
  /// The first `bit_count` bits of `bytes`.
  BitString(std::vector<std::uint8_t> bytes, std::size_t bit_count);
  /// Parses a string of '0'/'1' characters.
  static BitString from_string(std::string_view bits);
  static BitString from_bytes(std::span<const std::uint8_t> bytes);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool operator[](std::size_t i) const noexcept {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
  }

  void push_back(bool bit);
  /// Appends the low `width` bits of `value`, most significant first.
  void append_bits(std::uint64_t value, unsigned width);
  void append_bytes(std::span<const std::uint8_t> bytes);
  void append(const BitString& other);
  void append_run(bool bit, std::size_t count);
  /// Drops bits from the end.
  void truncate(std::size_t new_size);

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::string to_string() const;

  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

/// Sequential reader over a BitString. Reads past the end throw ParseError.
class BitReader {
 public:
  explicit BitReader(const BitString& bits, std::size_t start = 0) : bits_(&bits), pos_(start) {}

  std::uint64_t read_bits(unsigned width);
  bool read_bit() { return read_bits(1) != 0; }
  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bits_->size() - pos_; }

 private:
  const BitString* bits_;
  std::size_t pos_;
};

}  // namespace lzdp
