#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lzdp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed container; `offset()` is the bit offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t bit_offset)
      : Error(what + " (at bit " + std::to_string(bit_offset) + ")"), offset_(bit_offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A block list that cannot be decoded into a string.
class CorruptFileError : public Error {
 public:
  using Error::Error;
};

/// Symbol table. Labels are single bytes, so at most 256 symbols.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 256;

  explicit Alphabet(std::vector<std::uint8_t> labels);

  /// The 256-symbol byte alphabet, label i <-> index i.
  static Alphabet bytes();
  /// Symbols in the order they appear in `labels`, e.g. "abcd".
  static Alphabet from_labels(std::string_view labels);
  /// Labels '0', '1', ... for small synthetic alphabets.
  static Alphabet digits(std::size_t k);

  std::size_t size() const noexcept { return labels_.size(); }
  std::uint8_t label(std::size_t index) const { return labels_.at(index); }
  /// Index of `label`, or nullopt when it is not in the table.
  std::optional<std::uint8_t> index_of(std::uint8_t label) const noexcept;
  const std::vector<std::uint8_t>& labels() const noexcept { return labels_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::uint8_t> labels_;
  std::vector<std::int16_t> lookup_;  // label -> index, -1 if absent
};

/// A string over an alphabet, stored as symbol indices.
class Text {
 public:
  Text(Alphabet alphabet, std::vector<std::uint8_t> symbols);

  /// Maps each byte of `labels` through the alphabet; throws DomainError on an unknown label.
  static Text from_labels(const Alphabet& alphabet, std::string_view labels);
  static Text from_bytes(std::string_view bytes);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
  std::string to_labels() const;

  bool operator==(const Text&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<std::uint8_t> symbols_;
};

/// One LZ77 tuple [q, len, lit]. q is 1-based; q = len = 0 marks a literal.
struct Block {
  std::uint64_t q = 0;
  std::uint64_t len = 0;
  std::uint8_t lit = 0;

  bool is_literal() const noexcept { return q == 0 && len == 0; }
  bool operator==(const Block&) const = default;
};

enum class Variant : std::uint8_t { NonOverlapping = 0, SelfReferencing = 1 };

std::string_view to_string(Variant v) noexcept;

struct CompressionConfig {
  std::optional<std::uint64_t> window;  // nullopt: unbounded (W = n)
  Variant variant = Variant::NonOverlapping;

  /// Throws DomainError for a bounded window of 0.
  void validate() const;
  /// W as used for a text of length n.
  std::uint64_t effective_window(std::uint64_t n) const noexcept {
    return window ? *window : n;
  }
  bool operator==(const CompressionConfig&) const = default;
};

struct CompressedFile {
  std::uint64_t n = 0;
  CompressionConfig config;
  Alphabet alphabet = Alphabet::bytes();
  std::vector<Block> blocks;

  std::size_t t() const noexcept { return blocks.size(); }
  bool operator==(const CompressedFile&) const = default;
};

struct Violation {
  std::size_t block;  // 0-based; equals t() when the blocks cover the wrong length
  std::string reason;
};

/// First broken block invariant (sentinel form, literal range, source position,
/// window, non-overlap), or a coverage mismatch when the spans do not sum to n.
std::optional<Violation> find_violation(const CompressedFile& file);

/// Throws CorruptFileError describing find_violation's result, if any.
void validate(const CompressedFile& file);

/// max(1, ceil(log2 x)). Throws DomainError for x = 0.
unsigned bits_per_int(std::uint64_t x);

/// Bits per block: 2 * bits_per_int(n) + bits_per_int(K).
std::uint64_t block_bits(std::uint64_t n, std::size_t alphabet_size);

/// Payload size t * block_bits(n, K); 0 for an empty file.
std::uint64_t bit_length(const CompressedFile& file);

}  // namespace lzdp
