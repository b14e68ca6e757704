#include "lzdp/core.hpp"

#include <bit>
#include <numeric>

namespace lzdp {

Alphabet::Alphabet(std::vector<std::uint8_t> labels)
    : labels_(std::move(labels)), lookup_(256, -1) {
  if (labels_.empty()) throw DomainError("alphabet must contain at least one symbol");
  if (labels_.size() > kMaxSize) throw DomainError("alphabet larger than 256 symbols");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto& slot = lookup_[labels_[i]];
    if (slot >= 0) throw DomainError("duplicate alphabet label " + std::to_string(labels_[i]));
    slot = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::bytes() {
  std::vector<std::uint8_t> labels(256);
  std::iota(labels.begin(), labels.end(), std::uint8_t{0});
  return Alphabet(std::move(labels));
}

Alphabet Alphabet::from_labels(std::string_view labels) {
  return Alphabet(std::vector<std::uint8_t>(labels.begin(), labels.end()));
}

Alphabet Alphabet::digits(std::size_t k) {
  if (k == 0 || k > 10) throw DomainError("digit alphabets hold 1..10 symbols");
  std::vector<std::uint8_t> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = static_cast<std::uint8_t>('0' + i);
  return Alphabet(std::move(labels));
}

std::optional<std::uint8_t> Alphabet::index_of(std::uint8_t label) const noexcept {
  const auto idx = lookup_[label];
  if (idx < 0) return std::nullopt;
  return static_cast<std::uint8_t>(idx);
}

Text::Text(Alphabet alphabet, std::vector<std::uint8_t> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= alphabet_.size())
      throw DomainError("symbol index " + std::to_string(symbols_[i]) + " at position " +
                        std::to_string(i) + " outside alphabet");
  }
}

Text Text::from_labels(const Alphabet& alphabet, std::string_view labels) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto c = static_cast<std::uint8_t>(labels[i]);
    auto idx = alphabet.index_of(c);
    if (!idx)
      throw DomainError("byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                        " is not in the alphabet");
    symbols.push_back(*idx);
  }
  return Text(alphabet, std::move(symbols));
}

Text Text::from_bytes(std::string_view bytes) {
  return Text(Alphabet::bytes(), std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
}

std::string Text::to_labels() const {
  std::string out;
  out.reserve(symbols_.size());
  for (auto s : symbols_) out.push_back(static_cast<char>(alphabet_.label(s)));
  return out;
}

std::string_view to_string(Variant v) noexcept {
  return v == Variant::NonOverlapping ? "non_overlapping" : "self_referencing";
}

void CompressionConfig::validate() const {
  if (window && *window == 0) throw DomainError("window must be at least 1");
}

std::optional<Violation> find_violation(const CompressedFile& file) {
  if (file.config.window && *file.config.window == 0) return Violation{0, "window must be at least 1"};
  const std::uint64_t n = file.n;
  const std::uint64_t W = file.config.effective_window(n);
  const std::size_t K = file.alphabet.size();
  std::uint64_t s = 1;  // destination start of the current block
  for (std::size_t i = 0; i < file.blocks.size(); ++i) {
    const Block& b = file.blocks[i];
    auto fail = [&](const char* why) { return Violation{i, why}; };
    if (b.lit >= K) return fail("literal outside alphabet");
    if ((b.q == 0) != (b.len == 0)) return fail("q and len must both be zero or both positive");
    if (b.len > n || s > n - b.len) return fail("block runs past the end of the text");
    if (!b.is_literal()) {
      if (b.q > s - 1) return fail("source starts at or after the destination");
      if (b.q + W < s) return fail("source starts outside the window");
      if (file.config.variant == Variant::NonOverlapping && b.q + b.len - 1 > s - 1)
        return fail("source overlaps the destination in a non-overlapping file");
    }
    s += b.len + 1;
  }
  if (s - 1 != n)
    return Violation{file.blocks.size(), "blocks cover " + std::to_string(s - 1) +
                                             " symbols, expected " + std::to_string(n)};
  return std::nullopt;
}

void validate(const CompressedFile& file) {
  if (auto v = find_violation(file))
    throw CorruptFileError("block " + std::to_string(v->block + 1) + ": " + v->reason);
}

unsigned bits_per_int(std::uint64_t x) {
  if (x == 0) throw DomainError("bits_per_int is undefined for 0");
  if (x == 1) return 1;
  // ceil(log2 x) = bit width of x - 1
  return static_cast<unsigned>(std::bit_width(x - 1));
}

std::uint64_t block_bits(std::uint64_t n, std::size_t alphabet_size) {
  return 2ull * bits_per_int(n) + bits_per_int(alphabet_size);
}

std::uint64_t bit_length(const CompressedFile& file) {
  if (file.blocks.empty()) return 0;
  return file.t() * block_bits(file.n, file.alphabet.size());
}

}  // namespace lzdp
