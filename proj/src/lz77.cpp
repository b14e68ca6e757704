#include "lzdp/lz77.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <limits>
#include <unordered_map>

namespace lzdp {
namespace {

struct Match {
  std::size_t source = 0;  // 0-based
  std::size_t length = 0;
};

// Everything a match finder needs about the current step. Positions are 0-based;
// `pos` is the number of symbols already encoded (ctc).
struct Query {
  std::size_t pos;
  std::size_t lo;   // first admissible source
  std::size_t cap;  // longest length that still leaves a trailing literal
  bool non_overlapping;

  // Longest length a source at `q` could possibly reach.
  std::size_t reach(std::size_t q) const noexcept {
    return non_overlapping ? std::min(cap, pos - q) : cap;
  }
};

std::size_t common_prefix(const std::uint8_t* data, std::size_t a, std::size_t b,
                          std::size_t limit) noexcept {
  std::size_t k = 0;
  while (k < limit && data[a + k] == data[b + k]) ++k;
  return k;
}

class BruteForceFinder {
 public:
  explicit BruteForceFinder(std::span<const std::uint8_t> data) : data_(data.data()) {}

  Match find(const Query& qr) const {
    Match best;
    const std::uint8_t first = data_[qr.pos];
    std::size_t q = qr.lo;
    while (q < qr.pos) {
      const void* hit = std::memchr(data_ + q, first, qr.pos - q);
      if (!hit) break;
      q = static_cast<std::size_t>(static_cast<const std::uint8_t*>(hit) - data_);
      const std::size_t reach = qr.reach(q);
      if (reach <= best.length) break;  // reach only shrinks as q grows
      const std::size_t len = common_prefix(data_, q, qr.pos, reach);
      if (len > best.length) {
        best = {q, len};
        if (len == qr.cap) break;
      }
      ++q;
    }
    return best;
  }

 private:
  const std::uint8_t* data_;
};

// Position lists keyed by the 1-, 2- and 3-symbol anchor starting at each
// position. Any source whose match reaches length A shares the A-symbol anchor
// with the current position, so scanning the lists from the longest anchor
// down finds the same leftmost-longest match as a full scan.
class IndexedFinder {
 public:
  explicit IndexedFinder(std::span<const std::uint8_t> data) : data_(data.data()) {
    if (data.size() >= std::numeric_limits<std::uint32_t>::max())
      throw DomainError("indexed matching supports texts shorter than 2^32 symbols");
    const std::size_t n = data.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = static_cast<std::uint32_t>(i);
      by1_[data[i]].push_back(p);
      if (i + 1 < n) by2_[key2(i)].push_back(p);
      if (i + 2 < n) by3_[key3(i)].push_back(p);
    }
  }

  Match find(const Query& qr) const {
    const std::size_t top = std::min<std::size_t>(3, qr.cap);
    for (std::size_t anchor = top; anchor >= 1; --anchor) {
      const std::vector<std::uint32_t>* list = nullptr;
      if (anchor == 3) {
        auto it = by3_.find(key3(qr.pos));
        if (it != by3_.end()) list = &it->second;
      } else if (anchor == 2) {
        list = &by2_[key2(qr.pos)];
      } else {
        list = &by1_[data_[qr.pos]];
      }
      if (!list) continue;
      Match best = scan(*list, qr);
      if (best.length >= anchor) return best;
    }
    return {};
  }

 private:
  std::uint32_t key2(std::size_t i) const noexcept {
    return (std::uint32_t{data_[i]} << 8) | data_[i + 1];
  }
  std::uint32_t key3(std::size_t i) const noexcept {
    return (std::uint32_t{data_[i]} << 16) | (std::uint32_t{data_[i + 1]} << 8) | data_[i + 2];
  }

  Match scan(const std::vector<std::uint32_t>& list, const Query& qr) const {
    Match best;
    auto it = std::lower_bound(list.begin(), list.end(), static_cast<std::uint32_t>(qr.lo));
    for (; it != list.end() && *it < qr.pos; ++it) {
      const std::size_t q = *it;
      const std::size_t reach = qr.reach(q);
      if (reach <= best.length) break;
      const std::size_t len = common_prefix(data_, q, qr.pos, reach);
      if (len > best.length) {
        best = {q, len};
        if (len == qr.cap) break;
      }
    }
    return best;
  }

  const std::uint8_t* data_;
  std::array<std::vector<std::uint32_t>, 256> by1_;
  std::vector<std::vector<std::uint32_t>> by2_ = std::vector<std::vector<std::uint32_t>>(1 << 16);
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> by3_;
};

template <typename Finder>
std::vector<Block> run_greedy(std::span<const std::uint8_t> data, std::uint64_t window,
                              bool non_overlapping, const Finder& finder) {
  std::vector<Block> blocks;
  const std::size_t n = data.size();
  std::size_t pos = 0;
  while (pos < n) {
    Query qr{pos, pos > window ? pos - window : 0, n - pos - 1, non_overlapping};
    Match m;
    if (qr.cap > 0 && pos > 0) m = finder.find(qr);
    if (m.length == 0) {
      blocks.push_back(Block{0, 0, data[pos]});
      pos += 1;
    } else {
      blocks.push_back(Block{m.source + 1, m.length, data[pos + m.length]});
      pos += m.length + 1;
    }
  }
  return blocks;
}

}  // namespace

std::vector<Block> compress_blocks(std::span<const std::uint8_t> symbols,
                                   const CompressionConfig& config, MatchStrategy strategy) {
  config.validate();
  const std::uint64_t W = config.effective_window(symbols.size());
  const bool non_overlapping = config.variant == Variant::NonOverlapping;
  if (strategy == MatchStrategy::Auto)
    strategy = symbols.size() <= kBruteForceLimit ? MatchStrategy::BruteForce
                                                  : MatchStrategy::Indexed;
  if (strategy == MatchStrategy::BruteForce)
    return run_greedy(symbols, W, non_overlapping, BruteForceFinder(symbols));
  return run_greedy(symbols, W, non_overlapping, IndexedFinder(symbols));
}

CompressedFile compress(const Text& text, const CompressionConfig& config,
                        MatchStrategy strategy) {
  CompressedFile out;
  out.n = text.size();
  out.config = config;
  out.alphabet = text.alphabet();
  out.blocks = compress_blocks(text.symbols(), config, strategy);
  return out;
}

Text decompress(const CompressedFile& file) {
  const std::size_t K = file.alphabet.size();
  std::vector<std::uint8_t> out;
  out.reserve(file.n);
  for (std::size_t i = 0; i < file.blocks.size(); ++i) {
    const Block& b = file.blocks[i];
    auto fail = [&](const std::string& why) {
      throw CorruptFileError("block " + std::to_string(i + 1) + ": " + why);
    };
    if (b.lit >= K) fail("literal outside alphabet");
    if ((b.q == 0) != (b.len == 0)) fail("q and len must both be zero or both positive");
    if (b.len >= file.n - std::min<std::uint64_t>(out.size(), file.n))
      fail("block runs past the declared length");
    if (!b.is_literal()) {
      if (b.q > out.size()) fail("copy source starts beyond the decoded prefix");
      const std::size_t from = b.q - 1;
      for (std::uint64_t k = 0; k < b.len; ++k) out.push_back(out[from + k]);
    }
    out.push_back(b.lit);
  }
  if (out.size() != file.n)
    throw CorruptFileError("decoded " + std::to_string(out.size()) + " symbols, expected " +
                           std::to_string(file.n));
  return Text(file.alphabet, std::move(out));
}

std::vector<Span> block_spans(std::span<const Block> blocks) {
  std::vector<Span> spans;
  spans.reserve(blocks.size());
  std::uint64_t s = 1;
  for (const Block& b : blocks) {
    spans.push_back({s, s + b.len});
    s += b.len + 1;
  }
  return spans;
}

}  // namespace lzdp
