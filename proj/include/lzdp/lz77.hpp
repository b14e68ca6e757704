#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lzdp/core.hpp"

namespace lzdp {

/// How compress() searches the window. Both strategies return the same
/// blocks; Indexed is an accelerator for long inputs.
enum class MatchStrategy { Auto, BruteForce, Indexed };

/// Auto switches from BruteForce to Indexed above this length.
inline constexpr std::size_t kBruteForceLimit = std::size_t{1} << 12;

/// Greedy LZ77: at each step the longest admissible match, leftmost source on
/// ties, capped so that every block ends with a literal symbol.
CompressedFile compress(const Text& text, const CompressionConfig& config,
                        MatchStrategy strategy = MatchStrategy::Auto);

/// The block list alone, for callers that manage symbols without a Text.
std::vector<Block> compress_blocks(std::span<const std::uint8_t> symbols,
                                   const CompressionConfig& config,
                                   MatchStrategy strategy = MatchStrategy::Auto);

/// Rebuilds the text. Copies run symbol by symbol, so overlapping sources
/// decode correctly. Throws CorruptFileError on an unusable block.
Text decompress(const CompressedFile& file);

/// 1-based destination span [s, f] of a block.
struct Span {
  std::uint64_t s = 0;
  std::uint64_t f = 0;
  bool operator==(const Span&) const = default;
};

std::vector<Span> block_spans(std::span<const Block> blocks);
inline std::vector<Span> block_spans(const CompressedFile& file) { return block_spans(file.blocks); }

}  // namespace lzdp
