#pragma once

// Block-level comparison of the compressions of two neighbouring strings
// (equal length, one substituted symbol at 1-based index j).
//
// For block i of w with span [s_i, f_i], M_i is the set of blocks k of w'
// whose start s'_k lies inside [s_i, f_i]; |M_i| is the block's type. Since
// both block lists tile [1, n], every k lands in exactly one M_i and
// t' = sum_m m * t_m.

#include <cstdint>
#include <string>
#include <vector>

#include "lzdp/core.hpp"
#include "lzdp/lz77.hpp"

namespace lzdp {

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// s_i <= s'_k <= f_i.
constexpr bool start_inside(const Span& block, const Span& other) noexcept {
  return block.s <= other.s && other.s <= block.f;
}

/// The 1-based index where `a` and `b` differ. Throws DomainError unless they
/// have equal length, the same alphabet and Hamming distance exactly 1.
std::uint64_t differing_index(const Text& a, const Text& b);

struct PairAnalysis {
  std::uint64_t n = 0;
  std::uint64_t window = 0;  // effective W
  Variant variant = Variant::NonOverlapping;
  std::uint64_t j = 0;
  std::size_t alphabet_size = 0;
  bool swapped = false;  // w and w' were exchanged so that t <= t'

  std::vector<Block> blocks, blocks_prime;
  std::vector<Span> spans, spans_prime;
  std::vector<std::vector<std::size_t>> m_sets;  // per block of w, 1-based k values
  std::vector<std::size_t> type;                // |M_i|
  std::vector<std::size_t> counts;              // counts[m] = t_m, at least 4 entries

  std::size_t t() const noexcept { return blocks.size(); }
  std::size_t t_prime() const noexcept { return blocks_prime.size(); }
  std::size_t count(std::size_t m) const noexcept { return m < counts.size() ? counts[m] : 0; }
  std::size_t max_type() const noexcept { return counts.size() - 1; }
  /// t' - t, signed.
  std::int64_t signed_gap() const noexcept {
    return static_cast<std::int64_t>(t_prime()) - static_cast<std::int64_t>(t());
  }
};

/// Compresses both strings and classifies every block of w.
PairAnalysis classify_pair(const Text& w, const Text& w_prime, const CompressionConfig& config);

/// classify_pair with the pair ordered so that t <= t'.
PairAnalysis classify_pair_oriented(const Text& w, const Text& w_prime,
                                    const CompressionConfig& config);

struct IdentityCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const noexcept;
  const IdentityCheck* find(std::string_view name) const noexcept;
};

/// Runs every block-counting identity and bound on an analysed pair:
///   partition          t0+t1+t2+t3 = t and sum m*t_m = t'
///   consecutive_m_sets each nonempty M_i is a run of consecutive indices
///   max_block_type     type <= 2 (non-overlapping); <= 3 with t3 <= 1 (self-referencing)
///   block_gap_identity t'-t = t2-t0 (+ 2*t3 when self-referencing)
///   type2_bound        t2 <= type2_block_bound(n, W)
///   block_gap_bound    t'-t <= block_gap_bound(n, W, variant)
///   window_start       type-2 blocks start at or before j+W (only checked for W < n)
///   type2_location     type-2 blocks contain j, or copy from a source covering j
///   type2_distinct     type-2 blocks have pairwise distinct (q, len)
///   type2_per_length   at most len type-2 blocks of each length, +1 for the block containing j
///   bit_length_gap     |bits(w) - bits(w')| = |t - t'| * block_bits
IdentityReport check_counting_identities(const PairAnalysis& pa);

/// Largest |t - t'| over every neighbour w' of w, in blocks.
std::uint64_t local_block_gap(const Text& w, const CompressionConfig& config);

/// Largest compressed-length change in bits over every neighbour of w.
std::uint64_t local_sensitivity(const Text& w, const CompressionConfig& config);

inline constexpr std::uint64_t kDefaultSensitivityBudget = 100'000'000;

struct GlobalSensitivity {
  std::uint64_t bits = 0;
  std::uint64_t block_gap = 0;
  std::uint64_t strings = 0;           // strings whose local sensitivity was computed
  std::uint64_t compressor_calls = 0;
  std::vector<std::uint8_t> witness;   // a string attaining the maximum
};

/// Compressor calls an exhaustive sweep needs (saturates at UINT64_MAX).
std::uint64_t global_sensitivity_cost(std::uint64_t n, std::size_t k, bool prune);

/// Exact max of local_sensitivity over all strings of length n over k symbols.
/// With `prune`, only strings whose symbols first appear in order 0, 1, 2, ...
/// are visited; relabelling symbols does not change any block's (q, len).
/// Throws BudgetExceededError when the sweep would exceed `budget` compressor calls.
GlobalSensitivity global_sensitivity_exhaustive(std::uint64_t n, std::size_t k,
                                                const CompressionConfig& config,
                                                std::uint64_t budget = kDefaultSensitivityBudget,
                                                bool prune = true);

}  // namespace lzdp
