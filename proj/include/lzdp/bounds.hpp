#pragma once

#include <cstdint>

#include "lzdp/core.hpp"

namespace lzdp {

/// Upper bound on the number of type-2 blocks for a neighbouring pair.
///   W = n : cbrt(9)/2 n^(2/3) + cbrt(3)/2 n^(1/3) + 1
///   W < n : cbrt(81)/2 W^(2/3) + cbrt(9)/2 W^(1/3) + 3
/// The same bound holds for both variants.
double type2_block_bound(std::uint64_t n, std::uint64_t window);

/// The two forms of type2_block_bound, callable directly.
double full_window_type2_bound(std::uint64_t n);
double bounded_window_type2_bound(std::uint64_t window);

/// Upper bound on |t' - t| for a neighbouring pair: the type-2 bound for
/// non-overlapping LZ77, plus 2 for self-referencing (one possible type-3 block).
double block_gap_bound(std::uint64_t n, std::uint64_t window, Variant variant);

/// Real-valued global-sensitivity bound in bits, block_gap_bound * block_bits(n, K).
double gs_upper_bound_real(std::uint64_t n, std::uint64_t window, std::size_t alphabet_size,
                           Variant variant);

/// ceil(gs_upper_bound_real). Requires n >= 1, 1 <= W <= n, K >= 1.
std::uint64_t gs_upper_bound(std::uint64_t n, std::uint64_t window, std::size_t alphabet_size,
                             Variant variant);

}  // namespace lzdp
