#pragma once

// Neighbouring quinary strings whose compressions differ by Theta(m^2) blocks.
//
// Integers are written as fixed-width binary codes E(i) over symbols 0/1 and
// every code is doubled. Symbol 2 (3 in w') marks the middle of S_w, symbol 4
// terminates each segment.

#include <cstdint>
#include <string>
#include <vector>

#include "lzdp/analysis.hpp"
#include "lzdp/core.hpp"

namespace lzdp {

enum class WidthMode {
  Paper,     // b = ceil(log2 m); codes above 2^b - 1 wrap around
  Injective  // b = ceil(log2(2m + 1)); all codes in [1, 2m] are distinct
};

std::string to_string(WidthMode mode);

/// Alphabet "01234".
const Alphabet& quinary_alphabet();

std::uint64_t width_for(std::uint64_t m, WidthMode mode);

/// E(i) as a string of '0'/'1', big-endian, `b` characters.
std::string encode_int(std::uint64_t i, std::uint64_t b, WidthMode mode = WidthMode::Injective);

/// S_{l,u} = E(m-u+1)^2 ... E(m)^2 2 E(m+1)^2 ... E(m-u+l)^2, as labels.
std::string build_segment_labels(std::uint64_t l, std::uint64_t u, std::uint64_t m,
                                 std::uint64_t b, WidthMode mode = WidthMode::Injective);
Text build_segment(std::uint64_t l, std::uint64_t u, std::uint64_t m, std::uint64_t b,
                   WidthMode mode = WidthMode::Injective);

/// Position of segment (l, u) inside w, 0-based, plus its rank in S.
struct SegmentInfo {
  std::uint64_t l = 0;
  std::uint64_t u = 0;
  std::uint64_t offset = 0;  // first symbol of S_{l,u}
  std::uint64_t length = 0;  // |S_{l,u}|, the trailing 4 not included
};

struct QuinStrOutput {
  std::uint64_t m = 0;
  WidthMode width_mode = WidthMode::Injective;
  std::uint64_t b = 0;
  Text w{quinary_alphabet(), {}};
  Text w_prime{quinary_alphabet(), {}};
  std::uint64_t marker = 0;      // 0-based index of the 2/3 symbol
  std::uint64_t head_length = 0; // |S_w|, trailing 4 included
  std::vector<SegmentInfo> segments;
  std::uint64_t predicted_b2 = 0;
  std::uint64_t predicted_len = 0;
};

QuinStrOutput quinstr(std::uint64_t m, WidthMode mode);

/// m(m-1)/2 - (floor(m/2) - 1).
std::uint64_t predicted_b2(std::uint64_t m);

/// 4mb + 2 + (m-1)m + (2/3)(m^3 - m)b.
std::uint64_t predicted_length(std::uint64_t m, std::uint64_t b);

/// f(l, u) = (l-2)(l-1)/2 + (l-u).
std::uint64_t segment_rank(std::uint64_t l, std::uint64_t u);

/// True iff segment_rank is a bijection onto [1, m(m-1)/2].
bool check_f_injective(std::uint64_t m);

/// Segments whose block is expected to have type 1 rather than 2.
constexpr bool is_exceptional_segment(std::uint64_t l, std::uint64_t u) noexcept {
  return l > 2 && l % 2 == 0 && u == l / 2;
}

struct SegmentType {
  std::uint64_t l = 0, u = 0;
  std::size_t block = 0;  // 0-based block of w covering the segment
  bool aligned = false;   // the block spans exactly S_{l,u} followed by 4
  std::size_t type = 0;
  std::size_t expected = 0;
};

struct LowerBoundReport {
  std::uint64_t m = 0;
  WidthMode width_mode = WidthMode::Injective;
  std::uint64_t b = 0;
  std::uint64_t n = 0;
  std::uint64_t predicted_len = 0;
  std::uint64_t actual_len = 0;
  std::uint64_t predicted_b2 = 0;
  PairAnalysis analysis;
  IdentityReport identities;
  std::vector<SegmentType> segment_types;
  std::uint64_t delta_bits = 0;
  double bound_m2logm = 0.0;
  IdentityReport checks;  // t0, t2, segment_types, junctions_distinct, junction_pattern, delta, ...
  bool pass() const noexcept { return checks.all_pass(); }
};

/// Builds QuinStr(m), compresses both strings with W = n, non-overlapping,
/// and checks the measured block counts against the construction.
LowerBoundReport verify_lower_bound(std::uint64_t m, WidthMode mode = WidthMode::Injective);

}  // namespace lzdp
