#pragma once

// Reference implementations used only by tests. Each one is written from the
// definitions, as slowly and plainly as possible, and shares no code with the
// library beyond its data types.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "lzdp/core.hpp"
#include "lzdp/lz77.hpp"

namespace oracle {

// SplitMix64: small, seedable, and independent of the library's RNG.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  std::vector<std::uint8_t> symbols(std::size_t n, std::size_t k) {
    std::vector<std::uint8_t> out(n);
    for (auto& c : out) c = static_cast<std::uint8_t>(below(k));
    return out;
  }
  // Low-entropy strings: mostly copies of earlier material, so matches are long.
  std::vector<std::uint8_t> repetitive(std::size_t n, std::size_t k) {
    std::vector<std::uint8_t> out;
    while (out.size() < n) {
      if (out.empty() || below(4) == 0) {
        out.push_back(static_cast<std::uint8_t>(below(k)));
      } else {
        const std::size_t from = below(out.size());
        const std::size_t len = range(1, 16);
        for (std::size_t i = 0; i < len && out.size() < n; ++i) out.push_back(out[from + i]);
      }
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

// ceil(log2 x) by repeated doubling, floored at 1.
inline unsigned bits_per_int(std::uint64_t x) {
  unsigned b = 0;
  std::uint64_t p = 1;
  while (p < x) {
    p *= 2;
    ++b;
  }
  return b == 0 ? 1 : b;
}

// Greedy compressor that tries every (length, source) pair, longest length
// first and leftmost source first. Positions are 1-based as in the block format.
inline std::vector<lzdp::Block> compress(const std::vector<std::uint8_t>& w,
                                         std::uint64_t window, bool self_ref) {
  std::vector<lzdp::Block> out;
  const std::uint64_t n = w.size();
  std::uint64_t ctc = 0;  // symbols already encoded
  while (ctc < n) {
    std::uint64_t best_q = 0, best_len = 0;
    for (std::uint64_t len = n - ctc - 1; len >= 1 && best_len == 0; --len) {
      for (std::uint64_t q = 1; q <= ctc; ++q) {
        if (q + window < ctc + 1) continue;          // source outside the window
        if (!self_ref && q + len - 1 > ctc) continue;  // copy would overlap
        bool match = true;
        for (std::uint64_t k = 0; k < len && match; ++k)
          match = w[q - 1 + k] == w[ctc + k];
        if (match) {
          best_q = q;
          best_len = len;
          break;
        }
      }
    }
    out.push_back({best_q, best_len, w[ctc + best_len]});
    ctc += best_len + 1;
  }
  return out;
}

// Decoding by the definition: append the copy, then the literal.
inline std::vector<std::uint8_t> decompress(const std::vector<lzdp::Block>& blocks) {
  std::vector<std::uint8_t> out;
  for (const auto& b : blocks) {
    for (std::uint64_t k = 0; k < b.len; ++k) out.push_back(out[b.q - 1 + k]);
    out.push_back(b.lit);
  }
  return out;
}

// M_i for every block of w: all k with s_i <= s'_k <= f_i, by a full scan.
inline std::vector<std::vector<std::size_t>> m_sets(const std::vector<lzdp::Span>& spans,
                                                    const std::vector<lzdp::Span>& spans_prime) {
  std::vector<std::vector<std::size_t>> out(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t k = 0; k < spans_prime.size(); ++k)
      if (spans[i].s <= spans_prime[k].s && spans_prime[k].s <= spans[i].f) out[i].push_back(k + 1);
  return out;
}

// Largest |t - t'| over all neighbours, using the reference compressor.
inline std::uint64_t local_block_gap(std::vector<std::uint8_t> w, std::size_t k,
                                     std::uint64_t window, bool self_ref) {
  const auto t = static_cast<std::int64_t>(compress(w, window, self_ref).size());
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto keep = w[i];
    for (std::size_t c = 0; c < k; ++c) {
      if (c == keep) continue;
      w[i] = static_cast<std::uint8_t>(c);
      const auto t2 = static_cast<std::int64_t>(compress(w, window, self_ref).size());
      best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(std::llabs(t2 - t)));
    }
    w[i] = keep;
  }
  return best;
}

// Calls f on every string of length n over k symbols.
template <typename F>
void for_each_string(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::uint8_t> s(n, 0);
  while (true) {
    f(s);
    std::size_t i = n;
    while (i > 0 && s[i - 1] + 1u == k) s[--i] = 0;
    if (i == 0) return;
    ++s[i - 1];
  }
}

}  // namespace oracle
