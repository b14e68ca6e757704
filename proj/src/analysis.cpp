#include "lzdp/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lzdp/bounds.hpp"

namespace lzdp {

BudgetExceededError::BudgetExceededError(std::uint64_t required, std::uint64_t budget)
    : Error("exhaustive sweep needs " + std::to_string(required) +
            " compressor calls, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

std::uint64_t differing_index(const Text& a, const Text& b) {
  if (a.size() != b.size()) throw DomainError("neighbours must have equal length");
  if (!(a.alphabet() == b.alphabet())) throw DomainError("neighbours must share an alphabet");
  std::uint64_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (j != 0) throw DomainError("strings differ in more than one position");
    j = i + 1;
  }
  if (j == 0) throw DomainError("strings are identical, not neighbours");
  return j;
}

PairAnalysis classify_pair(const Text& w, const Text& w_prime, const CompressionConfig& config) {
  PairAnalysis pa;
  pa.j = differing_index(w, w_prime);
  pa.n = w.size();
  pa.window = std::min<std::uint64_t>(config.effective_window(pa.n), pa.n);
  pa.variant = config.variant;
  pa.alphabet_size = w.alphabet().size();
  pa.blocks = compress_blocks(w.symbols(), config);
  pa.blocks_prime = compress_blocks(w_prime.symbols(), config);
  pa.spans = block_spans(pa.blocks);
  pa.spans_prime = block_spans(pa.blocks_prime);

  // Both span lists are sorted and tile [1, n]: walk them together.
  pa.m_sets.assign(pa.t(), {});
  std::size_t i = 0;
  for (std::size_t k = 0; k < pa.spans_prime.size(); ++k) {
    const Span& sk = pa.spans_prime[k];
    while (pa.spans[i].f < sk.s) ++i;
    pa.m_sets[i].push_back(k + 1);
  }
  pa.type.resize(pa.t());
  pa.counts.assign(4, 0);
  for (std::size_t b = 0; b < pa.t(); ++b) {
    const std::size_t m = pa.m_sets[b].size();
    pa.type[b] = m;
    if (m >= pa.counts.size()) pa.counts.resize(m + 1, 0);
    ++pa.counts[m];
  }
  return pa;
}

PairAnalysis classify_pair_oriented(const Text& w, const Text& w_prime,
                                    const CompressionConfig& config) {
  PairAnalysis pa = classify_pair(w, w_prime, config);
  if (pa.t() <= pa.t_prime()) return pa;
  PairAnalysis swapped = classify_pair(w_prime, w, config);
  swapped.swapped = true;
  return swapped;
}

bool IdentityReport::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const IdentityCheck* IdentityReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

IdentityReport check_counting_identities(const PairAnalysis& pa) {
  IdentityReport report;
  auto add = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const bool self_ref = pa.variant == Variant::SelfReferencing;
  const std::size_t t0 = pa.count(0), t2 = pa.count(2), t3 = pa.count(3);
  const std::int64_t gap = pa.signed_gap();

  {
    std::size_t total = 0, weighted = 0;
    for (std::size_t m = 0; m < pa.counts.size(); ++m) {
      total += pa.counts[m];
      weighted += m * pa.counts[m];
    }
    add("partition", total == pa.t() && weighted == pa.t_prime(),
        "sum t_m = " + std::to_string(total) + " (t = " + std::to_string(pa.t()) +
            "), sum m*t_m = " + std::to_string(weighted) + " (t' = " +
            std::to_string(pa.t_prime()) + ")");
  }
  {
    std::size_t bad = 0;
    for (const auto& m : pa.m_sets)
      for (std::size_t x = 1; x < m.size(); ++x)
        if (m[x] != m[x - 1] + 1) ++bad;
    add("consecutive_m_sets", bad == 0, std::to_string(bad) + " gaps");
  }
  {
    const std::size_t limit = self_ref ? 3 : 2;
    std::size_t over = 0;
    for (std::size_t m = limit + 1; m < pa.counts.size(); ++m) over += pa.counts[m];
    const bool ok = over == 0 && (!self_ref || t3 <= 1);
    add("max_block_type", ok,
        "max type " + std::to_string(pa.max_type()) + ", t3 = " + std::to_string(t3));
  }
  {
    const std::int64_t expected = static_cast<std::int64_t>(t2) - static_cast<std::int64_t>(t0) +
                                  (self_ref ? 2 * static_cast<std::int64_t>(t3) : 0);
    const bool ok = gap == expected && (self_ref || t3 == 0);
    add("block_gap_identity", ok,
        "t'-t = " + std::to_string(gap) + ", expected " + std::to_string(expected));
  }
  {
    const double bound = type2_block_bound(pa.n, pa.window);
    add("type2_bound", static_cast<double>(t2) <= bound,
        "t2 = " + std::to_string(t2) + " <= " + std::to_string(bound));
    const double gap_bound = block_gap_bound(pa.n, pa.window, pa.variant);
    add("block_gap_bound", static_cast<double>(gap) <= gap_bound,
        "t'-t = " + std::to_string(gap) + " <= " + std::to_string(gap_bound));
  }

  std::vector<std::size_t> type2;
  for (std::size_t i = 0; i < pa.t(); ++i)
    if (pa.type[i] == 2) type2.push_back(i);

  if (pa.window < pa.n) {
    std::size_t bad = 0;
    for (auto i : type2)
      if (pa.spans[i].s > pa.j + pa.window) ++bad;
    add("window_start", bad == 0,
        std::to_string(bad) + " type-2 blocks start after j+W = " +
            std::to_string(pa.j + pa.window));
  } else {
    add("window_start", true, "not applicable: W = n");
  }
  {
    std::size_t bad = 0;
    for (auto i : type2) {
      const Span& sp = pa.spans[i];
      const Block& b = pa.blocks[i];
      const bool contains_j = sp.s <= pa.j && pa.j <= sp.f;
      const bool copies_j = !b.is_literal() && b.q <= pa.j && pa.j < b.q + b.len;
      if (!contains_j && !copies_j) ++bad;
    }
    add("type2_location", bad == 0, std::to_string(bad) + " type-2 blocks neither contain nor copy j");
  }
  {
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::size_t dup = 0;
    for (auto i : type2)
      if (!seen.insert({pa.blocks[i].q, pa.blocks[i].len}).second) ++dup;
    add("type2_distinct", dup == 0, std::to_string(dup) + " repeated (q, len) pairs");
  }
  {
    std::uint64_t len_star = ~0ull;
    for (std::size_t i = 0; i < pa.t(); ++i)
      if (pa.spans[i].s <= pa.j && pa.j <= pa.spans[i].f) len_star = pa.blocks[i].len;
    std::map<std::uint64_t, std::size_t> per_len;
    for (auto i : type2) ++per_len[pa.blocks[i].len];
    std::string detail;
    bool ok = true;
    for (auto [len, c] : per_len) {
      const std::uint64_t cap = len + (len == len_star ? 1 : 0);
      if (c > cap) {
        ok = false;
        detail += "len " + std::to_string(len) + ": " + std::to_string(c) + " > " +
                  std::to_string(cap) + "; ";
      }
    }
    add("type2_per_length", ok, ok ? std::to_string(per_len.size()) + " lengths within limit" : detail);
  }
  {
    const std::uint64_t bb = block_bits(pa.n, pa.alphabet_size);
    const std::uint64_t bits = pa.t() * bb, bits_prime = pa.t_prime() * bb;
    const std::uint64_t diff = bits > bits_prime ? bits - bits_prime : bits_prime - bits;
    const std::uint64_t abs_gap = static_cast<std::uint64_t>(gap < 0 ? -gap : gap);
    add("bit_length_gap", diff == abs_gap * bb,
        std::to_string(diff) + " bits = " + std::to_string(abs_gap) + " blocks * " +
            std::to_string(bb));
  }
  return report;
}

namespace {

std::uint64_t max_neighbour_gap(std::vector<std::uint8_t>& symbols, std::size_t k,
                                const CompressionConfig& config, std::uint64_t& calls) {
  const auto base = static_cast<std::int64_t>(compress_blocks(symbols, config).size());
  ++calls;
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::uint8_t original = symbols[i];
    for (std::size_t c = 0; c < k; ++c) {
      if (c == original) continue;
      symbols[i] = static_cast<std::uint8_t>(c);
      const auto t = static_cast<std::int64_t>(compress_blocks(symbols, config).size());
      ++calls;
      best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(t > base ? t - base : base - t));
    }
    symbols[i] = original;
  }
  return best;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return r > ~0ull ? ~0ull : static_cast<std::uint64_t>(r);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a + b < a ? ~0ull : a + b; }

}  // namespace

std::uint64_t local_block_gap(const Text& w, const CompressionConfig& config) {
  if (w.size() == 0) throw DomainError("local sensitivity needs n >= 1");
  std::vector<std::uint8_t> symbols = w.symbols();
  std::uint64_t calls = 0;
  return max_neighbour_gap(symbols, w.alphabet().size(), config, calls);
}

std::uint64_t local_sensitivity(const Text& w, const CompressionConfig& config) {
  return local_block_gap(w, config) * block_bits(w.size(), w.alphabet().size());
}

std::uint64_t global_sensitivity_cost(std::uint64_t n, std::size_t k, bool prune) {
  if (n == 0 || k == 0) throw DomainError("global sensitivity needs n >= 1 and k >= 1");
  std::uint64_t strings = 0;
  if (prune) {
    // Restricted growth strings: ways[u] = prefixes using exactly u distinct symbols.
    std::vector<std::uint64_t> ways(k + 1, 0);
    ways[1] = 1;
    for (std::uint64_t len = 2; len <= n; ++len) {
      std::vector<std::uint64_t> next(k + 1, 0);
      for (std::size_t u = 1; u <= k; ++u) {
        if (ways[u] == 0) continue;
        next[u] = sat_add(next[u], sat_mul(ways[u], u));
        if (u < k) next[u + 1] = sat_add(next[u + 1], ways[u]);
      }
      ways = std::move(next);
    }
    for (auto x : ways) strings = sat_add(strings, x);
  } else {
    strings = 1;
    for (std::uint64_t i = 0; i < n; ++i) strings = sat_mul(strings, k);
  }
  return sat_mul(strings, sat_add(1, sat_mul(n, k - 1)));
}

GlobalSensitivity global_sensitivity_exhaustive(std::uint64_t n, std::size_t k,
                                                const CompressionConfig& config,
                                                std::uint64_t budget, bool prune) {
  if (k > Alphabet::kMaxSize) throw DomainError("alphabet larger than 256 symbols");
  config.validate();
  const std::uint64_t cost = global_sensitivity_cost(n, k, prune);
  if (cost > budget) throw BudgetExceededError(cost, budget);

  GlobalSensitivity out;
  std::vector<std::uint8_t> s(n, 0);
  // Odometer over all strings; in pruned mode symbol s[i] may exceed the
  // largest earlier symbol by at most one.
  std::vector<std::uint8_t> prefix_max(n, 0);  // max of s[0..i]
  auto limit = [&](std::size_t i) -> std::size_t {
    if (!prune) return k - 1;
    if (i == 0) return 0;
    return std::min<std::size_t>(k - 1, prefix_max[i - 1] + 1u);
  };
  while (true) {
    for (std::size_t i = 0; i < n; ++i)
      prefix_max[i] = i == 0 ? s[0] : std::max(prefix_max[i - 1], s[i]);
    ++out.strings;
    const std::uint64_t gap = max_neighbour_gap(s, k, config, out.compressor_calls);
    if (out.witness.empty() || gap > out.block_gap) {
      out.block_gap = gap;
      out.witness = s;
    }
    std::size_t i = n;
    while (i > 0 && s[i - 1] >= limit(i - 1)) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t r = i; r < n; ++r) s[r] = 0;
  }
  out.bits = out.block_gap * block_bits(n, k);
  return out;
}

}  // namespace lzdp
