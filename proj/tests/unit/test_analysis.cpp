#include <doctest.h>

#include "lzdp/analysis.hpp"
#include "lzdp/bounds.hpp"
#include "oracles.hpp"

using namespace lzdp;

namespace {

Text digits(const std::vector<std::uint8_t>& s, std::size_t k) { return Text(Alphabet::digits(k), s); }

}  // namespace

TEST_CASE("start_inside") {
  CHECK(start_inside({2, 3}, {2, 5}));
  CHECK(start_inside({2, 3}, {3, 3}));
  CHECK_FALSE(start_inside({2, 3}, {4, 4}));
  CHECK_FALSE(start_inside({2, 3}, {1, 2}));
}

TEST_CASE("differing index") {
  const Alphabet ab = Alphabet::from_labels("ab");
  CHECK(differing_index(Text::from_labels(ab, "abab"), Text::from_labels(ab, "abbb")) == 3);
  CHECK_THROWS_AS(differing_index(Text::from_labels(ab, "ab"), Text::from_labels(ab, "ab")), DomainError);
  CHECK_THROWS_AS(differing_index(Text::from_labels(ab, "ab"), Text::from_labels(ab, "ba")), DomainError);
  CHECK_THROWS_AS(differing_index(Text::from_labels(ab, "ab"), Text::from_labels(ab, "abb")), DomainError);
  CHECK_THROWS_AS(differing_index(Text::from_labels(ab, "ab"), Text::from_labels(Alphabet::from_labels("abc"), "ac")),
                  DomainError);
}

TEST_CASE("hand-traced pair") {
  const Alphabet ab = Alphabet::from_labels("ab");
  const PairAnalysis pa = classify_pair(Text::from_labels(ab, "abab"), Text::from_labels(ab, "abbb"), {});
  CHECK(pa.j == 3);
  CHECK(pa.t() == 3);
  CHECK(pa.t_prime() == 3);
  CHECK(pa.m_sets == std::vector<std::vector<std::size_t>>{{1}, {2}, {3}});
  CHECK(pa.count(1) == 3);
  CHECK(pa.count(0) == 0);
  CHECK(pa.count(2) == 0);
  CHECK(check_counting_identities(pa).all_pass());
}

TEST_CASE("M sets agree with the interval oracle") {
  oracle::Gen g(51);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = g.range(1, 200);
    const std::size_t k = g.range(2, 4);
    auto w = g.below(2) ? g.symbols(n, k) : g.repetitive(n, k);
    auto w2 = w;
    const std::size_t j = g.below(n);
    w2[j] = static_cast<std::uint8_t>((w2[j] + g.range(1, k - 1)) % k);
    const CompressionConfig cfg{g.below(2) ? std::optional<std::uint64_t>(g.range(1, n)) : std::nullopt,
                                g.below(2) ? Variant::SelfReferencing : Variant::NonOverlapping};
    const PairAnalysis pa = classify_pair(digits(w, k), digits(w2, k), cfg);
    CHECK(pa.j == j + 1);
    CHECK(pa.m_sets == oracle::m_sets(pa.spans, pa.spans_prime));
    const IdentityReport r = check_counting_identities(pa);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
  }
}

TEST_CASE("identities hold on every short binary pair") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (bool self_ref : {false, true}) {
      for (std::uint64_t W : {std::min<std::uint64_t>(3, n), static_cast<std::uint64_t>(n)}) {
        const CompressionConfig cfg{W, self_ref ? Variant::SelfReferencing : Variant::NonOverlapping};
        oracle::for_each_string(n, 2, [&](const std::vector<std::uint8_t>& w) {
          for (std::size_t j = 0; j < n; ++j) {
            auto w2 = w;
            w2[j] ^= 1;
            const IdentityReport r = check_counting_identities(classify_pair(digits(w, 2), digits(w2, 2), cfg));
            REQUIRE_MESSAGE(r.all_pass(), "n=" << n << " j=" << j + 1);
          }
        });
      }
    }
  }
}

TEST_CASE("self-referencing type-2 blocks can share (q, len)") {
  // w = 0001011000, w' differs at j = 2. Blocks 2 and 4 of w are both [1,2,*] and
  // both of type 2: block 4 copies w[1..2], which covers j, and block 2 spans j.
  const std::vector<std::uint8_t> w = {0, 0, 0, 1, 0, 1, 1, 0, 0, 0};
  auto w2 = w;
  w2[1] = 1;
  const PairAnalysis sr = classify_pair(digits(w, 2), digits(w2, 2), {10, Variant::SelfReferencing});
  REQUIRE(sr.t() == 4);
  CHECK(sr.blocks[1] == Block{1, 2, 1});
  CHECK(sr.blocks[3] == Block{1, 2, 0});
  CHECK(sr.type[1] == 2);
  CHECK(sr.type[3] == 2);
  CHECK(oracle::compress(w, 10, true) == sr.blocks);
  const IdentityReport r = check_counting_identities(sr);
  CHECK_FALSE(r.find("type2_distinct")->pass);
  for (const auto& c : r.checks)
    if (c.name != "type2_distinct") CHECK_MESSAGE(c.pass, c.name);

  // the non-overlapping parse of the same pair keeps them distinct
  const PairAnalysis no = classify_pair(digits(w, 2), digits(w2, 2), {10, Variant::NonOverlapping});
  CHECK(check_counting_identities(no).all_pass());
}

TEST_CASE("oriented classification puts the shorter compression first") {
  oracle::Gen g(53);
  int swaps = 0;
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = g.range(2, 40);
    auto w = g.repetitive(n, 2);
    auto w2 = w;
    w2[g.below(n)] ^= 1;
    const PairAnalysis plain = classify_pair(digits(w, 2), digits(w2, 2), {});
    const PairAnalysis oriented = classify_pair_oriented(digits(w, 2), digits(w2, 2), {});
    CHECK(oriented.t() <= oriented.t_prime());
    CHECK(oriented.swapped == (plain.t() > plain.t_prime()));
    if (oriented.swapped) {
      ++swaps;
      CHECK(oriented.blocks == plain.blocks_prime);
    }
  }
  CHECK(swaps > 0);
}

TEST_CASE("local sensitivity") {
  CHECK(local_block_gap(Text::from_labels(Alphabet::from_labels("ab"), "a"), {}) == 0);
  CHECK(local_block_gap(Text::from_labels(Alphabet::from_labels("ab"), "aaaa"), {4, Variant::NonOverlapping}) == 0);
  CHECK_THROWS_AS(local_block_gap(Text::from_bytes(""), {}), DomainError);

  oracle::Gen g(52);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = g.range(1, 24);
    const std::size_t k = g.range(2, 3);
    const auto w = g.symbols(n, k);
    const bool self_ref = g.below(2);
    const std::uint64_t W = g.below(2) ? g.range(1, n) : n;
    const CompressionConfig cfg{W, self_ref ? Variant::SelfReferencing : Variant::NonOverlapping};
    const std::uint64_t gap = local_block_gap(digits(w, k), cfg);
    CHECK(gap == oracle::local_block_gap(w, k, W, self_ref));
    CHECK(local_sensitivity(digits(w, k), cfg) == gap * block_bits(n, k));
  }
}

TEST_CASE("global sensitivity cost") {
  // restricted growth strings of length n over <= k symbols
  CHECK(global_sensitivity_cost(3, 2, true) == 4 * (1 + 3));
  CHECK(global_sensitivity_cost(4, 3, true) == 14 * (1 + 8));
  CHECK(global_sensitivity_cost(4, 3, false) == 81 * (1 + 8));
  CHECK(global_sensitivity_cost(200, 256, false) == ~0ull);
  CHECK_THROWS_AS(global_sensitivity_cost(0, 2, true), DomainError);
}

TEST_CASE("global sensitivity") {
  const GlobalSensitivity two = global_sensitivity_exhaustive(2, 2, {});
  CHECK(two.bits == 0);
  CHECK(two.block_gap == 0);

  // pruning by relabelling does not change the maximum
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t k : {2u, 3u}) {
      if (k == 3 && n > 5) continue;
      for (bool self_ref : {false, true}) {
        const CompressionConfig cfg{std::min<std::uint64_t>(3, n),
                                    self_ref ? Variant::SelfReferencing : Variant::NonOverlapping};
        const auto pruned = global_sensitivity_exhaustive(n, k, cfg, kDefaultSensitivityBudget, true);
        const auto full = global_sensitivity_exhaustive(n, k, cfg, kDefaultSensitivityBudget, false);
        CHECK(pruned.block_gap == full.block_gap);
        CHECK(pruned.compressor_calls == global_sensitivity_cost(n, k, true));
        CHECK(full.compressor_calls == global_sensitivity_cost(n, k, false));
        std::uint64_t expect = 0;
        oracle::for_each_string(n, k, [&](const std::vector<std::uint8_t>& w) {
          expect = std::max(expect, oracle::local_block_gap(w, k, std::min<std::uint64_t>(3, n), self_ref));
        });
        CHECK(full.block_gap == expect);
        CHECK(oracle::local_block_gap(pruned.witness, k, std::min<std::uint64_t>(3, n), self_ref) == expect);
      }
    }
  }

  const GlobalSensitivity eight = global_sensitivity_exhaustive(8, 2, {});
  CHECK(eight.bits <= gs_upper_bound(8, 8, 2, Variant::NonOverlapping));
  CHECK(eight.block_gap == 1);

  try {
    global_sensitivity_exhaustive(12, 3, {}, 1000);
    FAIL("expected a budget refusal");
  } catch (const BudgetExceededError& e) {
    CHECK(e.required() == global_sensitivity_cost(12, 3, true));
    CHECK(e.budget() == 1000);
  }
}
