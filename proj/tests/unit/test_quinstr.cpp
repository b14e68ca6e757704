#include <doctest.h>

#include <cmath>
#include <set>

#include "lzdp/quinstr.hpp"

using namespace lzdp;

namespace {

std::size_t hamming(const Text& a, const Text& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// E(i) written out by long division.
std::string binary(std::uint64_t i, std::uint64_t b) {
  std::string s;
  for (std::uint64_t k = 0; k < b; ++k, i /= 2) s.insert(s.begin(), static_cast<char>('0' + i % 2));
  return s;
}

}  // namespace

TEST_CASE("fixed-width codes") {
  CHECK(encode_int(0, 3) == "000");
  CHECK(encode_int(7, 3) == "111");
  CHECK(encode_int(1, 4) == "0001");
  CHECK(encode_int(8, 4) == "1000");
  CHECK(encode_int(5, 2, WidthMode::Paper) == "01");
  CHECK_THROWS_AS(encode_int(5, 2, WidthMode::Injective), DomainError);
  CHECK_THROWS_AS(encode_int(0, 0), DomainError);

  for (std::uint64_t m = 2; m <= 40; ++m) {
    const std::uint64_t b = width_for(m, WidthMode::Injective);
    std::set<std::string> codes;
    for (std::uint64_t i = 1; i <= 2 * m; ++i) {
      CHECK(encode_int(i, b) == binary(i, b));
      codes.insert(encode_int(i, b));
    }
    CHECK(codes.size() == 2 * m);
  }
}

TEST_CASE("code widths") {
  CHECK(width_for(4, WidthMode::Paper) == 2);
  CHECK(width_for(4, WidthMode::Injective) == 4);
  CHECK(width_for(2, WidthMode::Paper) == 1);
  CHECK(width_for(7, WidthMode::Paper) == 3);
  CHECK(width_for(8, WidthMode::Paper) == 3);
  CHECK(width_for(9, WidthMode::Paper) == 4);
  CHECK(width_for(8, WidthMode::Injective) == 5);
  CHECK_THROWS_AS(width_for(1, WidthMode::Paper), DomainError);
}

TEST_CASE("segments") {
  const std::uint64_t b4 = width_for(4, WidthMode::Injective);
  const std::string e4 = encode_int(4, b4), e5 = encode_int(5, b4);
  CHECK(build_segment_labels(2, 1, 4, b4) == e4 + e4 + "2" + e5 + e5);

  const std::uint64_t b = width_for(5, WidthMode::Injective);
  for (std::uint64_t l = 2; l <= 5; ++l) {
    for (std::uint64_t u = 1; u < l; ++u) {
      const std::string s = build_segment_labels(l, u, 5, b);
      CHECK(s.size() == 2 * l * b + 1);
      CHECK(std::count(s.begin(), s.end(), '2') == 1);
      CHECK(s.find_first_not_of("012") == std::string::npos);
    }
  }
  CHECK(build_segment(3, 2, 5, b).size() == 6 * b + 1);
  CHECK_THROWS_AS(build_segment_labels(1, 1, 5, b), DomainError);
  CHECK_THROWS_AS(build_segment_labels(3, 3, 5, b), DomainError);
  CHECK_THROWS_AS(build_segment_labels(6, 1, 5, b), DomainError);
}

TEST_CASE("construction lengths") {
  CHECK(quinstr(4, WidthMode::Paper).w.size() == 126);
  CHECK(quinstr(4, WidthMode::Injective).w.size() == 238);
  for (std::uint64_t m = 2; m <= 20; ++m) {
    for (WidthMode mode : {WidthMode::Paper, WidthMode::Injective}) {
      const QuinStrOutput q = quinstr(m, mode);
      CHECK(q.w.size() == q.predicted_len);
      CHECK(q.w.size() == q.w_prime.size());
      CHECK(hamming(q.w, q.w_prime) == 1);
      CHECK(q.w.to_labels()[q.marker] == '2');
      CHECK(q.w_prime.to_labels()[q.marker] == '3');
      CHECK(q.segments.size() == m * (m - 1) / 2);
    }
    // closed form in terms of ceil(log m), written with thirds cleared
    const std::uint64_t b = width_for(m, WidthMode::Paper);
    const std::uint64_t len = quinstr(m, WidthMode::Paper).w.size();
    CHECK(3 * len == 2 * m * m * m * b + 10 * m * b + 3 * (m - 1) * m + 6);
    if (m >= 4) {
      CHECK(2 * m * m * m * b < 3 * len);
      CHECK(len < m * m * m * b);
    }
  }
  CHECK_THROWS_AS(quinstr(1, WidthMode::Paper), DomainError);
}

TEST_CASE("predicted counts and ranks") {
  CHECK(predicted_b2(4) == 5);
  CHECK(predicted_b2(5) == 9);
  CHECK(predicted_b2(6) == 13);
  CHECK(check_f_injective(2));
  CHECK(check_f_injective(6));
  CHECK(check_f_injective(16));
  CHECK(segment_rank(2, 1) == 1);
  CHECK(segment_rank(6, 1) == 15);
  CHECK(is_exceptional_segment(4, 2));
  CHECK_FALSE(is_exceptional_segment(2, 1));
  CHECK_FALSE(is_exceptional_segment(5, 2));
}

TEST_CASE("lower bound verification") {
  const LowerBoundReport r4 = verify_lower_bound(4);
  CHECK(r4.analysis.count(2) == 5);
  CHECK(r4.analysis.count(0) == 0);
  CHECK(r4.analysis.signed_gap() == 5);
  for (const auto& c : r4.checks.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);

  const LowerBoundReport r8 = verify_lower_bound(8);
  std::set<std::pair<std::uint64_t, std::uint64_t>> type1;
  for (const auto& st : r8.segment_types)
    if (st.type == 1) type1.insert({st.l, st.u});
  CHECK(type1 == std::set<std::pair<std::uint64_t, std::uint64_t>>{{4, 2}, {6, 3}, {8, 4}});
  CHECK(r8.pass());

  const LowerBoundReport r12 = verify_lower_bound(12);
  CHECK(static_cast<double>(r12.delta_bits) >= 144 * std::log2(12.0));
  CHECK(r12.pass());

  CHECK_THROWS_AS(verify_lower_bound(3), DomainError);
}
