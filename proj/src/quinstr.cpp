#include "lzdp/quinstr.hpp"

#include <bit>
#include <cmath>
#include <set>

namespace lzdp {
namespace {

std::uint64_t ceil_log2(std::uint64_t x) {
  return x <= 2 ? 1 : static_cast<std::uint64_t>(std::bit_width(x - 1));
}

void append_doubled(std::string& out, std::uint64_t i, std::uint64_t b, WidthMode mode) {
  const std::string code = encode_int(i, b, mode);
  out += code;
  out += code;
}

// E(1)^2 ... E(m)^2 <marker> E(m+1)^2 ... E(2m)^2 4
std::string head(std::uint64_t m, std::uint64_t b, WidthMode mode, char marker) {
  std::string out;
  for (std::uint64_t i = 1; i <= m; ++i) append_doubled(out, i, b, mode);
  out += marker;
  for (std::uint64_t i = m + 1; i <= 2 * m; ++i) append_doubled(out, i, b, mode);
  out += '4';
  return out;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
    ++count;
  return count;
}

}  // namespace

std::string to_string(WidthMode mode) {
  return mode == WidthMode::Paper ? "paper" : "injective";
}

const Alphabet& quinary_alphabet() {
  static const Alphabet alphabet = Alphabet::from_labels("01234");
  return alphabet;
}

std::uint64_t width_for(std::uint64_t m, WidthMode mode) {
  if (m < 2) throw DomainError("QuinStr needs m >= 2");
  return mode == WidthMode::Paper ? ceil_log2(m) : ceil_log2(2 * m + 1);
}

std::string encode_int(std::uint64_t i, std::uint64_t b, WidthMode mode) {
  if (b < 1 || b > 63) throw DomainError("code width must lie in [1, 63]");
  if (mode == WidthMode::Injective && i >> b)
    throw DomainError(std::to_string(i) + " does not fit in " + std::to_string(b) + " bits");
  std::string out(b, '0');
  for (std::uint64_t k = 0; k < b; ++k)
    if ((i >> k) & 1u) out[b - 1 - k] = '1';
  return out;
}

std::string build_segment_labels(std::uint64_t l, std::uint64_t u, std::uint64_t m,
                                 std::uint64_t b, WidthMode mode) {
  if (l < 2 || l > m || u < 1 || u >= l)
    throw DomainError("segment needs 2 <= l <= m and 1 <= u <= l-1");
  std::string out;
  out.reserve(2 * l * b + 1);
  for (std::uint64_t i = m - u + 1; i <= m; ++i) append_doubled(out, i, b, mode);
  out += '2';
  for (std::uint64_t i = m + 1; i <= m - u + l; ++i) append_doubled(out, i, b, mode);
  return out;
}

Text build_segment(std::uint64_t l, std::uint64_t u, std::uint64_t m, std::uint64_t b,
                   WidthMode mode) {
  return Text::from_labels(quinary_alphabet(), build_segment_labels(l, u, m, b, mode));
}

std::uint64_t predicted_b2(std::uint64_t m) {
  if (m < 2) throw DomainError("QuinStr needs m >= 2");
  return m * (m - 1) / 2 - (m / 2 - 1);
}

std::uint64_t predicted_length(std::uint64_t m, std::uint64_t b) {
  return 4 * m * b + 2 + (m - 1) * m + 2 * (m * m * m - m) / 3 * b;
}

std::uint64_t segment_rank(std::uint64_t l, std::uint64_t u) {
  return (l - 2) * (l - 1) / 2 + (l - u);
}

bool check_f_injective(std::uint64_t m) {
  if (m < 2) throw DomainError("QuinStr needs m >= 2");
  std::set<std::uint64_t> seen;
  for (std::uint64_t l = 2; l <= m; ++l)
    for (std::uint64_t u = 1; u < l; ++u)
      if (!seen.insert(segment_rank(l, u)).second) return false;
  const std::uint64_t top = m * (m - 1) / 2;
  return seen.size() == top && *seen.begin() == 1 && *seen.rbegin() == top;
}

QuinStrOutput quinstr(std::uint64_t m, WidthMode mode) {
  QuinStrOutput out;
  out.m = m;
  out.width_mode = mode;
  out.b = width_for(m, mode);
  out.predicted_b2 = predicted_b2(m);
  out.predicted_len = predicted_length(m, out.b);

  std::string w = head(m, out.b, mode, '2');
  out.head_length = w.size();
  out.marker = 2 * m * out.b;
  for (std::uint64_t l = 2; l <= m; ++l) {
    for (std::uint64_t u = l - 1; u >= 1; --u) {
      const std::string seg = build_segment_labels(l, u, m, out.b, mode);
      out.segments.push_back({l, u, w.size(), seg.size()});
      w += seg;
      w += '4';
    }
  }
  std::string w_prime = w;
  w_prime[out.marker] = '3';
  out.w = Text::from_labels(quinary_alphabet(), w);
  out.w_prime = Text::from_labels(quinary_alphabet(), w_prime);
  return out;
}

LowerBoundReport verify_lower_bound(std::uint64_t m, WidthMode mode) {
  if (m < 4) throw DomainError("lower-bound verification needs m >= 4");
  const QuinStrOutput q = quinstr(m, mode);
  LowerBoundReport r;
  r.m = m;
  r.width_mode = mode;
  r.b = q.b;
  r.n = q.w.size();
  r.predicted_len = q.predicted_len;
  r.actual_len = q.w.size();
  r.predicted_b2 = q.predicted_b2;
  r.analysis = classify_pair(q.w, q.w_prime, CompressionConfig{});
  r.identities = check_counting_identities(r.analysis);

  auto add = [&](std::string name, bool pass, std::string detail) {
    r.checks.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const PairAnalysis& pa = r.analysis;

  add("length", r.actual_len == r.predicted_len,
      std::to_string(r.actual_len) + " symbols, predicted " + std::to_string(r.predicted_len));
  add("orientation", pa.t() <= pa.t_prime(),
      "t = " + std::to_string(pa.t()) + ", t' = " + std::to_string(pa.t_prime()));
  add("t0", pa.count(0) == 0, "t0 = " + std::to_string(pa.count(0)));
  add("t2", pa.count(2) == r.predicted_b2,
      "t2 = " + std::to_string(pa.count(2)) + ", predicted " + std::to_string(r.predicted_b2));

  {
    // Block index by 1-based start position.
    std::size_t bad = 0, first_block = 0;
    std::size_t i = 0;
    for (const SegmentInfo& seg : q.segments) {
      SegmentType st;
      st.l = seg.l;
      st.u = seg.u;
      st.expected = is_exceptional_segment(seg.l, seg.u) ? 1 : 2;
      while (i < pa.t() && pa.spans[i].f < seg.offset + 1) ++i;
      st.block = i;
      if (i < pa.t()) {
        st.aligned = pa.spans[i].s == seg.offset + 1 && pa.spans[i].f == seg.offset + seg.length + 1;
        st.type = pa.type[i];
      }
      if (&seg == &q.segments.front()) first_block = i;
      // Segment (l, u) should be the f(l, u)-th block after the head.
      const bool ranked = st.block + 1 == first_block + segment_rank(seg.l, seg.u);
      if (!st.aligned || !ranked || st.type != st.expected) ++bad;
      r.segment_types.push_back(st);
    }
    add("segment_types", bad == 0,
        std::to_string(bad) + " of " + std::to_string(q.segments.size()) +
            " segments misaligned or of unexpected type");
  }

  const std::string w = q.w.to_labels();
  const std::uint64_t b = q.b;
  auto doubled = [&](std::uint64_t i) {
    std::string s;
    append_doubled(s, i, b, mode);
    return s;
  };
  {
    // Junction strings inside one l are pairwise distinct. Across l they may
    // recur only where an S_{h,1} / S_{h+1,h} boundary reproduces them.
    std::set<std::string> seen;
    std::size_t bad = 0, total = 0;
    for (std::uint64_t l = 3; l <= m; ++l)
      for (std::uint64_t u = 2; u < l; ++u) {
        ++total;
        const std::string junction = doubled(m - u + l) + '4' + doubled(m - u + 2);
        const std::uint64_t h = l / 2;
        const bool cross = l % 2 == 0 && u == h + 1 && h >= 2;
        const std::size_t expected = cross ? 2 : 1;
        if (!seen.insert(junction).second || count_occurrences(w, junction) != expected) ++bad;
      }
    add("junctions_distinct", bad == 0,
        std::to_string(bad) + " of " + std::to_string(total) + " junctions repeat unexpectedly");
  }
  {
    std::size_t bad = 0, total = 0;
    auto offset_of = [&](std::uint64_t l, std::uint64_t u) -> const SegmentInfo& {
      for (const SegmentInfo& s : q.segments)
        if (s.l == l && s.u == u) return s;
      throw DomainError("no such segment");
    };
    for (std::uint64_t l = 2; l + 1 <= m / 2; ++l) {
      ++total;
      const std::string pattern =
          doubled(m - 1 + l) + '4' + build_segment_labels(l + 1, l, m, b, mode);
      const SegmentInfo& first = offset_of(l, 1);
      const SegmentInfo& again = offset_of(2 * l, l + 1);
      const std::uint64_t p1 = first.offset + first.length - 2 * b;
      const std::uint64_t p2 = again.offset + again.length - 2 * b;
      const bool ok = encode_int(m - 1 + l, b, mode) == encode_int(m - (l + 1) + 2 * l, b, mode) &&
                      w.compare(p1, pattern.size(), pattern) == 0 &&
                      w.compare(p2, pattern.size(), pattern) == 0;
      if (!ok) ++bad;
    }
    add("junction_pattern", bad == 0,
        std::to_string(bad) + " of " + std::to_string(total) + " expected repeats missing");
  }

  const std::int64_t gap = pa.signed_gap();
  r.delta_bits = gap > 0 ? static_cast<std::uint64_t>(gap) * block_bits(r.n, 5) : 0;
  r.bound_m2logm = static_cast<double>(m * m) * std::log2(static_cast<double>(m));
  add("delta", static_cast<double>(r.delta_bits) >= r.bound_m2logm,
      std::to_string(r.delta_bits) + " bits >= " + std::to_string(r.bound_m2logm));
  add("identities", r.identities.all_pass(), "block-counting identities on the pair");
  return r;
}

}  // namespace lzdp
