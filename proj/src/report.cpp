#include "lzdp/report.hpp"

#include <cmath>

#include "lzdp/bounds.hpp"

namespace lzdp {
namespace {

nlohmann::json checks_json(const IdentityReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : report.checks)
    out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

}  // namespace

nlohmann::json analysis_json(const PairAnalysis& pa, const IdentityReport& identities) {
  nlohmann::json per_block = nlohmann::json::array();
  for (std::size_t i = 0; i < pa.t(); ++i) {
    per_block.push_back({{"i", i + 1},
                         {"s", pa.spans[i].s},
                         {"f", pa.spans[i].f},
                         {"q", pa.blocks[i].q},
                         {"len", pa.blocks[i].len},
                         {"type", pa.type[i]}});
  }
  return {{"n", pa.n},
          {"W", pa.window},
          {"variant", std::string(to_string(pa.variant))},
          {"j", pa.j},
          {"t", pa.t()},
          {"t_prime", pa.t_prime()},
          {"swapped", pa.swapped},
          {"counts",
           {{"t0", pa.count(0)}, {"t1", pa.count(1)}, {"t2", pa.count(2)}, {"t3", pa.count(3)}}},
          {"identities", checks_json(identities)},
          {"per_block", std::move(per_block)},
          {"pass", identities.all_pass()}};
}

nlohmann::json lower_bound_json(const LowerBoundReport& r) {
  const PairAnalysis& pa = r.analysis;
  nlohmann::json exceptional = nlohmann::json::array();
  for (const auto& st : r.segment_types)
    if (st.type == 1) exceptional.push_back({st.l, st.u});
  return {{"m", r.m},
          {"width_mode", to_string(r.width_mode)},
          {"b", r.b},
          {"n", r.n},
          {"predicted_len", r.predicted_len},
          {"actual_len", r.actual_len},
          {"predicted_b2", r.predicted_b2},
          {"measured",
           {{"t0", pa.count(0)},
            {"t1", pa.count(1)},
            {"t2", pa.count(2)},
            {"t3", pa.count(3)},
            {"t", pa.t()},
            {"t_prime", pa.t_prime()}}},
          {"type1_segments", std::move(exceptional)},
          {"delta_bits", r.delta_bits},
          {"bound_m2logm", r.bound_m2logm},
          {"checks", checks_json(r.checks)},
          {"pass", r.pass()}};
}

nlohmann::json quinstr_json(const QuinStrOutput& q) {
  return {{"m", q.m},
          {"width_mode", to_string(q.width_mode)},
          {"b", q.b},
          {"n", q.w.size()},
          {"predicted_len", q.predicted_len},
          {"actual_len", q.w.size()},
          {"predicted_b2", q.predicted_b2},
          {"pass", q.predicted_len == q.w.size()}};
}

nlohmann::json bounds_json(std::uint64_t n, std::uint64_t window, std::size_t alphabet_size) {
  if (n == 0 || window == 0 || window > n)
    throw DomainError("bounds need n >= 1 and 1 <= W <= n");
  if (alphabet_size == 0) throw DomainError("alphabet size must be at least 1");
  const std::uint64_t bb = block_bits(n, alphabet_size);
  nlohmann::json rows = nlohmann::json::array();
  for (const bool full : {true, false}) {
    for (const Variant v : {Variant::NonOverlapping, Variant::SelfReferencing}) {
      const double t2 = full ? full_window_type2_bound(n) : bounded_window_type2_bound(window);
      const double gap = t2 + (v == Variant::SelfReferencing ? 2.0 : 0.0);
      const double bits = gap * static_cast<double>(bb);
      rows.push_back({{"variant", std::string(to_string(v))},
                      {"window_form", full ? "full" : "bounded"},
                      {"W", full ? n : window},
                      {"type2_bound", t2},
                      {"block_gap_bound", gap},
                      {"block_bits", bb},
                      {"gs_bits_real", bits},
                      {"gs_bits", static_cast<std::uint64_t>(std::ceil(bits))}});
    }
  }
  return {{"n", n}, {"W", window}, {"k", alphabet_size}, {"rows", std::move(rows)}};
}

bool all_pass(const nlohmann::json& doc) {
  if (doc.is_object()) {
    auto it = doc.find("pass");
    if (it != doc.end() && it->is_boolean() && !it->get<bool>()) return false;
  }
  if (doc.is_structured()) {
    for (const auto& value : doc)
      if (!all_pass(value)) return false;
  }
  return true;
}

}  // namespace lzdp
