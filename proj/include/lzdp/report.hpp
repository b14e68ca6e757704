#pragma once

// JSON views of the analysis results, shared by the command-line tool and the
// Python module.

#include <cstdint>

#include <json.hpp>

#include "lzdp/analysis.hpp"
#include "lzdp/quinstr.hpp"

namespace lzdp {

/// {n, W, variant, j, t, t_prime, swapped, counts:{t0..t3}, identities:[...],
///  per_block:[{i, s, f, q, len, type}], pass}
nlohmann::json analysis_json(const PairAnalysis& pa, const IdentityReport& identities);

/// {m, width_mode, b, n, predicted_len, actual_len, predicted_b2,
///  measured:{t0, t1, t2, t3, t, t_prime}, delta_bits, bound_m2logm, checks:[...], pass}
nlohmann::json lower_bound_json(const LowerBoundReport& report);

/// The construction alone, without compressing it: length and predicted values.
nlohmann::json quinstr_json(const QuinStrOutput& q);

/// One row per (variant, window form): the full-window form at W = n and the
/// bounded form at the given window.
nlohmann::json bounds_json(std::uint64_t n, std::uint64_t window, std::size_t alphabet_size);

/// False iff some object anywhere in `doc` has "pass": false.
bool all_pass(const nlohmann::json& doc);

}  // namespace lzdp
