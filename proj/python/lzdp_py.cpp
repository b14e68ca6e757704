// Python bindings. Strings cross the boundary as bytes; reports come back as
// plain dicts built from the same JSON documents the command-line tool prints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include "lzdp/analysis.hpp"
#include "lzdp/bounds.hpp"
#include "lzdp/container.hpp"
#include "lzdp/dp.hpp"
#include "lzdp/lz77.hpp"
#include "lzdp/quinstr.hpp"
#include "lzdp/report.hpp"

namespace py = pybind11;
using namespace lzdp;

namespace {

Alphabet make_alphabet(const std::optional<std::string>& labels) {
  return labels ? Alphabet::from_labels(*labels) : Alphabet::bytes();
}

CompressionConfig make_config(std::optional<std::uint64_t> window, bool self_referencing) {
  CompressionConfig c{window, self_referencing ? Variant::SelfReferencing : Variant::NonOverlapping};
  c.validate();
  return c;
}

py::bytes to_bytes(const BitString& bits) {
  const auto& b = bits.bytes();
  return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

BitString from_bytes(const std::string& data) {
  return BitString::from_bytes(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

py::object to_python(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

WidthMode parse_width(const std::string& s) {
  if (s == "injective") return WidthMode::Injective;
  if (s == "paper") return WidthMode::Paper;
  throw DomainError("width must be \"injective\" or \"paper\"");
}

std::uint64_t clamp_window(const CompressionConfig& c, std::uint64_t n) {
  return std::min<std::uint64_t>(c.effective_window(n), n);
}

}  // namespace

PYBIND11_MODULE(_lzdp, m) {
  m.doc() = "LZ77 compression with differentially private length padding";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", error.ptr());

  m.def(
      "blocks",
      [](const std::string& data, std::optional<std::uint64_t> window, bool self_referencing,
         std::optional<std::string> alphabet) {
        const CompressedFile f =
            compress(Text::from_labels(make_alphabet(alphabet), data), make_config(window, self_referencing));
        py::list out;
        for (const Block& b : f.blocks) out.append(py::make_tuple(b.q, b.len, f.alphabet.label(b.lit)));
        return out;
      },
      py::arg("data"), py::arg("window") = py::none(), py::arg("self_referencing") = false,
      py::arg("alphabet") = py::none(),
      "Greedy parse of data as a list of (q, len, literal byte) tuples.");

  m.def(
      "compress",
      [](const std::string& data, std::optional<std::uint64_t> window, bool self_referencing,
         std::optional<std::string> alphabet) {
        return to_bytes(serialize_blocks(
            compress(Text::from_labels(make_alphabet(alphabet), data), make_config(window, self_referencing))));
      },
      py::arg("data"), py::arg("window") = py::none(), py::arg("self_referencing") = false,
      py::arg("alphabet") = py::none());

  m.def(
      "payload_bits",
      [](const std::string& data, std::optional<std::uint64_t> window, bool self_referencing,
         std::optional<std::string> alphabet) {
        return bit_length(
            compress(Text::from_labels(make_alphabet(alphabet), data), make_config(window, self_referencing)));
      },
      py::arg("data"), py::arg("window") = py::none(), py::arg("self_referencing") = false,
      py::arg("alphabet") = py::none());

  m.def(
      "decompress",
      [](const std::string& container) {
        const Text t = decompress(dp_deserialize(from_bytes(container)));
        return py::bytes(t.to_labels());
      },
      py::arg("container"), "Decode a plain or padded container.");

  m.def(
      "dp_compress",
      [](const std::string& data, double epsilon, double delta, std::optional<std::uint64_t> gs_bits,
         std::optional<std::uint64_t> seed, std::optional<std::uint64_t> window, bool self_referencing,
         std::optional<std::string> alphabet) {
        const Text text = Text::from_labels(make_alphabet(alphabet), data);
        const CompressionConfig config = make_config(window, self_referencing);
        const std::uint64_t n = std::max<std::uint64_t>(text.size(), 1);
        DPParams params;
        params.epsilon = epsilon;
        params.delta = delta;
        params.gs_bits =
            gs_bits ? *gs_bits : gs_upper_bound(n, clamp_window(config, n), text.alphabet().size(), config.variant);
        params.seed = seed ? *seed : std::random_device{}();
        params.validate();
        Rng rng(params.seed);
        return to_bytes(dp_serialize(compress(text, config), params, rng));
      },
      py::arg("data"), py::arg("epsilon") = 1.0, py::arg("delta") = 1e-6, py::arg("gs_bits") = py::none(),
      py::arg("seed") = py::none(), py::arg("window") = py::none(), py::arg("self_referencing") = false,
      py::arg("alphabet") = py::none(),
      "Compress and pad the payload by a noisy length. gs_bits defaults to the sensitivity bound.");

  m.def(
      "gs_upper_bound",
      [](std::uint64_t n, std::optional<std::uint64_t> window, std::size_t k, bool self_referencing) {
        return gs_upper_bound(n, window.value_or(n), k,
                              self_referencing ? Variant::SelfReferencing : Variant::NonOverlapping);
      },
      py::arg("n"), py::arg("window") = py::none(), py::arg("k") = 256, py::arg("self_referencing") = false);

  m.def(
      "bounds", [](std::uint64_t n, std::uint64_t window, std::size_t k) { return to_python(bounds_json(n, window, k)); },
      py::arg("n"), py::arg("window"), py::arg("k"));

  m.def(
      "analyze",
      [](const std::string& w, const std::string& w_prime, std::optional<std::uint64_t> window, bool self_referencing,
         std::optional<std::string> alphabet, bool orient) {
        const Alphabet a = make_alphabet(alphabet);
        const CompressionConfig config = make_config(window, self_referencing);
        const Text x = Text::from_labels(a, w), y = Text::from_labels(a, w_prime);
        const PairAnalysis pa = orient ? classify_pair_oriented(x, y, config) : classify_pair(x, y, config);
        return to_python(analysis_json(pa, check_counting_identities(pa)));
      },
      py::arg("w"), py::arg("w_prime"), py::arg("window") = py::none(), py::arg("self_referencing") = false,
      py::arg("alphabet") = py::none(), py::arg("orient") = false,
      "Block classification of a neighbouring pair with the counting identity checks.");

  m.def(
      "local_sensitivity",
      [](const std::string& data, std::optional<std::uint64_t> window, bool self_referencing,
         std::optional<std::string> alphabet) {
        return local_sensitivity(Text::from_labels(make_alphabet(alphabet), data),
                                 make_config(window, self_referencing));
      },
      py::arg("data"), py::arg("window") = py::none(), py::arg("self_referencing") = false,
      py::arg("alphabet") = py::none());

  m.def(
      "global_sensitivity",
      [](std::uint64_t n, std::size_t k, std::optional<std::uint64_t> window, bool self_referencing,
         std::uint64_t budget, bool prune) {
        const GlobalSensitivity g =
            global_sensitivity_exhaustive(n, k, make_config(window, self_referencing), budget, prune);
        py::dict d;
        d["bits"] = g.bits;
        d["block_gap"] = g.block_gap;
        d["strings"] = g.strings;
        d["compressor_calls"] = g.compressor_calls;
        d["witness"] = g.witness;
        return d;
      },
      py::arg("n"), py::arg("k"), py::arg("window") = py::none(), py::arg("self_referencing") = false,
      py::arg("budget") = kDefaultSensitivityBudget, py::arg("prune") = true);

  m.def(
      "quinstr",
      [](std::uint64_t m, const std::string& width) { return to_python(quinstr_json(quinstr(m, parse_width(width)))); },
      py::arg("m"), py::arg("width") = "injective");

  m.def(
      "verify_lower_bound",
      [](std::uint64_t m, const std::string& width) {
        return to_python(lower_bound_json(verify_lower_bound(m, parse_width(width))));
      },
      py::arg("m"), py::arg("width") = "injective");
}
