// lzdp: LZ77 compression with differentially private length padding.
//
// Reports go to stdout as JSON, diagnostics to stderr. Exit status:
//   0 ok, 1 a reported check failed, 2 bad arguments, 3 budget refusal,
//   4 unreadable or corrupt input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lzdp/analysis.hpp"
#include "lzdp/bounds.hpp"
#include "lzdp/container.hpp"
#include "lzdp/dp.hpp"
#include "lzdp/lz77.hpp"
#include "lzdp/quinstr.hpp"
#include "lzdp/report.hpp"

using nlohmann::json;
using namespace lzdp;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size())))
    throw InputError("cannot write " + path);
}

void write_bits(const std::string& path, const BitString& bits) {
  const auto& bytes = bits.bytes();
  write_file(path, std::string(bytes.begin(), bytes.end()));
}

BitString read_bits(const std::string& path) {
  const std::string data = read_file(path);
  return BitString::from_bytes(
      std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

Alphabet parse_alphabet(const std::string& spec) {
  return spec == "bytes" ? Alphabet::bytes() : Alphabet::from_labels(spec);
}

int emit(const json& doc) {
  std::cout << doc.dump(2) << '\n';
  return all_pass(doc) ? 0 : kExitFailed;
}

// Flags shared by every command that runs the compressor.
struct CompressFlags {
  std::optional<std::uint64_t> window;
  bool self_ref = false;
  std::string alphabet = "bytes";

  void attach(CLI::App* cmd) {
    cmd->add_option("--window", window, "Window size W (default: unbounded)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--self-ref", self_ref, "Allow copies to overlap the current position");
    cmd->add_option("--alphabet", alphabet, "\"bytes\" or the symbol list, e.g. abcd");
  }
  CompressionConfig config() const {
    return {window, self_ref ? Variant::SelfReferencing : Variant::NonOverlapping};
  }
};

struct DPFlags {
  double epsilon = 1.0;
  double delta = 1e-6;
  std::optional<std::uint64_t> gs;
  std::optional<std::uint64_t> seed;
  bool reveal_pad = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--epsilon", epsilon, "Privacy parameter epsilon > 0")->capture_default_str();
    cmd->add_option("--delta", delta, "Privacy parameter delta in (0, 1)")->capture_default_str();
    cmd->add_option("--gs", gs, "Global sensitivity in bits (default: the closed-form bound)");
    cmd->add_option("--seed", seed, "Noise seed (default: $LZDP_SEED, else random)");
    cmd->add_flag("--reveal-pad", reveal_pad, "Print the drawn pad length (needs LZDP_TESTING=1)");
  }
  std::uint64_t resolve_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("LZDP_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw DomainError("LZDP_SEED is not an unsigned integer");
      }
    }
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ rd();
  }
};

std::uint64_t bound_window(const CompressionConfig& config, std::uint64_t n) {
  return std::min<std::uint64_t>(config.effective_window(n), n);
}

int cmd_compress(const std::string& in, const std::string& out, const CompressFlags& flags) {
  const Text text = Text::from_labels(parse_alphabet(flags.alphabet), read_file(in));
  const CompressedFile file = compress(text, flags.config());
  write_bits(out, serialize_blocks(file));
  const std::uint64_t payload = bit_length(file);
  json ratio = "empty";
  if (text.size() > 0) ratio = static_cast<double>(payload) / (8.0 * static_cast<double>(text.size()));
  return emit({{"n", file.n}, {"t", file.t()}, {"payload_bits", payload}, {"ratio", ratio}});
}

int cmd_decompress(const std::string& in, const std::string& out) {
  const CompressedFile file = dp_deserialize(read_bits(in));
  write_file(out, decompress(file).to_labels());
  return emit({{"n", file.n}, {"t", file.t()}});
}

int cmd_dp_compress(const std::string& in, const std::string& out, const CompressFlags& flags,
                    const DPFlags& dp) {
  const Text text = Text::from_labels(parse_alphabet(flags.alphabet), read_file(in));
  const CompressionConfig config = flags.config();
  const std::uint64_t n = std::max<std::uint64_t>(text.size(), 1);
  DPParams params;
  params.epsilon = dp.epsilon;
  params.delta = dp.delta;
  params.gs_bits = dp.gs ? *dp.gs
                         : gs_upper_bound(n, bound_window(config, n), text.alphabet().size(),
                                          config.variant);
  params.seed = dp.resolve_seed();
  params.validate();
  if (dp.reveal_pad && std::getenv("LZDP_TESTING") == nullptr)
    throw DomainError("--reveal-pad is only available with LZDP_TESTING=1");

  Rng rng(params.seed);
  const CompressedFile file = compress(text, config);
  std::uint64_t p = 0;
  const BitString bits = dp_serialize(file, params, rng, &p);
  write_bits(out, bits);
  json doc = {{"payload_bits", bit_length(file)},
              {"total_bits", bits.size()},
              {"k", params.shift()},
              {"gs_bits", params.gs_bits}};
  if (dp.reveal_pad) doc["p"] = p;
  return emit(doc);
}

int cmd_analyze(const std::string& a, const std::string& b, const CompressFlags& flags,
                bool orient) {
  const Alphabet alphabet = parse_alphabet(flags.alphabet);
  const Text w = Text::from_labels(alphabet, read_file(a));
  const Text w_prime = Text::from_labels(alphabet, read_file(b));
  const PairAnalysis pa = orient ? classify_pair_oriented(w, w_prime, flags.config())
                                 : classify_pair(w, w_prime, flags.config());
  return emit(analysis_json(pa, check_counting_identities(pa)));
}

struct SensitivityFlags {
  std::string mode = "local";
  std::uint64_t n = 0;
  std::size_t k = 2;
  std::string input;
  std::uint64_t budget = kDefaultSensitivityBudget;
  bool no_prune = false;
};

int cmd_sensitivity(const SensitivityFlags& s, const CompressFlags& flags) {
  const CompressionConfig config = flags.config();
  json doc;
  std::uint64_t n = 0, bits = 0, gap = 0;
  std::size_t k = 0;
  if (s.mode == "local") {
    if (s.input.empty()) throw DomainError("local mode needs --input");
    const Text w = Text::from_labels(parse_alphabet(flags.alphabet), read_file(s.input));
    n = w.size();
    k = w.alphabet().size();
    gap = local_block_gap(w, config);
    bits = gap * block_bits(n, k);
  } else {
    if (s.n == 0) throw DomainError("global mode needs --n >= 1");
    n = s.n;
    k = s.k;
    GlobalSensitivity gs;
    try {
      gs = global_sensitivity_exhaustive(n, k, config, s.budget, !s.no_prune);
    } catch (const BudgetExceededError& e) {
      std::cout << json{{"error", "budget_exceeded"},
                        {"mode", "global"},
                        {"n", n},
                        {"k", k},
                        {"required_calls", e.required()},
                        {"budget", e.budget()}}
                       .dump(2)
                << '\n';
      std::cerr << "lzdp: " << e.what() << '\n';
      return kExitBudget;
    }
    gap = gs.block_gap;
    bits = gs.bits;
    std::string witness;
    for (auto c : gs.witness) witness += static_cast<char>('0' + c);
    doc["strings"] = gs.strings;
    doc["compressor_calls"] = gs.compressor_calls;
    doc["witness"] = witness;
  }
  const std::uint64_t bound =
      gs_upper_bound(n, bound_window(config, n), k, config.variant);
  doc["mode"] = s.mode;
  doc["n"] = n;
  doc["k"] = k;
  doc["W"] = config.effective_window(n);
  doc["variant"] = std::string(to_string(config.variant));
  doc["block_gap"] = gap;
  doc["bits"] = bits;
  doc["gs_upper_bound"] = bound;
  doc["pass"] = bits <= bound;
  return emit(doc);
}

int cmd_quinstr(std::uint64_t m, const std::string& width, bool verify, const std::string& emit_w,
                const std::string& emit_w_prime) {
  const WidthMode mode = width == "paper" ? WidthMode::Paper : WidthMode::Injective;
  const QuinStrOutput q = quinstr(m, mode);
  if (!emit_w.empty()) write_file(emit_w, q.w.to_labels());
  if (!emit_w_prime.empty()) write_file(emit_w_prime, q.w_prime.to_labels());
  if (!verify) return emit(quinstr_json(q));
  if (mode != WidthMode::Injective)
    throw DomainError("--verify needs --width injective: paper-width codes are not distinct");
  return emit(lower_bound_json(verify_lower_bound(m, mode)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LZ77 compression with differentially private length padding"};
  app.require_subcommand(1);

  std::string in, out, other;
  CompressFlags cflags;
  DPFlags dflags;

  auto* compress_cmd = app.add_subcommand("compress", "Compress a file into an LZDP container");
  compress_cmd->add_option("input", in)->required();
  compress_cmd->add_option("output", out)->required();
  cflags.attach(compress_cmd);

  auto* decompress_cmd = app.add_subcommand("decompress", "Restore a file from a container");
  decompress_cmd->add_option("input", in)->required();
  decompress_cmd->add_option("output", out)->required();

  auto* dpc = app.add_subcommand("dp-compress", "Compress and pad the length");
  dpc->add_option("input", in)->required();
  dpc->add_option("output", out)->required();
  cflags.attach(dpc);
  dflags.attach(dpc);

  auto* dpd = app.add_subcommand("dp-decompress", "Restore a file from a padded container");
  dpd->add_option("input", in)->required();
  dpd->add_option("output", out)->required();

  bool orient = false;
  auto* analyze = app.add_subcommand("analyze", "Classify the blocks of two neighbouring files");
  analyze->add_option("w", in)->required();
  analyze->add_option("w_prime", other)->required();
  analyze->add_flag("--orient", orient, "Swap the pair if needed so that t <= t'");
  cflags.attach(analyze);

  SensitivityFlags sflags;
  auto* sens = app.add_subcommand("sensitivity", "Local or exhaustive global sensitivity");
  sens->add_option("--mode", sflags.mode)->check(CLI::IsMember({"local", "global"}));
  sens->add_option("--n", sflags.n, "String length (global mode)");
  sens->add_option("--k", sflags.k, "Alphabet size (global mode)")->check(CLI::Range(1, 256));
  sens->add_option("--input", sflags.input, "Input file (local mode)");
  sens->add_option("--budget", sflags.budget, "Maximum compressor calls (global mode)");
  sens->add_flag("--no-prune", sflags.no_prune, "Visit every string, not one per relabelling");
  cflags.attach(sens);

  std::uint64_t m = 4;
  std::string width = "injective", emit_w, emit_w_prime;
  bool verify = false;
  auto* qs = app.add_subcommand("quinstr", "Build the quinary lower-bound pair");
  qs->add_option("--m", m)->check(CLI::Range(std::uint64_t{2}, std::uint64_t{4096}));
  qs->add_option("--width", width)->check(CLI::IsMember({"paper", "injective"}));
  qs->add_flag("--verify", verify, "Compress the pair and check the block counts");
  qs->add_option("--emit-w", emit_w, "Write w to this file");
  qs->add_option("--emit-w-prime", emit_w_prime, "Write w' to this file");

  std::uint64_t bn = 0, bk = 256;
  std::optional<std::uint64_t> bw;
  auto* bounds = app.add_subcommand("bounds", "Tabulate the global-sensitivity bounds");
  bounds->add_option("--n", bn)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--window", bw)->check(CLI::PositiveNumber);
  bounds->add_option("--k", bk)->check(CLI::Range(1, 256));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compress_cmd) return cmd_compress(in, out, cflags);
    if (*decompress_cmd || *dpd) return cmd_decompress(in, out);
    if (*dpc) return cmd_dp_compress(in, out, cflags, dflags);
    if (*analyze) return cmd_analyze(in, other, cflags, orient);
    if (*sens) return cmd_sensitivity(sflags, cflags);
    if (*qs) return cmd_quinstr(m, width, verify, emit_w, emit_w_prime);
    if (*bounds) return emit(bounds_json(bn, bw.value_or(bn), bk));
  } catch (const DomainError& e) {
    std::cerr << "lzdp: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "lzdp: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "lzdp: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
