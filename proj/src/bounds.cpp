#include "lzdp/bounds.hpp"

#include <cmath>

namespace lzdp {
namespace {

void check_domain(std::uint64_t n, std::uint64_t window) {
  if (n == 0) throw DomainError("bounds need n >= 1");
  if (window == 0) throw DomainError("bounds need W >= 1");
  if (window > n) throw DomainError("window larger than the text length");
}

}  // namespace

double full_window_type2_bound(std::uint64_t n) {
  if (n == 0) throw DomainError("bounds need n >= 1");
  const double x = std::cbrt(static_cast<double>(n));
  return std::cbrt(9.0) / 2.0 * x * x + std::cbrt(3.0) / 2.0 * x + 1.0;
}

double bounded_window_type2_bound(std::uint64_t window) {
  if (window == 0) throw DomainError("bounds need W >= 1");
  const double y = std::cbrt(static_cast<double>(window));
  return std::cbrt(81.0) / 2.0 * y * y + std::cbrt(9.0) / 2.0 * y + 3.0;
}

double type2_block_bound(std::uint64_t n, std::uint64_t window) {
  check_domain(n, window);
  return window == n ? full_window_type2_bound(n) : bounded_window_type2_bound(window);
}

double block_gap_bound(std::uint64_t n, std::uint64_t window, Variant variant) {
  const double t2 = type2_block_bound(n, window);
  return variant == Variant::SelfReferencing ? t2 + 2.0 : t2;
}

double gs_upper_bound_real(std::uint64_t n, std::uint64_t window, std::size_t alphabet_size,
                           Variant variant) {
  if (alphabet_size == 0) throw DomainError("alphabet size must be at least 1");
  return block_gap_bound(n, window, variant) * static_cast<double>(block_bits(n, alphabet_size));
}

std::uint64_t gs_upper_bound(std::uint64_t n, std::uint64_t window, std::size_t alphabet_size,
                             Variant variant) {
  return static_cast<std::uint64_t>(std::ceil(gs_upper_bound_real(n, window, alphabet_size, variant)));
}

}  // namespace lzdp
