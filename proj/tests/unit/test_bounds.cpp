#include <doctest.h>

#include <cmath>

#include "lzdp/bounds.hpp"

using namespace lzdp;

namespace {

// The bound formulas written with pow instead of cbrt.
double full_form(double n) {
  return std::pow(9.0, 1.0 / 3) / 2 * std::pow(n, 2.0 / 3) + std::pow(3.0, 1.0 / 3) / 2 * std::pow(n, 1.0 / 3) + 1;
}
double bounded_form(double w) {
  return std::pow(81.0, 1.0 / 3) / 2 * std::pow(w, 2.0 / 3) + std::pow(9.0, 1.0 / 3) / 2 * std::pow(w, 1.0 / 3) + 3;
}

}  // namespace

TEST_CASE("full-window bound at n = 1000") {
  CHECK(type2_block_bound(1000, 1000) == doctest::Approx(1.040042 * 100 + 0.721125 * 10 + 1).epsilon(1e-6));
  CHECK(gs_upper_bound_real(1000, 1000, 256, Variant::NonOverlapping) == doctest::Approx(3142.04).epsilon(1e-5));
  CHECK(gs_upper_bound(1000, 1000, 256, Variant::NonOverlapping) == 3143);
  // two extra blocks of 28 bits
  CHECK(gs_upper_bound(1000, 1000, 256, Variant::SelfReferencing) == 3199);
}

TEST_CASE("bounded-window bound at n = 1000, W = 64") {
  const double expect = (std::pow(81.0, 1.0 / 3) / 2 * 16 + std::pow(9.0, 1.0 / 3) / 2 * 4 + 3) * 28;
  CHECK(gs_upper_bound_real(1000, 64, 256, Variant::NonOverlapping) == doctest::Approx(expect));
  CHECK(gs_upper_bound(1000, 64, 256, Variant::NonOverlapping) == 1170);
}

TEST_CASE("bounds agree with the formulas over a grid") {
  for (std::uint64_t n = 1; n <= 3000; n += 37) {
    CHECK(type2_block_bound(n, n) == doctest::Approx(full_form(static_cast<double>(n))));
    CHECK(full_window_type2_bound(n) == doctest::Approx(full_form(static_cast<double>(n))));
    for (std::uint64_t w = 1; w < n; w += 53) {
      CHECK(type2_block_bound(n, w) == doctest::Approx(bounded_form(static_cast<double>(w))));
      CHECK(block_gap_bound(n, w, Variant::SelfReferencing) ==
            doctest::Approx(bounded_form(static_cast<double>(w)) + 2));
    }
  }
}

TEST_CASE("bound domain") {
  CHECK_THROWS_AS(type2_block_bound(0, 0), DomainError);
  CHECK_THROWS_AS(type2_block_bound(10, 0), DomainError);
  CHECK_THROWS_AS(type2_block_bound(10, 11), DomainError);
  CHECK_THROWS_AS(gs_upper_bound(10, 10, 0, Variant::NonOverlapping), DomainError);
}
