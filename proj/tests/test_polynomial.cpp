#include "doctest.h"
#include "waring/polynomial.hpp"

#include <cstdint>
#include <utility>
#include <vector>

using waring::RatPoly;
using waring::Rational;

TEST_CASE("polynomial: degree and trimming") {
  CHECK(RatPoly().is_zero());
  CHECK(RatPoly().degree() == -1);
  CHECK(RatPoly({Rational(0), Rational(0)}).is_zero());
  RatPoly p({Rational(1), Rational(2), Rational(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == Rational(1));
  CHECK(p.coeff(1) == Rational(2));
  CHECK(p.coeff(5) == Rational(0));
  CHECK(RatPoly::constant(Rational(7)).degree() == 0);
  CHECK(RatPoly::monomial(Rational(3), 4).degree() == 4);
  CHECK(RatPoly::monomial(Rational(0), 4).is_zero());
}

TEST_CASE("polynomial: evaluation") {
  // 2 - 3t + t^2 at t = 5: 2 - 15 + 25 = 12.
  RatPoly p({Rational(2), Rational(-3), Rational(1)});
  CHECK(p.eval(Rational(5)) == Rational(12));
  CHECK(p.eval(Rational(1)) == Rational(0));
  CHECK(p.eval(Rational(1, 2)) == Rational(3, 4));
  CHECK(RatPoly().eval(Rational(9)) == Rational(0));
}

TEST_CASE("polynomial: ring operations") {
  RatPoly a({Rational(1), Rational(1)});        // 1 + t
  RatPoly b({Rational(-1), Rational(1)});       // -1 + t
  CHECK(a + b == RatPoly({Rational(0), Rational(2)}));
  CHECK(a - b == RatPoly({Rational(2)}));
  CHECK(a * b == RatPoly({Rational(-1), Rational(0), Rational(1)}));
  CHECK(a * Rational(3) == RatPoly({Rational(3), Rational(3)}));
  CHECK(-a == RatPoly({Rational(-1), Rational(-1)}));
  // Cancellation must re-trim.
  CHECK((a - a).is_zero());
  RatPoly t3 = RatPoly::monomial(Rational(1), 3);
  CHECK(((a * t3) - t3 * a).is_zero());
}

TEST_CASE("polynomial: max_abs_coeff") {
  CHECK(RatPoly().max_abs_coeff() == Rational(0));
  RatPoly p({Rational(-7, 2), Rational(3), Rational(1)});
  CHECK(p.max_abs_coeff() == Rational(7, 2));
}

TEST_CASE("polynomial: interpolation reproduces the sampled polynomial") {
  // t^3 - 2t + 5 through 5 nodes.
  RatPoly p({Rational(5), Rational(-2), Rational(0), Rational(1)});
  std::vector<std::pair<Rational, Rational>> pts;
  for (long t = -2; t <= 2; ++t)
    pts.emplace_back(Rational(t), p.eval(Rational(t)));
  CHECK(waring::interpolate(pts) == p);
}

TEST_CASE("polynomial: interpolation degenerate cases") {
  CHECK(waring::interpolate({{Rational(4), Rational(9)}}) ==
        RatPoly::constant(Rational(9)));
  // All-zero samples give the zero polynomial, not a zero-padded one.
  std::vector<std::pair<Rational, Rational>> z;
  for (long t = 0; t < 4; ++t) z.emplace_back(Rational(t), Rational(0));
  CHECK(waring::interpolate(z).is_zero());
  CHECK_THROWS_AS(
      waring::interpolate({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}),
      waring::error);
}

TEST_CASE("polynomial: interpolation at rational nodes") {
  std::vector<std::pair<Rational, Rational>> pts{
      {Rational(1, 2), Rational(3)},
      {Rational(1, 3), Rational(-1)},
      {Rational(2), Rational(0)},
  };
  RatPoly p = waring::interpolate(pts);
  CHECK(p.degree() <= 2);
  for (const auto& [t, v] : pts) CHECK(p.eval(t) == v);
}

TEST_CASE("polynomial: interpolation round-trip on pseudo-random data") {
  std::uint64_t state = 0x5eed0004;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t deg = next() % 8;
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i <= deg; ++i)
      coeffs.emplace_back(static_cast<long>(next() % 41) - 20,
                          static_cast<long>(next() % 7) + 1);
    RatPoly p(std::move(coeffs));
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t t = 0; t <= deg + 2; ++t)  // two extra nodes
      pts.emplace_back(Rational(static_cast<long>(t)), p.eval(Rational(static_cast<long>(t))));
    CHECK(waring::interpolate(pts) == p);
  }
}
