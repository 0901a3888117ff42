#include "doctest.h"
#include "waring/params.hpp"

#include <string>
#include <vector>

using waring::BinaryForm;
using waring::Parity;
using waring::Rational;
using waring::SuitableParams;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::vector<Rational> qs(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* s : xs) out.push_back(Rational::parse(s));
  return out;
}

const char* const kP2 = "x^5+10x^4y+10x^3y^2+10x^2y^3+10xy^4+y^5";
const char* const kP1 = "x^5+10x^4y+10x^3y^2+10x^2y^3+5xy^4+y^5";

Rational bound_named(const waring::SelectionTrace& t, const std::string& name) {
  for (const auto& [n, v] : t.bounds)
    if (n == name) return v;
  FAIL("missing bound " << name);
  return Rational(0);
}

}  // namespace

TEST_CASE("params: quintic with a forced extra root") {
  SuitableParams sp = waring::wd_parameters_odd(waring::parse_poly(kP2));
  CHECK(sp.parity == Parity::odd);
  CHECK(sp.delta == 1);
  CHECK(sp.s == qs({"1", "25", "625"}));
  CHECK(sp.trace.escalations == 0);
  CHECK(sp.trace.m == Rational(12));
  CHECK(bound_named(sp.trace, "delta_d") == Rational(8));
  CHECK(bound_named(sp.trace, "delta_d1_0p") == Rational(8));
  CHECK(bound_named(sp.trace, "delta_d1_0m") == Rational(8));
  CHECK(bound_named(sp.trace, "delta_d1_1p") == Rational(4));
  CHECK(bound_named(sp.trace, "delta_d1_1m") == Rational(12));
}

TEST_CASE("params: quintic whose top restriction vanishes") {
  SuitableParams sp = waring::wd_parameters_odd(waring::parse_poly(kP1));
  CHECK(sp.delta == 0);
  CHECK(sp.s == qs({"1", "17", "0"}));
  CHECK(sp.trace.m == Rational(8));
  CHECK(sp.trace.escalations == 0);
  CHECK(sp.trace.bounds.size() == 1);
  CHECK(bound_named(sp.trace, "delta_d1") == Rational(8));
}

TEST_CASE("params: degenerate cubic") {
  SuitableParams sp = waring::wd_parameters_odd(waring::parse_poly("3x^2y+y^3"));
  CHECK(sp.delta == 0);
  CHECK(sp.s == qs({"5", "0"}));
  CHECK(sp.trace.m == Rational(2));
  CHECK(sp.trace.escalations == 0);
}

TEST_CASE("params: pure cube keeps the forced root at zero") {
  SuitableParams sp = waring::wd_parameters_odd(waring::parse_poly("x^3"));
  CHECK(sp.delta == 1);
  CHECK(sp.s == qs({"5", "0"}));
  CHECK(sp.trace.m == Rational(2));
}

TEST_CASE("params: even selection on small forms") {
  SuitableParams circle = waring::wd_parameters_even(waring::parse_poly("x^2+y^2"));
  CHECK(circle.parity == Parity::even);
  CHECK(circle.delta == 1);
  CHECK(circle.s == qs({"3", "-1/3"}));
  CHECK(circle.trace.m == Rational(1));
  CHECK(bound_named(circle.trace, "delta_d") == Rational(1));
  CHECK(bound_named(circle.trace, "delta_d1_0m") == Rational(1));

  SuitableParams ysq = waring::wd_parameters_even(waring::parse_poly("y^2"));
  CHECK(ysq.delta == 0);
  CHECK(ysq.s == qs({"3", "0"}));
  CHECK(ysq.trace.m == Rational(1));
}

TEST_CASE("params: a bound shortfall is caught and escalated") {
  // Top restriction vanishes and the next one is (2/25)T^3 - 2T, whose
  // largest coefficient magnitude (2) puts the first candidate at 5, a root.
  // The post-check must reject 5 and move to 11.
  SuitableParams sp =
      waring::wd_parameters_odd(waring::parse_poly("3/25x^2y+y^3"));
  CHECK(sp.delta == 0);
  CHECK(sp.s == qs({"11", "0"}));
  CHECK(sp.trace.escalations == 1);
}

TEST_CASE("params: parity and degree guards") {
  CHECK_THROWS_AS(waring::wd_parameters_odd(waring::parse_poly("x^2+y^2")),
                  waring::parity_error);
  CHECK_THROWS_AS(waring::wd_parameters_even(waring::parse_poly("x^3")),
                  waring::parity_error);
  CHECK_THROWS_AS(waring::wd_parameters_odd(waring::parse_poly("x+y")),
                  waring::dimension_error);
}

TEST_CASE("params: selection is deterministic") {
  BinaryForm p = waring::parse_poly(kP2);
  SuitableParams a = waring::wd_parameters_odd(p);
  SuitableParams b = waring::wd_parameters_odd(p);
  CHECK(a.s == b.s);
  CHECK(a.delta == b.delta);
  CHECK(a.trace.m == b.trace.m);
  CHECK(a.trace.bounds == b.trace.bounds);
  CHECK(a.trace.psi_checks == b.trace.psi_checks);
  CHECK(a.trace.escalations == b.trace.escalations);
}

TEST_CASE("suitable: accepts the algorithm outputs") {
  BinaryForm p2 = waring::parse_poly(kP2);
  CHECK(waring::is_suitable(p2, qs({"1", "25", "625"}), false));
  CHECK(waring::is_suitable(p2, qs({"1", "25", "625"}), true));
  BinaryForm p1 = waring::parse_poly(kP1);
  CHECK(waring::is_suitable(p1, qs({"1", "17", "0"}), false));
  CHECK(waring::is_suitable(p1, qs({"1", "17", "0"}), true));
}

TEST_CASE("suitable: rejects colliding or zero slots") {
  BinaryForm p2 = waring::parse_poly(kP2);
  auto rep = waring::is_suitable(p2, qs({"1", "1", "7"}), false);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.find("s1 = +-s2") != std::string::npos) found = true;
  CHECK(found);

  auto zero = waring::is_suitable(p2, qs({"0", "25", "625"}), false);
  CHECK_FALSE(zero.ok);
  CHECK(zero.violations[0] == "s1 = 0");
}

TEST_CASE("suitable: the final slot must be the forced root") {
  BinaryForm p2 = waring::parse_poly(kP2);
  auto rep = waring::is_suitable(p2, qs({"1", "25", "624"}), false);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations[0] == "final slot does not equal the forced root R");
  // When the top cofactor vanishes at the point, the slot is a placeholder.
  BinaryForm p1 = waring::parse_poly(kP1);
  auto ph = waring::is_suitable(p1, qs({"1", "17", "5"}), false);
  CHECK_FALSE(ph.ok);
  CHECK(ph.violations[0] ==
        "top cofactor vanishes at the point but final slot is nonzero");
}

TEST_CASE("suitable: strict flag separates the even origin case") {
  BinaryForm p = waring::parse_poly("240y^4+224xy^3+72x^2y^2+8x^3y+x^4");
  CHECK(waring::is_suitable(p, qs({"0", "2", "4"}), false));
  auto rep = waring::is_suitable(p, qs({"0", "2", "4"}), true);
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations[0] == "s* = 0");
  CHECK(waring::is_suitable(p, qs({"0", "1", "38/9"}), false));
}

TEST_CASE("suitable: arity is enforced") {
  BinaryForm p2 = waring::parse_poly(kP2);
  CHECK_THROWS_AS(waring::is_suitable(p2, qs({"1", "25"}), false),
                  waring::dimension_error);
}

TEST_CASE("in_G: worked quintic grid points") {
  BinaryForm p = waring::parse_poly(
      "5226y^5+4970xy^4+1860x^2y^3+340x^3y^2+30x^4y+x^5");
  CHECK(waring::in_G(p, qs({"1", "2"})));
  CHECK(waring::in_G(p, qs({"3", "4"})));

  auto collide = waring::in_G(p, qs({"1", "1"}));
  CHECK_FALSE(collide.ok);
  bool d_hit = false;
  for (const auto& v : collide.violations)
    if (v == "s1 = +-s2 (in D)") d_hit = true;
  CHECK(d_hit);

  auto zero = waring::in_G(p, qs({"0", "2"}));
  CHECK_FALSE(zero.ok);
  bool a_hit = false;
  for (const auto& v : zero.violations)
    if (v == "s1 = 0 (in A)") a_hit = true;
  CHECK(a_hit);
}

TEST_CASE("in_G: even quartic grid points") {
  BinaryForm p = waring::parse_poly("240y^4+224xy^3+72x^2y^2+8x^3y+x^4");
  CHECK(waring::in_G(p, qs({"0", "1"})));
  CHECK(waring::in_G(p, qs({"0", "2"})));
  auto bad = waring::in_G(p, qs({"3", "3"}));
  CHECK_FALSE(bad.ok);
  bool d_hit = false;
  for (const auto& v : bad.violations)
    if (v == "s = +-s1 (in D)") d_hit = true;
  CHECK(d_hit);
}

TEST_CASE("in_G: outside Omega when the top cofactor dies") {
  // The top restriction of 3x^2y + y^3 is identically zero, so no point
  // is ever inside Omega.
  BinaryForm p = waring::parse_poly("3x^2y+y^3");
  auto rep = waring::in_G(p, qs({"1"}));
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations[0] == "Delta_d = 0 (outside Omega)");
  CHECK_THROWS_AS(waring::in_G(p, qs({"1", "2"})), waring::dimension_error);
}

TEST_CASE("in_G: holds at the point the algorithm picked") {
  for (const char* text : {kP2, "x^2+y^2", "x^3",
                           "x^6 - 2x^3y^3 + 5xy^5 - y^6"}) {
    CAPTURE(text);
    BinaryForm p = waring::parse_poly(text);
    SuitableParams sp = p.degree() % 2 ? waring::wd_parameters_odd(p)
                                       : waring::wd_parameters_even(p);
    if (sp.delta != 1) continue;
    std::vector<Rational> point(sp.s.begin(), sp.s.end() - 1);
    CHECK(waring::in_G(p, point));
  }
}
