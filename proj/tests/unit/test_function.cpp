#include <gtest/gtest.h>

#include "kummer/function.hpp"
#include "test_util.hpp"

using kummer::CurveFunction;
using kummer::Place;
using testutil::curve;

TEST(Function, EvaluateCoordinates) {
  const auto c = curve("h3");
  const auto F = c.field();
  const auto y = CurveFunction::y_power(c, 1);
  const auto x = CurveFunction::term(c, 0, {0, 1}, {1});
  for (const auto& p : kummer::split_places(c, kummer::split_x_values(c))) {
    EXPECT_EQ(kummer::evaluate(c, y, p), p.y);
    EXPECT_EQ(kummer::evaluate(c, x, p), p.x);
    const auto xy = x.multiply(c, y).add(c, CurveFunction::constant(c, 2));
    EXPECT_EQ(kummer::evaluate(c, xy, p), F.add(F.mul(p.x, p.y), 2));
  }
}

TEST(Function, YPowerReducesModuloCurve) {
  const auto c = curve("h3");
  const auto ym = CurveFunction::y_power(c, c.m());
  ASSERT_EQ(ym.terms().size(), 4u);
  EXPECT_EQ(ym.terms()[0].num, c.f());
  for (int i = 1; i < 4; ++i) EXPECT_TRUE(ym.terms()[static_cast<std::size_t>(i)].is_zero());
  EXPECT_TRUE(CurveFunction(4).is_zero());
  EXPECT_TRUE(ym.scale(c, 0).is_zero());
}

TEST(Function, ValuationsAtRamifiedPlaces) {
  const auto c = curve("h3");
  const auto y = CurveFunction::y_power(c, 1);
  const auto x = CurveFunction::term(c, 0, {0, 1}, {1});
  EXPECT_EQ(kummer::valuation(c, y, Place::infinity()), -3);
  EXPECT_EQ(kummer::valuation(c, x, Place::infinity()), -4);
  EXPECT_EQ(kummer::valuation(c, y, Place::ramified(0)), 1);
  EXPECT_EQ(kummer::valuation(c, x, Place::ramified(0)), 4);
  const auto inv_x = CurveFunction::term(c, 2, {1}, {0, 1});  // y^2 / x
  EXPECT_EQ(kummer::valuation(c, inv_x, Place::ramified(0)), -2);
  EXPECT_EQ(kummer::valuation(c, inv_x, Place::infinity()), -2);
  EXPECT_EQ(kummer::valuation(c, CurveFunction(4), Place::infinity()), INT_MAX);
}

TEST(Function, PoleAtAffinePlaceThrows) {
  const auto c = curve("h3");
  const auto p = kummer::split_places(c, kummer::split_x_values(c)).front();
  const auto fn = CurveFunction::term(c, 0, {1}, kummer::poly::x_minus(c.field(), p.x));
  EXPECT_EQ(testutil::error_code([&] { kummer::evaluate(c, fn, p); }), kummer::Errc::PoleAtPlace);
}
