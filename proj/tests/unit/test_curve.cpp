#include <gtest/gtest.h>

#include <random>

#include "kummer/curve.hpp"
#include "kummer/function.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using kummer::Errc;
using kummer::Field;
using kummer::KummerCurve;
using kummer::Place;
using testutil::curve;
using testutil::error_code;

TEST(Curve, CatalogGenera) {
  EXPECT_EQ(curve("h2").genus(), 1);
  EXPECT_EQ(curve("h3").genus(), 3);
  EXPECT_EQ(curve("z").genus(), 24);
  EXPECT_EQ(curve("gk2").genus(), 10);
  EXPECT_EQ(curve("w").genus(), 3);
  for (const auto& name : kummer::cli::builtin_curve_names()) {
    const auto c = curve(name);
    EXPECT_EQ(c.genus(), oracle::genus(c)) << name;
    EXPECT_EQ(c.genus_riemann_hurwitz(), c.genus()) << name;
  }
}

TEST(Curve, H3Structure) {
  const auto c = curve("h3");
  EXPECT_EQ(c.m(), 4);
  EXPECT_EQ(c.deg_f(), 3);
  EXPECT_EQ(c.num_roots(), 3);
  EXPECT_EQ(c.roots()[0].a, 0u);
  EXPECT_TRUE(c.infinity_ramified());
  EXPECT_EQ(c.lambda_infinity(), -3);
  EXPECT_EQ((std::vector<int>{c.beta(1), c.beta(2), c.beta(3)}), (std::vector<int>{2, 1, 0}));
  const auto tr = kummer::totally_ramified_places(c);
  ASSERT_EQ(tr.size(), 4u);
  EXPECT_EQ(tr[0], Place::infinity());
  EXPECT_EQ(tr[3], Place::ramified(2));
  EXPECT_EQ(c.root_index(c.roots()[2].a), 2);
  EXPECT_EQ(c.root_index(1), -1);
}

TEST(Curve, ZRootsAndSplitting) {
  const auto c = curve("z");
  ASSERT_EQ(c.num_roots(), 9);
  EXPECT_EQ(c.roots()[0].a, 0u);
  EXPECT_EQ(c.roots()[0].lambda, 5);
  for (int k = 1; k < 9; ++k) EXPECT_EQ(c.roots()[static_cast<std::size_t>(k)].lambda, 1);
  EXPECT_EQ(c.deg_f(), 13);
  EXPECT_EQ(kummer::split_x_values(c).size(), 288u);
}

TEST(Curve, RationalPlacesMatchBruteForce) {
  for (const auto& name : kummer::cli::builtin_curve_names()) {
    const auto c = curve(name);
    const auto rp = kummer::rational_places(c);
    EXPECT_EQ(rp.total(), oracle::count_rational_places(c)) << name;
  }
  EXPECT_EQ(kummer::rational_places(curve("z")).total(), 2026u);
  EXPECT_EQ(kummer::rational_places(curve("h3")).total(), 28u);
  EXPECT_FALSE(kummer::rational_places(curve("h3")).partial);
  EXPECT_TRUE(kummer::rational_places(curve("gk2")).partial);
}

TEST(Curve, RandomCurvesAgreeWithOracles) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto c = oracle::random_curve(rng);
    EXPECT_EQ(c.genus(), oracle::genus(c));
    EXPECT_EQ(kummer::rational_places(c).total(), oracle::count_rational_places(c));
  }
}

TEST(Curve, AffinePlacesLieOnCurve) {
  const auto c = curve("h3");
  const auto F = c.field();
  const auto rp = kummer::rational_places(c);
  std::size_t affine = 0;
  for (const auto& p : rp.places) {
    if (!p.is_affine()) continue;
    ++affine;
    EXPECT_EQ(F.pow(p.y, c.m()), c.f_at(p.x));
    EXPECT_NE(p.y, 0u);
  }
  EXPECT_EQ(affine, 24u);
  const auto xs = kummer::split_x_values(c);
  EXPECT_TRUE(std::is_sorted(xs.begin(), xs.end()));
  const auto D = kummer::split_places(c, xs);
  EXPECT_EQ(D.size(), 24u);
  EXPECT_EQ(D[0].x, xs[0]);
  EXPECT_LT(D[0].y, D[1].y);
}

TEST(Curve, PrincipalDivisors) {
  for (const auto& name : {"h2", "h3", "z", "w"}) {
    const auto c = curve(name);
    const auto dy = kummer::principal_divisor(c, kummer::YGenerator{});
    EXPECT_EQ(dy.degree(), 0) << name;
    EXPECT_EQ(dy.coeff(Place::infinity()), -c.deg_f());
    for (auto x0 : kummer::split_x_values(c)) {
      const auto dx = kummer::principal_divisor(c, kummer::XMinusGenerator{x0});
      EXPECT_EQ(dx.degree(), 0);
      EXPECT_EQ(dx.coeff(Place::infinity()), -c.m());
      break;
    }
    for (int k = 0; k < c.num_roots(); ++k) {
      const auto dx = kummer::principal_divisor(c, kummer::XMinusGenerator{c.roots()[static_cast<std::size_t>(k)].a});
      EXPECT_EQ(dx.degree(), 0);
    }
  }
  // Valuations of y at totally ramified places agree with the divisor.
  const auto c = curve("z");
  const auto dy = kummer::principal_divisor(c, kummer::YGenerator{});
  const auto y = kummer::CurveFunction::y_power(c, 1);
  for (const auto& p : kummer::totally_ramified_places(c)) EXPECT_EQ(kummer::valuation(c, y, p), dy.coeff(p));
}

TEST(Curve, GeneratorIds) {
  EXPECT_EQ(kummer::generator_id(kummer::YGenerator{}), "y");
  EXPECT_EQ(kummer::generator_id(kummer::XMinusGenerator{5}), "x-b:5");
  const auto g = kummer::parse_generator_id("x-b:17");
  ASSERT_TRUE(std::holds_alternative<kummer::XMinusGenerator>(g));
  EXPECT_EQ(std::get<kummer::XMinusGenerator>(g).b, 17u);
  EXPECT_EQ(error_code([] { kummer::parse_generator_id("z"); }), Errc::ParseError);
}

TEST(Curve, InfinityNotRamifiedIsUnsupported) {
  // y^3 = x^2 (x + 1) over GF(4): deg f = m, so infinity is not ramified.
  const auto F = Field::create(2, 2);
  const auto c = KummerCurve::create(F, 3, 1, {{0, 2}, {1, 1}});
  EXPECT_FALSE(c.infinity_ramified());
  EXPECT_EQ(error_code([&] { kummer::principal_divisor(c, kummer::YGenerator{}); }),
            Errc::UnsupportedPlaceStructure);
}

TEST(Curve, ConstructionErrors) {
  const auto F9 = Field::create(3, 2);
  EXPECT_EQ(error_code([&] { KummerCurve::create(F9, 3, 1, {{0, 1}}); }), Errc::CharDividesM);
  EXPECT_EQ(error_code([&] { KummerCurve::create(F9, 4, 1, {{0, 1}, {0, 1}}); }), Errc::DuplicateRoot);
  EXPECT_EQ(error_code([&] { KummerCurve::create(F9, 4, 1, {{0, 4}}); }), Errc::MultiplicityOutOfRange);
  EXPECT_EQ(error_code([&] { KummerCurve::create(F9, 4, 1, {{0, 2}, {1, 2}}); }), Errc::NoTotallyRamifiedPlace);
  // x^2 + 1 is irreducible over GF(3).
  EXPECT_EQ(error_code([] { KummerCurve::from_polynomial(Field::create(3, 1), 2, {1, 0, 1}); }),
            Errc::PolynomialNotSplit);
  const auto c = curve("h3");
  EXPECT_EQ(error_code([&] { c.place("root:7"); }), Errc::InvalidPlace);
  EXPECT_EQ(error_code([&] { c.place("bundle:0"); }), Errc::InvalidPlace);
  EXPECT_EQ(error_code([&] { c.place("aff:1:1"); }), Errc::InvalidPlace);
}

TEST(Curve, BundlePlaces) {
  const auto c = curve("gk2");
  int bundles = 0;
  for (int k = 0; k < c.num_roots(); ++k) {
    if (c.root_ramified(k)) continue;
    ++bundles;
    const auto p = c.place_over_root(k);
    EXPECT_EQ(p.kind, Place::Kind::Bundle);
    EXPECT_EQ(p.degree, 3);
  }
  EXPECT_EQ(bundles, 2);
  EXPECT_EQ(kummer::totally_ramified_places(c).size(), 3u);
}
