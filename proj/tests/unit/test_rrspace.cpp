#include <gtest/gtest.h>

#include <random>

#include "kummer/rrspace.hpp"
#include "kummer/semigroup.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using kummer::Divisor;
using kummer::Place;
using testutil::curve;
using testutil::error_code;

TEST(RrSpace, RestrictionFloors) {
  const auto c = curve("h3");
  const Divisor D{{Place::infinity(), 7}, {Place::ramified(1), -2}};
  const auto A = kummer::restrict_to_xline(c, D, 1);
  EXPECT_EQ(A.at_root, (std::vector<long>{0, -1, 0}));  // floor((0+1)/4), floor((-2+1)/4), ...
  EXPECT_EQ(A.at_infinity, 1);                           // floor((7-3)/4)
  EXPECT_EQ(error_code([&] { kummer::restrict_to_xline(c, Divisor{{Place::affine(1, 1), 1}}, 0); }),
            kummer::Errc::UnsupportedSupport);
}

TEST(RrSpace, BasisFunctionsBelongToSpace) {
  std::mt19937_64 rng(23);
  for (const auto& name : {"h3", "w", "gk2"}) {
    const auto c = curve(name);
    const auto tr = kummer::totally_ramified_places(c);
    for (int t = 0; t < 25; ++t) {
      Divisor D;
      for (const auto& p : tr) D.add(p, static_cast<int>(rng() % 12) - 3);
      const auto basis = kummer::rr_basis(c, D);
      ASSERT_EQ(static_cast<long>(basis.size()), oracle::ell(c, D)) << name;
      for (const auto& fn : basis)
        for (const auto& p : tr) EXPECT_GE(kummer::valuation(c, fn, p), -D.coeff(p));
      // Independence: evaluations at the split places have full rank when
      // deg D is below the number of those places.
      const auto places = kummer::split_places(c, kummer::split_x_values(c));
      if (D.degree() < static_cast<long>(places.size()) && !basis.empty()) {
        const auto M = kummer::evaluation_matrix(c, D, places);
        EXPECT_EQ(oracle::rank(M), basis.size());
      }
    }
  }
}

TEST(RrSpace, EvaluationMatchesPointwise) {
  const auto c = curve("h3");
  const Divisor D{{Place::infinity(), 9}, {Place::ramified(2), 2}};
  const auto places = kummer::split_places(c, kummer::split_x_values(c));
  const auto M = kummer::evaluation_matrix(c, D, places);
  const auto basis = kummer::rr_basis(c, D);
  ASSERT_EQ(M.rows(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t j = 0; j < places.size(); ++j) EXPECT_EQ(M.at(r, j), kummer::evaluate(c, basis[r], places[j]));
}

TEST(RrSpace, KernelAndAffineMinusOne) {
  const auto c = curve("h3");
  const auto places = kummer::split_places(c, kummer::split_x_values(c));
  Divisor D{{Place::infinity(), 8}};
  const long full = kummer::dim_oracle(c, D);
  D.add(places[0], -1);
  EXPECT_EQ(kummer::dim_general(c, D), full - 1);
  D.add(places[5], -1);
  EXPECT_EQ(kummer::dim_general(c, D), full - 2);
  const auto kb = kummer::kernel_basis(c, kummer::rr_basis(c, Divisor{{Place::infinity(), 8}}), {places[0], places[5]});
  EXPECT_EQ(static_cast<long>(kb.size()), full - 2);
  for (const auto& fn : kb) {
    EXPECT_EQ(kummer::evaluate(c, fn, places[0]), 0u);
    EXPECT_EQ(kummer::evaluate(c, fn, places[5]), 0u);
  }
  const auto [rest, affine] = kummer::split_affine(D);
  EXPECT_EQ(rest, (Divisor{{Place::infinity(), 8}}));
  EXPECT_EQ(affine.size(), 2u);
  EXPECT_EQ(error_code([&] { kummer::split_affine(Divisor{{places[0], 1}}); }), kummer::Errc::UnsupportedSupport);
}

TEST(RrSpace, StrataCoverBundles) {
  const auto c = curve("gk2");
  int k = 0;
  while (c.root_ramified(k)) ++k;
  const Divisor D{{Place::infinity(), 13}, {c.place_over_root(k), 2}};
  long total = 0;
  for (const auto& s : kummer::rr_strata(c, D)) total += s.size();
  EXPECT_EQ(total, kummer::dim_oracle(c, D));
  // The bundle has degree 3, so D has degree 19 > 2g - 2.
  EXPECT_EQ(D.degree(), 19);
  EXPECT_EQ(kummer::dim_oracle(c, D), D.degree() + 1 - c.genus());
}
