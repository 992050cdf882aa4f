#include <gtest/gtest.h>

#include "kummer/lcp.hpp"
#include "kummer/serialize.hpp"
#include "test_util.hpp"

namespace ser = kummer::json;
using kummer::Divisor;
using kummer::Place;
using testutil::curve;

TEST(Serialize, CurveRoundTrip) {
  for (const auto& name : kummer::cli::builtin_curve_names()) {
    const auto c = curve(name);
    const auto j = ser::to_json(c);
    const auto back = ser::curve_from_json(ser::parse(j.dump()));
    EXPECT_EQ(ser::to_json(back), j) << name;
    EXPECT_EQ(back.genus(), c.genus());
  }
}

TEST(Serialize, CurveFromCoefficients) {
  const auto j = ser::parse(R"({"field": {"p": 3, "e": 2}, "m": 4, "f": [0, 1, 0, 1]})");
  EXPECT_EQ(ser::to_json(ser::curve_from_json(j)), ser::to_json(curve("h3")));
}

TEST(Serialize, DivisorAndCertificate) {
  const auto c = curve("h3");
  const auto P = kummer::split_places(c, kummer::split_x_values(c)).back();
  const Divisor D{{Place::infinity(), -1}, {Place::ramified(2), 4}, {P, -1}};
  EXPECT_EQ(ser::divisor_from_json(c, ser::to_json(D)), D);
  const kummer::Certificate cert{{kummer::YGenerator{}, 3}, {kummer::XMinusGenerator{4}, -1}};
  const auto back = ser::certificate_from_json(ser::to_json(cert));
  EXPECT_EQ(ser::to_json(back), ser::to_json(cert));
}

TEST(Serialize, ParseErrors) {
  EXPECT_EQ(testutil::error_code([] { ser::parse("{not json"); }), kummer::Errc::ParseError);
  EXPECT_THROW(ser::curve_from_json(ser::parse(R"({"m": 4})")), kummer::Error);
  EXPECT_THROW(ser::divisor_from_json(curve("h3"), ser::parse(R"({"coeffs": [{"place": "nope", "c": 1}]})")),
               kummer::Error);
}

TEST(Serialize, ResultHasExpectedKeys) {
  const auto c = curve("h3");
  const Divisor E{{Place::infinity(), -1}, {Place::ramified(1), 1}, {Place::ramified(2), 2}};
  const auto j = ser::to_json(c, kummer::teocodes1(c, E, 2));
  for (const char* key : {"construction", "s", "curve", "D", "G", "H", "certificate", "codes", "report", "thm35"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["report"]["verdict"], "LCP");
  EXPECT_EQ(j["construction"], "1");
  const auto g = ser::matrix_from_json(c.field(), j["codes"]["G"]["generator"]);
  EXPECT_EQ(g.rows(), 18u);
  EXPECT_EQ(g.cols(), 24u);
}
