#include "catalog.hpp"

namespace kummer::cli {

namespace {

KummerCurve from_int_coeffs(std::uint32_t p, std::uint32_t e, int m, const std::vector<long>& coeffs) {
  Field F = Field::create(p, e);
  Poly f;
  for (long c : coeffs) f.push_back(F.from_int(c));
  return KummerCurve::from_polynomial(F, m, f);
}

}  // namespace

std::optional<KummerCurve> builtin_curve(const std::string& name) {
  if (name == "h2") return from_int_coeffs(2, 2, 3, {0, 1, 1});          // y^3 = x^2 + x
  if (name == "h3") return from_int_coeffs(3, 2, 4, {0, 1, 0, 1});       // y^4 = x^3 + x
  if (name == "z") {                                                       // y^7 = x^5 - x^13
    std::vector<long> c(14, 0);
    c[5] = 1;
    c[13] = -1;
    return from_int_coeffs(3, 6, 7, c);
  }
  if (name == "gk2") {  // y^9 = (x^2 + x)(x^2 + x + 1)^3
    Field F = Field::create(2, 6);
    const Poly h{1, 1, 1};
    const Poly f = poly::mul(F, Poly{0, 1, 1}, poly::pow(F, h, 3));
    return KummerCurve::from_polynomial(F, 9, f);
  }
  if (name == "w") {  // y^3 = (x-1)(x-2)(x-3)(x-4)^2 over GF(5)
    return KummerCurve::create(Field::create(5, 1), 3, 1, {{1, 1}, {2, 1}, {3, 1}, {4, 2}});
  }
  return std::nullopt;
}

std::vector<std::string> builtin_curve_names() { return {"gk2", "h2", "h3", "w", "z"}; }

}  // namespace kummer::cli
