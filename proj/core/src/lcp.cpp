#include "kummer/lcp.hpp"

#include <algorithm>
#include <set>

#include "kummer/error.hpp"
#include "kummer/intmath.hpp"
#include "kummer/nonspecial.hpp"
#include "kummer/rrspace.hpp"

namespace kummer {

std::string_view construction_name(Construction c) noexcept {
  switch (c) {
    case Construction::T1: return "1";
    case Construction::T2: return "2";
    case Construction::TR: return "R";
  }
  return "?";
}

Construction parse_construction(std::string_view s) {
  if (s == "1") return Construction::T1;
  if (s == "2") return Construction::T2;
  if (s == "R" || s == "r") return Construction::TR;
  throw Error(Errc::ParseError, "construction must be 1, 2 or R");
}

namespace {

std::vector<Field::Elem> resolve_eval_x(const KummerCurve& curve, std::optional<std::vector<Field::Elem>> eval_x) {
  const auto split = split_x_values(curve);
  if (!eval_x) return split;
  std::vector<Field::Elem> xs = std::move(*eval_x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (Field::Elem x : xs) {
    if (!std::binary_search(split.begin(), split.end(), x)) {
      throw Error(Errc::InvalidArgument, "x = " + std::to_string(x) + " is not a split x-value");
    }
  }
  return xs;
}

// Coefficients of E on the all-ramified tuple; throws ENotCertified for any
// other support.
std::vector<long> ramified_alpha(const QTuple& q, const Divisor& E, const char* name) {
  std::set<Place> allowed(q.places().begin(), q.places().end());
  for (const auto& p : E.support()) {
    if (!allowed.count(p)) throw Error(Errc::ENotCertified, std::string(name) + " has support outside the ramified places");
  }
  std::vector<long> alpha;
  for (const auto& p : q.places()) alpha.push_back(E.coeff(p));
  return alpha;
}

void require_separable(const KummerCurve& curve) {
  for (const auto& r : curve.roots()) {
    if (r.lambda != 1) throw Error(Errc::NotSeparable, "construction requires separable f");
  }
}

void require_infinity(const KummerCurve& curve) {
  if (!curve.infinity_ramified()) {
    throw Error(Errc::UnsupportedPlaceStructure, "construction requires gcd(deg f, m) = 1");
  }
}

Certificate column_certificate(long s, const std::vector<Field::Elem>& xs) {
  Certificate cert{{YGenerator{}, static_cast<int>(s)}};
  for (Field::Elem b : xs) cert.push_back({XMinusGenerator{b}, -1});
  return cert;
}

void finish(const KummerCurve& curve, LcpConstructionResult& res) {
  res.code_g = ag_code(curve, res.D, res.G);
  res.code_h = ag_code(curve, res.D, res.H);
  res.report = is_lcp(res.code_g, res.code_h);
  res.thm35 = thm35_verify(curve, res.D, res.G, res.H, res.certificate);
  if (res.code_g.k() != res.expected_k1 || res.code_h.k() != res.expected_k2) {
    throw Error(Errc::InternalInconsistency, "code dimensions differ from the closed form");
  }
  if (!res.report.lcp || !res.thm35.all_pass()) {
    throw Error(Errc::InternalInconsistency, "construction did not produce a verified LCP");
  }
}

LinearCode empty_code(const Field& F) { return {Matrix(F, 0, 0), {}, std::nullopt}; }

}  // namespace

SRange s_range_t1(const KummerCurve& curve, long N) {
  const long g = curve.genus();
  const long l0 = curve.deg_f();
  return {floor_div(g - 1, l0) + 1, ceil_div(N + 1 - g, l0) - 1};
}

SRange s_range_tr(const KummerCurve& curve, long N) {
  const long g = curve.genus();
  const long n = curve.num_roots();
  return {floor_div(g - 1, n) + 1, ceil_div(N - curve.m() - g + 2, n) - 1};
}

namespace {

struct T2Data {
  std::vector<long> alpha;  // alpha_1..alpha_n at index 0..n-1
  std::vector<long> beta;   // beta_0..beta_{n-1}
};

T2Data t2_data(const KummerCurve& curve, const Divisor& E1, const Divisor& E2) {
  require_separable(curve);
  require_infinity(curve);
  const QTuple q = QTuple::all_ramified(curve);
  const auto a1 = ramified_alpha(q, E1, "E1");
  const auto a2 = ramified_alpha(q, E2, "E2");
  const int n = curve.num_roots();
  if (E1.coeff(Place::infinity()) != 0) throw Error(Errc::ENotCertified, "E1 must be supported on the roots");
  if (E2.coeff(Place::ramified(n - 1)) != 0) throw Error(Errc::ENotCertified, "E2 must avoid the last root");
  if (!check_gminus1(q, a1)) throw Error(Errc::ENotCertified, "E1 is not a non-special divisor of degree g-1");
  if (!check_gminus1(q, a2)) throw Error(Errc::ENotCertified, "E2 is not a non-special divisor of degree g-1");
  T2Data d;
  for (int k = 0; k < n; ++k) d.alpha.push_back(E1.coeff(Place::ramified(k)));
  d.beta.push_back(E2.coeff(Place::infinity()));
  for (int k = 0; k + 1 < n; ++k) d.beta.push_back(E2.coeff(Place::ramified(k)));
  return d;
}

// Empty string when s is admissible, else the violated condition.
std::string t2_violation(const KummerCurve& curve, const T2Data& d, long s, long N) {
  const long n = curve.num_roots();
  const long g = curve.genus();
  for (long k = 1; k < n; ++k) {
    if (d.alpha[static_cast<std::size_t>(k - 1)] - d.beta[static_cast<std::size_t>(k)] > s) return "i";
  }
  const long an = d.alpha.back();
  const long b0 = d.beta[0];
  if (an > s || s * n > b0 + N) return "ii";
  const long mid = s * (n - 1);
  if (!(g - 1 + b0 - an < mid && mid < N - g + 1 + b0 - an)) return "iii";
  return {};
}

}  // namespace

std::vector<long> admissible_s_t2(const KummerCurve& curve, const Divisor& E1, const Divisor& E2, long N) {
  const T2Data d = t2_data(curve, E1, E2);
  std::vector<long> out;
  for (long s = d.alpha.back(); s * curve.num_roots() <= d.beta[0] + N; ++s) {
    if (t2_violation(curve, d, s, N).empty()) out.push_back(s);
  }
  return out;
}

LcpConstructionResult teocodes1(const KummerCurve& curve, const Divisor& E, long s,
                                std::optional<std::vector<Field::Elem>> eval_x) {
  require_infinity(curve);
  const QTuple q = QTuple::all_ramified(curve);
  const auto alpha = ramified_alpha(q, E, "E");
  if (!check_gminus1(q, alpha)) throw Error(Errc::ENotCertified, "E is not a non-special divisor of degree g-1");

  LcpConstructionResult res{Construction::T1, s, resolve_eval_x(curve, std::move(eval_x)), {}, {}, {}, {},
                            empty_code(curve.field()), empty_code(curve.field()), {}, {}, 0, 0, false};
  res.D = split_places(curve, res.eval_x);
  const long N = static_cast<long>(res.D.size());
  const auto [lo, hi] = s_range_t1(curve, N);
  if (s < lo || s > hi) {
    throw Error(Errc::SRangeViolation, "s = " + std::to_string(s) + " outside [" + std::to_string(lo) + ", " +
                                           std::to_string(hi) + "]");
  }
  const long l0 = curve.deg_f();
  res.G = E;
  res.G.add(Place::infinity(), static_cast<int>(N - s * l0));
  Divisor zeros_of_y;
  const Divisor div_y = principal_divisor(curve, YGenerator{});
  for (const auto& [p, c] : div_y.entries()) {
    if (c > 0) zeros_of_y.add(p, c);
  }
  res.H = E + static_cast<int>(s) * zeros_of_y;
  res.certificate = column_certificate(s, res.eval_x);
  res.expected_k1 = static_cast<std::size_t>(N - s * l0);
  res.expected_k2 = static_cast<std::size_t>(s * l0);
  finish(curve, res);
  return res;
}

LcpConstructionResult teocodes2(const KummerCurve& curve, const Divisor& E1, const Divisor& E2, long s,
                                std::optional<std::vector<Field::Elem>> eval_x) {
  const T2Data d = t2_data(curve, E1, E2);
  LcpConstructionResult res{Construction::T2, s, resolve_eval_x(curve, std::move(eval_x)), {}, {}, {}, {},
                            empty_code(curve.field()), empty_code(curve.field()), {}, {}, 0, 0, false};
  res.D = split_places(curve, res.eval_x);
  const long N = static_cast<long>(res.D.size());
  if (const auto v = t2_violation(curve, d, s, N); !v.empty()) {
    throw Error(Errc::ConditionViolation, "s = " + std::to_string(s) + " violates condition " + v, v);
  }
  const int n = curve.num_roots();
  for (int k = 0; k + 1 < n; ++k) {
    res.G.add(Place::ramified(k), static_cast<int>(d.alpha[static_cast<std::size_t>(k)]));
    res.H.add(Place::ramified(k), static_cast<int>(s + d.beta[static_cast<std::size_t>(k + 1)]));
  }
  res.G.add(Place::ramified(n - 1), static_cast<int>(s));
  res.G.add(Place::infinity(), static_cast<int>(d.beta[0] + N - s * n));
  res.H.add(Place::ramified(n - 1), static_cast<int>(d.alpha.back()));
  res.certificate = column_certificate(s, res.eval_x);
  const long k2 = s * (n - 1) + d.alpha.back() - d.beta[0];
  res.expected_k1 = static_cast<std::size_t>(N - k2);
  res.expected_k2 = static_cast<std::size_t>(k2);
  finish(curve, res);
  return res;
}

LcpConstructionResult teocodesR(const KummerCurve& curve, const Divisor& E, long s,
                                std::optional<std::vector<Field::Elem>> eval_x) {
  require_separable(curve);
  require_infinity(curve);
  const QTuple q = QTuple::all_ramified(curve);
  const auto alpha = ramified_alpha(q, E, "E");
  if (!check_g(q, alpha)) throw Error(Errc::ENotCertified, "E is not a non-special divisor of degree g");

  LcpConstructionResult res{Construction::TR, s, resolve_eval_x(curve, std::move(eval_x)), {}, {}, {}, {},
                            empty_code(curve.field()), empty_code(curve.field()), {}, {}, 0, 0, false};
  if (res.eval_x.size() < 2) throw Error(Errc::NeedTwoFibers, "at least two split fibers are required");
  const auto all = split_places(curve, res.eval_x);
  const long N = static_cast<long>(all.size());
  const long m = curve.m();
  const auto [lo, hi] = s_range_tr(curve, N);
  if (s < lo || s > hi) {
    throw Error(Errc::SRangeViolation, "s = " + std::to_string(s) + " outside [" + std::to_string(lo) + ", " +
                                           std::to_string(hi) + "]");
  }
  const Place R1 = all[0];
  res.D.push_back(all[1]);
  res.D.insert(res.D.end(), all.begin() + m, all.end());

  const long n = curve.num_roots();
  const int a0 = E.coeff(Place::infinity());
  for (int k = 0; k < n; ++k) {
    const int ak = E.coeff(Place::ramified(k));
    res.G.add(Place::ramified(k), ak);
    res.H.add(Place::ramified(k), static_cast<int>(s + ak));
  }
  res.G.add(Place::infinity(), static_cast<int>(N - m + a0 - s * n));
  res.H.add(Place::infinity(), a0);
  res.H.add(R1, -1);

  Divisor lifted = res.H;
  lifted.add(R1, 1);
  res.degenerate_functional = dim_general(curve, res.H) == dim_oracle(curve, lifted);

  res.certificate = column_certificate(s, std::vector<Field::Elem>(res.eval_x.begin() + 1, res.eval_x.end()));
  res.expected_k1 = static_cast<std::size_t>(N - m + 1 - s * n);
  res.expected_k2 = static_cast<std::size_t>(s * n);
  finish(curve, res);
  return res;
}

}  // namespace kummer
