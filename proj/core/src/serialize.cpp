#include "kummer/serialize.hpp"

#include "kummer/error.hpp"

namespace kummer::json {

namespace {

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

json poly_json(const Poly& p) { return json(std::vector<Field::Elem>(p.begin(), p.end())); }

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

json to_json(const Field& F) {
  return {{"p", F.characteristic()}, {"e", F.degree()}, {"modulus", F.modulus()}};
}

Field field_from_json(const json& j) {
  const auto p = get<std::uint32_t>(j, "p");
  const auto e = j.contains("e") ? get<std::uint32_t>(j, "e") : 1u;
  Field F = Field::create(p, e);
  if (j.contains("modulus") && get<std::vector<std::uint32_t>>(j, "modulus") != F.modulus()) {
    throw Error(Errc::ParseError, "modulus differs from the canonical choice");
  }
  return F;
}

json to_json(const KummerCurve& curve) {
  json roots = json::array();
  for (const auto& r : curve.roots()) roots.push_back({{"a", r.a}, {"lambda", r.lambda}});
  return {{"field", to_json(curve.field())}, {"m", curve.m()}, {"leading", curve.leading()}, {"roots", roots}};
}

KummerCurve curve_from_json(const json& j) {
  Field F = field_from_json(get<json>(j, "field"));
  const int m = get<int>(j, "m");
  if (j.contains("f")) {
    Poly f;
    for (long c : get<std::vector<long>>(j, "f")) f.push_back(F.from_int(c));
    return KummerCurve::from_polynomial(F, m, f);
  }
  const auto leading = j.contains("leading") ? get<Field::Elem>(j, "leading") : 1u;
  std::vector<Root> roots;
  for (const auto& r : get<json>(j, "roots")) roots.push_back({get<Field::Elem>(r, "a"), get<int>(r, "lambda")});
  return KummerCurve::create(F, m, leading, std::move(roots));
}

json to_json(const Divisor& D) {
  json coeffs = json::array();
  for (const auto& [p, c] : D.entries()) coeffs.push_back({{"place", p.id()}, {"c", c}});
  return {{"coeffs", coeffs}};
}

Divisor divisor_from_json(const KummerCurve& curve, const json& j) {
  Divisor D;
  for (const auto& e : get<json>(j, "coeffs")) D.add(curve.place(get<std::string>(e, "place")), get<int>(e, "c"));
  return D;
}

json to_json(const CurveFunction& fn) {
  json terms = json::array();
  for (std::size_t i = 0; i < fn.terms().size(); ++i) {
    const auto& t = fn.terms()[i];
    if (t.is_zero()) continue;
    terms.push_back({{"ypow", i}, {"num", poly_json(t.num)}, {"den", poly_json(t.den)}});
  }
  return {{"terms", terms}};
}

json to_json(const LinearCode& code) {
  json rows = json::array();
  for (std::size_t r = 0; r < code.k(); ++r) {
    const auto row = code.generator.row(r);
    rows.push_back(std::vector<Field::Elem>(row.begin(), row.end()));
  }
  return {{"N", code.N()}, {"k", code.k()}, {"field", to_json(code.generator.field())}, {"generator", rows}};
}

Matrix matrix_from_json(const Field& F, const json& rows) {
  if (!rows.is_array()) throw Error(Errc::ParseError, "generator must be an array of rows");
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix M(F, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols) throw Error(Errc::ShapeMismatch, "ragged generator matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = rows[r][c].get<Field::Elem>();
      if (!F.contains(v)) throw Error(Errc::ParseError, "matrix entry outside field");
      M.at(r, c) = v;
    }
  }
  return M;
}

json to_json(const GMinus1Family& fam, int m) {
  json tuple = json::array();
  for (const auto& p : fam.tuple) tuple.push_back(p.id());
  Divisor canonical;
  const auto alpha = fam.canonical_alpha(m);
  for (std::size_t k = 0; k < alpha.size(); ++k) canonical.add(fam.tuple[k], static_cast<int>(alpha[k]));
  json j{{"alpha_multiset", fam.alpha_multiset}, {"j_sum", fam.j_sum}, {"tuple", tuple},
         {"canonical", to_json(canonical)}, {"block_sizes", fam.block_sizes}};
  j["alpha0"] = fam.alpha0 ? json(*fam.alpha0) : json(nullptr);
  if (fam.block_discrepancy) j["block_discrepancy"] = true;
  return j;
}

json to_json(const LcpReport& r) {
  return {{"k1", r.k1}, {"k2", r.k2}, {"N", r.N}, {"rank_of_stack", r.rank_of_stack},
          {"verdict", r.lcp ? "LCP" : "NotLCP"}};
}

json to_json(const Thm35Report& r) {
  return {{"support_disjoint", r.support_disjoint},
          {"degree_window", r.degree_window},
          {"degree_sum", r.degree_sum},
          {"gcd_degree", r.gcd_degree},
          {"gcd_nonspecial", r.gcd_nonspecial},
          {"lmd_minus_d_nonspecial", r.lmd_minus_d_nonspecial},
          {"gcd", to_json(r.gcd)},
          {"reduced", to_json(r.reduced)},
          {"all_pass", r.all_pass()}};
}

json to_json(const Certificate& c) {
  json out = json::array();
  for (const auto& step : c) out.push_back({{"gen", generator_id(step.gen)}, {"mult", step.mult}});
  return out;
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "certificate must be an array");
  Certificate c;
  for (const auto& step : j) c.push_back({parse_generator_id(get<std::string>(step, "gen")), get<int>(step, "mult")});
  return c;
}

json to_json(const KummerCurve& curve, const LcpConstructionResult& r) {
  json D = json::array();
  for (const auto& p : r.D) D.push_back(p.id());
  return {{"construction", std::string(construction_name(r.construction))},
          {"s", r.s},
          {"curve", to_json(curve)},
          {"D", D},
          {"G", to_json(r.G)},
          {"H", to_json(r.H)},
          {"certificate", to_json(r.certificate)},
          {"codes", {{"G", to_json(r.code_g)}, {"H", to_json(r.code_h)}}},
          {"report", to_json(r.report)},
          {"thm35", to_json(r.thm35)},
          {"expected_dims", {r.expected_k1, r.expected_k2}},
          {"degenerate_functional", r.degenerate_functional}};
}

}  // namespace kummer::json
