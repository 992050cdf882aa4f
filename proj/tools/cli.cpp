#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "catalog.hpp"
#include "kummer/error.hpp"
#include "kummer/rrspace.hpp"
#include "kummer/serialize.hpp"

namespace kummer::cli {

namespace {

using nlohmann::json;
namespace ser = kummer::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

KummerCurve load_curve(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    if (auto c = builtin_curve(source)) return *c;
  }
  return ser::curve_from_json(ser::parse(read_file(source)));
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<long> parse_alpha(const std::string& s) {
  std::vector<long> out;
  for (const auto& tok : split_csv(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "alpha entry '" + tok + "' is not an integer");
    }
  }
  return out;
}

QTuple make_tuple(const KummerCurve& curve, const std::string& ids) {
  if (ids.empty() || ids == "all-ramified") return QTuple::all_ramified(curve);
  std::vector<Place> places;
  for (const auto& id : split_csv(ids)) places.push_back(curve.place(id));
  return {curve, places};
}

std::string tsv_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += tsv_value(v[i]);
    }
    return s;
  }
  return v.dump();
}

void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "tsv") {
    if (j.contains("places") && j["places"].is_array()) {
      out << "place\n";
      for (const auto& p : j["places"]) out << tsv_value(p) << "\n";
      return;
    }
    for (const auto& [k, v] : j.items()) out << k << "\t" << tsv_value(v) << "\n";
    return;
  }
  out << j.dump(2) << "\n";
}

json classification_json(const Classification& c) {
  return {{"classification", std::string(verdict_name(c.verdict))}, {"degree", c.degree}, {"dim", c.dim}};
}

// Options whose values may start with '-' are rewritten to --opt=value.
std::vector<std::string> normalize(const std::vector<std::string>& args) {
  static const char* const kValued[] = {"--alpha", "--s", "--alpha0"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool valued = std::any_of(std::begin(kValued), std::end(kValued), [&](const char* o) { return args[i] == o; });
    if (valued && i + 1 < args.size()) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

struct Options {
  std::string curve;
  std::string places;
  std::string tuple;
  std::string alpha;
  std::string format = "json";
  std::string construction = "1";
  std::string E;
  std::string result;
  std::string family = "auto";
  std::optional<long> s;
  std::optional<int> alpha0;
  std::uint64_t seed = 1;
  int samples = 200;
  bool necessary_only = false;
};

json cmd_curve_info(const Options& o) {
  const KummerCurve curve = load_curve(o.curve);
  const auto rp = rational_places(curve);
  const auto split = split_x_values(curve);
  json tr = json::array();
  for (const auto& p : totally_ramified_places(curve)) tr.push_back(p.id());
  return {{"curve", ser::to_json(curve)},
          {"genus", curve.genus()},
          {"genus_riemann_hurwitz", curve.genus_riemann_hurwitz()},
          {"m", curve.m()},
          {"deg_f", curve.deg_f()},
          {"beta", beta_values(curve)},
          {"rational_places", rp.total()},
          {"partial", rp.partial},
          {"split_x_values", split.size()},
          {"N", split.size() * static_cast<std::size_t>(curve.m())},
          {"totally_ramified", tr}};
}

json cmd_curve_places(const Options& o) {
  const KummerCurve curve = load_curve(o.curve);
  const auto rp = rational_places(curve);
  json places = json::array();
  for (const auto& p : rp.places) places.push_back(p.id());
  return {{"places", places}, {"count", rp.total()}, {"partial", rp.partial}, {"unresolved", rp.unresolved}};
}

json cmd_dim(const Options& o) {
  const KummerCurve curve = load_curve(o.curve);
  const QTuple q = make_tuple(curve, o.places.empty() ? o.tuple : o.places);
  const auto alpha = parse_alpha(o.alpha);
  const Divisor D = q.divisor(alpha);
  const long oracle = dim_oracle(curve, D);
  json j{{"genus", curve.genus()}, {"dim_oracle", oracle}};
  if (q.n() >= 2 && static_cast<std::uint32_t>(q.n()) <= curve.field().order()) {
    const auto c = classify(q, alpha);
    j.update(classification_json(c));
    j["dim_via_classes"] = dim_via_classes(q, alpha);
  } else {
    j.update(classification_json({verdict_for(D.degree(), oracle, curve.genus()), D.degree(), oracle}));
  }
  return j;
}

json cmd_nonspecial_check(const Options& o) {
  const KummerCurve curve = load_curve(o.curve);
  const QTuple q = make_tuple(curve, o.tuple.empty() ? o.places : o.tuple);
  const auto nc = necessary_condition(q);
  json j{{"possible", nc.possible}, {"witness", nc.possible ? json(nullptr) : json(nc.witness)}};
  if (o.necessary_only || o.alpha.empty()) return j;
  const auto alpha = parse_alpha(o.alpha);
  j["gminus1"] = check_gminus1(q, alpha);
  j["g"] = check_g(q, alpha);
  const bool in_box = std::all_of(alpha.begin(), alpha.end(), [&](long a) { return a >= 0 && a < curve.m(); });
  j["effective_g"] = in_box ? json(check_effective_g(q, alpha)) : json(nullptr);
  j.update(classification_json(classify(q, alpha)));
  return j;
}

json cmd_nonspecial_enumerate(const Options& o) {
  const KummerCurve curve = load_curve(o.curve);
  const bool separable = std::all_of(curve.roots().begin(), curve.roots().end(), [](const Root& r) { return r.lambda == 1; });
  std::string family = o.family;
  if (family == "auto") family = separable && o.tuple.empty() ? "separable" : "lambda1";
  json families = json::array();
  if (family == "separable") {
    std::vector<int> a0s;
    if (o.alpha0) {
      a0s.push_back(*o.alpha0);
    } else {
      const bool coprime = std::gcd(curve.m(), curve.num_roots()) == 1;
      for (int a = 0; a < (coprime ? curve.m() : 1); ++a) a0s.push_back(a);
    }
    for (int a : a0s) families.push_back(ser::to_json(enum_separable_gminus1(curve, a), curve.m()));
    return {{"family", "separable"}, {"families", families}};
  }
  if (family != "lambda1") throw Error(Errc::InvalidArgument, "family must be auto, separable or lambda1");
  QTuple q = [&] {
    if (!o.tuple.empty() && o.tuple != "all-ramified") return make_tuple(curve, o.tuple);
    std::vector<Place> ps;
    for (const auto& p : totally_ramified_places(curve)) {
      const int lam = p.kind == Place::Kind::Infinity ? curve.lambda_infinity() : curve.roots()[static_cast<std::size_t>(p.root)].lambda;
      if (((lam % curve.m()) + curve.m()) % curve.m() == 1) ps.push_back(p);
    }
    return QTuple(curve, ps);
  }();
  const auto res = enum_lambda1_gminus1(q);
  json j{{"family", "lambda1"}};
  if (res.family) {
    families.push_back(ser::to_json(*res.family, curve.m()));
    j["families"] = families;
    j["exists"] = true;
  } else {
    j["families"] = families;
    j["exists"] = false;
    j["witness"] = res.witness;
  }
  return j;
}

Divisor default_E_t1(const KummerCurve& curve) {
  std::vector<Place> ps;
  for (const auto& p : totally_ramified_places(curve)) {
    const int lam = p.kind == Place::Kind::Infinity ? curve.lambda_infinity() : curve.roots()[static_cast<std::size_t>(p.root)].lambda;
    if (((lam % curve.m()) + curve.m()) % curve.m() == 1) ps.push_back(p);
  }
  if (ps.size() >= 2) {
    const QTuple q(curve, ps);
    const auto res = enum_lambda1_gminus1(q);
    if (res.family) return q.divisor(res.family->canonical_alpha(curve.m()));
  }
  throw Error(Errc::ENotCertified, "no default E for this curve; pass --E");
}

struct T2Inputs {
  Divisor E1;
  Divisor E2;
};

T2Inputs default_E_t2(const KummerCurve& curve) {
  const int n = curve.num_roots();
  std::vector<Place> roots;
  for (int k = 0; k < n; ++k) roots.push_back(Place::ramified(k));
  std::vector<Place> e2_places{Place::infinity()};
  for (int k = 0; k + 1 < n; ++k) e2_places.push_back(Place::ramified(k));
  const QTuple q1(curve, roots);
  const QTuple q2(curve, e2_places);
  const auto h1 = scan_gminus1(q1);
  const auto h2 = scan_gminus1(q2);
  if (h1.empty() || h2.empty()) throw Error(Errc::ENotCertified, "no default E1/E2 for this curve; pass --E");
  return {q1.divisor(h1.front()), q2.divisor(h2.front())};
}

json cmd_lcp_build(const Options& o) {
  const KummerCurve curve = o.curve.empty() ? *builtin_curve("h3") : load_curve(o.curve);
  const Construction c = parse_construction(o.construction);
  if (!o.s) throw Error(Errc::InvalidArgument, "--s is required");
  std::optional<json> ej;
  if (!o.E.empty()) ej = ser::parse(read_file(o.E));

  if (c == Construction::T2) {
    T2Inputs in = ej ? T2Inputs{ser::divisor_from_json(curve, (*ej)["E1"]), ser::divisor_from_json(curve, (*ej)["E2"])}
                     : default_E_t2(curve);
    return ser::to_json(curve, teocodes2(curve, in.E1, in.E2, *o.s));
  }
  Divisor E = ej ? ser::divisor_from_json(curve, *ej) : default_E_t1(curve);
  if (c == Construction::T1) return ser::to_json(curve, teocodes1(curve, E, *o.s));
  if (!ej) {
    // Raise degree g - 1 to g by adding a tuple place keeping non-specialness.
    const QTuple q = QTuple::all_ramified(curve);
    bool found = false;
    for (const auto& p : q.places()) {
      Divisor cand = E;
      cand.add(p, 1);
      std::vector<long> a;
      for (const auto& t : q.places()) a.push_back(cand.coeff(t));
      if (check_g(q, a)) {
        E = cand;
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::ENotCertified, "no default degree-g E for this curve; pass --E");
  }
  return ser::to_json(curve, teocodesR(curve, E, *o.s));
}

json cmd_lcp_verify(const Options& o) {
  if (o.result.empty()) throw Error(Errc::InvalidArgument, "--result is required");
  const json r = ser::parse(read_file(o.result));
  const KummerCurve curve = ser::curve_from_json(r.at("curve"));
  std::vector<Place> D;
  for (const auto& id : r.at("D")) D.push_back(curve.place(id.get<std::string>()));
  const Divisor G = ser::divisor_from_json(curve, r.at("G"));
  const Divisor H = ser::divisor_from_json(curve, r.at("H"));
  const Certificate cert = ser::certificate_from_json(r.at("certificate"));
  const LinearCode cg = ag_code(curve, D, G);
  const LinearCode ch = ag_code(curve, D, H);
  const LcpReport rep = is_lcp(cg, ch);
  const Thm35Report thm = thm35_verify(curve, D, G, H, cert);
  json j{{"report", ser::to_json(rep)}, {"thm35", ser::to_json(thm)}};
  bool stored_match = true;
  if (r.contains("codes")) {
    const Matrix sg = ser::matrix_from_json(curve.field(), r["codes"]["G"]["generator"]);
    const Matrix sh = ser::matrix_from_json(curve.field(), r["codes"]["H"]["generator"]);
    stored_match = sg.cols() == D.size() && sh.cols() == D.size() && rank(sg) == cg.k() && rank(sh) == ch.k() &&
                   stack_rank(sg, cg.generator) == cg.k() && stack_rank(sh, ch.generator) == ch.k();
  }
  j["stored_codes_match"] = stored_match;
  j["verdict"] = rep.lcp && thm.all_pass() && stored_match ? "LCP" : "NotLCP";
  return j;
}

json cmd_code_info(const Options& o) {
  const KummerCurve curve = load_curve(o.curve);
  const QTuple q = make_tuple(curve, o.places.empty() ? o.tuple : o.places);
  const Divisor G = q.divisor(parse_alpha(o.alpha));
  const auto D = split_places(curve, split_x_values(curve));
  const LinearCode code = ag_code(curve, D, G);
  const Distance d = min_distance(code);
  json dist;
  switch (d.kind) {
    case Distance::Kind::Exact: dist = {{"kind", "exact"}, {"value", d.value}}; break;
    case Distance::Kind::LowerBoundOnly: dist = {{"kind", "LowerBoundOnly"}, {"value", d.value}}; break;
    case Distance::Kind::Infinite: dist = {{"kind", "infinite"}, {"value", nullptr}}; break;
  }
  // Random codewords against the designed distance.
  std::mt19937_64 rng(o.seed);
  long min_seen = -1;
  const Field& F = curve.field();
  std::uniform_int_distribution<Field::Elem> pick(0, F.order() - 1);
  for (int t = 0; t < o.samples && code.k() > 0; ++t) {
    std::vector<Field::Elem> w(code.N(), 0);
    bool nonzero = false;
    for (std::size_t r = 0; r < code.k(); ++r) {
      const Field::Elem c = pick(rng);
      if (c == 0) continue;
      nonzero = true;
      const auto row = code.generator.row(r);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = F.add(w[i], F.mul(c, row[i]));
    }
    if (!nonzero) continue;
    const long wt = weight(w);
    if (min_seen < 0 || wt < min_seen) min_seen = wt;
  }
  return {{"N", code.N()},
          {"k", code.k()},
          {"deg_G", G.degree()},
          {"goppa_bound", static_cast<long>(code.N()) - G.degree()},
          {"distance", dist},
          {"sampled_min_weight", min_seen < 0 ? json(nullptr) : json(min_seen)},
          {"seed", o.seed}};
}

void error_json(std::ostream& err, std::string_view code, const std::string& message, const std::string& detail) {
  json e{{"error", {{"code", std::string(code)}, {"message", message}, {"detail", detail}}}};
  err << e.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kummer curves, Riemann-Roch dimensions and LCPs of AG codes", "kummer"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--seed", o.seed, "seed for randomized checks");
  };
  auto add_curve = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--curve", o.curve, "curve JSON file or builtin name (h2, h3, z, gk2, w)");
    if (required) opt->required();
  };

  auto* info = app.add_subcommand("curve-info", "genus, ramification and place counts");
  add_curve(info, true);
  add_common(info);
  auto* places = app.add_subcommand("curve-places", "list rational places");
  add_curve(places, true);
  add_common(places);
  auto* dim = app.add_subcommand("dim", "Riemann-Roch dimension of a divisor on ramified places");
  add_curve(dim, true);
  add_common(dim);
  dim->add_option("--places", o.places, "comma-separated place ids");
  dim->add_option("--tuple", o.tuple, "all-ramified or place ids");
  dim->add_option("--alpha", o.alpha, "comma-separated coefficients in tuple order")->required();
  auto* check = app.add_subcommand("nonspecial-check", "non-specialness criteria");
  add_curve(check, true);
  add_common(check);
  check->add_option("--tuple", o.tuple, "all-ramified or place ids");
  check->add_option("--places", o.places, "comma-separated place ids");
  check->add_option("--alpha", o.alpha, "coefficients in tuple order");
  check->add_flag("--necessary-only", o.necessary_only, "only evaluate the necessary condition");
  auto* en = app.add_subcommand("nonspecial-enumerate", "families of non-special divisors of degree g-1");
  add_curve(en, true);
  add_common(en);
  en->add_option("--tuple", o.tuple, "tuple for the lambda = 1 family");
  en->add_option("--family", o.family, "auto, separable or lambda1")->check(CLI::IsMember({"auto", "separable", "lambda1"}));
  en->add_option("--alpha0", o.alpha0, "fixed residue at infinity (separable family)");
  auto* build = app.add_subcommand("lcp-build", "build an LCP of AG codes");
  add_curve(build, false);
  add_common(build);
  build->add_option("--construction", o.construction, "1, 2 or R")->check(CLI::IsMember({"1", "2", "R"}));
  build->add_option("--s", o.s, "construction parameter")->required();
  build->add_option("--E", o.E, "divisor JSON (or {E1, E2} for construction 2)");
  auto* verify = app.add_subcommand("lcp-verify", "re-check a serialized lcp-build result");
  add_common(verify);
  verify->add_option("--result,result", o.result, "lcp-build output file");
  auto* code = app.add_subcommand("code-info", "parameters of C_L(D, G) on all split places");
  add_curve(code, true);
  add_common(code);
  code->add_option("--places", o.places, "comma-separated place ids");
  code->add_option("--tuple", o.tuple, "all-ramified or place ids");
  code->add_option("--alpha", o.alpha, "coefficients of G in tuple order")->required();
  code->add_option("--samples", o.samples, "random codewords to weigh");

  try {
    std::vector<std::string> args = normalize(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    error_json(err, "ParseError", e.what(), "");
    return 2;
  }

  try {
    json result;
    if (*info) result = cmd_curve_info(o);
    else if (*places) result = cmd_curve_places(o);
    else if (*dim) result = cmd_dim(o);
    else if (*check) result = cmd_nonspecial_check(o);
    else if (*en) result = cmd_nonspecial_enumerate(o);
    else if (*build) result = cmd_lcp_build(o);
    else if (*verify) result = cmd_lcp_verify(o);
    else if (*code) result = cmd_code_info(o);
    emit(out, result, o.format);
    return 0;
  } catch (const Error& e) {
    error_json(err, errc_name(e.code()), e.what(), e.detail());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    error_json(err, "ParseError", e.what(), "");
    return 2;
  } catch (const std::exception& e) {
    error_json(err, "Internal", e.what(), "");
    return 1;
  }
}

}  // namespace kummer::cli
