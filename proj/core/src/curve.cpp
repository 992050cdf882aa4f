#include "kummer/curve.hpp"

#include <algorithm>
#include <numeric>

#include "kummer/error.hpp"
#include "kummer/intmath.hpp"

namespace kummer {

KummerCurve KummerCurve::create(Field field, int m, Field::Elem leading, std::vector<Root> roots) {
  if (m < 2) throw Error(Errc::InvalidArgument, "m must be at least 2");
  if (m % static_cast<int>(field.characteristic()) == 0) {
    throw Error(Errc::CharDividesM, "characteristic divides m = " + std::to_string(m));
  }
  if (leading == 0 || !field.contains(leading)) {
    throw Error(Errc::InvalidArgument, "leading coefficient must be a nonzero field element");
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.a < b.a; });
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (!field.contains(roots[k].a)) {
      throw Error(Errc::InvalidArgument, "root code " + std::to_string(roots[k].a) + " outside field");
    }
    if (k > 0 && roots[k].a == roots[k - 1].a) {
      throw Error(Errc::DuplicateRoot, "root " + std::to_string(roots[k].a) + " listed twice");
    }
    if (roots[k].lambda < 1 || roots[k].lambda > m - 1) {
      throw Error(Errc::MultiplicityOutOfRange,
                  "multiplicity " + std::to_string(roots[k].lambda) + " not in [1, m-1]");
    }
  }

  KummerCurve c;
  c.field_ = std::move(field);
  c.m_ = m;
  c.leading_ = leading;
  c.roots_ = std::move(roots);
  bool any_ramified = false;
  for (const auto& r : c.roots_) {
    c.d_.push_back(std::gcd(r.lambda, m));
    c.deg_f_ += r.lambda;
    any_ramified = any_ramified || c.d_.back() == 1;
  }
  c.d_inf_ = std::gcd(c.deg_f_, m);
  if (!any_ramified && c.d_inf_ != 1) {
    throw Error(Errc::NoTotallyRamifiedPlace, "no root or infinity is totally ramified");
  }
  std::vector<std::pair<Field::Elem, int>> rl;
  for (const auto& r : c.roots_) rl.emplace_back(r.a, r.lambda);
  c.f_ = poly::from_roots(c.field_, leading, rl);
  return c;
}

KummerCurve KummerCurve::from_polynomial(Field field, int m, const Poly& f_in) {
  Poly f = f_in;
  poly::trim(f);
  if (f.empty()) throw Error(Errc::InvalidArgument, "f must be nonzero");
  std::vector<Root> roots;
  int total = 0;
  for (Field::Elem a = 0; a < field.order(); ++a) {
    if (poly::eval(field, f, a) != 0) continue;
    const int mult = poly::root_multiplicity(field, f, a);
    roots.push_back({a, mult});
    total += mult;
  }
  if (total != poly::degree(f)) {
    throw Error(Errc::PolynomialNotSplit, "f does not split into linear factors over the field");
  }
  return create(std::move(field), m, f.back(), std::move(roots));
}

int KummerCurve::d(int k) const {
  if (k < 0 || k >= num_roots()) throw Error(Errc::IndexOutOfRange, "root index " + std::to_string(k));
  return d_[static_cast<std::size_t>(k)];
}

int KummerCurve::root_index(Field::Elem a) const noexcept {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), a,
                             [](const Root& r, Field::Elem v) { return r.a < v; });
  if (it == roots_.end() || it->a != a) return -1;
  return static_cast<int>(it - roots_.begin());
}

int KummerCurve::beta(int i) const {
  if (i < 1 || i > m_ - 1) throw Error(Errc::IndexOutOfRange, "beta index " + std::to_string(i));
  long s = ceil_div(-static_cast<long>(i) * deg_f_, m_) - 1;
  for (const auto& r : roots_) s += ceil_div(static_cast<long>(i) * r.lambda, m_);
  return static_cast<int>(s);
}

int KummerCurve::genus() const {
  int g = 0;
  for (int i = 1; i < m_; ++i) g += beta(i);
  return g;
}

int KummerCurve::genus_riemann_hurwitz() const {
  long twice = -2L * m_;
  for (int dk : d_) twice += m_ - dk;
  twice += m_ - d_inf_;
  return static_cast<int>(1 + twice / 2);
}

Place KummerCurve::place(const Place& p) const {
  switch (p.kind) {
    case Place::Kind::Infinity:
      if (d_inf_ != 1) throw Error(Errc::InvalidPlace, "infinity is not totally ramified");
      return Place::infinity();
    case Place::Kind::RamifiedRoot:
      if (p.root < 0 || p.root >= num_roots()) throw Error(Errc::InvalidPlace, "no root " + std::to_string(p.root));
      if (d(p.root) != 1) throw Error(Errc::InvalidPlace, p.id() + " is not totally ramified; use bundle:" + std::to_string(p.root));
      return p;
    case Place::Kind::Bundle:
      if (p.root < 0 || p.root >= num_roots()) throw Error(Errc::InvalidPlace, "no root " + std::to_string(p.root));
      if (d(p.root) == 1) throw Error(Errc::InvalidPlace, "root " + std::to_string(p.root) + " is totally ramified; use root:");
      return Place::bundle(p.root, d(p.root));
    case Place::Kind::Affine: {
      if (!field_.contains(p.x) || !field_.contains(p.y)) throw Error(Errc::InvalidPlace, "coordinates outside field");
      const Field::Elem fx = f_at(p.x);
      if (fx == 0) throw Error(Errc::InvalidPlace, "affine place over a root of f");
      if (field_.pow(p.y, m_) != fx) throw Error(Errc::InvalidPlace, p.id() + " is not on the curve");
      return p;
    }
  }
  throw Error(Errc::InvalidPlace, "unknown place kind");
}

Place KummerCurve::place_over_root(int k) const {
  return d(k) == 1 ? Place::ramified(k) : Place::bundle(k, d(k));
}

std::vector<Place> totally_ramified_places(const KummerCurve& curve) {
  std::vector<Place> out;
  if (curve.infinity_ramified()) out.push_back(Place::infinity());
  for (int k = 0; k < curve.num_roots(); ++k) {
    if (curve.root_ramified(k)) out.push_back(Place::ramified(k));
  }
  return out;
}

RationalPlaces rational_places(const KummerCurve& curve) {
  const Field& F = curve.field();
  RationalPlaces rp;
  rp.places = totally_ramified_places(curve);
  if (!curve.infinity_ramified()) {
    rp.partial = true;
    rp.unresolved += F.mth_roots(curve.leading(), static_cast<std::uint32_t>(curve.d_infinity())).size();
  }
  for (int k = 0; k < curve.num_roots(); ++k) {
    const int dk = curve.d(k);
    if (dk == 1) continue;
    // w = f / (x - a_k)^{lambda_k} evaluated at a_k
    Field::Elem w = curve.leading();
    const Field::Elem a = curve.roots()[static_cast<std::size_t>(k)].a;
    for (const auto& r : curve.roots()) {
      if (r.a != a) w = F.mul(w, F.pow(F.sub(a, r.a), r.lambda));
    }
    rp.partial = true;
    rp.unresolved += F.mth_roots(w, static_cast<std::uint32_t>(dk)).size();
  }
  // Fiber solving through one table of y^m.
  std::vector<std::vector<Field::Elem>> by_power(F.order());
  for (Field::Elem y = 1; y < F.order(); ++y) by_power[F.pow(y, curve.m())].push_back(y);
  for (Field::Elem x = 0; x < F.order(); ++x) {
    const Field::Elem fx = curve.f_at(x);
    if (fx == 0) continue;
    for (Field::Elem y : by_power[fx]) rp.places.push_back(Place::affine(x, y));
  }
  return rp;
}

std::vector<Field::Elem> split_x_values(const Field& F, const Poly& f, int m) {
  // Nonzero c has m distinct m-th roots iff m | q-1 and c is an m-th power.
  std::vector<Field::Elem> out;
  const std::uint32_t order = F.order() - 1;
  const bool full = order % static_cast<std::uint32_t>(m) == 0;
  if (!full) return out;
  for (Field::Elem x = 0; x < F.order(); ++x) {
    const Field::Elem fx = poly::eval(F, f, x);
    if (fx == 0) continue;
    if (F.log(fx) % static_cast<std::uint32_t>(m) == 0) out.push_back(x);
  }
  return out;
}

std::vector<Field::Elem> split_x_values(const KummerCurve& curve) {
  return split_x_values(curve.field(), curve.f(), curve.m());
}

std::vector<Place> split_places(const KummerCurve& curve, const std::vector<Field::Elem>& xs) {
  std::vector<Place> out;
  out.reserve(xs.size() * static_cast<std::size_t>(curve.m()));
  for (Field::Elem x : xs) {
    const auto ys = curve.field().mth_roots(curve.f_at(x), static_cast<std::uint32_t>(curve.m()));
    if (ys.size() != static_cast<std::size_t>(curve.m())) {
      throw Error(Errc::InvalidArgument, "x = " + std::to_string(x) + " is not a split x-value");
    }
    for (Field::Elem y : ys) out.push_back(Place::affine(x, y));
  }
  return out;
}

std::string generator_id(const Generator& g) {
  if (std::holds_alternative<YGenerator>(g)) return "y";
  return "x-b:" + std::to_string(std::get<XMinusGenerator>(g).b);
}

Generator parse_generator_id(const std::string& id) {
  if (id == "y") return YGenerator{};
  if (id.rfind("x-b:", 0) == 0) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(id.substr(4), &used);
      if (used == id.size() - 4) return XMinusGenerator{static_cast<Field::Elem>(v)};
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::ParseError, "unknown generator '" + id + "'");
}

Divisor principal_divisor(const KummerCurve& curve, const Generator& g) {
  if (!curve.infinity_ramified()) {
    throw Error(Errc::UnsupportedPlaceStructure, "infinity is not totally ramified");
  }
  Divisor div;
  const int m = curve.m();
  if (std::holds_alternative<YGenerator>(g)) {
    for (int k = 0; k < curve.num_roots(); ++k) {
      const int dk = curve.d(k);
      div.add(curve.place_over_root(k), curve.roots()[static_cast<std::size_t>(k)].lambda / dk);
    }
    div.add(Place::infinity(), -curve.deg_f());
    return div;
  }
  const Field::Elem b = std::get<XMinusGenerator>(g).b;
  if (!curve.field().contains(b)) throw Error(Errc::InvalidArgument, "b outside field");
  const int k = curve.root_index(b);
  if (k >= 0) {
    div.add(curve.place_over_root(k), m / curve.d(k));
  } else {
    const auto ys = curve.field().mth_roots(curve.f_at(b), static_cast<std::uint32_t>(m));
    if (ys.size() != static_cast<std::size_t>(m)) {
      throw Error(Errc::UnsupportedPlaceStructure,
                  "fiber over x = " + std::to_string(b) + " does not split");
    }
    for (Field::Elem y : ys) div.add(Place::affine(b, y), 1);
  }
  div.add(Place::infinity(), -m);
  return div;
}

}  // namespace kummer
