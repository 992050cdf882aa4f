#include "kummer/function.hpp"

#include <algorithm>
#include <climits>

#include "kummer/error.hpp"
#include "kummer/intmath.hpp"

namespace kummer {

namespace {

RationalFunction reduce(const Field& F, Poly num, Poly den) {
  poly::trim(num);
  poly::trim(den);
  if (den.empty()) throw Error(Errc::DivisionByZero, "zero denominator");
  if (num.empty()) return {{}, {1}};
  const Poly g = poly::gcd(F, num, den);
  if (poly::degree(g) > 0) {
    num = poly::divmod(F, num, g).first;
    den = poly::divmod(F, den, g).first;
  }
  const Field::Elem inv = F.inv(den.back());
  return {poly::scale(F, num, inv), poly::scale(F, den, inv)};
}

RationalFunction rf_add(const Field& F, const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den == b.den) return reduce(F, poly::add(F, a.num, b.num), a.den);
  return reduce(F, poly::add(F, poly::mul(F, a.num, b.den), poly::mul(F, b.num, a.den)),
                poly::mul(F, a.den, b.den));
}

RationalFunction rf_mul(const Field& F, const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return reduce(F, poly::mul(F, a.num, b.num), poly::mul(F, a.den, b.den));
}

// ord_{x=a}(p), p nonzero.
int ord_at(const Field& F, const Poly& p, Field::Elem a) { return poly::root_multiplicity(F, p, a); }

}  // namespace

CurveFunction::CurveFunction(int m) : terms_(static_cast<std::size_t>(m)) {}

bool CurveFunction::is_zero() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const RationalFunction& t) { return t.is_zero(); });
}

CurveFunction CurveFunction::constant(const KummerCurve& curve, Field::Elem c) {
  CurveFunction fn(curve.m());
  fn.terms_[0] = {poly::constant(c), {1}};
  return fn;
}

CurveFunction CurveFunction::y_power(const KummerCurve& curve, int i) {
  if (i < 0) throw Error(Errc::InvalidArgument, "negative power of y");
  CurveFunction fn(curve.m());
  fn.terms_[static_cast<std::size_t>(i % curve.m())] = {
      poly::pow(curve.field(), curve.f(), static_cast<unsigned>(i / curve.m())), {1}};
  return fn;
}

CurveFunction CurveFunction::term(const KummerCurve& curve, int i, Poly num, Poly den) {
  if (i < 0 || i >= curve.m()) throw Error(Errc::IndexOutOfRange, "y-power out of range");
  CurveFunction fn(curve.m());
  fn.terms_[static_cast<std::size_t>(i)] = reduce(curve.field(), std::move(num), std::move(den));
  return fn;
}

CurveFunction CurveFunction::add(const KummerCurve& curve, const CurveFunction& o) const {
  CurveFunction r(m());
  for (std::size_t i = 0; i < terms_.size(); ++i) r.terms_[i] = rf_add(curve.field(), terms_[i], o.terms_[i]);
  return r;
}

CurveFunction CurveFunction::scale(const KummerCurve& curve, Field::Elem c) const {
  CurveFunction r(m());
  if (c == 0) return r;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    r.terms_[i] = {poly::scale(curve.field(), terms_[i].num, c), terms_[i].den};
  }
  return r;
}

CurveFunction CurveFunction::multiply(const KummerCurve& curve, const CurveFunction& o) const {
  const Field& F = curve.field();
  const std::size_t m = terms_.size();
  CurveFunction r(static_cast<int>(m));
  const RationalFunction f_rf{curve.f(), {1}};
  for (std::size_t i = 0; i < m; ++i) {
    if (terms_[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (o.terms_[j].is_zero()) continue;
      RationalFunction prod = rf_mul(F, terms_[i], o.terms_[j]);
      std::size_t k = i + j;
      if (k >= m) {
        k -= m;
        prod = rf_mul(F, prod, f_rf);
      }
      r.terms_[k] = rf_add(F, r.terms_[k], prod);
    }
  }
  return r;
}

Field::Elem evaluate(const KummerCurve& curve, const CurveFunction& fn, const Place& place) {
  if (!place.is_affine()) throw Error(Errc::InvalidPlace, "evaluation needs an affine place");
  const Field& F = curve.field();
  Field::Elem acc = 0;
  Field::Elem ypow = 1;
  for (const auto& t : fn.terms()) {
    if (!t.is_zero()) {
      const Field::Elem den = poly::eval(F, t.den, place.x);
      if (den == 0) throw Error(Errc::PoleAtPlace, "denominator vanishes at " + place.id());
      acc = F.add(acc, F.mul(F.div(poly::eval(F, t.num, place.x), den), ypow));
    }
    ypow = F.mul(ypow, place.y);
  }
  return acc;
}

int valuation(const KummerCurve& curve, const CurveFunction& fn, const Place& place) {
  const Field& F = curve.field();
  const long m = curve.m();
  long best = LONG_MAX;
  for (std::size_t i = 0; i < fn.terms().size(); ++i) {
    const auto& t = fn.terms()[i];
    if (t.is_zero()) continue;
    long v = 0;
    switch (place.kind) {
      case Place::Kind::Infinity: {
        const long e = m / curve.d_infinity();
        v = e * (poly::degree(t.den) - poly::degree(t.num)) -
            static_cast<long>(i) * curve.deg_f() / curve.d_infinity();
        break;
      }
      case Place::Kind::RamifiedRoot:
      case Place::Kind::Bundle: {
        const auto k = static_cast<std::size_t>(place.root);
        const Field::Elem a = curve.roots().at(k).a;
        const long dk = curve.d(place.root);
        v = (m / dk) * (ord_at(F, t.num, a) - ord_at(F, t.den, a)) +
            static_cast<long>(i) * curve.roots()[k].lambda / dk;
        break;
      }
      case Place::Kind::Affine:
        throw Error(Errc::InvalidPlace, "valuation at affine places is not supported");
    }
    best = std::min(best, v);
  }
  return best == LONG_MAX ? INT_MAX : static_cast<int>(best);
}

}  // namespace kummer
