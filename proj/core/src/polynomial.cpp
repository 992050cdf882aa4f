#include "kummer/polynomial.hpp"

#include <algorithm>

#include "kummer/error.hpp"

namespace kummer::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) noexcept { return static_cast<int>(a.size()) - 1; }

bool is_zero(const Poly& a) noexcept { return a.empty(); }

Poly constant(Field::Elem c) { return c == 0 ? Poly{} : Poly{c}; }

Poly monomial(Field::Elem c, int deg) {
  if (c == 0) return {};
  Poly r(static_cast<std::size_t>(deg) + 1, 0);
  r.back() = c;
  return r;
}

Poly x_minus(const Field& F, Field::Elem b) { return {F.neg(b), 1}; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Field::Elem x = i < a.size() ? a[i] : 0;
    const Field::Elem y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  trim(r);
  return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Field::Elem x = i < a.size() ? a[i] : 0;
    const Field::Elem y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  trim(r);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const Field& F, const Poly& a, Field::Elem c) {
  if (c == 0) return {};
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

Poly pow(const Field& F, const Poly& a, unsigned k) {
  Poly r{1};
  Poly b = a;
  while (k) {
    if (k & 1u) r = mul(F, r, b);
    k >>= 1u;
    if (k) b = mul(F, b, b);
  }
  return r;
}

Field::Elem eval(const Field& F, const Poly& a, Field::Elem x) noexcept {
  Field::Elem acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  Poly rem = a;
  if (a.size() < b.size()) return {Poly{}, rem};
  Poly quo(a.size() - b.size() + 1, 0);
  const Field::Elem lead_inv = F.inv(b.back());
  for (std::size_t d = a.size(); d-- >= b.size();) {
    const Field::Elem c = F.mul(rem[d], lead_inv);
    const std::size_t shift = d - (b.size() - 1);
    quo[shift] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b[j]));
    }
    if (d == 0) break;
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

Poly make_monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

Poly from_roots(const Field& F, Field::Elem c,
                const std::vector<std::pair<Field::Elem, int>>& roots) {
  Poly r = constant(c);
  for (const auto& [a, e] : roots) {
    for (int i = 0; i < e; ++i) r = mul(F, r, x_minus(F, a));
  }
  return r;
}

int root_multiplicity(const Field& F, const Poly& a, Field::Elem b) {
  if (a.empty()) throw Error(Errc::InvalidArgument, "multiplicity in the zero polynomial");
  int k = 0;
  Poly cur = a;
  const Poly lin = x_minus(F, b);
  for (;;) {
    auto [q, r] = divmod(F, cur, lin);
    if (!r.empty()) return k;
    ++k;
    cur = std::move(q);
  }
}

}  // namespace kummer::poly
