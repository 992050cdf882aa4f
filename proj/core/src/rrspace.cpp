#include "kummer/rrspace.hpp"

#include <numeric>

#include "kummer/error.hpp"
#include "kummer/intmath.hpp"

namespace kummer {

long XLineDivisor::degree() const noexcept {
  return std::accumulate(at_root.begin(), at_root.end(), at_infinity);
}

XLineDivisor restrict_to_xline(const KummerCurve& curve, const Divisor& D, int i) {
  if (i < 0 || i >= curve.m()) throw Error(Errc::IndexOutOfRange, "stratum " + std::to_string(i));
  const long m = curve.m();
  std::vector<long> c(static_cast<std::size_t>(curve.num_roots()), 0);
  long c_inf = 0;
  for (const auto& [p, coeff] : D.entries()) {
    switch (p.kind) {
      case Place::Kind::Infinity:
        if (!curve.infinity_ramified()) throw Error(Errc::UnsupportedSupport, "infinity is not totally ramified");
        c_inf = coeff;
        break;
      case Place::Kind::RamifiedRoot:
      case Place::Kind::Bundle:
        if (p.root < 0 || p.root >= curve.num_roots()) throw Error(Errc::UnsupportedSupport, "unknown " + p.id());
        if ((p.kind == Place::Kind::RamifiedRoot) != curve.root_ramified(p.root)) {
          throw Error(Errc::UnsupportedSupport, p.id() + " does not match the ramification at that root");
        }
        c[static_cast<std::size_t>(p.root)] = coeff;
        break;
      case Place::Kind::Affine:
        throw Error(Errc::UnsupportedSupport, "affine place " + p.id() + " in support");
    }
  }
  XLineDivisor A;
  A.at_root.resize(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const long dk = curve.d(static_cast<int>(k));
    A.at_root[k] = floor_div(c[k] * dk + static_cast<long>(i) * curve.roots()[k].lambda, m);
  }
  A.at_infinity = floor_div(c_inf * curve.d_infinity() - static_cast<long>(i) * curve.deg_f(), m);
  return A;
}

std::vector<RrStratum> rr_strata(const KummerCurve& curve, const Divisor& D) {
  std::vector<RrStratum> out;
  for (int i = 0; i < curve.m(); ++i) {
    XLineDivisor A = restrict_to_xline(curve, D, i);
    if (A.degree() >= 0) out.push_back({i, std::move(A)});
  }
  return out;
}

std::vector<CurveFunction> rr_basis(const KummerCurve& curve, const Divisor& D) {
  const Field& F = curve.field();
  std::vector<CurveFunction> out;
  for (const auto& st : rr_strata(curve, D)) {
    Poly num{1};
    Poly den{1};
    for (std::size_t k = 0; k < st.A.at_root.size(); ++k) {
      const long a = st.A.at_root[k];
      if (a == 0) continue;
      const Poly lin = poly::x_minus(F, curve.roots()[k].a);
      if (a > 0) {
        den = poly::mul(F, den, poly::pow(F, lin, static_cast<unsigned>(a)));
      } else {
        num = poly::mul(F, num, poly::pow(F, lin, static_cast<unsigned>(-a)));
      }
    }
    for (long j = 0; j < st.size(); ++j) {
      out.push_back(CurveFunction::term(curve, st.i, poly::mul(F, num, poly::monomial(1, static_cast<int>(j))), den));
    }
  }
  return out;
}

long dim_oracle(const KummerCurve& curve, const Divisor& D) {
  long total = 0;
  for (int i = 0; i < curve.m(); ++i) total += std::max(0L, restrict_to_xline(curve, D, i).degree() + 1);
  return total;
}

Matrix evaluation_matrix(const KummerCurve& curve, const Divisor& D, const std::vector<Place>& places) {
  const Field& F = curve.field();
  const auto strata = rr_strata(curve, D);
  long rows = 0;
  for (const auto& st : strata) rows += st.size();
  Matrix M(F, static_cast<std::size_t>(rows), places.size());
  for (std::size_t c = 0; c < places.size(); ++c) {
    const Place& P = places[c];
    if (!P.is_affine()) throw Error(Errc::InvalidPlace, "evaluation needs affine places");
    // base_k = prod (x0 - a_k)^{-A_k}, computed in the log domain.
    std::vector<std::uint32_t> root_logs(curve.roots().size());
    for (std::size_t k = 0; k < root_logs.size(); ++k) {
      const Field::Elem diff = F.sub(P.x, curve.roots()[k].a);
      if (diff == 0) throw Error(Errc::PoleAtPlace, P.id() + " lies over a root of f");
      root_logs[k] = F.log(diff);
    }
    const std::int64_t order = F.order() - 1;
    std::size_t r = 0;
    for (const auto& st : strata) {
      std::int64_t base_log = 0;
      for (std::size_t k = 0; k < root_logs.size(); ++k) {
        base_log -= static_cast<std::int64_t>(root_logs[k]) * (st.A.at_root[k] % order);
      }
      base_log = mod_pos(base_log, order);
      Field::Elem v = F.mul(F.exp(static_cast<std::uint64_t>(base_log)), F.pow(P.y, st.i));
      for (long j = 0; j < st.size(); ++j) {
        M.at(r++, c) = v;
        v = F.mul(v, P.x);
      }
    }
  }
  return M;
}

namespace {

// Coefficient vectors (rows) w with w^T E = 0, for E = basis x places.
Matrix left_kernel(const Matrix& E) { return nullspace(transpose(E)); }

}  // namespace

std::vector<CurveFunction> kernel_basis(const KummerCurve& curve, const std::vector<CurveFunction>& basis,
                                        const std::vector<Place>& constraints) {
  if (constraints.empty()) return basis;
  const Field& F = curve.field();
  Matrix E(F, basis.size(), constraints.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < constraints.size(); ++c) E.at(r, c) = evaluate(curve, basis[r], constraints[c]);
  }
  const Matrix W = left_kernel(E);
  std::vector<CurveFunction> out;
  for (std::size_t w = 0; w < W.rows(); ++w) {
    CurveFunction acc(curve.m());
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (W.at(w, r) != 0) acc = acc.add(curve, basis[r].scale(curve, W.at(w, r)));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::pair<Divisor, std::vector<Place>> split_affine(const Divisor& D) {
  Divisor rest;
  std::vector<Place> affine;
  for (const auto& [p, c] : D.entries()) {
    if (!p.is_affine()) {
      rest.add(p, c);
    } else if (c == -1) {
      affine.push_back(p);
    } else {
      throw Error(Errc::UnsupportedSupport, "affine place " + p.id() + " with coefficient " + std::to_string(c));
    }
  }
  return {rest, affine};
}

long dim_general(const KummerCurve& curve, const Divisor& D) {
  auto [rest, affine] = split_affine(D);
  if (affine.empty()) return dim_oracle(curve, rest);
  const Matrix E = evaluation_matrix(curve, rest, affine);
  return static_cast<long>(E.rows() - rank(E));
}

}  // namespace kummer
