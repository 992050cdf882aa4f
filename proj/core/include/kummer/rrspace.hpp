#pragma once

#include <vector>

#include "kummer/curve.hpp"
#include "kummer/function.hpp"
#include "kummer/linalg.hpp"

namespace kummer {

/// Divisor on the x-line supported on the roots of f and infinity.
struct XLineDivisor {
  std::vector<long> at_root;  // indexed like curve.roots()
  long at_infinity = 0;

  long degree() const noexcept;
  friend bool operator==(const XLineDivisor&, const XLineDivisor&) = default;
};

/// Largest A with y^i h in L(D) for every h in L(A) on the x-line:
/// A(a_k) = floor((c_k d_k + i lambda_k) / m), A(inf) = floor((c_inf d_inf - i deg f) / m).
/// Throws UnsupportedSupport for affine places.
XLineDivisor restrict_to_xline(const KummerCurve& curve, const Divisor& D, int i);

/// L(D) = sum_i y^i L(A_i); one stratum per i with deg A_i >= 0.
struct RrStratum {
  int i = 0;
  XLineDivisor A;
  long size() const noexcept { return A.degree() + 1; }
};

std::vector<RrStratum> rr_strata(const KummerCurve& curve, const Divisor& D);

/// y^i x^j prod (x - a_k)^{-A_k}, for each stratum and 0 <= j <= deg A_i.
std::vector<CurveFunction> rr_basis(const KummerCurve& curve, const Divisor& D);

/// sum_i max(0, deg A_i + 1); independent of the semigroup formula.
long dim_oracle(const KummerCurve& curve, const Divisor& D);

/// Evaluations of rr_basis(D) (row order matches) at affine places.
Matrix evaluation_matrix(const KummerCurve& curve, const Divisor& D, const std::vector<Place>& places);

/// Functions in span(basis) vanishing at every constraint place.
/// Throws PoleAtPlace.
std::vector<CurveFunction> kernel_basis(const KummerCurve& curve, const std::vector<CurveFunction>& basis,
                                        const std::vector<Place>& constraints);

/// Splits D into its non-affine part and the affine places with coefficient
/// -1. Throws UnsupportedSupport for any other affine coefficient.
std::pair<Divisor, std::vector<Place>> split_affine(const Divisor& D);

/// l(D) for D supported on ramified places, bundles and infinity, plus
/// affine places with coefficient -1 (handled by a kernel computation).
long dim_general(const KummerCurve& curve, const Divisor& D);

}  // namespace kummer
