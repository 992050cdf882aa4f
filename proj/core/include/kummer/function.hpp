#pragma once

#include <vector>

#include "kummer/curve.hpp"
#include "kummer/polynomial.hpp"

namespace kummer {

struct RationalFunction {
  Poly num;
  Poly den{1};

  bool is_zero() const noexcept { return num.empty(); }
};

/// sum_{i<m} (num_i / den_i) * y^i, with y^m already reduced to f.
class CurveFunction {
 public:
  /// The zero function with m slots.
  explicit CurveFunction(int m);

  static CurveFunction constant(const KummerCurve& curve, Field::Elem c);
  /// y^i for any i >= 0, reduced.
  static CurveFunction y_power(const KummerCurve& curve, int i);
  /// (num / den) * y^i, i in [0, m).
  static CurveFunction term(const KummerCurve& curve, int i, Poly num, Poly den);

  int m() const noexcept { return static_cast<int>(terms_.size()); }
  const std::vector<RationalFunction>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept;

  CurveFunction add(const KummerCurve& curve, const CurveFunction& o) const;
  CurveFunction scale(const KummerCurve& curve, Field::Elem c) const;
  CurveFunction multiply(const KummerCurve& curve, const CurveFunction& o) const;

 private:
  std::vector<RationalFunction> terms_;
};

/// Value at an affine place. Throws PoleAtPlace, InvalidPlace.
Field::Elem evaluate(const KummerCurve& curve, const CurveFunction& fn, const Place& place);

/// Lower bound for the valuation at a ramified root, bundle or infinity;
/// exact at totally ramified places. Bundle valuations are per place above
/// the root. Returns INT_MAX for the zero function.
int valuation(const KummerCurve& curve, const CurveFunction& fn, const Place& place);

}  // namespace kummer
