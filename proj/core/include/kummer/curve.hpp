#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "kummer/divisor.hpp"
#include "kummer/finite_field.hpp"
#include "kummer/polynomial.hpp"

namespace kummer {

struct Root {
  Field::Elem a = 0;
  int lambda = 0;
};

/// The curve y^m = c * prod (x - a_k)^{lambda_k}.
///
/// Roots are kept in ascending encoding order and addressed by 0-based
/// index k. Infinity carries the signed multiplicity -deg f.
class KummerCurve {
 public:
  /// Throws CharDividesM, DuplicateRoot, MultiplicityOutOfRange,
  /// NoTotallyRamifiedPlace, InvalidArgument.
  static KummerCurve create(Field field, int m, Field::Elem leading, std::vector<Root> roots);
  /// f given by coefficients; must split over the field (PolynomialNotSplit).
  static KummerCurve from_polynomial(Field field, int m, const Poly& f);

  const Field& field() const noexcept { return field_; }
  int m() const noexcept { return m_; }
  Field::Elem leading() const noexcept { return leading_; }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  int num_roots() const noexcept { return static_cast<int>(roots_.size()); }
  int deg_f() const noexcept { return deg_f_; }
  int lambda_infinity() const noexcept { return -deg_f_; }
  /// gcd(lambda_k, m)
  int d(int k) const;
  /// gcd(deg f, m)
  int d_infinity() const noexcept { return d_inf_; }
  bool infinity_ramified() const noexcept { return d_inf_ == 1; }
  bool root_ramified(int k) const { return d(k) == 1; }

  const Poly& f() const noexcept { return f_; }
  Field::Elem f_at(Field::Elem x) const noexcept { return poly::eval(field_, f_, x); }
  /// Index of the root equal to a, or -1.
  int root_index(Field::Elem a) const noexcept;

  /// sum_k ceil(i lambda_k / m) + ceil(-i deg f / m) - 1, for 1 <= i <= m-1.
  int beta(int i) const;
  int genus() const;
  /// Tame Riemann-Hurwitz over the x-line; equals genus() on valid curves.
  int genus_riemann_hurwitz() const;

  /// Validates a place against this curve and fills in its degree.
  /// Throws InvalidPlace.
  Place place(const Place& p) const;
  Place place(const std::string& id) const { return place(parse_place_id(id)); }
  /// Place for root k: RamifiedRoot when d_k = 1, else Bundle.
  Place place_over_root(int k) const;

 private:
  KummerCurve() = default;

  Field field_ = Field::create(2, 1);
  int m_ = 0;
  Field::Elem leading_ = 1;
  std::vector<Root> roots_;
  std::vector<int> d_;
  int deg_f_ = 0;
  int d_inf_ = 0;
  Poly f_;
};

/// Infinity first (when d_inf = 1), then ramified roots in root order.
std::vector<Place> totally_ramified_places(const KummerCurve& curve);

struct RationalPlaces {
  /// Enumerated places: infinity, ramified roots, then affine by (x, y).
  std::vector<Place> places;
  /// True when some rational places (over non-ramified roots or infinity)
  /// are only counted, not enumerated.
  bool partial = false;
  std::size_t unresolved = 0;

  std::size_t total() const noexcept { return places.size() + unresolved; }
};

RationalPlaces rational_places(const KummerCurve& curve);

/// x0 whose fiber y^m = f(x0) has m distinct solutions, ascending.
std::vector<Field::Elem> split_x_values(const KummerCurve& curve);
/// Same test for arbitrary (f, m), allowing m = 1.
std::vector<Field::Elem> split_x_values(const Field& field, const Poly& f, int m);
/// All affine places over the given x-values, fiber by fiber, y ascending.
std::vector<Place> split_places(const KummerCurve& curve, const std::vector<Field::Elem>& xs);

struct YGenerator {};
struct XMinusGenerator {
  Field::Elem b = 0;
};
using Generator = std::variant<YGenerator, XMinusGenerator>;

/// "y" or "x-b:<enc>"
std::string generator_id(const Generator& g);
/// Throws ParseError.
Generator parse_generator_id(const std::string& id);

/// Divisor of y or of x - b. Throws UnsupportedPlaceStructure when a
/// required place cannot be represented.
Divisor principal_divisor(const KummerCurve& curve, const Generator& g);

}  // namespace kummer
