#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kummer/finite_field.hpp"

namespace kummer {

/// A place of a Kummer curve, or a symbolic bundle of places.
///
/// Bundle(k) stands for the sum of all places over the root a_k when that
/// root is not totally ramified; its degree is d_k. Ordering and equality
/// ignore `degree`, which is bookkeeping filled in by the curve.
struct Place {
  enum class Kind { Infinity, RamifiedRoot, Bundle, Affine };

  Kind kind = Kind::Infinity;
  int root = -1;
  Field::Elem x = 0;
  Field::Elem y = 0;
  int degree = 1;

  static Place infinity() { return {}; }
  static Place ramified(int k) { return {Kind::RamifiedRoot, k, 0, 0, 1}; }
  static Place bundle(int k, int deg) { return {Kind::Bundle, k, 0, 0, deg}; }
  static Place affine(Field::Elem x0, Field::Elem y0) { return {Kind::Affine, -1, x0, y0, 1}; }

  bool is_affine() const noexcept { return kind == Kind::Affine; }

  /// "inf", "root:<k>", "bundle:<k>", "aff:<x>:<y>"
  std::string id() const;

  friend bool operator==(const Place& a, const Place& b) noexcept {
    return a.kind == b.kind && a.root == b.root && a.x == b.x && a.y == b.y;
  }
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.root <=> b.root; c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

/// Parses a place id. Bundle degrees are left at 1; use
/// KummerCurve::place to obtain a validated place. Throws InvalidPlace.
Place parse_place_id(const std::string& id);

/// Finite formal sum of places with nonzero integer coefficients.
class Divisor {
 public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const Place, int>> init);

  int coeff(const Place& p) const;
  /// Adds c to the coefficient of p, dropping it if the result is zero.
  void add(const Place& p, int c);

  const std::map<Place, int>& entries() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }
  long degree() const;
  std::vector<Place> support() const;
  bool is_effective() const;

  Divisor operator-() const;
  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int k, const Divisor& d);
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable "2*root:0 - 3*inf".
  std::string to_string() const;

 private:
  std::map<Place, int> coeffs_;
};

}  // namespace kummer
