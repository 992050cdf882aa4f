#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "kummer/curve.hpp"

namespace kummer {

/// An ordered tuple Q = (Q_1, ..., Q_n) of distinct totally ramified places.
class QTuple {
 public:
  /// Throws InvalidPlace if a place is not totally ramified or repeats.
  QTuple(KummerCurve curve, std::vector<Place> places);
  /// Every totally ramified place, infinity first.
  static QTuple all_ramified(const KummerCurve& curve);

  const KummerCurve& curve() const noexcept { return curve_; }
  const std::vector<Place>& places() const noexcept { return places_; }
  /// Signed multiplicities; infinity carries -deg f.
  const std::vector<int>& lambdas() const noexcept { return lambdas_; }
  int n() const noexcept { return static_cast<int>(places_.size()); }
  int m() const noexcept { return curve_.m(); }

  /// sum_k alpha_k Q_k. Throws ShapeMismatch on length mismatch.
  Divisor divisor(const std::vector<long>& alpha) const;
  /// Throws QTupleTooSmallOrTooLarge unless 2 <= n <= q.
  void require_dimension_range() const;

 private:
  KummerCurve curve_;
  std::vector<Place> places_;
  std::vector<int> lambdas_;
};

/// (i lambda_k) mod m for tuple index k; t_k(0) = 0.
/// Throws IndexOutOfRange.
int t_val(const QTuple& q, int k, int i);
/// beta(i) of the underlying curve.
int beta(const KummerCurve& curve, int i);
/// (beta(1), ..., beta(m-1))
std::vector<int> beta_values(const KummerCurve& curve);

/// Absolute maximal element of the generalized Weierstrass semigroup,
/// named by its stratum i and the vector j.
struct GammaElement {
  int i = 0;
  std::vector<long> j;

  /// (m j_k + t_k(i))_k
  std::vector<long> embedded(const QTuple& q) const;
  friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

/// Walks the elements of Gamma-hat below alpha, by stratum i ascending and
/// then j lexicographically ascending.
class GammaCursor {
 public:
  GammaCursor(const QTuple& q, std::vector<long> alpha);

  bool valid() const noexcept { return valid_; }
  const GammaElement& current() const noexcept { return cur_; }
  void next();
  /// Advances to the first element whose (i, j_1) differs from the current.
  void skip_first_coordinate();

 private:
  void enter_stratum(int i);
  bool fill_from(std::size_t pos);
  void next_stratum() { enter_stratum(cur_.i + 1); }

  const QTuple* q_;
  std::vector<long> alpha_;
  std::vector<long> upper_;
  std::vector<long> suffix_;  // suffix_[k] = sum_{l >= k} upper_[l]
  long target_ = 0;
  GammaElement cur_;
  bool valid_ = false;
};

class GammaRange {
 public:
  GammaRange(const QTuple& q, std::vector<long> alpha) : q_(&q), alpha_(std::move(alpha)) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GammaElement;
    using difference_type = std::ptrdiff_t;
    using pointer = const GammaElement*;
    using reference = const GammaElement&;

    iterator() = default;
    explicit iterator(GammaCursor c) : c_(std::move(c)) {}
    reference operator*() const { return c_->current(); }
    pointer operator->() const { return &c_->current(); }
    iterator& operator++() {
      c_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      const bool ea = !a.c_ || !a.c_->valid();
      const bool eb = !b.c_ || !b.c_->valid();
      return ea && eb;
    }

   private:
    std::optional<GammaCursor> c_;
  };

  iterator begin() const { return iterator(GammaCursor(*q_, alpha_)); }
  iterator end() const { return {}; }

 private:
  const QTuple* q_;
  std::vector<long> alpha_;
};

/// Gamma-hat_Q(alpha). The tuple must outlive the range.
inline GammaRange gamma_below(const QTuple& q, std::vector<long> alpha) {
  return {q, std::move(alpha)};
}

/// Number of classes of gamma_below under equality of the first coordinate.
long dim_via_classes(const QTuple& q, const std::vector<long>& alpha);
/// Closed-form Riemann-Roch dimension of sum alpha_k Q_k.
long dim_formula(const QTuple& q, const std::vector<long>& alpha);

}  // namespace kummer
