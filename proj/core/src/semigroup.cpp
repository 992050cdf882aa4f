#include "kummer/semigroup.hpp"

#include <algorithm>
#include <set>

#include "kummer/error.hpp"
#include "kummer/intmath.hpp"

namespace kummer {

QTuple::QTuple(KummerCurve curve, std::vector<Place> places)
    : curve_(std::move(curve)), places_(std::move(places)) {
  std::set<Place> seen;
  for (auto& p : places_) {
    p = curve_.place(p);
    if (p.kind == Place::Kind::Infinity) {
      lambdas_.push_back(curve_.lambda_infinity());
    } else if (p.kind == Place::Kind::RamifiedRoot) {
      lambdas_.push_back(curve_.roots()[static_cast<std::size_t>(p.root)].lambda);
    } else {
      throw Error(Errc::InvalidPlace, p.id() + " is not a totally ramified place");
    }
    if (!seen.insert(p).second) throw Error(Errc::InvalidPlace, p.id() + " repeated in tuple");
  }
}

QTuple QTuple::all_ramified(const KummerCurve& curve) {
  return {curve, totally_ramified_places(curve)};
}

Divisor QTuple::divisor(const std::vector<long>& alpha) const {
  if (alpha.size() != places_.size()) {
    throw Error(Errc::ShapeMismatch, "alpha has " + std::to_string(alpha.size()) + " entries, tuple has " +
                                         std::to_string(places_.size()));
  }
  Divisor d;
  for (std::size_t k = 0; k < alpha.size(); ++k) d.add(places_[k], static_cast<int>(alpha[k]));
  return d;
}

void QTuple::require_dimension_range() const {
  if (n() < 2 || static_cast<std::uint32_t>(n()) > curve_.field().order()) {
    throw Error(Errc::QTupleTooSmallOrTooLarge, "tuple size " + std::to_string(n()) + " outside [2, q]");
  }
}

int t_val(const QTuple& q, int k, int i) {
  if (k < 0 || k >= q.n()) throw Error(Errc::IndexOutOfRange, "tuple index " + std::to_string(k));
  if (i < 0 || i >= q.m()) throw Error(Errc::IndexOutOfRange, "stratum " + std::to_string(i));
  return static_cast<int>(mod_pos(static_cast<long>(i) * q.lambdas()[static_cast<std::size_t>(k)], q.m()));
}

int beta(const KummerCurve& curve, int i) { return curve.beta(i); }

std::vector<int> beta_values(const KummerCurve& curve) {
  std::vector<int> b;
  for (int i = 1; i < curve.m(); ++i) b.push_back(curve.beta(i));
  return b;
}

std::vector<long> GammaElement::embedded(const QTuple& q) const {
  std::vector<long> out(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    out[k] = static_cast<long>(q.m()) * j[k] + t_val(q, static_cast<int>(k), i);
  }
  return out;
}

GammaCursor::GammaCursor(const QTuple& q, std::vector<long> alpha) : q_(&q), alpha_(std::move(alpha)) {
  if (alpha_.size() != static_cast<std::size_t>(q.n())) {
    throw Error(Errc::ShapeMismatch, "alpha length does not match tuple");
  }
  enter_stratum(0);
}

void GammaCursor::enter_stratum(int i) {
  const std::size_t n = alpha_.size();
  const long m = q_->m();
  for (; i < m; ++i) {
    upper_.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      upper_[k] = floor_div(alpha_[k] - t_val(*q_, static_cast<int>(k), i), m);
    }
    suffix_.assign(n + 1, 0);
    for (std::size_t k = n; k-- > 0;) suffix_[k] = suffix_[k + 1] + upper_[k];
    target_ = i == 0 ? 0 : q_->curve().beta(i) + 1 - static_cast<long>(n);
    cur_.i = i;
    cur_.j.assign(n, 0);
    if (n > 0 && fill_from(0)) {
      valid_ = true;
      return;
    }
  }
  valid_ = false;
}

// Sets j[pos..] to the smallest feasible completion. Only pos can fail.
bool GammaCursor::fill_from(std::size_t pos) {
  long prefix = 0;
  for (std::size_t k = 0; k < pos; ++k) prefix += cur_.j[k];
  for (std::size_t k = pos; k < cur_.j.size(); ++k) {
    const long lo = target_ - prefix - suffix_[k + 1];
    if (lo > upper_[k]) return false;
    cur_.j[k] = lo;
    prefix += lo;
  }
  return true;
}

void GammaCursor::next() {
  if (!valid_) return;
  const std::size_t n = cur_.j.size();
  // The last coordinate is determined by the sum, so start at n - 2.
  for (std::size_t p = n - 1; p-- > 0;) {
    if (cur_.j[p] < upper_[p]) {
      ++cur_.j[p];
      fill_from(p + 1);
      return;
    }
  }
  next_stratum();
}

void GammaCursor::skip_first_coordinate() {
  if (!valid_) return;
  if (cur_.j.size() > 1 && cur_.j[0] < upper_[0]) {
    ++cur_.j[0];
    fill_from(1);
    return;
  }
  next_stratum();
}

long dim_via_classes(const QTuple& q, const std::vector<long>& alpha) {
  q.require_dimension_range();
  long classes = 0;
  for (GammaCursor c(q, alpha); c.valid(); c.skip_first_coordinate()) ++classes;
  return classes;
}

long dim_formula(const QTuple& q, const std::vector<long>& alpha) {
  q.require_dimension_range();
  if (alpha.size() != static_cast<std::size_t>(q.n())) {
    throw Error(Errc::ShapeMismatch, "alpha length does not match tuple");
  }
  const long m = q.m();
  long base = 1;
  for (long a : alpha) base += floor_div(a, m);
  long total = std::max(0L, base);
  for (int i = 1; i < m; ++i) {
    long s = q.n() - q.curve().beta(i);
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      s += floor_div(alpha[k] - t_val(q, static_cast<int>(k), i), m);
    }
    total += std::max(0L, s);
  }
  return total;
}

}  // namespace kummer
