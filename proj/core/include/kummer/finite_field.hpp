#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace kummer {

/// GF(p^e) with a canonical polynomial basis.
///
/// Elements are passed around as their integer encoding: the base-p digits
/// of the code are the coefficients (low degree first) of the polynomial
/// representative modulo `modulus()`. Code 0 is zero, code 1 is one.
///
/// The modulus is the lexicographically smallest monic primitive polynomial
/// of degree e, comparing coefficients starting from the constant term.
/// For e = 1 the modulus is the placeholder x and arithmetic is mod p.
///
/// A Field is a cheap handle to immutable shared tables; copies compare equal
/// exactly when (p, e) agree.
class Field {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 20;
  /// Log-domain stand-in for the zero element.
  static constexpr std::uint32_t kZeroLog = 0xFFFFFFFFu;

  /// Throws Error{NotPrime} or Error{TooLarge} (p^e > 2^20).
  static Field create(std::uint32_t p, std::uint32_t e);

  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t order() const noexcept;
  /// Coefficients low to high, length e + 1, monic.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  /// The primitive element used for the log tables (x for e > 1).
  Elem generator() const noexcept;

  bool contains(Elem a) const noexcept { return a < order(); }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws Error{DivisionByZero}.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  /// Negative exponents invert; 0^0 = 1.
  Elem pow(Elem a, std::int64_t k) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const noexcept;

  /// All y with y^m = c, ascending by code (exhaustive scan).
  std::vector<Elem> mth_roots(Elem c, std::uint32_t m) const;

  // Log-domain access for hot loops. log(0) is kZeroLog.
  std::uint32_t log(Elem a) const noexcept;
  /// exp(k) for any k; reduced mod q - 1.
  Elem exp(std::uint64_t k) const noexcept;
  /// exp_table()[k] = g^k for 0 <= k < 2(q - 1); the doubled length lets
  /// callers add two logs without reducing.
  std::span<const Elem> exp_table() const noexcept;
  std::span<const std::uint32_t> log_table() const noexcept;
  /// zech[d] = log(1 + g^d), or kZeroLog when 1 + g^d = 0. Size q - 1.
  std::span<const std::uint32_t> zech() const noexcept;
  /// log(-1): (q - 1) / 2 for odd q, 0 in characteristic 2.
  std::uint32_t log_minus_one() const noexcept;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  struct Tables;
  static std::shared_ptr<const Tables> build_tables(std::uint32_t p, std::uint32_t e);
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// A field element bound to its field; mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Field::Elem code);

  const Field& field() const noexcept { return field_; }
  Field::Elem code() const noexcept { return code_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  Field field_;
  Field::Elem code_;
};

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace kummer
