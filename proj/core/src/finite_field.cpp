#include "kummer/finite_field.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "kummer/error.hpp"

namespace kummer {

struct Field::Tables {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  Elem gen = 0;
  std::vector<std::uint32_t> log;  // size q
  std::vector<Elem> exp;           // size 2(q-1), exp[k] = gen^k
  std::vector<std::uint32_t> zech; // size q-1
  std::uint32_t log_minus_one = 0;
};

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t k, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  b %= mod;
  while (k) {
    if (k & 1) r = r * b % mod;
    b = b * b % mod;
    k >>= 1;
  }
  return r;
}

// Residue-ring arithmetic in GF(p)[x]/(f), f monic of degree e given by its
// lower coefficients. Elements are digit vectors of length e.
class QuotientRing {
 public:
  QuotientRing(std::uint32_t p, std::vector<std::uint32_t> low)
      : p_(p), low_(std::move(low)), e_(low_.size()) {}

  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (std::size_t i = 0; i < e_; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    }
    // x^e = -(low)
    for (std::size_t d = prod.size(); d-- > e_;) {
      const std::uint64_t c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (std::size_t i = 0; i < e_; ++i) {
        prod[d - e_ + i] = (prod[d - e_ + i] + (p_ - c) * low_[i]) % p_;
      }
    }
    return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(e_)};
  }

  std::vector<std::uint32_t> pow(std::vector<std::uint32_t> b, std::uint64_t k) const {
    std::vector<std::uint32_t> r(e_, 0);
    r[0] = 1;
    while (k) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }

  std::vector<std::uint32_t> x() const {
    std::vector<std::uint32_t> v(e_, 0);
    if (e_ == 1) {
      v[0] = static_cast<std::uint32_t>((p_ - low_[0]) % p_);
    } else {
      v[1] = 1;
    }
    return v;
  }

  bool is_one(const std::vector<std::uint32_t>& v) const {
    if (v[0] != 1) return false;
    for (std::size_t i = 1; i < e_; ++i) {
      if (v[i]) return false;
    }
    return true;
  }

 private:
  std::uint64_t p_;
  std::vector<std::uint32_t> low_;
  std::size_t e_;
};

}  // namespace

std::shared_ptr<const Field::Tables> Field::build_tables(std::uint32_t p, std::uint32_t e) {
  auto t = std::make_shared<Field::Tables>();
  t->p = p;
  t->e = e;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  t->q = static_cast<std::uint32_t>(q);
  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);

  if (e == 1) {
    t->modulus = {0, 1};
    std::uint32_t g = 1;
    if (p > 2) {
      for (g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto l : factors) {
          if (powmod(g, order / l, p) == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) break;
      }
    }
    t->gen = g;
  } else {
    // Candidates ordered lexicographically by (c_0, c_1, ..., c_{e-1}).
    bool found = false;
    for (std::uint64_t v = 0; v < q && !found; ++v) {
      std::vector<std::uint32_t> low(e);
      std::uint64_t rest = v;
      for (std::uint32_t i = e; i-- > 0;) {
        low[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (low[0] == 0) continue;
      QuotientRing ring(p, low);
      const auto x = ring.x();
      if (!ring.is_one(ring.pow(x, order))) continue;
      bool primitive = true;
      for (auto l : factors) {
        if (ring.is_one(ring.pow(x, order / l))) {
          primitive = false;
          break;
        }
      }
      if (!primitive) continue;
      t->modulus = low;
      t->modulus.push_back(1);
      found = true;
    }
    if (!found) throw Error(Errc::InternalInconsistency, "no primitive polynomial found");
    t->gen = p;  // the polynomial x
  }

  // Power tables.
  t->log.assign(q, kZeroLog);
  t->exp.assign(2 * order, 0);
  if (e == 1) {
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
      t->exp[k] = static_cast<Elem>(cur);
      t->log[cur] = static_cast<std::uint32_t>(k);
      cur = cur * t->gen % p;
    }
  } else {
    std::vector<std::uint32_t> digits(e, 0);
    digits[0] = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
      std::uint64_t code = 0;
      for (std::uint32_t i = e; i-- > 0;) code = code * p + digits[i];
      t->exp[k] = static_cast<Elem>(code);
      t->log[code] = static_cast<std::uint32_t>(k);
      // multiply by x
      const std::uint32_t top = digits[e - 1];
      for (std::uint32_t i = e - 1; i > 0; --i) digits[i] = digits[i - 1];
      digits[0] = 0;
      if (top) {
        for (std::uint32_t i = 0; i < e; ++i) {
          digits[i] = static_cast<std::uint32_t>((digits[i] + std::uint64_t{p - top} * t->modulus[i]) % p);
        }
      }
    }
  }
  for (std::uint64_t k = 0; k < order; ++k) t->exp[k + order] = t->exp[k];

  t->zech.assign(order, kZeroLog);
  for (std::uint64_t d = 0; d < order; ++d) {
    const Field::Elem v = t->exp[d];
    const std::uint32_t digit0 = v % p;
    const Field::Elem w = v - digit0 + (digit0 + 1) % p;
    t->zech[d] = t->log[w];
  }
  t->log_minus_one = (p == 2) ? 0 : static_cast<std::uint32_t>(order / 2);
  return t;
}

Field Field::create(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(Errc::TooLarge, "p^e exceeds 2^20");
    }
  }

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::weak_ptr<const Tables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, e}];
  if (auto existing = slot.lock()) return Field(std::move(existing));
  std::shared_ptr<const Tables> fresh = build_tables(p, e);
  slot = fresh;
  return Field(std::move(fresh));
}

std::uint32_t Field::characteristic() const noexcept { return t_->p; }
std::uint32_t Field::degree() const noexcept { return t_->e; }
std::uint32_t Field::order() const noexcept { return t_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return t_->modulus; }
Field::Elem Field::generator() const noexcept { return t_->gen; }

Field::Elem Field::add(Elem a, Elem b) const noexcept {
  const auto& t = *t_;
  if (t.p == 2) return a ^ b;
  if (t.e == 1) {
    const Elem s = a + b;
    return s >= t.p ? s - t.p : s;
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t order = t.q - 1;
  const std::uint32_t la = t.log[a];
  const std::uint32_t lb = t.log[b];
  const std::uint32_t d = lb >= la ? lb - la : lb + order - la;
  const std::uint32_t z = t.zech[d];
  if (z == kZeroLog) return 0;
  return t.exp[la + z];
}

Field::Elem Field::neg(Elem a) const noexcept {
  const auto& t = *t_;
  if (t.p == 2 || a == 0) return a;
  if (t.e == 1) return t.p - a;
  return t.exp[t.log[a] + t.log_minus_one];
}

Field::Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return t_->exp[t_->log[a] + t_->log[b]];
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t order = t_->q - 1;
  const std::uint32_t la = t_->log[a];
  return t_->exp[la == 0 ? 0 : order - la];
}

Field::Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw Error(Errc::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Field::Elem Field::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
    return 0;
  }
  const std::int64_t order = t_->q - 1;
  std::int64_t r = (static_cast<std::int64_t>(t_->log[a]) * (k % order)) % order;
  if (r < 0) r += order;
  return t_->exp[static_cast<std::size_t>(r)];
}

Field::Elem Field::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = t_->p;
  return static_cast<Elem>(((n % p) + p) % p);
}

std::vector<Field::Elem> Field::mth_roots(Elem c, std::uint32_t m) const {
  std::vector<Elem> roots;
  for (Elem y = 0; y < t_->q; ++y) {
    if (pow(y, m) == c) roots.push_back(y);
  }
  return roots;
}

std::uint32_t Field::log(Elem a) const noexcept { return t_->log[a]; }

Field::Elem Field::exp(std::uint64_t k) const noexcept {
  return t_->exp[k % (t_->q - 1)];
}

std::span<const Field::Elem> Field::exp_table() const noexcept { return t_->exp; }
std::span<const std::uint32_t> Field::log_table() const noexcept { return t_->log; }

std::span<const std::uint32_t> Field::zech() const noexcept { return t_->zech; }

std::uint32_t Field::log_minus_one() const noexcept { return t_->log_minus_one; }

bool operator==(const Field& a, const Field& b) noexcept {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->e == b.t_->e);
}

FieldElement::FieldElement(Field field, Field::Elem code) : field_(std::move(field)), code_(code) {
  if (!field_.contains(code_)) {
    throw Error(Errc::InvalidArgument, "element code " + std::to_string(code) + " outside field");
  }
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "operands live in different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.add(a.code_, b.code_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.sub(a.code_, b.code_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.mul(a.code_, b.code_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.div(a.code_, b.code_)};
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(Errc::InvalidArgument, "unknown arithmetic op");
}

}  // namespace kummer
