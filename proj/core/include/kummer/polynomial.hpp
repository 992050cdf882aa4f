#pragma once

#include <utility>
#include <vector>

#include "kummer/finite_field.hpp"

namespace kummer {

/// Univariate polynomial over a Field, coefficients low degree first.
/// Kept trimmed: no trailing zeros, the zero polynomial is empty.
using Poly = std::vector<Field::Elem>;

namespace poly {

void trim(Poly& a);
/// -1 for the zero polynomial.
int degree(const Poly& a) noexcept;
bool is_zero(const Poly& a) noexcept;

Poly constant(Field::Elem c);
Poly monomial(Field::Elem c, int deg);
/// x - b
Poly x_minus(const Field& F, Field::Elem b);

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Field::Elem c);
Poly pow(const Field& F, const Poly& a, unsigned k);
Field::Elem eval(const Field& F, const Poly& a, Field::Elem x) noexcept;

/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Field& F, Poly a, Poly b);
Poly make_monic(const Field& F, const Poly& a);

/// c * prod (x - a_k)^{e_k}
Poly from_roots(const Field& F, Field::Elem c,
                const std::vector<std::pair<Field::Elem, int>>& roots);

/// Multiplicity of b as a root of a (a must be nonzero).
int root_multiplicity(const Field& F, const Poly& a, Field::Elem b);

}  // namespace poly
}  // namespace kummer
