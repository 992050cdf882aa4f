#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/linalg.hpp"

namespace kummer {

/// A linear code given by a generator matrix whose rows are a basis.
struct LinearCode {
  Matrix generator;
  std::vector<Place> eval_places;  // empty when not an AG code
  std::optional<Divisor> G;

  std::size_t N() const noexcept { return generator.cols(); }
  std::size_t k() const noexcept { return generator.rows(); }
};

/// C_L(D, G): evaluations of L(G) at eval_places. Affine places of G must
/// carry coefficient -1 and are imposed as vanishing conditions.
/// Throws SupportOverlap, UnsupportedSupport, InternalInconsistency.
LinearCode ag_code(const KummerCurve& curve, const std::vector<Place>& eval_places, const Divisor& G);

Divisor divisor_gcd(const Divisor& a, const Divisor& b);
Divisor divisor_lmd(const Divisor& a, const Divisor& b);

struct Distance {
  enum class Kind { Exact, LowerBoundOnly, Infinite };
  Kind kind = Kind::Infinite;
  long value = 0;
};

/// Exact minimum weight when q^k <= 2^20, otherwise the bound N - deg G.
Distance min_distance(const LinearCode& code);
long weight(std::span<const Field::Elem> word) noexcept;

struct LcpReport {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  std::size_t N = 0;
  std::size_t rank_of_stack = 0;
  bool lcp = false;
};

/// Throws FieldMismatch, ShapeMismatch.
LcpReport is_lcp(const LinearCode& c1, const LinearCode& c2);

/// Linear-equivalence witness: reduced = target - sum mult * (gen).
struct CertificateStep {
  Generator gen;
  int mult = 0;
};
using Certificate = std::vector<CertificateStep>;

Divisor apply_certificate(const KummerCurve& curve, const Divisor& target, const Certificate& cert);

struct Thm35Report {
  bool support_disjoint = false;
  bool degree_window = false;
  bool degree_sum = false;
  bool gcd_degree = false;
  bool gcd_nonspecial = false;
  bool lmd_minus_d_nonspecial = false;
  Divisor gcd;
  Divisor reduced;  // (lmd(G, H) - D) after the certificate

  bool all_pass() const noexcept {
    return support_disjoint && degree_window && degree_sum && gcd_degree && gcd_nonspecial && lmd_minus_d_nonspecial;
  }
};

/// Checks sufficient conditions for C_L(D, G) and C_L(D, H) to form an LCP.
/// Throws CertificateInvalid when the reduced divisor is not supported on
/// ramified places, bundles and affine places with coefficient -1.
Thm35Report thm35_verify(const KummerCurve& curve, const std::vector<Place>& D, const Divisor& G,
                         const Divisor& H, const Certificate& cert);

/// True when l(B) = deg B + 1 - g; uses the degree g - 1 criterion when B
/// is supported on totally ramified places and the tuple size allows it.
bool is_nonspecial(const KummerCurve& curve, const Divisor& B);

}  // namespace kummer
