#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/semigroup.hpp"

namespace kummer {

enum class Verdict { NonspecialDegGminus1, NonspecialDegG, NonspecialHighDeg, Special, NegativeDim };

std::string_view verdict_name(Verdict v) noexcept;

/// Nonspecial means dim = deg + 1 - g. NegativeDim covers deg < g - 1 with
/// dim = 0, where deg + 1 - g is negative and cannot be attained.
Verdict verdict_for(long degree, long dim, int genus) noexcept;

struct Classification {
  Verdict verdict = Verdict::Special;
  long degree = 0;
  long dim = 0;
};

/// Degree g - 1 criterion. Throws QTupleTooSmallOrTooLarge.
bool check_gminus1(const QTuple& q, const std::vector<long>& alpha);
/// Degree g criterion (either of its two conditions).
bool check_g(const QTuple& q, const std::vector<long>& alpha);
/// Effective degree g criterion; alpha must lie in [0, m-1]^n (AlphaOutOfRange).
bool check_effective_g(const QTuple& q, const std::vector<long>& alpha);

Classification classify(const QTuple& q, const std::vector<long>& alpha);

struct NecessaryCondition {
  bool possible = true;
  /// 0 for the degree inequality, else the violating stratum i.
  int violating_i = -1;
  std::string witness;
};

NecessaryCondition necessary_condition(const QTuple& q);

/// Non-special degree g - 1 divisors sum m j_k Q_k + alpha_sigma(k) Q_k with
/// sum j = -1, described by the multiset of residues alpha.
struct GMinus1Family {
  std::vector<Place> tuple;
  /// Residue on the first tuple place when it is held fixed (infinity in
  /// the separable family); the multiset then covers the remaining places.
  std::optional<int> alpha0;
  std::vector<int> alpha_multiset;  // ascending
  std::vector<int> block_sizes;     // block_sizes[a] = multiplicity of a
  int j_sum = -1;
  /// Set when two closed forms for the block sizes disagreed.
  bool block_discrepancy = false;

  /// Residue vector in tuple order for sigma = id.
  std::vector<long> residues() const;
  /// Residues with j = (-1, 0, ..., 0) applied.
  std::vector<long> canonical_alpha(int m) const;
  /// All distinct permutations of the multiset, each with the canonical j.
  std::vector<std::vector<long>> canonical_instantiations(int m) const;
};

/// Separable f of degree n. The tuple is (infinity, roots) when
/// gcd(m, n) = 1, otherwise the roots alone with alpha0 = 0.
/// Throws NotSeparable, GcdNotOne, Alpha0OutOfRange, QTupleTooSmallOrTooLarge.
GMinus1Family enum_separable_gminus1(const KummerCurve& curve, int alpha0);

struct Lambda1Result {
  std::optional<GMinus1Family> family;
  int violating_i = -1;
  std::string witness;
};

/// Family for tuples whose multiplicities are all 1 mod m.
/// Throws LambdaNotCongruentOne.
Lambda1Result enum_lambda1_gminus1(const QTuple& q);

/// Every alpha in [0, m-1]^n, shifted by the canonical j, that passes
/// check_gminus1; sorted. Throws TooLarge when m^n > 2^22.
std::vector<std::vector<long>> scan_gminus1(const QTuple& q);

}  // namespace kummer
