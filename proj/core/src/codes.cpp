#include "kummer/codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "kummer/error.hpp"
#include "kummer/nonspecial.hpp"
#include "kummer/rrspace.hpp"

namespace kummer {

LinearCode ag_code(const KummerCurve& curve, const std::vector<Place>& eval_places, const Divisor& G) {
  const std::set<Place> eval_set(eval_places.begin(), eval_places.end());
  for (const auto& p : G.support()) {
    if (eval_set.count(p)) throw Error(Errc::SupportOverlap, p.id() + " is in both G and the evaluation set");
  }
  auto [rest, affine] = split_affine(G);
  Matrix gen = evaluation_matrix(curve, rest, eval_places);
  if (!affine.empty()) {
    const Matrix K = evaluation_matrix(curve, rest, affine);
    const Matrix W = nullspace(transpose(K));
    gen = multiply(W, gen);
  }
  const EchelonForm basis = row_basis(gen);
  if (basis.pivots.size() < gen.rows()) gen = basis.matrix;

  const long N = static_cast<long>(eval_places.size());
  const long deg = G.degree();
  const int g = curve.genus();
  if (2L * g - 2 < deg && deg < N && static_cast<long>(gen.rows()) != deg + 1 - g) {
    throw Error(Errc::InternalInconsistency, "code dimension differs from deg G + 1 - g");
  }
  return {std::move(gen), eval_places, G};
}

Divisor divisor_gcd(const Divisor& a, const Divisor& b) {
  Divisor r;
  std::set<Place> keys;
  for (const auto& p : a.support()) keys.insert(p);
  for (const auto& p : b.support()) keys.insert(p);
  for (const auto& p : keys) r.add(p, std::min(a.coeff(p), b.coeff(p)));
  return r;
}

Divisor divisor_lmd(const Divisor& a, const Divisor& b) {
  Divisor r;
  std::set<Place> keys;
  for (const auto& p : a.support()) keys.insert(p);
  for (const auto& p : b.support()) keys.insert(p);
  for (const auto& p : keys) r.add(p, std::max(a.coeff(p), b.coeff(p)));
  return r;
}

long weight(std::span<const Field::Elem> word) noexcept {
  return static_cast<long>(std::count_if(word.begin(), word.end(), [](Field::Elem v) { return v != 0; }));
}

Distance min_distance(const LinearCode& code) {
  const std::size_t k = code.k();
  const std::size_t N = code.N();
  if (k == 0) return {Distance::Kind::Infinite, 0};
  const Field& F = code.generator.field();
  const double space = std::pow(static_cast<double>(F.order()), static_cast<double>(k));
  if (space > static_cast<double>(1u << 20)) {
    const long bound = code.G ? static_cast<long>(N) - code.G->degree() : 1;
    return {Distance::Kind::LowerBoundOnly, std::max(1L, bound)};
  }
  // Walk coefficient vectors in base q, updating the codeword incrementally.
  std::vector<Field::Elem> coeff(k, 0);
  std::vector<Field::Elem> word(N, 0);
  long best = static_cast<long>(N) + 1;
  const Field::Elem q = F.order();
  for (;;) {
    std::size_t r = 0;
    while (r < k && coeff[r] == q - 1) {
      // (q-1) -> 0: subtract the old multiple
      const auto row = code.generator.row(r);
      for (std::size_t c = 0; c < N; ++c) word[c] = F.sub(word[c], F.mul(q - 1, row[c]));
      coeff[r] = 0;
      ++r;
    }
    if (r == k) break;
    const auto row = code.generator.row(r);
    const Field::Elem old = coeff[r];
    const Field::Elem delta = F.sub(old + 1, old);
    for (std::size_t c = 0; c < N; ++c) word[c] = F.add(word[c], F.mul(delta, row[c]));
    coeff[r] = old + 1;
    best = std::min(best, weight(word));
  }
  return {Distance::Kind::Exact, best};
}

LcpReport is_lcp(const LinearCode& c1, const LinearCode& c2) {
  if (!(c1.generator.field() == c2.generator.field())) throw Error(Errc::FieldMismatch, "codes over different fields");
  if (c1.N() != c2.N()) throw Error(Errc::ShapeMismatch, "codes have different lengths");
  LcpReport rep;
  rep.k1 = c1.k();
  rep.k2 = c2.k();
  rep.N = c1.N();
  rep.rank_of_stack = stack_rank(c1.generator, c2.generator);
  rep.lcp = rep.k1 + rep.k2 == rep.N && rep.rank_of_stack == rep.N;
  return rep;
}

Divisor apply_certificate(const KummerCurve& curve, const Divisor& target, const Certificate& cert) {
  Divisor r = target;
  for (const auto& step : cert) r -= step.mult * principal_divisor(curve, step.gen);
  return r;
}

bool is_nonspecial(const KummerCurve& curve, const Divisor& B) {
  const long deg = B.degree();
  const int g = curve.genus();
  bool ramified_only = true;
  for (const auto& p : B.support()) {
    ramified_only = ramified_only && (p.kind == Place::Kind::Infinity || p.kind == Place::Kind::RamifiedRoot);
  }
  if (ramified_only && deg == g - 1) {
    const QTuple q = QTuple::all_ramified(curve);
    if (q.n() >= 2 && static_cast<std::uint32_t>(q.n()) <= curve.field().order()) {
      std::vector<long> alpha;
      for (const auto& p : q.places()) alpha.push_back(B.coeff(p));
      return check_gminus1(q, alpha);
    }
  }
  return dim_general(curve, B) == deg + 1 - g;
}

Thm35Report thm35_verify(const KummerCurve& curve, const std::vector<Place>& D, const Divisor& G,
                         const Divisor& H, const Certificate& cert) {
  Thm35Report rep;
  const long N = static_cast<long>(D.size());
  const int g = curve.genus();
  Divisor Ddiv;
  for (const auto& p : D) Ddiv.add(p, 1);

  rep.support_disjoint = true;
  for (const auto& p : D) {
    if (G.coeff(p) != 0 || H.coeff(p) != 0) rep.support_disjoint = false;
  }
  const long dG = G.degree();
  const long dH = H.degree();
  rep.degree_window = 2L * g - 2 < dG && dG < N && 2L * g - 2 < dH && dH < N;
  rep.degree_sum = dG + dH == N + 2L * g - 2;
  rep.gcd = divisor_gcd(G, H);
  rep.gcd_degree = rep.gcd.degree() == g - 1;

  rep.reduced = apply_certificate(curve, divisor_lmd(G, H) - Ddiv, cert);
  for (const auto& [p, c] : rep.reduced.entries()) {
    if (p.is_affine() && c != -1) {
      throw Error(Errc::CertificateInvalid, "certificate leaves " + std::to_string(c) + "*" + p.id());
    }
  }
  rep.gcd_nonspecial = rep.gcd_degree && is_nonspecial(curve, rep.gcd);
  rep.lmd_minus_d_nonspecial = is_nonspecial(curve, rep.reduced);
  return rep;
}

}  // namespace kummer
