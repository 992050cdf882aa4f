#include "kummer/nonspecial.hpp"

#include <algorithm>
#include <numeric>

#include "kummer/error.hpp"
#include "kummer/intmath.hpp"

namespace kummer {

namespace {

void require_shape(const QTuple& q, const std::vector<long>& alpha) {
  if (alpha.size() != static_cast<std::size_t>(q.n())) {
    throw Error(Errc::ShapeMismatch, "alpha length does not match tuple");
  }
}

long floor_sum(const QTuple& q, const std::vector<long>& alpha) {
  long s = 0;
  for (long a : alpha) s += floor_div(a, q.m());
  return s;
}

// n + sum_k floor((alpha_k - t_k(i)) / m)
long v_i(const QTuple& q, const std::vector<long>& alpha, int i) {
  long s = q.n();
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    s += floor_div(alpha[k] - t_val(q, static_cast<int>(k), i), q.m());
  }
  return s;
}

long degree_of(const std::vector<long>& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0L); }

void assert_consistent(const QTuple& q, const std::vector<long>& alpha, long want_deg, long want_dim) {
  if (degree_of(alpha) != want_deg || dim_formula(q, alpha) != want_dim) {
    throw Error(Errc::InternalInconsistency, "criterion disagrees with the dimension formula");
  }
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::NonspecialDegGminus1: return "NonspecialDegGminus1";
    case Verdict::NonspecialDegG: return "NonspecialDegG";
    case Verdict::NonspecialHighDeg: return "NonspecialHighDeg";
    case Verdict::Special: return "Special";
    case Verdict::NegativeDim: return "NegativeDim";
  }
  return "?";
}

Verdict verdict_for(long degree, long dim, int genus) noexcept {
  if (dim == degree + 1 - genus) {
    if (degree == genus - 1) return Verdict::NonspecialDegGminus1;
    if (degree == genus) return Verdict::NonspecialDegG;
    return Verdict::NonspecialHighDeg;
  }
  if (degree < genus - 1 && dim == 0) return Verdict::NegativeDim;
  return Verdict::Special;
}

bool check_gminus1(const QTuple& q, const std::vector<long>& alpha) {
  q.require_dimension_range();
  require_shape(q, alpha);
  if (floor_sum(q, alpha) != -1) return false;
  for (int i = 1; i < q.m(); ++i) {
    if (v_i(q, alpha, i) != q.curve().beta(i)) return false;
  }
  assert_consistent(q, alpha, q.curve().genus() - 1, 0);
  return true;
}

bool check_g(const QTuple& q, const std::vector<long>& alpha) {
  q.require_dimension_range();
  require_shape(q, alpha);
  const long fs = floor_sum(q, alpha);
  bool ok = false;
  if (fs == 0) {
    ok = true;
    for (int i = 1; i < q.m() && ok; ++i) ok = v_i(q, alpha, i) == q.curve().beta(i);
  } else if (fs == -1) {
    int relaxed = 0;
    ok = true;
    for (int i = 1; i < q.m() && ok; ++i) {
      const long v = v_i(q, alpha, i);
      const int b = q.curve().beta(i);
      if (v - 1 == b) {
        ++relaxed;
      } else if (v != b) {
        ok = false;
      }
    }
    ok = ok && relaxed == 1;
  }
  if (ok) assert_consistent(q, alpha, q.curve().genus(), 1);
  return ok;
}

bool check_effective_g(const QTuple& q, const std::vector<long>& alpha) {
  require_shape(q, alpha);
  for (long a : alpha) {
    if (a < 0 || a >= q.m()) throw Error(Errc::AlphaOutOfRange, "alpha entry " + std::to_string(a) + " outside [0, m-1]");
  }
  for (int i = 1; i < q.m(); ++i) {
    if (v_i(q, alpha, i) != q.curve().beta(i)) return false;
  }
  return true;
}

Classification classify(const QTuple& q, const std::vector<long>& alpha) {
  Classification c;
  c.dim = dim_formula(q, alpha);
  c.degree = degree_of(alpha);
  c.verdict = verdict_for(c.degree, c.dim, q.curve().genus());
  return c;
}

NecessaryCondition necessary_condition(const QTuple& q) {
  const KummerCurve& curve = q.curve();
  const int r = curve.num_roots() + 1;
  const int n = q.n();
  NecessaryCondition nc;
  const long lhs = floor_div(curve.deg_f(), curve.m());
  if (lhs < r - n - 1) {
    nc.possible = false;
    nc.violating_i = 0;
    nc.witness = "floor(degf/m)=" + std::to_string(lhs) + " < r-n-1=" + std::to_string(r - n - 1);
    return nc;
  }
  for (int i = 1; i < curve.m(); ++i) {
    if (curve.beta(i) > n - 1) {
      nc.possible = false;
      nc.violating_i = i;
      nc.witness = "beta(" + std::to_string(i) + ")=" + std::to_string(curve.beta(i)) + " > n-1=" +
                   std::to_string(n - 1);
      return nc;
    }
  }
  return nc;
}

std::vector<long> GMinus1Family::residues() const {
  std::vector<long> out;
  if (alpha0) out.push_back(*alpha0);
  for (int a : alpha_multiset) out.push_back(a);
  return out;
}

std::vector<long> GMinus1Family::canonical_alpha(int m) const {
  auto out = residues();
  if (!out.empty()) out[0] -= m;
  return out;
}

std::vector<std::vector<long>> GMinus1Family::canonical_instantiations(int m) const {
  std::vector<std::vector<long>> out;
  std::vector<int> perm = alpha_multiset;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<long> a;
    if (alpha0) a.push_back(*alpha0);
    a.insert(a.end(), perm.begin(), perm.end());
    a[0] -= m;
    out.push_back(std::move(a));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

std::vector<int> multiset_from_blocks(const std::vector<int>& blocks) {
  std::vector<int> ms;
  for (std::size_t a = 0; a < blocks.size(); ++a) ms.insert(ms.end(), static_cast<std::size_t>(blocks[a]), static_cast<int>(a));
  return ms;
}

}  // namespace

GMinus1Family enum_separable_gminus1(const KummerCurve& curve, int alpha0) {
  const int m = curve.m();
  const int n = curve.num_roots();
  for (const auto& r : curve.roots()) {
    if (r.lambda != 1) throw Error(Errc::NotSeparable, "f has a repeated root");
  }
  if (n < 2 || static_cast<std::uint32_t>(n) > curve.field().order()) {
    throw Error(Errc::QTupleTooSmallOrTooLarge, "deg f outside [2, q]");
  }
  if (alpha0 < 0 || alpha0 > m - 1) throw Error(Errc::Alpha0OutOfRange, "alpha0 outside [0, m-1]");
  const bool coprime = std::gcd(m, n) == 1;
  if (!coprime && alpha0 != 0) throw Error(Errc::GcdNotOne, "gcd(m, deg f) != 1 requires alpha0 = 0");

  GMinus1Family fam;
  if (coprime) {
    fam.tuple.push_back(Place::infinity());
    fam.alpha0 = alpha0;
  }
  for (int k = 0; k < n; ++k) fam.tuple.push_back(Place::ramified(k));

  fam.block_sizes.resize(static_cast<std::size_t>(m));
  for (int i = 0; i + 1 < m; ++i) {
    fam.block_sizes[static_cast<std::size_t>(i)] =
        static_cast<int>(floor_div(alpha0 + (i + 1L) * n, m) - floor_div(alpha0 + static_cast<long>(i) * n, m));
  }
  const long last = n - floor_div(alpha0 + (m - 1L) * n, m);
  fam.block_sizes.back() = static_cast<int>(last);
  if (last != ceil_div(n - alpha0, m)) fam.block_discrepancy = true;
  if (std::accumulate(fam.block_sizes.begin(), fam.block_sizes.end(), 0) != n) {
    throw Error(Errc::InternalInconsistency, "block sizes do not sum to deg f");
  }
  fam.alpha_multiset = multiset_from_blocks(fam.block_sizes);

  if (n < m) {
    std::vector<int> closed_form;
    for (int k = 1; k <= n; ++k) closed_form.push_back(static_cast<int>(ceil_div(static_cast<long>(k) * m - alpha0, n) - 1));
    std::sort(closed_form.begin(), closed_form.end());
    if (closed_form != fam.alpha_multiset) fam.block_discrepancy = true;
  }
  return fam;
}

Lambda1Result enum_lambda1_gminus1(const QTuple& q) {
  const int m = q.m();
  for (int lam : q.lambdas()) {
    if (mod_pos(lam, m) != 1) throw Error(Errc::LambdaNotCongruentOne, "tuple multiplicity not 1 mod m");
  }
  const KummerCurve& curve = q.curve();
  const int n = q.n();
  Lambda1Result res;
  if (curve.beta(1) > n - 1) {
    res.violating_i = 1;
    res.witness = "beta(1)=" + std::to_string(curve.beta(1)) + " > n-1=" + std::to_string(n - 1);
    return res;
  }
  for (int i = 1; i + 1 < m; ++i) {
    if (curve.beta(i + 1) > curve.beta(i)) {
      res.violating_i = i + 1;
      res.witness = "beta(" + std::to_string(i + 1) + ")=" + std::to_string(curve.beta(i + 1)) + " > beta(" +
                    std::to_string(i) + ")=" + std::to_string(curve.beta(i));
      return res;
    }
  }
  GMinus1Family fam;
  fam.tuple = q.places();
  fam.block_sizes.resize(static_cast<std::size_t>(m));
  fam.block_sizes[0] = n - 1 - curve.beta(1);
  for (int i = 1; i + 1 < m; ++i) fam.block_sizes[static_cast<std::size_t>(i)] = curve.beta(i) - curve.beta(i + 1);
  fam.block_sizes[static_cast<std::size_t>(m - 1)] += curve.beta(m - 1) + 1;
  fam.alpha_multiset = multiset_from_blocks(fam.block_sizes);
  res.family = std::move(fam);
  return res;
}

std::vector<std::vector<long>> scan_gminus1(const QTuple& q) {
  const int n = q.n();
  const long m = q.m();
  double size = 1;
  for (int k = 0; k < n; ++k) size *= static_cast<double>(m);
  if (size > static_cast<double>(1 << 22)) throw Error(Errc::TooLarge, "alpha box exceeds 2^22 points");
  std::vector<std::vector<long>> hits;
  std::vector<long> alpha(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<long> shifted = alpha;
    shifted[0] -= m;
    if (check_gminus1(q, shifted)) hits.push_back(std::move(shifted));
    int k = n - 1;
    while (k >= 0 && alpha[static_cast<std::size_t>(k)] == m - 1) alpha[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++alpha[static_cast<std::size_t>(k)];
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

}  // namespace kummer
