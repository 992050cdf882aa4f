// Acceptance checks. Prints one "CRITERION <n> PASS|FAIL" line per check and
// exits non-zero if any selected check fails. Arguments select criteria by
// number; no arguments runs all of them.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "kummer/codes.hpp"
#include "kummer/lcp.hpp"
#include "kummer/nonspecial.hpp"
#include "kummer/rrspace.hpp"
#include "oracles.hpp"

using namespace kummer;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) note << "first failure: " << what << "; ";
    pass = pass && cond;
  }
};

KummerCurve named(const std::string& name) { return *cli::builtin_curve(name); }

// Tuple (inf, root 1, ..., root 8) of the curve Z: the places of
// multiplicity 1 mod 7.
QTuple z_tuple(const KummerCurve& z) {
  std::vector<Place> places{Place::infinity()};
  for (int k = 1; k <= 8; ++k) places.push_back(Place::ramified(k));
  return QTuple(z, places);
}

const std::vector<long> kZAlpha{-7, 1, 2, 3, 3, 4, 5, 6, 6};

// Every alpha in [0, m-1]^n with the canonical j (-1 on the first place).
template <class Fn>
void for_residue_box(int n, int m, Fn&& fn) {
  std::vector<long> a(static_cast<std::size_t>(n), 0);
  for (;;) {
    auto shifted = a;
    shifted[0] -= m;
    fn(shifted);
    std::size_t k = 0;
    while (k < a.size() && a[k] == m - 1) a[k++] = 0;
    if (k == a.size()) return;
    ++a[k];
  }
}

void criterion1(Outcome& o) {
  const auto h3 = named("h3");
  const auto z = named("z");
  o.require(h3.genus() == 3, "genus(H_3) = 3");
  o.require(z.genus() == 24, "genus(Z) = 24");
  o.require(oracle::genus(h3) == 3 && oracle::genus(z) == 24, "independent Riemann-Hurwitz");
  o.note << "g(H_3)=" << h3.genus() << " g(Z)=" << z.genus();
}

void criterion2(Outcome& o) {
  const auto z = named("z");
  const auto rp = rational_places(z);
  o.require(rp.total() == 2026, "rational_places(Z) = 2026");
  o.require(!rp.partial, "Z places fully enumerated");
  const auto brute = oracle::count_rational_places(z);
  o.require(brute == 2026, "brute-force point count = 2026");
  o.note << "enumerated=" << rp.total() << " brute=" << brute;
}

void criterion3(Outcome& o) {
  const auto c = named("h3");
  const QTuple roots(c, {Place::ramified(0), Place::ramified(1), Place::ramified(2)});
  const auto cls = classify(roots, {-2, 2, 3});
  o.require(cls.dim == 1 && cls.verdict == Verdict::NonspecialDegG, "l(-2Q1+2Q2+3Q3) = 1, NonspecialDegG");
  o.require(oracle::ell(c, roots.divisor({-2, 2, 3})) == 1, "brute l = 1");
  const auto all = QTuple::all_ramified(c);
  const auto minus = classify(all, {-1, -2, 2, 3});
  o.require(minus.dim == 1 && minus.verdict == Verdict::Special, "minus Q_inf: l = 1, Special");
  o.require(oracle::ell(c, all.divisor({-1, -2, 2, 3})) == 1, "brute l = 1 after removing Q_inf");
  o.note << "l=" << cls.dim << " " << verdict_name(cls.verdict) << "; l=" << minus.dim << " "
         << verdict_name(minus.verdict);
}

void criterion4(Outcome& o) {
  const auto z = named("z");
  const auto q = z_tuple(z);
  const auto D = q.divisor(kZAlpha);
  o.require(check_gminus1(q, kZAlpha), "check_gminus1(E)");
  o.require(D.degree() == 23, "deg E = 23");
  o.require(dim_formula(q, kZAlpha) == 0 && dim_oracle(z, D) == 0, "l(E) = 0");
  o.require(oracle::ell(z, D) == 0, "brute l(E) = 0");
  o.note << "deg=" << D.degree() << " l=" << dim_formula(q, kZAlpha);
}

void criterion5(Outcome& o) {
  const auto c = named("gk2");
  const auto q = QTuple::all_ramified(c);
  o.require(q.n() == 3, "three totally ramified places");
  const auto nc = necessary_condition(q);
  o.require(!nc.possible, "necessary condition fails");
  long hits = 0, brute_hits = 0;
  // Divisors m(Q_a - Q_b) are principal, so the canonical j loses nothing:
  // every degree g - 1 divisor on the tuple is equivalent to one scanned here.
  for_residue_box(q.n(), c.m(), [&](const std::vector<long>& a) {
    hits += check_gminus1(q, a);
    const long deg = std::accumulate(a.begin(), a.end(), 0L);
    if ((deg - (c.genus() - 1)) % c.m() != 0) return;
    auto b = a;
    b[0] -= deg - (c.genus() - 1);
    brute_hits += oracle::ell(c, q.divisor(b)) == 0;
  });
  o.require(hits == 0, "no alpha passes check_gminus1");
  o.require(brute_hits == 0, "no degree g-1 divisor with l = 0 by brute force");
  o.note << "witness \"" << nc.witness << "\", scanned 729, hits=" << hits << " brute=" << brute_hits;
}

void criterion6(Outcome& o) {
  std::mt19937_64 rng(20240601);
  std::set<std::uint32_t> orders;
  long divisors = 0, mismatches = 0;
  for (int t = 0; t < 25; ++t) {
    const auto c = oracle::random_curve(rng, 12, 12);
    orders.insert(c.field().order());
    auto places = totally_ramified_places(c);
    for (int r = 0; r < 40; ++r) {
      std::shuffle(places.begin(), places.end(), rng);
      const std::size_t n = 2 + rng() % (places.size() - 1);
      const QTuple q(c, std::vector<Place>(places.begin(), places.begin() + static_cast<long>(n)));
      std::vector<long> alpha(n);
      for (auto& a : alpha) a = static_cast<long>(rng() % static_cast<unsigned>(3 * c.m() + 1)) - c.m();
      const long f = dim_formula(q, alpha);
      const long v = dim_via_classes(q, alpha);
      const long d = dim_oracle(c, q.divisor(alpha));
      const long b = oracle::ell(c, q.divisor(alpha));
      mismatches += !(f == v && v == d && d == b);
      ++divisors;
    }
  }
  o.require(divisors >= 1000, "at least 1000 divisors");
  o.require(mismatches == 0, "zero mismatches");
  o.note << divisors << " divisors on 25 curves over " << orders.size() << " field sizes, mismatches=" << mismatches;
}

void criterion7(Outcome& o) {
  std::vector<KummerCurve> curves;
  for (const auto& n : cli::builtin_curve_names()) curves.push_back(named(n));
  std::mt19937_64 rng(77);
  for (int t = 0; t < 20; ++t) curves.push_back(oracle::random_curve(rng));
  long places = 0, mismatches = 0;
  for (const auto& c : curves) {
    for (const auto& P : totally_ramified_places(c)) {
      long gaps = 0, prev = 1;
      for (int a = 1; a <= 2 * c.genus(); ++a) {
        const long cur = dim_oracle(c, Divisor{{P, a}});
        gaps += cur == prev;
        prev = cur;
      }
      mismatches += gaps != c.genus();
      ++places;
    }
  }
  o.require(mismatches == 0, "|gaps| = g at every totally ramified place");
  o.note << places << " places on " << curves.size() << " curves, mismatches=" << mismatches;
}

std::set<std::vector<long>> brute_gminus1(const QTuple& q) {
  std::set<std::vector<long>> out;
  for_residue_box(q.n(), q.m(), [&](const std::vector<long>& a) {
    if (check_gminus1(q, a)) out.insert(a);
  });
  return out;
}

void criterion8(Outcome& o) {
  for (const auto* name : {"h2", "h3"}) {
    const auto c = named(name);
    std::set<std::vector<long>> fam;
    for (int a0 = 0; a0 < c.m(); ++a0) {
      const auto f = enum_separable_gminus1(c, a0);
      for (const auto& a : f.canonical_instantiations(c.m())) fam.insert(a);
    }
    const auto brute = brute_gminus1(QTuple::all_ramified(c));
    o.require(fam == brute, std::string(name) + " separable families = brute set");
    o.note << name << ":" << brute.size() << " ";
  }
  // W-type: infinity and the three simple roots all have multiplicity 1 mod 3.
  const auto w = named("w");
  const QTuple q(w, {Place::infinity(), Place::ramified(0), Place::ramified(1), Place::ramified(2)});
  const auto res = enum_lambda1_gminus1(q);
  o.require(res.family.has_value(), "W lambda1 family exists");
  std::set<std::vector<long>> fam;
  if (res.family) {
    for (const auto& a : res.family->canonical_instantiations(w.m())) fam.insert(a);
  }
  const auto brute = brute_gminus1(q);
  o.require(fam == brute, "W lambda1 family = brute set");
  long wrong = 0;
  for (const auto& a : brute) wrong += oracle::ell(w, q.divisor(a)) != 0;
  o.require(wrong == 0, "brute set members have l = 0");
  o.note << "w:" << brute.size();
}

struct Built {
  std::string label;
  LcpConstructionResult r;
  std::size_t want_k1, want_k2;
};

std::vector<Built> h3_constructions() {
  const auto c = named("h3");
  const long N = static_cast<long>(split_places(c, split_x_values(c)).size());
  const long m = c.m(), n = c.num_roots(), l0 = c.deg_f();
  std::vector<Built> out;

  const Divisor E1{{Place::infinity(), -1}, {Place::ramified(1), 1}, {Place::ramified(2), 2}};
  const auto [lo1, hi1] = s_range_t1(c, N);
  for (long s = lo1; s <= hi1; ++s) {
    out.push_back({"H3/T1/s=" + std::to_string(s), teocodes1(c, E1, s), static_cast<std::size_t>(N - s * l0),
                   static_cast<std::size_t>(s * l0)});
  }

  // E1 on the roots from the separable family with alpha0 = 0, the -1 of j
  // moved onto the first root; E2 on (inf, root 0, root 1).
  const auto fam = enum_separable_gminus1(c, 0);
  Divisor T2E1;
  for (int k = 0; k < n; ++k) {
    T2E1.add(Place::ramified(k), fam.alpha_multiset[static_cast<std::size_t>(k)] - (k == 0 ? static_cast<int>(m) : 0));
  }
  const QTuple t2(c, {Place::infinity(), Place::ramified(0), Place::ramified(1)});
  const Divisor E2 = t2.divisor(scan_gminus1(t2).front());
  const long alpha_n = T2E1.coeff(Place::ramified(static_cast<int>(n - 1)));
  const long beta0 = E2.coeff(Place::infinity());
  for (long s : admissible_s_t2(c, T2E1, E2, N)) {
    const long k2 = s * (n - 1) + alpha_n - beta0;
    out.push_back({"H3/T2/s=" + std::to_string(s), teocodes2(c, T2E1, E2, s), static_cast<std::size_t>(N - k2),
                   static_cast<std::size_t>(k2)});
  }

  const Divisor ER{{Place::ramified(1), 1}, {Place::ramified(2), 2}};
  const auto [loR, hiR] = s_range_tr(c, N);
  for (long s = loR; s <= hiR; ++s) {
    out.push_back({"H3/TR/s=" + std::to_string(s), teocodesR(c, ER, s),
                   static_cast<std::size_t>(N - m + 1 - s * n), static_cast<std::size_t>(s * n)});
  }
  return out;
}

std::vector<Built> z_constructions() {
  const auto z = named("z");
  const auto E = z_tuple(z).divisor(kZAlpha);
  std::vector<Built> out;
  for (long s : {2L, 77L, 153L}) {
    out.push_back({"Z/T1/s=" + std::to_string(s), teocodes1(z, E, s), static_cast<std::size_t>(2016 - 13 * s),
                   static_cast<std::size_t>(13 * s)});
  }
  return out;
}

void check_built(Outcome& o, const Built& b) {
  o.require(b.r.code_g.N() == b.r.D.size() && b.r.code_g.k() == b.want_k1, b.label + " dim of C(D,G)");
  o.require(b.r.code_h.k() == b.want_k2, b.label + " dim of C(D,H)");
  o.require(b.r.report.lcp, b.label + " LCP");
  if (b.r.D.size() <= 100) {
    // Independent elimination on the stacked generators.
    Matrix stacked = b.r.code_g.generator;
    stacked.append_rows(b.r.code_h.generator);
    o.require(oracle::rank(stacked) == b.r.D.size(), b.label + " stacked rank by textbook elimination");
  }
  o.require(b.r.thm35.all_pass(), b.label + " thm35 all-pass");
}

void criterion9(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto h3 = h3_constructions();
  const double h3_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& b : h3) check_built(o, b);
  o.require(h3_secs < 30, "H_3 constructions under 30 s");
  for (const auto& b : z_constructions()) {
    check_built(o, b);
    o.require(b.r.D.size() == 2016, b.label + " length 2016");
    o.note << b.label << " [" << b.r.D.size() << "," << b.r.code_g.k() << "]/[" << b.r.D.size() << ","
           << b.r.code_h.k() << "] ";
  }
  o.note << h3.size() << " H_3 results in " << h3_secs << " s";
}

void criterion10(Outcome& o) {
  std::mt19937_64 rng(1010);
  auto all = h3_constructions();
  for (auto& b : z_constructions()) all.push_back(std::move(b));
  long codes = 0, words = 0, violations = 0;
  for (const auto& b : all) {
    const int g = b.label[0] == 'Z' ? 24 : 3;
    for (const auto* code : {&b.r.code_g, &b.r.code_h}) {
      const long N = static_cast<long>(code->N());
      const long degG = code->G->degree();
      for (int t = 0; t < 200; ++t) {
        const auto w = oracle::random_codeword(rng, code->generator);
        const long wt = weight(w);
        if (wt != 0 && wt < N - degG) ++violations;
        ++words;
      }
      if (2 * g - 2 < degG && degG < N && static_cast<long>(code->k()) != degG + 1 - g) ++violations;
      ++codes;
    }
  }
  o.require(violations == 0, "zero Goppa-bound or dimension violations");
  o.note << codes << " codes, " << words << " codewords, violations=" << violations;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<void(Outcome&)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7, criterion8,
                                                            criterion9, criterion10};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  if (selected.empty()) {
    selected.resize(criteria.size());
    std::iota(selected.begin(), selected.end(), 1);
  }
  // Wall-clock budgets in seconds; 0 means unbounded.
  const double budget[] = {1, 30, 0, 0, 10, 0, 0, 0, 600, 0};
  bool all = true;
  for (int n : selected) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::printf("CRITERION %d FAIL unknown criterion\n", n);
      all = false;
      continue;
    }
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[static_cast<std::size_t>(n - 1)](o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double limit = budget[n - 1];
    if (limit > 0 && secs > limit) {
      o.pass = false;
      o.note << "over budget of " << limit << " s";
    }
    std::printf("CRITERION %d %s (%.2f s) %s\n", n, o.pass ? "PASS" : "FAIL", secs, o.note.str().c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
