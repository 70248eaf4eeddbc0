// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hyperenum/cosets.hpp"
#include "hyperenum/curves.hpp"
#include "hyperenum/galois_enum.hpp"
#include "hyperenum/oracle.hpp"
#include "hyperenum/quartics.hpp"

using namespace hyperenum;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

bool is_odd_prime_power(u64 q) {
  if (q % 2 == 0 || q < 3) return false;
  return prime_factors(q).size() == 1;
}

Outcome mass_formula() {
  Outcome o;
  const auto start = clock_type::now();
  double t13 = 0;
  for (auto [q, g] : std::vector<std::pair<u64, int>>{{3, 2}, {5, 2}, {7, 2}, {9, 2}, {11, 2}, {13, 2}, {3, 3}}) {
    const auto t0 = clock_type::now();
    auto m = mass_check(enumerate_curves(field_of_order(q), g), q, g);
    if (q == 13) t13 = seconds_since(t0);
    if (!m.pass) o.fail("(" + std::to_string(q) + "," + std::to_string(g) + ") mass " + m.value.str());
  }
  const double total = seconds_since(start);
  if (t13 >= 120) o.fail("(13,2) took " + std::to_string(t13) + " s");
  if (total >= 600) o.fail("total took " + std::to_string(total) + " s");
  if (o.pass) o.detail << "7 cases exact; (13,2) " << t13 << " s, total " << total << " s";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (u64 q : {3, 5}) {
    const FieldCtx& F = field_of_order(q);
    const auto t0 = clock_type::now();
    const auto curves = enumerate_curves(F, 2);
    const std::string why = compare_curves_with_oracle(curves, F, 2);
    const double t = seconds_since(t0);
    if (!why.empty()) o.fail("q=" + std::to_string(q) + ": " + why);
    if (t >= 900) o.fail("q=" + std::to_string(q) + " took " + std::to_string(t) + " s");
    if (o.pass) o.detail << "q=" << q << ": " << curves.size() << " curves; ";
  }
  return o;
}

// Every class of the given Galois type holds exactly one listed form.
bool partitions_type(const std::vector<HomPoly>& reps, const GaloisType& M,
                     const std::vector<std::vector<HomPoly>>& classes) {
  std::map<HomPoly, std::size_t> idx;
  std::set<std::size_t> want;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const auto& f : classes[i]) idx.emplace(f, i);
    if (galois_type(classes[i].front()) == M) want.insert(i);
  }
  std::set<std::size_t> got;
  for (const auto& f : reps) {
    auto it = idx.find(f);
    if (it == idx.end() || galois_type(f) != M || !got.insert(it->second).second) return false;
  }
  return got == want;
}

Outcome quartic_closed_forms() {
  Outcome o;
  const auto t0 = clock_type::now();
  int fields = 0;
  for (u64 q = 3; q <= 31; q += 2) {
    if (!is_odd_prime_power(q)) continue;
    const FieldCtx& F = field_of_order(q);
    ++fields;
    if (irreducible_quartic_reps(F).size() != (q + 1) / 2) o.fail("irreducible count at q=" + std::to_string(q));
    if (two_quadratic_reps(F).size() != (q - 1) / 2) o.fail("two-quadratic count at q=" + std::to_string(q));
    if (quad_linear_reps(F).size() != (q + 1) / 2) o.fail("quad-linear count at q=" + std::to_string(q));
  }
  for (u64 q : {4, 8, 16}) {
    auto r = char2_quartic_reps(field_of_order(q));
    if (r.irreducible.size() != q / 2) o.fail("char 2 irreducible count at q=" + std::to_string(q));
    if (r.two_quadratic.size() != q / 2 - 1) o.fail("char 2 two-quadratic count at q=" + std::to_string(q));
  }
  for (u64 q : {3, 5, 7}) {
    const FieldCtx& F = field_of_order(q);
    const auto classes = brute_sym_orbits(F, 4);
    if (!partitions_type(irreducible_quartic_reps(F), {4}, classes) ||
        !partitions_type(two_quadratic_reps(F), {2, 2}, classes) ||
        !partitions_type(quad_linear_reps(F), {2, 1, 1}, classes))
      o.fail("brute-force mismatch at q=" + std::to_string(q));
  }
  const double t = seconds_since(t0);
  if (t >= 60) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail << fields << " odd fields, 3 even fields, brute force at q=3,5,7; " << t << " s";
  return o;
}

bool pairwise_distinct(const std::vector<Pgl2>& reps, u64 q) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (is_rational(reps[i] * reps[j].inverse(), q)) return false;
  return true;
}

bool tiles(const std::vector<Pgl2>& reps, const FieldCtx& E, u64 q) {
  for (const auto& M : all_pgl2(E)) {
    int hits = 0;
    for (const auto& r : reps) hits += is_rational(M * r.inverse(), q);
    if (hits != 1) return false;
  }
  return true;
}

Outcome coset_representatives() {
  Outcome o;
  const auto t0 = clock_type::now();
  for (u64 q : {2, 3, 4, 5, 7, 9})
    if (coset_reps_q2(field_of_order(q)).size() != q * q * q + q) o.fail("count at q=" + std::to_string(q));
  const auto r23 = coset_reps_qp(field_of_order(2), 3);
  if (r23.size() != 84) o.fail("count at (2,3) is " + std::to_string(r23.size()));
  for (u64 q : {2, 3}) {
    const FieldCtx& F = field_of_order(q);
    const auto reps = coset_reps_q2(F);
    if (!pairwise_distinct(reps, q)) o.fail("duplicate coset at q=" + std::to_string(q));
    if (!tiles(reps, extension_of(F, 2), q)) o.fail("tiling fails at q=" + std::to_string(q));
  }
  if (!pairwise_distinct(r23, 2)) o.fail("duplicate coset at (2,3)");
  if (!tiles(r23, extension_of(field_of_order(2), 3), 2)) o.fail("tiling fails at (2,3)");
  const double t = seconds_since(t0);
  if (t >= 60) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail << "counts, uniqueness and tiling; " << t << " s";
  return o;
}

Outcome cross_polynomial() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  for (auto [q, n] : std::vector<std::pair<u64, int>>{{5, 4}, {3, 6}}) {
    const FieldCtx& F = field_of_order(q);
    const auto irr = monic_irreducibles(F, n);
    const auto G = all_pgl2(F);
    std::uniform_int_distribution<std::size_t> pf(0, irr.size() - 1), pg(0, G.size() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      HomPoly f(n, irr[pf(rng)]);
      if (cross_poly(apply(G[pg(rng)], f)) != cross_poly(f)) o.fail("invariance at (" + std::to_string(q) + "," + std::to_string(n) + ")");
    }
  }
  for (auto [q, n] : std::vector<std::pair<u64, int>>{{3, 4}, {5, 4}, {3, 6}}) {
    std::map<UniPoly, std::size_t> owner;
    std::size_t k = 0;
    for (const auto& cls : brute_sym_orbits(field_of_order(q), n)) {
      ++k;
      if (galois_type(cls.front()) != GaloisType{n}) continue;
      for (const auto& f : cls) {
        auto [it, fresh] = owner.emplace(cross_poly(f), k);
        if (!fresh && it->second != k) o.fail("collision at (" + std::to_string(q) + "," + std::to_string(n) + ")");
      }
    }
  }
  if (o.pass) o.detail << "2000 invariance trials, injectivity at (3,4), (5,4), (3,6)";
  return o;
}

Outcome method_cross_validation() {
  Outcome o;
  for (u64 q : {3, 5}) {
    const FieldCtx& F = field_of_order(q);
    std::set<UniPoly> a, b;
    for (const auto& f : reps_type_full(F, 6)) a.insert(cross_poly(f));
    for (const auto& [k, v] : naive_orbit_table(F, 6).entries) b.insert(k);
    if (a != b) o.fail("key sets differ at q=" + std::to_string(q));
    if (reps_type_full(F, 6).size() != a.size()) o.fail("duplicate keys at q=" + std::to_string(q));
  }
  for (u64 q : {3, 5, 7}) {
    Rational sum = 0;
    for (const auto& r : sym_orbit_reps(field_of_order(q), 6))
      sum += Rational(1, static_cast<long>(zero_set_stabilizer(r.form).size()));
    if (sum != Rational(static_cast<long>(q * q * q))) o.fail("form mass at q=" + std::to_string(q) + " is " + sum.str());
  }
  if (o.pass) o.detail << "key sets equal at q=3,5; form mass q^3 at q=3,5,7";
  return o;
}

Outcome mu_j_identity() {
  Outcome o;
  std::size_t checked = 0;
  for (u64 q : {5, 7, 9, 11, 13}) {
    const FieldCtx& F = field_of_order(q);
    const auto quads = monic_irreducibles(F, 2);
    for (std::size_t i = 0; i < quads.size(); ++i)
      for (std::size_t j = i + 1; j < quads.size(); ++j) {
        HomPoly f(4, quads[i] * quads[j]);
        const FieldElt m = mu(f);
        if (m.is_one()) continue;
        const FieldElt three = F.from_int(3), one = F.one();
        const FieldElt rhs = F.from_int(64) * (m + three).pow(3) / (m - one).pow(2);
        if (j_invariant(f) != rhs) o.fail("q=" + std::to_string(q) + ": " + to_string(f));
        ++checked;
      }
  }
  if (o.pass) o.detail << checked << " quartics";
  return o;
}

double min_sym_time(u64 q) {
  double best = 1e300;
  const FieldCtx& F = field_of_order(q);
  for (int r = 0; r < 3; ++r) {
    const auto t0 = clock_type::now();
    auto reps = sym_orbit_reps(F, 6);
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

Outcome scaling() {
  Outcome o;
  const double t11 = min_sym_time(11), t23 = min_sym_time(23);
  const double ratio = t23 / t11;
  if (ratio < 5 || ratio > 14) o.fail("ratio " + std::to_string(ratio));
  o.detail << (o.pass ? "" : "; ") << "q=11 " << t11 << " s, q=23 " << t23 << " s, ratio " << ratio;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"mass formula", mass_formula},
      {"oracle equivalence", oracle_equivalence},
      {"quartic closed forms", quartic_closed_forms},
      {"coset representatives", coset_representatives},
      {"cross polynomial invariant", cross_polynomial},
      {"method cross-validation", method_cross_validation},
      {"mu and j consistency", mu_j_identity},
      {"sym phase scaling", scaling},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
