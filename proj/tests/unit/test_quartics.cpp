#include <doctest.h>

#include <set>

#include "hyperenum/quartics.hpp"

using namespace hyperenum;

namespace {

HomPoly form(const FieldCtx& F, int n, std::initializer_list<i64> c) {
  std::vector<i64> v(c);
  return HomPoly(n, UniPoly::from_ints(F, v));
}

// Every separable monic quartic of the given Galois type, by enumeration of
// all monic forms of degree 4 (with and without the zero at infinity).
std::vector<HomPoly> quartics_of_type(const FieldCtx& F, const GaloisType& type) {
  std::vector<HomPoly> out;
  const u64 q = F.order();
  for (int d : {3, 4}) {
    u64 total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (u64 idx = 0; idx < total; ++idx) {
      std::vector<FieldElt> c;
      u64 v = idx;
      for (int i = 0; i < d; ++i) {
        c.push_back(F.element_at(v % q));
        v /= q;
      }
      c.push_back(F.one());
      HomPoly f(4, UniPoly(F, c));
      if (is_separable(f) && galois_type(f) == type) out.push_back(f);
    }
  }
  return out;
}

// Checks that each orbit of `all` under the full group meets `reps` exactly once.
void check_complete_unique(const std::vector<HomPoly>& all, const std::vector<HomPoly>& reps) {
  const FieldCtx& F = all.front().ctx();
  auto group = all_pgl2(F);
  std::set<HomPoly> rep_set(reps.begin(), reps.end());
  CHECK(rep_set.size() == reps.size());
  std::set<HomPoly> seen;
  std::size_t orbits = 0;
  for (const auto& f : all) {
    if (seen.count(f)) continue;
    ++orbits;
    std::set<HomPoly> orb;
    for (const auto& g : group) orb.insert(apply(g, f));
    int hits = 0;
    for (const auto& h : orb) {
      seen.insert(h);
      hits += static_cast<int>(rep_set.count(h));
    }
    CHECK(hits == 1);
  }
  CHECK(orbits == reps.size());
}

}  // namespace

TEST_CASE("auxiliary elements") {
  for (u64 q : {3, 5, 7, 9, 11, 25, 27}) {
    const FieldCtx& F = field_of_order(q);
    QuarticParams p = quartic_params(F);
    const Embedding& e12 = embed(F, *p.quad);
    CHECK_FALSE(e12.contains(p.rho));
    CHECK(e12(p.nu) == p.rho * p.rho);
    CHECK_FALSE(is_square(p.nu));
    CHECK(p.quart->multiplicative_order(p.gamma) == 2 * (q * q - 1));
    CHECK(p.gamma * p.gamma == embed(*p.quad, *p.quart)(p.zeta));
    CHECK(p.quad->multiplicative_order(p.zeta) == q * q - 1);
  }
  const FieldCtx& F4 = FieldCtx::get(2, 2);
  CHECK(absolute_trace(quartic_params(F4).nu).is_one());
}

TEST_CASE("representative counts") {
  for (u64 q = 3; q <= 31; q += 2) {
    if (prime_factors(q).size() != 1) continue;
    const FieldCtx& F = field_of_order(q);
    auto irr = irreducible_quartic_reps(F);
    auto two = two_quadratic_reps(F);
    auto ql = quad_linear_reps(F);
    CHECK(irr.size() == (q + 1) / 2);
    CHECK(two.size() == (q - 1) / 2);
    CHECK(ql.size() == (q + 1) / 2);
    for (const auto& f : irr) CHECK(galois_type(f) == GaloisType{4});
    for (const auto& f : two) CHECK(galois_type(f) == GaloisType{2, 2});
    for (const auto& f : ql) CHECK(galois_type(f) == GaloisType{2, 1, 1});
  }
  for (u64 q : {2, 4, 8, 16}) {
    const FieldCtx& F = field_of_order(q);
    auto r = char2_quartic_reps(F);
    CHECK(r.irreducible.size() == q / 2);
    CHECK(r.two_quadratic.size() == q / 2 - 1);
    CHECK(quad_linear_reps(F).size() == (q + 1) / 2);
    for (const auto& f : r.irreducible) CHECK(is_irreducible(f.dehom()));
    for (const auto& f : r.two_quadratic) CHECK(galois_type(f) == GaloisType{2, 2});
  }
  CHECK_THROWS_AS(irreducible_quartic_reps(FieldCtx::get(2, 2)), FieldError);
  CHECK_THROWS_AS(two_quadratic_reps(FieldCtx::get(2, 3)), FieldError);
  CHECK_THROWS_AS(char2_quartic_reps(make_prime_field(3)), FieldError);
}

TEST_CASE("completeness against exhaustive orbits") {
  for (u64 q : {3, 5, 7}) {
    const FieldCtx& F = field_of_order(q);
    check_complete_unique(quartics_of_type(F, {4}), irreducible_quartic_reps(F));
    check_complete_unique(quartics_of_type(F, {2, 2}), two_quadratic_reps(F));
    check_complete_unique(quartics_of_type(F, {2, 1, 1}), quad_linear_reps(F));
  }
  for (u64 q : {2, 4}) {
    const FieldCtx& F = field_of_order(q);
    auto r = char2_quartic_reps(F);
    check_complete_unique(quartics_of_type(F, {4}), r.irreducible);
    if (q > 2) check_complete_unique(quartics_of_type(F, {2, 2}), r.two_quadratic);
    else CHECK(quartics_of_type(F, {2, 2}).empty());
    check_complete_unique(quartics_of_type(F, {2, 1, 1}), quad_linear_reps(F));
  }
  check_complete_unique(quartics_of_type(field_of_order(9), {4}), irreducible_quartic_reps(field_of_order(9)));
}

TEST_CASE("mu") {
  const FieldCtx& F5 = make_prime_field(5);
  HomPoly f = HomPoly(2, UniPoly::from_ints(F5, std::vector<i64>{3, 0, 1})) * HomPoly(2, UniPoly::from_ints(F5, std::vector<i64>{1, 1, 1}));
  CHECK(mu(f) == F5.from_int(4));
  // y (x - 0 y)(x^2 + 0 x + 2): mu = 0.
  CHECK(mu(form(F5, 4, {0, 2, 0, 1})).is_zero());
  CHECK_THROWS_AS(mu(form(F5, 4, {0, -1, 0, 1})), FieldError);

  for (u64 q : {3, 5, 7, 9}) {
    const FieldCtx& F = field_of_order(q);
    auto group = all_pgl2(F);
    for (const auto& g : quartics_of_type(F, {2, 2})) {
      CHECK((mu(g).is_zero() || is_square(mu(g))));
      CHECK(mu(apply(group[g.dehom().coeff(0).coeff(0) % group.size()], g)) == mu(g));
    }
    for (const auto& g : quartics_of_type(F, {2, 1, 1})) {
      FieldElt m = mu(g);
      CHECK((m.is_zero() || !is_square(m)));
      CHECK(mu(apply(group[(g.dehom().coeff(1).coeff(0) * 7) % group.size()], g)) == m);
    }
  }
  const FieldCtx& F4 = FieldCtx::get(2, 2);
  auto group4 = all_pgl2(F4);
  for (const auto& g : quartics_of_type(F4, {2, 2}))
    for (std::size_t i = 0; i < group4.size(); i += 7) CHECK(mu(apply(group4[i], g)) == mu(g));
}

TEST_CASE("mu tables") {
  for (u64 q : {3, 5, 7, 9, 11, 13}) {
    const FieldCtx& F = field_of_order(q);
    MuTable t = mu_table(F);
    std::set<FieldElt> two, ql;
    for (const auto& [key, f] : t.entries) (key.first == QuarticKind::two_quadratic ? two : ql).insert(key.second);
    CHECK(two.size() == (q - 1) / 2);
    CHECK(ql.size() == (q + 1) / 2);
    std::set<FieldElt> squares_not_one, nonsquares_and_zero{F.zero()};
    for (u64 r = 0; r < q; ++r) {
      FieldElt x = F.element_at(r);
      if (x.is_zero()) {
        squares_not_one.insert(x);
        continue;
      }
      if (is_square(x)) {
        if (!x.is_one()) squares_not_one.insert(x);
      } else {
        nonsquares_and_zero.insert(x);
      }
    }
    CHECK(two == squares_not_one);
    CHECK(ql == nonsquares_and_zero);
    // The two key sets meet only in 0.
    std::vector<FieldElt> common;
    std::set_intersection(two.begin(), two.end(), ql.begin(), ql.end(), std::back_inserter(common));
    CHECK(common == std::vector<FieldElt>{F.zero()});
  }
  MuTable t4 = mu_table(FieldCtx::get(2, 3));
  CHECK(t4.entries.size() == 3);
}

TEST_CASE("j invariant") {
  const FieldCtx& F5 = make_prime_field(5);
  HomPoly f = form(F5, 4, {1, 0, 0, 0, 1});
  UniPoly u = f.dehom();
  CHECK(j_invariant(f) == F5.from_int(256 * 12 * 12 * 12) / resultant(u, u.derivative()));
  CHECK_THROWS_AS(j_invariant(form(F5, 4, {0, 2, 0, 1})), FieldError);
  CHECK_THROWS_AS(j_invariant(HomPoly(4, UniPoly::from_ints(FieldCtx::get(2, 1), std::vector<i64>{1, 1, 0, 0, 1}))), FieldError);

  for (u64 q : {5, 7, 9, 11, 13}) {
    const FieldCtx& F = field_of_order(q);
    auto group = all_pgl2(F);
    std::size_t checked = 0;
    for (const auto& g : quartics_of_type(F, {2, 2})) {
      if (g.dehom().degree() != 4) continue;
      FieldElt m = mu(g);
      if (m.is_one()) continue;
      FieldElt m3 = m + F.from_int(3), m1 = m - F.one();
      CHECK(j_invariant(g) == F.from_int(64) * m3 * m3 * m3 / (m1 * m1));
      ++checked;
      HomPoly h = apply(group[checked * 31 % group.size()], g);
      if (h.dehom().degree() == 4) CHECK(j_invariant(h) == j_invariant(g));
    }
    CHECK(checked > 0);
  }
}
