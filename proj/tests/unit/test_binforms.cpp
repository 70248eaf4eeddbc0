#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "hyperenum/binforms.hpp"

using namespace hyperenum;

namespace {
HomPoly form(const FieldCtx& F, int n, std::initializer_list<i64> c) {
  std::vector<i64> v(c);
  return HomPoly(n, UniPoly::from_ints(F, v));
}

// All monic irreducible forms of degree n with y not dividing, by filtering.
std::vector<HomPoly> irreducible_forms(const FieldCtx& F, int n) {
  std::vector<HomPoly> out;
  for (const auto& u : monic_irreducibles(F, n)) out.emplace_back(n, u);
  return out;
}

// Orbit partition under the whole group, by exhaustive action.
std::vector<std::vector<HomPoly>> brute_orbits(const std::vector<HomPoly>& forms) {
  const FieldCtx& F = forms.front().ctx();
  auto group = all_pgl2(F);
  std::set<HomPoly> seen;
  std::vector<std::vector<HomPoly>> out;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    std::set<HomPoly> orb;
    for (const auto& g : group) orb.insert(apply(g, f));
    for (const auto& h : orb) seen.insert(h);
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}
}  // namespace

TEST_CASE("construction") {
  const FieldCtx& F3 = make_prime_field(3);
  HomPoly f = from_univariate(UniPoly::from_ints(F3, std::vector<i64>{1, 0, 1}), 3);
  CHECK(f.degree() == 3);
  CHECK(f.infinity_multiplicity() == 1);
  CHECK(f == linear_form(ProjPoint::infinity(F3)) * form(F3, 2, {1, 0, 1}));
  CHECK(from_univariate(UniPoly::from_ints(F3, std::vector<i64>{1, 0, 1}), 2).infinity_multiplicity() == 0);
  CHECK(linear_form(ProjPoint::finite(F3.one())) == form(F3, 1, {-1, 1}));
  CHECK_THROWS_AS(from_univariate(UniPoly::from_ints(F3, std::vector<i64>{1, 0, 2}), 2), FieldError);
  CHECK_THROWS_AS(from_univariate(UniPoly::from_ints(F3, std::vector<i64>{1, 0, 1}), 1), FieldError);

  const FieldCtx& F5 = make_prime_field(5);
  CHECK(product(F5, {form(F5, 1, {-1, 1}), form(F5, 1, {1, 1})}) == form(F5, 2, {-1, 0, 1}));
  CHECK(product(F5, {}).degree() == 0);
}

TEST_CASE("separability and galois types") {
  const FieldCtx& F5 = make_prime_field(5);
  CHECK(is_separable(form(F5, 2, {-1, 0, 1})));
  CHECK_FALSE(is_separable(form(F5, 2, {1, -2, 1})));
  CHECK_FALSE(is_separable(form(F5, 4, {0, 0, 1})));
  const FieldCtx& F3 = make_prime_field(3);
  // xy(x^2+1)
  CHECK(galois_type(form(F3, 4, {0, 1, 0, 1})) == GaloisType{2, 1, 1});
  CHECK(galois_type(irreducible_forms(F3, 4).front()) == GaloisType{4});
  CHECK_THROWS_AS(galois_type(form(F3, 4, {0, 0, 1})), FieldError);

  const FieldCtx& F7 = make_prime_field(7);
  auto i3 = monic_irreducibles(F7, 3);
  auto i2 = monic_irreducibles(F7, 2);
  HomPoly prod = product(F7, {HomPoly(3, i3[4]), HomPoly(2, i2[2]), form(F7, 1, {-3, 1}), linear_form(ProjPoint::infinity(F7))});
  CHECK(galois_type(prod) == GaloisType{3, 2, 1, 1});
  auto fac = irreducible_factors(prod);
  CHECK(fac.size() == 4);
  CHECK(product(F7, fac) == prod);
}

TEST_CASE("zeros") {
  const FieldCtx& F5 = make_prime_field(5);
  auto z = zeros(form(F5, 2, {-1, 0, 1}));
  CHECK(z.field == &F5);
  CHECK(z.points == std::vector<ProjPoint>{ProjPoint::finite(F5.from_int(1)), ProjPoint::finite(F5.from_int(4))});

  const FieldCtx& F3 = make_prime_field(3);
  const FieldCtx& F9 = FieldCtx::get(3, 2);
  auto z2 = zeros(form(F3, 3, {1, 0, 1}));
  CHECK(z2.field == &F9);
  FieldElt t = F9.generator_t();
  CHECK(z2.points == std::vector<ProjPoint>{ProjPoint::infinity(F9), ProjPoint::finite(t), ProjPoint::finite(t * F9.from_int(2))});

  auto z3 = zeros(form(F5, 6, {0, -1, 0, 0, 0, 1}));
  CHECK(z3.points == rational_points(F5));
  CHECK(form_from_zeros(z3.points, embed(F5, F5)) == form(F5, 6, {0, -1, 0, 0, 0, 1}));
  CHECK(form_from_zeros(z2.points, embed(F3, F9)) == form(F3, 3, {1, 0, 1}));
}

TEST_CASE("cross polynomial invariance and injectivity") {
  struct Case {
    u32 q;
    int n;
    std::size_t orbits;
  };
  for (auto [q, n, expected] : {Case{3, 4, 2}, Case{5, 4, 3}, Case{3, 5, 0}}) {
    const FieldCtx& F = make_prime_field(q);
    auto forms = irreducible_forms(F, n);
    auto orbits = brute_orbits(forms);
    if (expected) CHECK(orbits.size() == expected);
    std::set<UniPoly> keys;
    for (const auto& orb : orbits) {
      UniPoly key = cross_poly(orb.front());
      CHECK(key.degree() == n);
      for (const auto& f : orb) CHECK(cross_poly(f) == key);
      keys.insert(key);
    }
    CHECK(keys.size() == orbits.size());
  }
  const FieldCtx& F3 = make_prime_field(3);
  CHECK_THROWS_AS(cross_poly(form(F3, 3, {1, 2, 0, 1})), FieldError);
  CHECK_THROWS_AS(cross_poly(form(F3, 4, {0, 1, 0, 1})), FieldError);
}

TEST_CASE("cross polynomial over an extension base") {
  const FieldCtx& F4 = FieldCtx::get(2, 2);
  auto forms = irreducible_forms(F4, 4);
  auto orbits = brute_orbits(forms);
  std::set<UniPoly> keys;
  for (const auto& orb : orbits) {
    UniPoly key = cross_poly(orb.front());
    for (std::size_t i = 0; i < orb.size(); i += 5) CHECK(cross_poly(orb[i]) == key);
    keys.insert(key);
  }
  CHECK(keys.size() == orbits.size());
}
