#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>

#include "hyperenum/galois_enum.hpp"
#include "hyperenum/oracle.hpp"
#include "hyperenum/quartics.hpp"

using namespace hyperenum;
using boost::multiprecision::cpp_rational;

namespace {

// Class index of every form from the brute-force partition.
std::map<HomPoly, int> class_index(const std::vector<std::vector<HomPoly>>& classes) {
  std::map<HomPoly, int> idx;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& f : classes[i]) idx.emplace(f, static_cast<int>(i));
  return idx;
}

// Representatives hit every class of the given type exactly once.
void check_against_oracle(const std::vector<HomPoly>& reps, const GaloisType& M,
                          const std::vector<std::vector<HomPoly>>& classes, const std::map<HomPoly, int>& idx) {
  std::set<int> want;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (galois_type(classes[i].front()) == M) want.insert(static_cast<int>(i));
  std::set<int> got;
  for (const auto& f : reps) {
    REQUIRE(galois_type(f) == M);
    REQUIRE(idx.count(f) == 1);
    REQUIRE(got.insert(idx.at(f)).second);
  }
  CHECK(got == want);
}

void check_all_types(u64 q, int n) {
  const FieldCtx& F = field_of_order(q);
  const auto classes = brute_sym_orbits(F, n);
  const auto idx = class_index(classes);
  for (const auto& M : galois_types(n)) {
    CAPTURE(q);
    CAPTURE(to_string(M));
    check_against_oracle(reps_for_type(F, M), M, classes, idx);
  }
}

std::set<UniPoly> keys_of_full(const FieldCtx& F, int n) {
  std::set<UniPoly> out;
  for (const auto& f : reps_type_full(F, n)) out.insert(cross_poly(f));
  return out;
}

std::set<UniPoly> keys_of_table(const OrbitTable& T) {
  std::set<UniPoly> out;
  for (const auto& [k, v] : T.entries) out.insert(k);
  return out;
}

}  // namespace

TEST_CASE("galois types") {
  CHECK(galois_types(6).size() == 11);
  CHECK(galois_types(8).size() == 22);
  CHECK(galois_types(4).size() == 5);
}

TEST_CASE("naive orbit table") {
  const FieldCtx& F3 = field_of_order(3);
  const FieldCtx& F5 = field_of_order(5);
  CHECK(naive_orbit_table(F3, 4).entries.size() == 2);
  CHECK(naive_orbit_table(F5, 4).entries.size() == 3);
  for (const auto* F : {&F3, &F5}) {
    const auto T = naive_orbit_table(*F, 5);
    for (const auto& [k, v] : T.entries) {
      CHECK(cross_poly(v) == k);
      CHECK(galois_type(v) == GaloisType{5});
    }
  }
  CHECK_THROWS(naive_orbit_table(F3, 3));
}

TEST_CASE("type (1,...,1)") {
  const FieldCtx& F5 = field_of_order(5);
  auto r = reps_type_ones(F5, 6);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == HomPoly(6, UniPoly::from_ints(F5, std::vector<i64>{0, -1, 0, 0, 0, 1})));
  CHECK(reps_type_ones(field_of_order(3), 6).empty());
  const FieldCtx& F7 = field_of_order(7);
  const auto classes = brute_sym_orbits(F7, 4);
  check_against_oracle(reps_type_ones(F7, 4), {1, 1, 1, 1}, classes, class_index(classes));
}

TEST_CASE("two entries of 2 with rational points") {
  CHECK(reps_type_two_with_rationals(field_of_order(3), 1, 4).size() == 1);
  const FieldCtx& F5 = field_of_order(5);
  const auto classes = brute_sym_orbits(F5, 5);
  check_against_oracle(reps_type_two_with_rationals(F5, 1, 3), {2, 1, 1, 1}, classes, class_index(classes));
  CHECK_THROWS(reps_type_two_with_rationals(F5, 1, 2));
}

TEST_CASE("two quadratics at degree 4") {
  for (u64 q : {3, 5, 7, 9, 11, 13}) {
    CAPTURE(q);
    CHECK(reps_type_two_heavy(field_of_order(q), 2, 0).size() == (q - 1) / 2);
  }
  for (u64 q : {4, 8}) {
    CAPTURE(q);
    CHECK(reps_type_two_heavy(field_of_order(q), 2, 0).size() == q / 2 - 1);
  }
}

TEST_CASE("every type at (3,6) against the oracle") { check_all_types(3, 6); }
TEST_CASE("every type at (5,6) against the oracle") { check_all_types(5, 6); }
TEST_CASE("every type at (4,6) against the oracle") { check_all_types(4, 6); }
TEST_CASE("every type at (2,6) against the oracle") { check_all_types(2, 6); }
TEST_CASE("every type at (3,4), (5,4), (4,4) against the oracle") {
  check_all_types(3, 4);
  check_all_types(5, 4);
  check_all_types(4, 4);
}
TEST_CASE("every type at (3,8) against the oracle") { check_all_types(3, 8); }
TEST_CASE("odd-degree types at (3,5) and (5,5) against the oracle") {
  for (u64 q : {3, 5}) {
    const FieldCtx& F = field_of_order(q);
    const auto classes = brute_sym_orbits(F, 5);
    const auto idx = class_index(classes);
    for (const auto& M : galois_types(5)) {
      if (M[0] == 5 || (M[0] == 2 && M.size() == 3 && M[1] == 2)) continue;
      CAPTURE(q);
      CAPTURE(to_string(M));
      check_against_oracle(reps_for_type(F, M), M, classes, idx);
    }
  }
}

TEST_CASE("full type agrees with the naive table") {
  for (u64 q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const FieldCtx& F = field_of_order(q);
    const auto full = reps_type_full(F, 6);
    CHECK(keys_of_full(F, 6) == keys_of_table(naive_orbit_table(F, 6)));
    CHECK(full.size() == keys_of_full(F, 6).size());
    for (const auto& f : full) CHECK(galois_type(f) == GaloisType{6});
  }
  CHECK_THROWS(reps_type_full(field_of_order(3), 7));
}

TEST_CASE("full type at degree 8 agrees with the naive table") {
  const FieldCtx& F = field_of_order(3);
  CHECK(keys_of_full(F, 8) == keys_of_table(naive_orbit_table(F, 8)));
}

TEST_CASE("form mass") {
  for (u64 q : {3, 5, 7}) {
    CAPTURE(q);
    const FieldCtx& F = field_of_order(q);
    cpp_rational sum = 0;
    for (const auto& r : sym_orbit_reps(F, 6)) sum += cpp_rational(1, static_cast<long>(zero_set_stabilizer(r.form).size()));
    CHECK(sum == cpp_rational(static_cast<long>(q * q * q)));
  }
}

TEST_CASE("thread count does not change the output") {
  const FieldCtx& F = field_of_order(7);
  CHECK(sym_orbit_reps(F, 6, 1) == sym_orbit_reps(F, 6, 4));
}
