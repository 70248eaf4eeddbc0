#pragma once

// Brute-force reference computations. These share only field arithmetic and
// the form type with the fast path.

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperenum/binforms.hpp"
#include "hyperenum/curves.hpp"
#include "hyperenum/galois_enum.hpp"

namespace hyperenum {

class OracleGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest q^n accepted by the brute-force routines.
inline constexpr u64 kOracleLimit = 10'000'000;

/// f(ax + by, cx + dy) made monic.
HomPoly substitute(const HomPoly& f, const FieldElt& a, const FieldElt& b, const FieldElt& c, const FieldElt& d);
/// The same, also returning the scalar divided out.
std::pair<HomPoly, FieldElt> substitute_scaled(const HomPoly& f, const FieldElt& a, const FieldElt& b,
                                               const FieldElt& c, const FieldElt& d);

/// Every monic separable form of degree n, sorted.
std::vector<HomPoly> all_separable_forms(const FieldCtx& F, int n);

/// Orbits of all monic separable forms of degree n, each sorted, ordered by
/// least member.
std::vector<std::vector<HomPoly>> brute_sym_orbits(const FieldCtx& F, int n);

struct BruteCurveClass {
  std::vector<std::pair<HomPoly, FieldElt>> members;  // (f, delta) with delta in {1, nonsquare}
  int aut_order;
};
/// Isomorphism classes of z^2 = delta f over F, q odd.
std::vector<BruteCurveClass> brute_curves(const FieldCtx& F, int genus);

/// True iff some Gamma in PGL_2(F) carries f to g.
bool same_orbit(const HomPoly& f, const HomPoly& g);
/// same_orbit by sweeping the whole group.
bool same_orbit_exhaustive(const HomPoly& f, const HomPoly& g);

/// Empty when the representatives are complete and irredundant for the
/// separable forms of degree n, otherwise a description of the mismatch.
std::string compare_orbits_with_oracle(const std::vector<TypedRep>& reps, const FieldCtx& F, int n);
/// Empty when the curves match the brute-force classes one to one with equal
/// automorphism orders.
std::string compare_curves_with_oracle(const std::vector<HyperCurve>& curves, const FieldCtx& F, int genus);

}  // namespace hyperenum
