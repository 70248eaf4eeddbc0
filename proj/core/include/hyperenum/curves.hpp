#pragma once

// Hyperelliptic curves z^2 = delta * f(x, y) over F_q, q odd, from orbit
// representatives of separable forms of degree 2g + 2.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "hyperenum/binforms.hpp"

namespace hyperenum {

using Rational = boost::multiprecision::cpp_rational;

struct HyperCurve {
  int genus;
  HomPoly f;
  FieldElt delta;  // 1 or the first nonsquare
  int aut_order;

  const FieldCtx& ctx() const { return f.ctx(); }
  bool operator==(const HyperCurve& o) const { return f == o.f && delta == o.delta; }
  std::strong_ordering operator<=>(const HyperCurve& o) const;
};

/// First nonsquare of F in the element ordering; q odd.
FieldElt first_nonsquare(const FieldCtx& F);

/// One curve when some stabilizer element has a nontrivial square class,
/// otherwise the curve and its quadratic twist.
std::vector<HyperCurve> curves_from_rep(const HomPoly& f);

/// Every genus-g hyperelliptic curve over F up to isomorphism, sorted.
std::vector<HyperCurve> enumerate_curves(const FieldCtx& F, int genus, int threads = 1);

struct MassResult {
  Rational value;
  Rational expected;
  bool pass;
};
/// Sum of 1 / #Aut against q^{2g - 1}.
MassResult mass_check(const std::vector<HyperCurve>& curves, u64 q, int genus);

/// delta * f as a univariate coefficient list of f(x, 1), constant term first.
std::vector<FieldElt> weierstrass_coeffs(const HyperCurve& c);

}  // namespace hyperenum
