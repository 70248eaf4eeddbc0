#pragma once

// Closed-form orbit representatives for separable quartic forms, and the
// mu and j invariants.

#include <map>
#include <vector>

#include "hyperenum/binforms.hpp"

namespace hyperenum {

/// The auxiliary elements used by the closed forms over F_q.
struct QuarticParams {
  const FieldCtx* base;  // F_q
  const FieldCtx* quad;  // F_{q^2}
  const FieldCtx* quart; // F_{q^4}
  FieldElt zeta;         // generator of F_{q^2}^*
  FieldElt rho;          // first element of F_{q^2} \ F_q with square in F_q (odd q)
  FieldElt nu;           // rho^2 for odd q; first trace-1 element for even q
  FieldElt gamma;        // square root of zeta in F_{q^4}, order 2(q^2 - 1) (odd q)
};
QuarticParams quartic_params(const FieldCtx& F);

/// Irreducible quartics up to PGL_2; odd q only.
std::vector<HomPoly> irreducible_quartic_reps(const FieldCtx& F);
/// Products of two distinct irreducible quadratics; odd q only.
std::vector<HomPoly> two_quadratic_reps(const FieldCtx& F);
/// Quartics with exactly one irreducible quadratic factor; any q.
std::vector<HomPoly> quad_linear_reps(const FieldCtx& F);

struct Char2QuarticReps {
  std::vector<HomPoly> irreducible;
  std::vector<HomPoly> two_quadratic;
};
Char2QuarticReps char2_quartic_reps(const FieldCtx& F);

/// Both irreducible and two-quadratic lists for any q.
std::vector<HomPoly> irreducible_quartic_reps_any(const FieldCtx& F);
std::vector<HomPoly> two_quadratic_reps_any(const FieldCtx& F);

/// mu for quartics of type (2,2) or (2,1,1) in odd characteristic; the
/// (mu - 1)/4 analog for type (2,2) in characteristic 2.
FieldElt mu(const HomPoly& f);
/// 256 (b^2 - 3ac + 12d)^3 / Delta for f = x^4 + a x^3 y + ... + d y^4.
FieldElt j_invariant(const HomPoly& f);

enum class QuarticKind { two_quadratic, quad_linear };

/// Representatives keyed by (kind, mu). Characteristic 2 carries only the
/// two-quadratic entries.
struct MuTable {
  std::map<std::pair<QuarticKind, FieldElt>, HomPoly> entries;
  const HomPoly* find(QuarticKind kind, const FieldElt& m) const;
};
MuTable mu_table(const FieldCtx& F);

}  // namespace hyperenum
