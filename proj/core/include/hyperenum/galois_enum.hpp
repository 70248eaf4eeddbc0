#pragma once

// Orbit representatives for PGL_2(F_q) acting on separable forms of degree n,
// one algorithm per Galois type.

#include <map>
#include <utility>
#include <vector>

#include "hyperenum/binforms.hpp"

namespace hyperenum {

/// Irreducible forms of degree n up to PGL_2, keyed by cross polynomial.
struct OrbitTable {
  int n = 0;
  std::map<UniPoly, HomPoly> entries;
  const HomPoly* find(const UniPoly& key) const;
  std::vector<HomPoly> values() const;
};

OrbitTable naive_orbit_table(const FieldCtx& F, int n);

/// Type (1,...,1).
std::vector<HomPoly> reps_type_ones(const FieldCtx& F, int n);
/// s twos and t >= 3 ones.
std::vector<HomPoly> reps_type_two_with_rationals(const FieldCtx& F, int s, int t);
/// s >= 2 twos and t ones.
std::vector<HomPoly> reps_type_two_heavy(const FieldCtx& F, int s, int t);
/// Largest part m_1 with 3 <= m_1 <= n - 1.
std::vector<HomPoly> reps_type_medium(const FieldCtx& F, const GaloisType& M);
/// Irreducible forms of even degree n >= 4.
std::vector<HomPoly> reps_type_full(const FieldCtx& F, int n);

/// Homogenized minimal polynomial over F of the generator of F_{q^3}.
HomPoly canonical_cubic(const FieldCtx& F);

/// Partitions of n in non-increasing order, sorted.
std::vector<GaloisType> galois_types(int n);
/// Representatives of a single Galois type, sorted.
std::vector<HomPoly> reps_for_type(const FieldCtx& F, const GaloisType& M);

struct TypedRep {
  GaloisType type;
  HomPoly form;
  auto operator<=>(const TypedRep&) const = default;
};

/// All types for even n >= 4, sorted by (type, form). Types run in parallel
/// when threads > 1.
std::vector<TypedRep> sym_orbit_reps(const FieldCtx& F, int n, int threads = 1);

}  // namespace hyperenum
