#pragma once

// Coset representatives for PGL_2(F_q) inside PGL_2(F_{q^2}) and
// PGL_2(F_{q^p}), and PGL_2(F_q)-orbit representatives on elements of
// F_{q^n} lying in no proper subfield.

#include <vector>

#include "hyperenum/pgl2.hpp"

namespace hyperenum {

/// Elements of ext = F_{q^n} written on the F_q-basis 1, t, ..., t^{n-1}.
class RelativeBasis {
 public:
  RelativeBasis(const FieldCtx& base, const FieldCtx& ext);
  int dimension() const { return n_; }
  const FieldCtx& base() const { return *base_; }
  const FieldCtx& ext() const { return *ext_; }
  FieldElt element(const std::vector<FieldElt>& coords) const;
  /// Every element whose coordinates (a_0, ..., a_{n-1}) satisfy: a_i = 0 for
  /// i < start, and the first nonzero coordinate equals 1. Zero is excluded.
  std::vector<FieldElt> normalized(int start) const;

 private:
  const FieldCtx* base_;
  const FieldCtx* ext_;
  int n_;
  std::vector<FieldElt> powers_;
};

/// B = { (omega g^i + omega^q) / (g^i + 1) : 0 <= i < q - 1 } as points of
/// P^1(F_{q^2}).
std::vector<ProjPoint> orbit_reps_B(const FieldCtx& F, const FieldElt& omega, const FieldElt& gamma);

/// q^3 + q representatives of PGL_2(F_q) \ PGL_2(F_{q^2}), sorted.
std::vector<Pgl2> coset_reps_q2(const FieldCtx& F);

/// Representatives of PGL_2(F_q) \ PGL_2(F_{q^p}) for an odd prime p, sorted.
std::vector<Pgl2> coset_reps_qp(const FieldCtx& F, int p);

/// One element per PGL_2(F_q)-orbit on elements of F_{q^n} of degree n.
std::vector<FieldElt> primitive_orbit_reps(const FieldCtx& F, int n);

/// Representatives for the ax+b group on F_{q^p} \ F_q.
std::vector<FieldElt> c_infinity_reps(const FieldCtx& F, int p);
/// Representatives for F_q^* scaling on F_{q^p} \ F_q.
std::vector<FieldElt> c_infinity_zero_reps(const FieldCtx& F, int p);

}  // namespace hyperenum
