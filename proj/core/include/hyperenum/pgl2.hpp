#pragma once

// The projective line and PGL_2 acting on it.

#include <vector>

#include "hyperenum/ff.hpp"

namespace hyperenum {

/// A point of P^1: either (x:1) or infinity = (1:0).
class ProjPoint {
 public:
  ProjPoint() = default;
  static ProjPoint infinity(const FieldCtx& ctx);
  static ProjPoint finite(const FieldElt& x);

  bool is_infinity() const { return inf_; }
  /// The affine coordinate; only meaningful for finite points.
  const FieldElt& value() const { return x_; }
  const FieldCtx& ctx() const { return *ctx_; }

  bool operator==(const ProjPoint& o) const;
  /// Infinity first, then finite points in element order.
  std::strong_ordering operator<=>(const ProjPoint& o) const;

 private:
  const FieldCtx* ctx_ = nullptr;
  bool inf_ = false;
  FieldElt x_;
};

std::string to_string(const ProjPoint& p);

/// [[a, b], [c, d]] modulo scalars, scaled so that the first nonzero entry
/// among (a, b, c, d) is 1.
class Pgl2 {
 public:
  Pgl2() = default;
  /// Normalizes; throws FieldError when ad - bc = 0.
  Pgl2(const FieldElt& a, const FieldElt& b, const FieldElt& c, const FieldElt& d);
  static Pgl2 identity(const FieldCtx& ctx);

  const FieldElt& a() const { return a_; }
  const FieldElt& b() const { return b_; }
  const FieldElt& c() const { return c_; }
  const FieldElt& d() const { return d_; }
  const FieldCtx& ctx() const { return a_.ctx(); }
  FieldElt det() const { return a_ * d_ - b_ * c_; }

  Pgl2 operator*(const Pgl2& o) const;
  Pgl2 inverse() const;
  bool is_identity() const;

  bool operator==(const Pgl2& o) const = default;
  std::strong_ordering operator<=>(const Pgl2& o) const;

 private:
  struct Raw {};
  Pgl2(Raw, FieldElt a, FieldElt b, FieldElt c, FieldElt d) : a_(a), b_(b), c_(c), d_(d) {}
  FieldElt a_, b_, c_, d_;
};

std::string to_string(const Pgl2& g);

/// (x:y) -> (ax+by : cx+dy).
ProjPoint act_point(const Pgl2& g, const ProjPoint& p);

/// The unique element sending P_i to Q_i; throws on repeated points.
Pgl2 map_triple(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3);

/// Image of p4 under the map sending (p1, p2, p3) to (infinity, 0, 1).
FieldElt cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4);

/// The involution with a <-> b and c <-> d.
Pgl2 involution_swapping(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);

/// For alpha of degree 4 over the source of emb: the rational involution
/// swapping alpha with alpha^{q^2} and alpha^q with alpha^{q^3}.
Pgl2 galois_involution(const FieldElt& alpha, const Embedding& emb);

/// Entry-wise q0-th power.
Pgl2 frobenius_twist(const Pgl2& g, u64 q0);
bool is_rational(const Pgl2& g, u64 q0);

/// Entry-wise image under an embedding.
Pgl2 lift(const Pgl2& g, const Embedding& emb);
/// Entry-wise preimage, if every entry lies in the source field.
std::optional<Pgl2> descend(const Pgl2& g, const Embedding& emb);

/// Every element of PGL_2 over ctx, sorted.
std::vector<Pgl2> all_pgl2(const FieldCtx& ctx);

/// All points of P^1 over ctx, sorted.
std::vector<ProjPoint> rational_points(const FieldCtx& ctx);

}  // namespace hyperenum
