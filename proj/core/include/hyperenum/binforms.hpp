#pragma once

// Monic homogeneous binary forms, their zero sets and Galois types, the
// cross polynomial, and the PGL_2 action on forms.

#include <vector>

#include "hyperenum/ff.hpp"
#include "hyperenum/pgl2.hpp"

namespace hyperenum {

/// A monic form of total degree n, stored as u(x) = f(x, 1) and n.
/// f = y^{n - deg u} * homog(u).
class HomPoly {
 public:
  HomPoly(int n, UniPoly u);
  static HomPoly one(const FieldCtx& ctx);

  int degree() const { return n_; }
  const UniPoly& dehom() const { return u_; }
  const FieldCtx& ctx() const { return u_.ctx(); }
  /// Multiplicity of the zero at infinity.
  int infinity_multiplicity() const { return n_ - u_.degree(); }
  /// Coefficient of x^i y^{n-i}.
  FieldElt coeff(int i) const { return u_.coeff(i); }

  HomPoly operator*(const HomPoly& o) const;

  bool operator==(const HomPoly& o) const { return n_ == o.n_ && u_ == o.u_; }
  /// Degree n, then u in polynomial order.
  std::strong_ordering operator<=>(const HomPoly& o) const;

 private:
  int n_;
  UniPoly u_;
};

std::string to_string(const HomPoly& f);

/// Non-increasing factor degrees summing to n.
using GaloisType = std::vector<int>;
std::string to_string(const GaloisType& t);

/// y^{n - deg u} * homog(u); u must be monic of degree at most n.
HomPoly from_univariate(const UniPoly& u, int n);
HomPoly product(const FieldCtx& ctx, const std::vector<HomPoly>& fs);
/// x - a y for finite a, y for infinity.
HomPoly linear_form(const ProjPoint& p);

bool is_separable(const HomPoly& f);
GaloisType galois_type(const HomPoly& f);
/// Monic irreducible factors (y included when it divides f), sorted.
std::vector<HomPoly> irreducible_factors(const HomPoly& f);

/// Entry-wise image under an embedding.
HomPoly lift(const HomPoly& f, const Embedding& emb);
std::optional<HomPoly> descend(const HomPoly& f, const Embedding& emb);
/// Coefficient-wise q0-th power.
HomPoly frobenius_twist(const HomPoly& f, u64 q0);

/// Zeros of a separable form, sorted, as points over `field`.
struct ZeroSet {
  const FieldCtx* field;
  std::vector<ProjPoint> points;
};
/// Zeros over the splitting field of f.
ZeroSet zeros(const HomPoly& f);
/// Zeros over a given extension that splits f.
ZeroSet zeros_in(const HomPoly& f, const FieldCtx& ext);
/// The form over the source of emb with the given zeros (which must form a
/// Frobenius-stable set).
HomPoly form_from_zeros(const std::vector<ProjPoint>& pts, const Embedding& emb);

/// Cross polynomial of an irreducible form of degree at least 4.
UniPoly cross_poly(const HomPoly& f);
/// Cross polynomial from a root alpha of degree n over the source of emb.
UniPoly cross_poly_of_root(const FieldElt& alpha, const Embedding& emb, int n);

/// h(x, y) = f(dx - by, -cx + ay) = e * g with g monic.
struct FormImage {
  HomPoly g;
  FieldElt e;
};
FormImage act_form(const Pgl2& gamma, const HomPoly& f);
inline HomPoly apply(const Pgl2& gamma, const HomPoly& f) { return act_form(gamma, f).g; }

enum class SquareClass { trivial, nontrivial };
/// Square class of e from act_form; always trivial in characteristic 2.
SquareClass square_class(const Pgl2& gamma, const HomPoly& f);

/// All rational Gamma with Gamma(Zeros f) = Zeros f, sorted.
std::vector<Pgl2> zero_set_stabilizer(const HomPoly& f);

}  // namespace hyperenum
