#include "hyperenum/pgl2.hpp"

#include <algorithm>
#include <array>

namespace hyperenum {

ProjPoint ProjPoint::infinity(const FieldCtx& ctx) {
  ProjPoint p;
  p.ctx_ = &ctx;
  p.inf_ = true;
  p.x_ = ctx.zero();
  return p;
}

ProjPoint ProjPoint::finite(const FieldElt& x) {
  ProjPoint p;
  p.ctx_ = x.ctx_ptr();
  p.x_ = x;
  return p;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  return ctx_ == o.ctx_ && inf_ == o.inf_ && (inf_ || x_ == o.x_);
}

std::strong_ordering ProjPoint::operator<=>(const ProjPoint& o) const {
  if (ctx_ != o.ctx_) throw FieldError("point context mismatch");
  if (inf_ || o.inf_) return o.inf_ <=> inf_;
  return x_ <=> o.x_;
}

std::string to_string(const ProjPoint& p) { return p.is_infinity() ? "inf" : to_string(p.value()); }

namespace {

// Homogeneous coordinates.
std::array<FieldElt, 2> coords(const ProjPoint& p) {
  const FieldCtx& F = p.ctx();
  if (p.is_infinity()) return {F.one(), F.zero()};
  return {p.value(), F.one()};
}

struct Mat {
  FieldElt a, b, c, d;
  Mat operator*(const Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat adj() const { return {d, -b, -c, a}; }
};

// Sends (infinity, 0, 1) to (p1, p2, p3).
Mat standard_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
  auto v1 = coords(p1), v2 = coords(p2), v3 = coords(p3);
  // Solve l1 v1 + l2 v2 = v3.
  FieldElt det = v1[0] * v2[1] - v2[0] * v1[1];
  if (det.is_zero()) throw FieldError("map_triple: repeated points");
  FieldElt l1 = (v3[0] * v2[1] - v2[0] * v3[1]);
  FieldElt l2 = (v1[0] * v3[1] - v3[0] * v1[1]);
  if (l1.is_zero() || l2.is_zero()) throw FieldError("map_triple: repeated points");
  return {l1 * v1[0], l2 * v2[0], l1 * v1[1], l2 * v2[1]};
}

Pgl2 from_mat(const Mat& m) { return Pgl2(m.a, m.b, m.c, m.d); }

}  // namespace

Pgl2::Pgl2(const FieldElt& a, const FieldElt& b, const FieldElt& c, const FieldElt& d) {
  if ((a * d - b * c).is_zero()) throw FieldError("singular matrix");
  const FieldElt* lead = !a.is_zero() ? &a : (!b.is_zero() ? &b : &c);
  if (lead->is_one()) {
    a_ = a, b_ = b, c_ = c, d_ = d;
  } else {
    FieldElt s = lead->inv();
    a_ = a * s, b_ = b * s, c_ = c * s, d_ = d * s;
  }
}

Pgl2 Pgl2::identity(const FieldCtx& ctx) { return Pgl2(Raw{}, ctx.one(), ctx.zero(), ctx.zero(), ctx.one()); }

Pgl2 Pgl2::operator*(const Pgl2& o) const {
  return Pgl2(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

Pgl2 Pgl2::inverse() const { return Pgl2(d_, -b_, -c_, a_); }

bool Pgl2::is_identity() const { return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one(); }

std::strong_ordering Pgl2::operator<=>(const Pgl2& o) const {
  if (auto r = a_ <=> o.a_; r != 0) return r;
  if (auto r = b_ <=> o.b_; r != 0) return r;
  if (auto r = c_ <=> o.c_; r != 0) return r;
  return d_ <=> o.d_;
}

std::string to_string(const Pgl2& g) {
  return "[[" + to_string(g.a()) + "," + to_string(g.b()) + "],[" + to_string(g.c()) + "," + to_string(g.d()) + "]]";
}

ProjPoint act_point(const Pgl2& g, const ProjPoint& p) {
  if (&g.ctx() != &p.ctx()) throw FieldError("act_point: context mismatch");
  const FieldCtx& F = p.ctx();
  FieldElt x, y;
  if (p.is_infinity()) {
    x = g.a();
    y = g.c();
  } else {
    x = g.a() * p.value() + g.b();
    y = g.c() * p.value() + g.d();
  }
  if (y.is_zero()) return ProjPoint::infinity(F);
  return ProjPoint::finite(x / y);
}

Pgl2 map_triple(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3) {
  Mat sp = standard_map(p1, p2, p3);
  Mat sq = standard_map(q1, q2, q3);
  return from_mat(sq * sp.adj());
}

FieldElt cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4) {
  Mat s = standard_map(p1, p2, p3).adj();
  auto v = coords(p4);
  FieldElt x = s.a * v[0] + s.b * v[1];
  FieldElt y = s.c * v[0] + s.d * v[1];
  if (y.is_zero() || x.is_zero() || x == y) throw FieldError("cross_ratio: coincident points");
  return x / y;
}

Pgl2 involution_swapping(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  const FieldCtx& F = a.ctx();
  Pgl2 phi = map_triple(a, b, c, ProjPoint::infinity(F), ProjPoint::finite(F.zero()), ProjPoint::finite(F.one()));
  ProjPoint dp = act_point(phi, d);
  if (dp.is_infinity() || dp.value().is_zero() || dp.value().is_one())
    throw FieldError("involution_swapping: coincident points");
  Pgl2 base(F.zero(), dp.value(), F.one(), F.zero());
  return phi.inverse() * base * phi;
}

Pgl2 galois_involution(const FieldElt& alpha, const Embedding& emb) {
  const u64 q = emb.source().order();
  FieldElt a1 = frobenius(alpha, q);
  FieldElt a2 = frobenius(a1, q);
  FieldElt a3 = frobenius(a2, q);
  if (alpha == a2 || alpha == a1) throw FieldError("galois_involution: element is not of degree 4");
  Pgl2 g = involution_swapping(ProjPoint::finite(alpha), ProjPoint::finite(a2), ProjPoint::finite(a1), ProjPoint::finite(a3));
  auto down = descend(g, emb);
  if (!down) throw std::logic_error("galois_involution: involution is not rational");
  return *down;
}

Pgl2 frobenius_twist(const Pgl2& g, u64 q0) {
  return Pgl2(frobenius(g.a(), q0), frobenius(g.b(), q0), frobenius(g.c(), q0), frobenius(g.d(), q0));
}

bool is_rational(const Pgl2& g, u64 q0) { return frobenius_twist(g, q0) == g; }

Pgl2 lift(const Pgl2& g, const Embedding& emb) { return Pgl2(emb(g.a()), emb(g.b()), emb(g.c()), emb(g.d())); }

std::optional<Pgl2> descend(const Pgl2& g, const Embedding& emb) {
  auto a = emb.preimage(g.a());
  auto b = emb.preimage(g.b());
  auto c = emb.preimage(g.c());
  auto d = emb.preimage(g.d());
  if (!a || !b || !c || !d) return std::nullopt;
  return Pgl2(*a, *b, *c, *d);
}

std::vector<Pgl2> all_pgl2(const FieldCtx& ctx) {
  std::vector<Pgl2> out;
  const u64 q = ctx.order();
  out.reserve(static_cast<std::size_t>(q * q * q - q));
  const FieldElt zero = ctx.zero(), one = ctx.one();
  for (u64 c = 1; c < q; ++c)
    for (u64 d = 0; d < q; ++d) out.emplace_back(zero, one, ctx.element_at(c), ctx.element_at(d));
  for (u64 b = 0; b < q; ++b)
    for (u64 c = 0; c < q; ++c)
      for (u64 d = 0; d < q; ++d) {
        FieldElt bb = ctx.element_at(b), cc = ctx.element_at(c), dd = ctx.element_at(d);
        if ((dd - bb * cc).is_zero()) continue;
        out.emplace_back(one, bb, cc, dd);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjPoint> rational_points(const FieldCtx& ctx) {
  std::vector<ProjPoint> out{ProjPoint::infinity(ctx)};
  for (u64 r = 0; r < ctx.order(); ++r) out.push_back(ProjPoint::finite(ctx.element_at(r)));
  return out;
}

}  // namespace hyperenum
