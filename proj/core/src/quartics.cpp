#include "hyperenum/quartics.hpp"

#include <algorithm>

namespace hyperenum {

namespace {

void require_odd(const FieldCtx& F, const char* what) {
  if (F.characteristic() == 2) throw FieldError(std::string(what) + ": q must be odd");
}

HomPoly homogenized_minpoly(const FieldElt& x, const Embedding& emb, int n) {
  UniPoly m = minimal_poly(x, emb);
  if (m.degree() != n) throw std::logic_error("unexpected minimal polynomial degree");
  return HomPoly(n, m);
}

UniPoly poly(const FieldCtx& F, std::vector<FieldElt> c) { return UniPoly(F, std::move(c)); }

}  // namespace

QuarticParams quartic_params(const FieldCtx& F) {
  QuarticParams p{};
  p.base = &F;
  p.quad = &extension_of(F, 2);
  p.quart = &extension_of(F, 4);
  p.zeta = p.quad->multiplicative_generator();
  const u64 q = F.order();
  if (F.characteristic() == 2) {
    for (u64 r = 0; r < q; ++r) {
      FieldElt a = F.element_at(r);
      if (absolute_trace(a).is_one()) {
        p.nu = a;
        break;
      }
    }
    return p;
  }
  const Embedding& e12 = embed(F, *p.quad);
  for (u64 r = 0; r < p.quad->order(); ++r) {
    FieldElt x = p.quad->element_at(r);
    if (e12.contains(x)) continue;
    auto sq = e12.preimage(x * x);
    if (sq) {
      p.rho = x;
      p.nu = *sq;
      break;
    }
  }
  const Embedding& e24 = embed(*p.quad, *p.quart);
  const u64 m = q * q - 1;
  FieldElt r = element_of_order(*p.quart, 2 * m);
  FieldElt r2 = r * r;
  FieldElt target = e24(p.zeta);
  FieldElt acc = r2;
  FieldElt rj = r;
  for (u64 j = 1; j <= m; ++j) {
    if (acc == target) {
      FieldElt other = -rj;
      p.gamma = std::min(rj, other);
      return p;
    }
    acc = acc * r2;
    rj = rj * r;
  }
  throw std::logic_error("square root of the generator not found");
}

std::vector<HomPoly> irreducible_quartic_reps(const FieldCtx& F) {
  require_odd(F, "irreducible_quartic_reps");
  QuarticParams p = quartic_params(F);
  const u64 q = F.order();
  const Embedding& e14 = embed(F, *p.quart);
  const FieldElt rho = embed(*p.quad, *p.quart)(p.rho);
  const FieldElt one = p.quart->one();
  std::vector<HomPoly> out;
  FieldElt gi = p.gamma;
  FieldElt g2 = p.gamma * p.gamma;
  for (u64 i = 1; i <= (q + 1) / 2; i += 2) {
    FieldElt x = (gi - one) / (gi + one);
    out.push_back(homogenized_minpoly(x, e14, 4));
    if (i <= (q - 1) / 2) out.push_back(homogenized_minpoly(rho * x, e14, 4));
    gi = gi * g2;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HomPoly> two_quadratic_reps(const FieldCtx& F) {
  require_odd(F, "two_quadratic_reps");
  QuarticParams p = quartic_params(F);
  const u64 q = F.order();
  const Embedding& e12 = embed(F, *p.quad);
  const FieldElt one = p.quad->one();
  HomPoly base(2, poly(F, {-p.nu, F.zero(), F.one()}));
  std::vector<HomPoly> out;
  FieldElt zi = p.zeta;
  for (u64 i = 1; i <= (q - 1) / 2; ++i) {
    FieldElt s = p.rho * (zi - one) / (zi + one);
    out.push_back(base * homogenized_minpoly(s, e12, 2));
    zi = zi * p.zeta;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HomPoly> quad_linear_reps(const FieldCtx& F) {
  QuarticParams p = quartic_params(F);
  const u64 q = F.order();
  const Embedding& e12 = embed(F, *p.quad);
  HomPoly xy(2, UniPoly::x(F));
  std::vector<HomPoly> out;
  FieldElt zi = p.zeta;
  for (u64 i = 1; i <= (q + 1) / 2; ++i) {
    out.push_back(xy * homogenized_minpoly(zi, e12, 2));
    zi = zi * p.zeta;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Char2QuarticReps char2_quartic_reps(const FieldCtx& F) {
  if (F.characteristic() != 2) throw FieldError("char2_quartic_reps: q must be even");
  QuarticParams p = quartic_params(F);
  const FieldElt zero = F.zero(), one = F.one(), nu = p.nu;
  Char2QuarticReps out;
  HomPoly first(2, poly(F, {nu, one, one}));
  for (u64 r = 0; r < F.order(); ++r) {
    FieldElt a = F.element_at(r);
    if (!absolute_trace(a).is_one()) continue;
    out.irreducible.emplace_back(4, poly(F, {a * a * nu, a, one + a, zero, one}));
    if (!(a == nu)) out.two_quadratic.push_back(first * HomPoly(2, poly(F, {a, one, one})));
  }
  std::sort(out.irreducible.begin(), out.irreducible.end());
  std::sort(out.two_quadratic.begin(), out.two_quadratic.end());
  return out;
}

std::vector<HomPoly> irreducible_quartic_reps_any(const FieldCtx& F) {
  return F.characteristic() == 2 ? char2_quartic_reps(F).irreducible : irreducible_quartic_reps(F);
}

std::vector<HomPoly> two_quadratic_reps_any(const FieldCtx& F) {
  return F.characteristic() == 2 ? char2_quartic_reps(F).two_quadratic : two_quadratic_reps(F);
}

FieldElt mu(const HomPoly& f) {
  if (f.degree() != 4) throw FieldError("mu: quartic expected");
  const FieldCtx& F = f.ctx();
  GaloisType t = galois_type(f);
  auto factors = irreducible_factors(f);
  const FieldElt two = F.from_int(2), four = F.from_int(4);
  if (t == GaloisType{2, 2}) {
    const FieldElt s = factors[0].coeff(1), tt = factors[0].coeff(0);
    const FieldElt u = factors[1].coeff(1), v = factors[1].coeff(0);
    if (F.characteristic() == 2) {
      FieldElt su = s * u;
      return ((tt + v) * (tt + v) + (s + u) * (s * v + tt * u)) / (su * su);
    }
    FieldElt num = s * u - two * tt - two * v;
    return num * num / ((s * s - four * tt) * (u * u - four * v));
  }
  if (t == GaloisType{2, 1, 1}) {
    if (F.characteristic() == 2) throw FieldError("mu: type (2,1,1) is not supported in characteristic 2");
    // Factors sorted by degree: the two linear ones come first.
    const HomPoly& quad = factors[2];
    const FieldElt u = quad.coeff(1), v = quad.coeff(0);
    if (f.infinity_multiplicity() == 1) {
      // factors[0] = y, factors[1] = x - b y.
      const HomPoly& lin = factors[0].dehom().degree() == 0 ? factors[1] : factors[0];
      FieldElt b = -lin.coeff(0);
      FieldElt num = u + two * b;
      return num * num / (u * u - four * v);
    }
    HomPoly pair = factors[0] * factors[1];
    const FieldElt s = pair.coeff(1), tt = pair.coeff(0);
    FieldElt num = s * u - two * tt - two * v;
    return num * num / ((s * s - four * tt) * (u * u - four * v));
  }
  throw FieldError("mu: unsupported Galois type " + to_string(t));
}

FieldElt j_invariant(const HomPoly& f) {
  const FieldCtx& F = f.ctx();
  if (F.characteristic() == 2) throw FieldError("j_invariant: q must be odd");
  if (f.degree() != 4 || f.dehom().degree() != 4) throw FieldError("j_invariant: y must not divide f");
  const UniPoly& u = f.dehom();
  FieldElt delta = resultant(u, u.derivative());
  if (delta.is_zero()) throw FieldError("j_invariant: zero discriminant");
  const FieldElt a = u.coeff(3), b = u.coeff(2), c = u.coeff(1), d = u.coeff(0);
  FieldElt w = b * b - F.from_int(3) * a * c + F.from_int(12) * d;
  return F.from_int(256) * w * w * w / delta;
}

const HomPoly* MuTable::find(QuarticKind kind, const FieldElt& m) const {
  auto it = entries.find({kind, m});
  return it == entries.end() ? nullptr : &it->second;
}

MuTable mu_table(const FieldCtx& F) {
  MuTable t;
  auto add = [&](QuarticKind kind, const HomPoly& f) {
    if (!t.entries.emplace(std::make_pair(kind, mu(f)), f).second) throw std::logic_error("mu_table: duplicate key");
  };
  for (const auto& f : two_quadratic_reps_any(F)) add(QuarticKind::two_quadratic, f);
  if (F.characteristic() != 2)
    for (const auto& f : quad_linear_reps(F)) add(QuarticKind::quad_linear, f);
  return t;
}

}  // namespace hyperenum
