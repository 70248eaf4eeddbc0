#include "hyperenum/binforms.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

namespace hyperenum {

HomPoly::HomPoly(int n, UniPoly u) : n_(n), u_(std::move(u)) {
  if (!u_.is_monic()) throw FieldError("form must be monic");
  if (u_.degree() > n_) throw FieldError("dehomogenization degree exceeds form degree");
}

HomPoly HomPoly::one(const FieldCtx& ctx) { return HomPoly(0, UniPoly::constant(ctx.one())); }

HomPoly HomPoly::operator*(const HomPoly& o) const { return HomPoly(n_ + o.n_, u_ * o.u_); }

std::strong_ordering HomPoly::operator<=>(const HomPoly& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  return u_ <=> o.u_;
}

std::string to_string(const HomPoly& f) {
  std::ostringstream os;
  os << "[" << f.degree() << "] " << to_string(f.dehom());
  if (f.infinity_multiplicity() > 0) os << " * y^" << f.infinity_multiplicity();
  return os.str();
}

std::string to_string(const GaloisType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

HomPoly from_univariate(const UniPoly& u, int n) { return HomPoly(n, u); }

HomPoly product(const FieldCtx& ctx, const std::vector<HomPoly>& fs) {
  HomPoly acc = HomPoly::one(ctx);
  for (const auto& f : fs) acc = acc * f;
  return acc;
}

HomPoly linear_form(const ProjPoint& p) {
  if (p.is_infinity()) return HomPoly(1, UniPoly::constant(p.ctx().one()));
  return HomPoly(1, UniPoly::linear_root(p.value()));
}

bool is_separable(const HomPoly& f) {
  if (f.infinity_multiplicity() > 1) return false;
  const UniPoly& u = f.dehom();
  if (u.degree() <= 0) return true;
  return gcd(u, u.derivative()).degree() == 0;
}

GaloisType galois_type(const HomPoly& f) {
  if (!is_separable(f)) throw FieldError("galois_type: form is not separable");
  GaloisType t = f.dehom().degree() > 0 ? factor_degrees(f.dehom()) : GaloisType{};
  if (f.infinity_multiplicity() == 1) t.push_back(1);
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::vector<HomPoly> irreducible_factors(const HomPoly& f) {
  std::vector<HomPoly> out;
  if (f.dehom().degree() > 0)
    for (auto& g : factor_squarefree(f.dehom())) out.emplace_back(g.degree(), g);
  for (int i = 0; i < f.infinity_multiplicity(); ++i) out.emplace_back(1, UniPoly::constant(f.ctx().one()));
  std::sort(out.begin(), out.end());
  return out;
}

HomPoly lift(const HomPoly& f, const Embedding& emb) { return HomPoly(f.degree(), emb(f.dehom())); }

std::optional<HomPoly> descend(const HomPoly& f, const Embedding& emb) {
  auto u = emb.preimage(f.dehom());
  if (!u) return std::nullopt;
  return HomPoly(f.degree(), *u);
}

HomPoly frobenius_twist(const HomPoly& f, u64 q0) {
  std::vector<FieldElt> c;
  for (const auto& x : f.dehom().coeffs()) c.push_back(frobenius(x, q0));
  return HomPoly(f.degree(), UniPoly(f.ctx(), std::move(c)));
}

ZeroSet zeros_in(const HomPoly& f, const FieldCtx& ext) {
  if (!is_separable(f)) throw FieldError("zeros: form is not separable");
  ZeroSet z{&ext, {}};
  if (f.dehom().degree() > 0) {
    auto r = roots_in(f.dehom(), embed(f.ctx(), ext));
    if (static_cast<int>(r.size()) != f.dehom().degree()) throw FieldError("zeros: field does not split the form");
    for (auto& x : r) z.points.push_back(ProjPoint::finite(x));
  }
  if (f.infinity_multiplicity() == 1) z.points.push_back(ProjPoint::infinity(ext));
  std::sort(z.points.begin(), z.points.end());
  return z;
}

ZeroSet zeros(const HomPoly& f) {
  GaloisType t = galois_type(f);
  int l = 1;
  for (int m : t) l = std::lcm(l, m);
  return zeros_in(f, extension_of(f.ctx(), l));
}

HomPoly form_from_zeros(const std::vector<ProjPoint>& pts, const Embedding& emb) {
  const FieldCtx& E = emb.target();
  UniPoly u = UniPoly::constant(E.one());
  for (const auto& p : pts)
    if (!p.is_infinity()) u = u * UniPoly::linear_root(p.value());
  auto down = emb.preimage(u);
  if (!down) throw FieldError("form_from_zeros: zero set is not Frobenius-stable");
  return HomPoly(static_cast<int>(pts.size()), *down);
}

UniPoly cross_poly_of_root(const FieldElt& alpha, const Embedding& emb, int n) {
  const u64 q = emb.source().order();
  FieldElt a1 = frobenius(alpha, q);
  FieldElt a2 = frobenius(a1, q);
  FieldElt a3 = frobenius(a2, q);
  FieldElt chi = ((a3 - a1) * (a2 - alpha)) / ((a3 - alpha) * (a2 - a1));
  return char_poly(chi, emb, n);
}

UniPoly cross_poly(const HomPoly& f) {
  const int n = f.degree();
  if (n < 4) throw FieldError("cross_poly: degree must be at least 4");
  if (f.dehom().degree() != n || !is_irreducible(f.dehom())) throw FieldError("cross_poly: form is not irreducible");
  const FieldCtx& ext = extension_of(f.ctx(), n);
  const Embedding& emb = embed(f.ctx(), ext);
  auto r = roots_in(f.dehom(), emb);
  return cross_poly_of_root(r.front(), emb, n);
}

namespace {

using Coeffs = std::vector<FieldElt>;

Coeffs mul_linear(const Coeffs& g, const FieldElt& c0, const FieldElt& c1) {
  Coeffs r(g.size() + 1, c0.ctx().zero());
  for (std::size_t i = 0; i < g.size(); ++i) {
    r[i] += g[i] * c0;
    r[i + 1] += g[i] * c1;
  }
  return r;
}

}  // namespace

FormImage act_form(const Pgl2& gamma, const HomPoly& f) {
  const FieldCtx& F = f.ctx();
  if (&gamma.ctx() != &F) throw FieldError("act_form: context mismatch");
  const int n = f.degree();
  const UniPoly& u = f.dehom();
  const int d = u.degree();
  // X = d x - b, Y = -c x + a.
  const FieldElt x0 = -gamma.b(), x1 = gamma.d();
  const FieldElt y0 = gamma.a(), y1 = -gamma.c();
  std::vector<Coeffs> ypow{{F.one()}};
  for (int k = 1; k <= n; ++k) ypow.push_back(mul_linear(ypow.back(), y0, y1));
  Coeffs g{u.coeff(d)};
  for (int i = d - 1; i >= 0; --i) {
    g = mul_linear(g, x0, x1);
    const FieldElt ui = u.coeff(i);
    if (!ui.is_zero()) {
      const Coeffs& yp = ypow[static_cast<std::size_t>(d - i)];
      for (std::size_t j = 0; j < yp.size(); ++j) g[j] += ui * yp[j];
    }
  }
  if (n > d) {
    const Coeffs& yp = ypow[static_cast<std::size_t>(n - d)];
    Coeffs h(g.size() + yp.size() - 1, F.zero());
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < yp.size(); ++j) h[i + j] += g[i] * yp[j];
    g = std::move(h);
  }
  while (!g.empty() && g.back().is_zero()) g.pop_back();
  FieldElt e = g.back();
  if (!e.is_one()) {
    FieldElt s = e.inv();
    for (auto& x : g) x *= s;
  }
  return {HomPoly(n, UniPoly(F, std::move(g))), e};
}

SquareClass square_class(const Pgl2& gamma, const HomPoly& f) {
  if (f.degree() % 2 != 0) throw FieldError("square_class: odd degree");
  if (f.ctx().characteristic() == 2) return SquareClass::trivial;
  return is_square(act_form(gamma, f).e) ? SquareClass::trivial : SquareClass::nontrivial;
}

std::vector<Pgl2> zero_set_stabilizer(const HomPoly& f) {
  if (f.degree() < 3) throw FieldError("zero_set_stabilizer: degree must be at least 3");
  ZeroSet z = zeros(f);
  const auto& pts = z.points;
  const Embedding& emb = embed(f.ctx(), *z.field);
  const u64 q = f.ctx().order();

  // Points grouped by degree over F_q.
  std::map<int, std::vector<ProjPoint>> by_deg;
  for (const auto& p : pts) by_deg[p.is_infinity() ? 1 : degree_over(p.value(), q)].push_back(p);
  auto count = [&](int d) { return by_deg.count(d) ? by_deg[d].size() : std::size_t{0}; };
  auto frob = [&](const ProjPoint& p) { return p.is_infinity() ? p : ProjPoint::finite(frobenius(p.value(), q)); };

  // Candidate (source triple, target triples) with the fewest targets.
  std::array<ProjPoint, 3> src;
  std::vector<std::array<ProjPoint, 3>> targets;
  int big = 0;
  for (const auto& [d, v] : by_deg)
    if (d >= 3 && (big == 0 || v.size() < count(big))) big = d;
  const std::size_t n1 = count(1), n2 = count(2);
  const std::size_t cost_big = big ? count(big) : SIZE_MAX;
  std::size_t cost_two = SIZE_MAX;
  int third = 0;
  if (n2 > 0)
    for (const auto& [d, v] : by_deg) {
      const std::size_t c = n2 * (d == 2 ? n2 - 2 : v.size());
      if ((d != 2 || n2 > 2) && c < cost_two) {
        cost_two = c;
        third = d;
      }
    }
  const std::size_t cost_one = n1 >= 3 ? n1 * (n1 - 1) * (n1 - 2) : SIZE_MAX;
  if (cost_big <= cost_two && cost_big <= cost_one) {
    const auto& a = by_deg[big].front();
    src = {a, frob(a), frob(frob(a))};
    for (const auto& b : by_deg[big]) targets.push_back({b, frob(b), frob(frob(b))});
  } else if (cost_two <= cost_one) {
    const auto& a = by_deg[2].front();
    const ProjPoint c = third == 2 ? by_deg[2][by_deg[2][1] == frob(a) ? 2 : 1] : by_deg[third].front();
    src = {a, frob(a), c};
    for (const auto& b : by_deg[2])
      for (const auto& e : by_deg[third])
        if (!(e == b) && !(e == frob(b))) targets.push_back({b, frob(b), e});
  } else {
    const auto& r = by_deg[1];
    src = {r[0], r[1], r[2]};
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j)
        for (std::size_t k = 0; k < n1; ++k)
          if (i != j && j != k && i != k) targets.push_back({r[i], r[j], r[k]});
  }

  std::vector<Pgl2> out;
  for (const auto& t : targets) {
    Pgl2 g = map_triple(src[0], src[1], src[2], t[0], t[1], t[2]);
    if (!is_rational(g, q)) continue;
    bool ok = true;
    for (std::size_t m = 0; m < pts.size() && ok; ++m)
      ok = std::binary_search(pts.begin(), pts.end(), act_point(g, pts[m]));
    if (ok) out.push_back(*descend(g, emb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperenum
