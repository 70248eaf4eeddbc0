#include "hyperenum/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperenum {

namespace {

using Coeffs = std::vector<FieldElt>;

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, const FieldCtx& F) {
  Coeffs r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Projective group elements, scaled so the first nonzero entry is 1.
struct Mat {
  FieldElt a, b, c, d;
};

std::vector<Mat> group(const FieldCtx& F) {
  std::vector<Mat> out;
  const u64 q = F.order();
  for (u64 ia = 0; ia < q; ++ia)
    for (u64 ib = 0; ib < q; ++ib)
      for (u64 ic = 0; ic < q; ++ic)
        for (u64 id = 0; id < q; ++id) {
          Mat m{F.element_at(ia), F.element_at(ib), F.element_at(ic), F.element_at(id)};
          if ((m.a * m.d - m.b * m.c).is_zero()) continue;
          const FieldElt& lead = !m.a.is_zero() ? m.a : m.b;
          if (!lead.is_one()) continue;
          out.push_back(m);
        }
  return out;
}

void guard(u64 q, int n) {
  long double v = 1;
  for (int i = 0; i < n; ++i) v *= static_cast<long double>(q);
  if (v > static_cast<long double>(kOracleLimit)) throw OracleGuard("oracle: q^n exceeds the brute-force limit");
}

bool separable(const HomPoly& f) {
  const UniPoly& u = f.dehom();
  if (f.degree() - u.degree() > 1) return false;
  if (u.degree() <= 0) return true;
  return gcd(u, u.derivative()).degree() == 0;
}

}  // namespace

std::pair<HomPoly, FieldElt> substitute_scaled(const HomPoly& f, const FieldElt& a, const FieldElt& b,
                                               const FieldElt& c, const FieldElt& d) {
  const FieldCtx& F = f.ctx();
  const int n = f.degree();
  std::vector<Coeffs> P{{F.one()}}, Q{{F.one()}};
  for (int i = 1; i <= n; ++i) {
    P.push_back(poly_mul(P.back(), {b, a}, F));
    Q.push_back(poly_mul(Q.back(), {d, c}, F));
  }
  Coeffs r(static_cast<std::size_t>(n) + 1, F.zero());
  for (int i = 0; i <= n; ++i) {
    const FieldElt ci = f.coeff(i);
    if (ci.is_zero()) continue;
    Coeffs t = poly_mul(P[static_cast<std::size_t>(i)], Q[static_cast<std::size_t>(n - i)], F);
    for (std::size_t k = 0; k < t.size(); ++k) r[k] += ci * t[k];
  }
  std::size_t top = r.size();
  while (top > 0 && r[top - 1].is_zero()) --top;
  if (top == 0) throw std::invalid_argument("substitute: singular substitution");
  const FieldElt lead = r[top - 1];
  const FieldElt li = lead.inv();
  Coeffs u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(top));
  for (auto& x : u) x = x * li;
  return {HomPoly(n, UniPoly(F, u)), lead};
}

HomPoly substitute(const HomPoly& f, const FieldElt& a, const FieldElt& b, const FieldElt& c, const FieldElt& d) {
  return substitute_scaled(f, a, b, c, d).first;
}

std::vector<HomPoly> all_separable_forms(const FieldCtx& F, int n) {
  guard(F.order(), n);
  const u64 q = F.order();
  std::vector<HomPoly> out;
  for (int deg : {n - 1, n}) {
    if (deg < 0) continue;
    u64 total = 1;
    for (int i = 0; i < deg; ++i) total *= q;
    for (u64 idx = 0; idx < total; ++idx) {
      Coeffs c(static_cast<std::size_t>(deg) + 1, F.zero());
      c[static_cast<std::size_t>(deg)] = F.one();
      u64 v = idx;
      for (int i = 0; i < deg; ++i) {
        c[static_cast<std::size_t>(i)] = F.element_at(v % q);
        v /= q;
      }
      HomPoly f(n, UniPoly(F, c));
      if (separable(f)) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<HomPoly>> brute_sym_orbits(const FieldCtx& F, int n) {
  const auto forms = all_separable_forms(F, n);
  const auto G = group(F);
  std::set<HomPoly> seen;
  std::vector<std::vector<HomPoly>> out;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    std::set<HomPoly> orb;
    for (const auto& m : G) orb.insert(substitute(f, m.a, m.b, m.c, m.d));
    seen.insert(orb.begin(), orb.end());
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

std::vector<BruteCurveClass> brute_curves(const FieldCtx& F, int genus) {
  if (F.characteristic() == 2) throw std::invalid_argument("brute_curves: q must be odd");
  const int n = 2 * genus + 2;
  const auto forms = all_separable_forms(F, n);
  const auto G = group(F);
  std::set<FieldElt> squares;
  for (u64 r = 1; r < F.order(); ++r) squares.insert(F.element_at(r) * F.element_at(r));
  FieldElt nu;
  for (u64 r = 1; r < F.order(); ++r)
    if (!squares.count(F.element_at(r))) {
      nu = F.element_at(r);
      break;
    }
  auto cls = [&](const FieldElt& x) { return squares.count(x) ? F.one() : nu; };

  using Pt = std::pair<HomPoly, FieldElt>;
  std::set<Pt> seen;
  std::vector<BruteCurveClass> out;
  for (const auto& f : forms)
    for (const FieldElt& delta : {F.one(), nu}) {
      if (seen.count({f, delta})) continue;
      std::set<Pt> orb;
      int stab = 0;
      for (const auto& m : G) {
        auto [g, L] = substitute_scaled(f, m.a, m.b, m.c, m.d);
        Pt img{g, cls(delta * L)};
        if (g == f && img.second == delta) ++stab;
        orb.insert(img);
      }
      seen.insert(orb.begin(), orb.end());
      out.push_back({std::vector<Pt>(orb.begin(), orb.end()), 2 * stab});
    }
  return out;
}

bool same_orbit_exhaustive(const HomPoly& f, const HomPoly& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("same_orbit: degree mismatch");
  for (const auto& m : group(f.ctx()))
    if (substitute(f, m.a, m.b, m.c, m.d) == g) return true;
  return false;
}

bool same_orbit(const HomPoly& f, const HomPoly& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("same_orbit: degree mismatch");
  const int n = f.degree();
  auto irreducible = [n](const HomPoly& h) { return h.dehom().degree() == n && is_irreducible(h.dehom()); };
  if (n >= 4 && irreducible(f) && irreducible(g)) return cross_poly(f) == cross_poly(g);
  return same_orbit_exhaustive(f, g);
}

}  // namespace hyperenum

namespace hyperenum {

std::string compare_orbits_with_oracle(const std::vector<TypedRep>& reps, const FieldCtx& F, int n) {
  const auto classes = brute_sym_orbits(F, n);
  std::map<HomPoly, std::size_t> idx;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& f : classes[i]) idx.emplace(f, i);
  std::vector<int> hits(classes.size(), 0);
  for (const auto& r : reps) {
    auto it = idx.find(r.form);
    if (it == idx.end()) return "representative is not a separable form: " + to_string(r.form);
    if (++hits[it->second] > 1) return "two representatives in one orbit: " + to_string(r.form);
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (hits[i] == 0) return "orbit without representative: " + to_string(classes[i].front());
  return {};
}

std::string compare_curves_with_oracle(const std::vector<HyperCurve>& curves, const FieldCtx& F, int genus) {
  const auto classes = brute_curves(F, genus);
  std::map<std::pair<HomPoly, FieldElt>, std::size_t> idx;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& m : classes[i].members) idx.emplace(m, i);
  std::vector<int> hits(classes.size(), 0);
  for (const auto& c : curves) {
    auto it = idx.find({c.f, c.delta});
    if (it == idx.end()) return "curve not found among brute-force classes: " + to_string(c.f);
    if (++hits[it->second] > 1) return "two isomorphic curves: " + to_string(c.f);
    if (classes[it->second].aut_order != c.aut_order)
      return "automorphism order mismatch for " + to_string(c.f) + ": " + std::to_string(c.aut_order) + " vs " +
             std::to_string(classes[it->second].aut_order);
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (hits[i] == 0) return "isomorphism class missing: " + to_string(classes[i].members.front().first);
  return {};
}

}  // namespace hyperenum
