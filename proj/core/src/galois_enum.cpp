#include "hyperenum/galois_enum.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>
#include <stdexcept>

#include "hyperenum/cosets.hpp"
#include "hyperenum/quartics.hpp"

namespace hyperenum {

const HomPoly* OrbitTable::find(const UniPoly& key) const {
  auto it = entries.find(key);
  return it == entries.end() ? nullptr : &it->second;
}

std::vector<HomPoly> OrbitTable::values() const {
  std::vector<HomPoly> out;
  for (const auto& [k, v] : entries) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

HomPoly homog(const UniPoly& u) { return from_univariate(u, u.degree()); }

std::vector<HomPoly> irreducible_forms(const FieldCtx& F, int d) {
  std::vector<HomPoly> out;
  if (d == 1) out.push_back(linear_form(ProjPoint::infinity(F)));
  for (const auto& u : monic_irreducibles(F, d)) out.push_back(homog(u));
  std::sort(out.begin(), out.end());
  return out;
}

// Calls fn(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Frobenius chain alpha, alpha^q, ... of a root of an irreducible form of
// degree at least 2.
std::vector<FieldElt> root_chain(const HomPoly& h) {
  const FieldCtx& F = h.ctx();
  const int m = h.degree();
  const FieldCtx& E = extension_of(F, m);
  auto rs = roots_in(h.dehom(), embed(F, E));
  std::vector<FieldElt> c{rs.front()};
  for (int i = 1; i < m; ++i) c.push_back(frobenius(c.back(), F.order()));
  return c;
}

std::optional<Pgl2> rational_map(const FieldElt& a0, const FieldElt& a1, const FieldElt& a2, const FieldElt& b0,
                                 const FieldElt& b1, const FieldElt& b2, const Embedding& emb) {
  Pgl2 g = map_triple(ProjPoint::finite(a0), ProjPoint::finite(a1), ProjPoint::finite(a2), ProjPoint::finite(b0),
                      ProjPoint::finite(b1), ProjPoint::finite(b2));
  return descend(g, emb);
}

// Tracks whether f is the least element of its set of normalized images.
struct MinFilter {
  const HomPoly& f;
  bool minimal = true;
  void offer(const Pgl2& g) {
    if (minimal && apply(g, f) < f) minimal = false;
  }
};

void sort_unique(std::vector<HomPoly>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<HomPoly> anchored_reps(const FieldCtx& F, int s, int t) {
  std::vector<HomPoly> out;
  if (t < 3 || s < 0) throw std::invalid_argument("anchored_reps: need t >= 3");
  const u64 q = F.order();
  std::vector<FieldElt> pts;
  for (u64 r = 0; r < q; ++r) {
    FieldElt a = F.element_at(r);
    if (!a.is_zero() && !a.is_one()) pts.push_back(a);
  }
  const auto I2 = irreducible_forms(F, 2);
  const ProjPoint inf = ProjPoint::infinity(F), zero = ProjPoint::finite(F.zero()), one = ProjPoint::finite(F.one());
  const HomPoly base = linear_form(inf) * linear_form(zero) * linear_form(one);
  for_each_subset(static_cast<int>(pts.size()), t - 3, [&](const std::vector<int>& S) {
    HomPoly lin = base;
    std::vector<ProjPoint> z{inf, zero, one};
    for (int i : S) {
      z.push_back(ProjPoint::finite(pts[static_cast<std::size_t>(i)]));
      lin = lin * linear_form(z.back());
    }
    for_each_subset(static_cast<int>(I2.size()), s, [&](const std::vector<int>& Q) {
      HomPoly f = lin;
      for (int i : Q) f = f * I2[static_cast<std::size_t>(i)];
      MinFilter mf{f};
      for (std::size_t i = 0; i < z.size() && mf.minimal; ++i)
        for (std::size_t j = 0; j < z.size() && mf.minimal; ++j)
          for (std::size_t k = 0; k < z.size() && mf.minimal; ++k)
            if (i != j && j != k && i != k) mf.offer(map_triple(z[i], z[j], z[k], inf, zero, one));
      if (mf.minimal) out.push_back(f);
    });
  });
  sort_unique(out);
  return out;
}

}  // namespace

HomPoly canonical_cubic(const FieldCtx& F) {
  const FieldCtx& E = extension_of(F, 3);
  return homog(minimal_poly(E.generator_t(), embed(F, E)));
}

OrbitTable naive_orbit_table(const FieldCtx& F, int n) {
  if (n < 4) throw std::invalid_argument("naive_orbit_table: n must be at least 4");
  const FieldCtx& E = extension_of(F, n);
  const Embedding& emb = embed(F, E);
  RelativeBasis rb(F, E);
  std::vector<std::pair<UniPoly, HomPoly>> L;
  for (const auto& a : rb.normalized(1)) {
    if (degree_over(a, F.order()) != n) continue;
    L.emplace_back(cross_poly_of_root(a, emb, n), homog(minimal_poly(a, emb)));
  }
  std::sort(L.begin(), L.end());
  OrbitTable T;
  T.n = n;
  for (auto& [k, f] : L) T.entries.emplace(k, f);
  return T;
}

std::vector<HomPoly> reps_type_ones(const FieldCtx& F, int n) {
  if (n < 4) throw std::invalid_argument("reps_type_ones: n must be at least 4");
  return anchored_reps(F, 0, n);
}

std::vector<HomPoly> reps_type_two_with_rationals(const FieldCtx& F, int s, int t) {
  if (s < 1 || t < 3) throw std::invalid_argument("reps_type_two_with_rationals: need s >= 1, t >= 3");
  return anchored_reps(F, s, t);
}

std::vector<HomPoly> reps_type_two_heavy(const FieldCtx& F, int s, int t) {
  if (s < 2 || t < 0) throw std::invalid_argument("reps_type_two_heavy: need s >= 2, t >= 0");
  const MuTable table = mu_table(F);
  const auto I1 = irreducible_forms(F, 1);
  const auto I2 = irreducible_forms(F, 2);
  const Embedding& emb = embed(F, extension_of(F, 2));
  std::vector<std::vector<FieldElt>> chains;
  for (const auto& g : I2) chains.push_back(root_chain(g));
  auto index_of = [&](const HomPoly& g) {
    return static_cast<int>(std::lower_bound(I2.begin(), I2.end(), g) - I2.begin());
  };
  // Root chains of the two factors of each table representative.
  std::map<HomPoly, std::pair<int, int>> rep_factors;
  for (const auto& [key, R] : table.entries) {
    if (key.first != QuarticKind::two_quadratic) continue;
    auto fs = irreducible_factors(R);
    rep_factors.emplace(R, std::make_pair(index_of(fs[0]), index_of(fs[1])));
  }
  std::vector<HomPoly> out;
  for (const auto& R : two_quadratic_reps_any(F)) {
    auto fs = irreducible_factors(R);
    const int i1 = index_of(fs[0]), i2 = index_of(fs[1]);
    std::vector<int> rest;
    for (int i = 0; i < static_cast<int>(I2.size()); ++i)
      if (i != i1 && i != i2) rest.push_back(i);
    for_each_subset(static_cast<int>(rest.size()), s - 2, [&](const std::vector<int>& Q) {
      std::vector<int> quads{i1, i2};
      HomPoly fq = R;
      for (int i : Q) {
        quads.push_back(rest[static_cast<std::size_t>(i)]);
        fq = fq * I2[static_cast<std::size_t>(quads.back())];
      }
      for_each_subset(static_cast<int>(I1.size()), t, [&](const std::vector<int>& T) {
        HomPoly f = fq;
        for (int i : T) f = f * I1[static_cast<std::size_t>(i)];
        MinFilter mf{f};
        for (std::size_t a = 0; a < quads.size() && mf.minimal; ++a)
          for (std::size_t b = a + 1; b < quads.size() && mf.minimal; ++b) {
            const auto& ca = chains[static_cast<std::size_t>(quads[a])];
            const auto& cb = chains[static_cast<std::size_t>(quads[b])];
            const HomPoly pair = I2[static_cast<std::size_t>(quads[a])] * I2[static_cast<std::size_t>(quads[b])];
            const HomPoly* rep = table.find(QuarticKind::two_quadratic, mu(pair));
            if (rep == nullptr) throw std::logic_error("reps_type_two_heavy: mu not in table");
            auto [r1, r2] = rep_factors.at(*rep);
            const auto& c1 = chains[static_cast<std::size_t>(r1)];
            const auto& c2 = chains[static_cast<std::size_t>(r2)];
            for (const auto* x : {&c1, &c2}) {
              const auto& y = (x == &c1) ? c2 : c1;
              for (int u = 0; u < 2 && mf.minimal; ++u)
                for (int v = 0; v < 2 && mf.minimal; ++v)
                  if (auto g = rational_map(ca[0], ca[1], cb[0], (*x)[static_cast<std::size_t>(u)],
                                            (*x)[static_cast<std::size_t>(1 - u)], y[static_cast<std::size_t>(v)], emb))
                    mf.offer(*g);
            }
          }
        if (mf.minimal) out.push_back(f);
      });
    });
  }
  sort_unique(out);
  return out;
}

std::vector<HomPoly> reps_type_medium(const FieldCtx& F, const GaloisType& M) {
  if (M.empty()) throw std::invalid_argument("reps_type_medium: empty type");
  int n = 0;
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (M[i] < 1 || (i > 0 && M[i] > M[i - 1])) throw std::invalid_argument("reps_type_medium: not a partition");
    n += M[i];
  }
  const int m1 = M[0];
  if (m1 < 3 || m1 > n - 1) throw std::invalid_argument("reps_type_medium: m1 out of range");
  const u64 q = F.order();
  const Embedding& emb = embed(F, extension_of(F, m1));

  std::vector<HomPoly> S;
  OrbitTable table;
  if (m1 == 3) {
    S.push_back(canonical_cubic(F));
  } else {
    table = naive_orbit_table(F, m1);
    S = table.values();
  }
  std::map<HomPoly, std::vector<FieldElt>> rep_chain;
  for (const auto& r : S) rep_chain.emplace(r, root_chain(r));
  auto rep_for = [&](const HomPoly& h) -> const HomPoly& {
    if (m1 == 3) return S.front();
    if (rep_chain.count(h)) return rep_chain.find(h)->first;
    const HomPoly* r = table.find(cross_poly(h));
    if (r == nullptr) throw std::logic_error("reps_type_medium: cross polynomial not in table");
    return *r;
  };

  // Remaining parts grouped by degree.
  std::map<int, int, std::greater<>> mult;
  for (std::size_t i = 1; i < M.size(); ++i) ++mult[M[i]];
  std::vector<std::pair<int, int>> groups(mult.begin(), mult.end());
  std::map<int, std::vector<HomPoly>> lists;
  for (const auto& [d, k] : groups) lists[d] = irreducible_forms(F, d);

  std::vector<HomPoly> out;
  for (const auto& f1 : S) {
    // Depth-first over the degree groups.
    std::vector<HomPoly> chosen;
    auto finish = [&]() {
      HomPoly f = f1;
      for (const auto& g : chosen) f = f * g;
      MinFilter mf{f};
      std::vector<const HomPoly*> tops{&f1};
      for (const auto& g : chosen)
        if (g.degree() == m1) tops.push_back(&g);
      for (const HomPoly* h : tops) {
        if (!mf.minimal) break;
        const HomPoly& r = rep_for(*h);
        const auto ch = (h == &f1) ? rep_chain.at(f1) : root_chain(*h);
        const auto& rc = rep_chain.at(r);
        for (int a = 0; a < m1 && mf.minimal; ++a) {
          auto at = [&](int i) { return rc[static_cast<std::size_t>((a + i) % m1)]; };
          if (auto g = rational_map(ch[0], ch[1], ch[2], at(0), at(1), at(2), emb)) mf.offer(*g);
        }
      }
      if (mf.minimal) out.push_back(f);
    };
    auto recurse = [&](auto&& self, std::size_t gi) -> void {
      if (gi == groups.size()) {
        finish();
        return;
      }
      const auto [d, k] = groups[gi];
      std::vector<HomPoly> pool;
      for (const auto& g : lists[d])
        if (!(g == f1)) pool.push_back(g);
      for_each_subset(static_cast<int>(pool.size()), k, [&](const std::vector<int>& idx) {
        for (int i : idx) chosen.push_back(pool[static_cast<std::size_t>(i)]);
        self(self, gi + 1);
        chosen.erase(chosen.end() - static_cast<std::ptrdiff_t>(idx.size()), chosen.end());
      });
    };
    recurse(recurse, 0);
  }
  (void)q;
  sort_unique(out);
  return out;
}

std::vector<HomPoly> reps_type_full(const FieldCtx& F, int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("reps_type_full: n must be even and at least 4");
  if (n == 4) {
    auto v = irreducible_quartic_reps_any(F);
    sort_unique(v);
    return v;
  }
  const u64 q = F.order();
  const int half = n / 2;
  const FieldCtx& K = extension_of(F, 2);
  const FieldCtx& E = extension_of(F, n);
  std::vector<HomPoly> M;
  if (half == 3) {
    M.push_back(canonical_cubic(K));
  } else if (half == 4) {
    M = irreducible_quartic_reps_any(K);
  } else {
    M = naive_orbit_table(K, half).values();
  }
  std::vector<FieldElt> roots0;
  for (const auto& g : M) roots0.push_back(roots_in(g.dehom(), embed(K, E)).front());
  const Embedding& FK = embed(F, K);
  const Embedding& KE = embed(K, E);
  const Embedding& FE = embed(F, E);
  std::vector<std::pair<UniPoly, HomPoly>> L;
  for (const auto& G : coset_reps_q2(F)) {
    const Pgl2 GE = lift(G, KE);
    for (std::size_t i = 0; i < M.size(); ++i) {
      const HomPoly g = apply(G, M[i]);
      const HomPoly gq = frobenius_twist(g, q);
      if (g == gq) continue;
      auto f = descend(g * gq, FK);
      if (!f) throw std::logic_error("reps_type_full: product not rational");
      const FieldElt alpha = act_point(GE, ProjPoint::finite(roots0[i])).value();
      L.emplace_back(cross_poly_of_root(alpha, FE, n), *f);
    }
  }
  std::sort(L.begin(), L.end());
  std::vector<HomPoly> out;
  for (std::size_t i = 0; i < L.size(); ++i)
    if (i == 0 || !(L[i].first == L[i - 1].first)) out.push_back(L[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GaloisType> galois_types(int n) {
  std::vector<GaloisType> out;
  GaloisType cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HomPoly> reps_for_type(const FieldCtx& F, const GaloisType& M) {
  int n = 0, s = 0, t = 0;
  for (int m : M) {
    n += m;
    s += (m == 2);
    t += (m == 1);
  }
  if (M.empty() || n < 4) throw std::invalid_argument("reps_for_type: degree must be at least 4");
  const int m1 = M[0];
  if (m1 == 1) return reps_type_ones(F, n);
  if (m1 == 2) {
    if (t >= 3) return reps_type_two_with_rationals(F, s, t);
    if (s >= 2) return reps_type_two_heavy(F, s, t);
    auto v = quad_linear_reps(F);
    sort_unique(v);
    return v;
  }
  if (m1 < n) return reps_type_medium(F, M);
  return reps_type_full(F, n);
}

std::vector<TypedRep> sym_orbit_reps(const FieldCtx& F, int n, int threads) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("sym_orbit_reps: n must be even and at least 4");
  const auto types = galois_types(n);
  std::vector<std::vector<HomPoly>> per(types.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < types.size(); ++i) per[i] = reps_for_type(F, types[i]);
  } else {
    std::vector<std::future<void>> jobs;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < threads; ++w)
      jobs.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next++) < types.size();) per[i] = reps_for_type(F, types[i]);
      }));
    for (auto& j : jobs) j.get();
  }
  std::vector<TypedRep> out;
  for (std::size_t i = 0; i < types.size(); ++i)
    for (auto& f : per[i]) out.push_back({types[i], std::move(f)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperenum
