#include "hyperenum/cosets.hpp"

#include <algorithm>

namespace hyperenum {

RelativeBasis::RelativeBasis(const FieldCtx& base, const FieldCtx& ext) : base_(&base), ext_(&ext) {
  if (ext.characteristic() != base.characteristic() || ext.degree() % base.degree() != 0)
    throw FieldError("RelativeBasis: not an extension");
  n_ = ext.degree() / base.degree();
  FieldElt t = ext.degree() > 1 ? ext.generator_t() : ext.zero();
  FieldElt cur = ext.one();
  for (int i = 0; i < n_; ++i) {
    powers_.push_back(cur);
    cur = cur * t;
  }
}

FieldElt RelativeBasis::element(const std::vector<FieldElt>& coords) const {
  const Embedding& emb = embed(*base_, *ext_);
  FieldElt acc = ext_->zero();
  for (int i = 0; i < n_; ++i)
    if (!coords[static_cast<std::size_t>(i)].is_zero()) acc += emb(coords[static_cast<std::size_t>(i)]) * powers_[static_cast<std::size_t>(i)];
  return acc;
}

std::vector<FieldElt> RelativeBasis::normalized(int start) const {
  std::vector<FieldElt> out;
  const u64 q = base_->order();
  const Embedding& emb = embed(*base_, *ext_);
  for (int lead = start; lead < n_; ++lead) {
    const int free = n_ - 1 - lead;
    u64 total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (u64 idx = 0; idx < total; ++idx) {
      FieldElt acc = powers_[static_cast<std::size_t>(lead)];
      u64 v = idx;
      for (int i = n_ - 1; i > lead; --i) {
        FieldElt c = base_->element_at(v % q);
        v /= q;
        if (!c.is_zero()) acc += emb(c) * powers_[static_cast<std::size_t>(i)];
      }
      out.push_back(acc);
    }
  }
  return out;
}

std::vector<ProjPoint> orbit_reps_B(const FieldCtx& F, const FieldElt& omega, const FieldElt& gamma) {
  const FieldCtx& E = omega.ctx();
  const u64 q = F.order();
  const FieldElt omega_q = frobenius(omega, q);
  std::vector<ProjPoint> out;
  FieldElt gi = E.one();
  for (u64 i = 0; i + 1 < q; ++i) {
    FieldElt den = gi + E.one();
    if (den.is_zero()) {
      out.push_back(ProjPoint::infinity(E));
    } else {
      out.push_back(ProjPoint::finite((omega * gi + omega_q) / den));
    }
    gi = gi * gamma;
  }
  return out;
}

namespace {

struct Triples {
  const FieldCtx& E;
  ProjPoint inf, zero, one;
  std::vector<Pgl2> out;
  explicit Triples(const FieldCtx& e)
      : E(e), inf(ProjPoint::infinity(e)), zero(ProjPoint::finite(e.zero())), one(ProjPoint::finite(e.one())) {}
  void add(const ProjPoint& z, const ProjPoint& e, const ProjPoint& t) { out.push_back(map_triple(inf, zero, one, z, e, t)); }
};

}  // namespace

std::vector<Pgl2> coset_reps_q2(const FieldCtx& F) {
  const FieldCtx& E = extension_of(F, 2);
  const Embedding& emb = embed(F, E);
  const u64 q = F.order();
  const FieldElt omega = E.generator_t();
  const ProjPoint w = ProjPoint::finite(omega);
  const ProjPoint wq = ProjPoint::finite(frobenius(omega, q));
  auto B = orbit_reps_B(F, omega, E.multiplicative_generator());
  auto line = rational_points(E);
  Triples T(E);
  T.add(T.inf, T.zero, T.one);
  for (u64 a = 0; a < q; ++a) T.add(T.inf, T.zero, ProjPoint::finite(omega + emb(F.element_at(a))));
  for (const auto& th : line)
    if (!th.is_infinity() && !(th == w)) T.add(T.inf, w, th);
  for (const auto& th : B) T.add(w, wq, th);
  for (const auto& eta : B)
    for (const auto& th : line)
      if (!(th == w) && !(th == eta)) T.add(w, eta, th);
  std::sort(T.out.begin(), T.out.end());
  return T.out;
}

std::vector<FieldElt> c_infinity_reps(const FieldCtx& F, int p) {
  RelativeBasis rb(F, extension_of(F, p));
  std::vector<FieldElt> out;
  for (auto& x : rb.normalized(1))
    if (degree_over(x, F.order()) > 1) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElt> c_infinity_zero_reps(const FieldCtx& F, int p) {
  RelativeBasis rb(F, extension_of(F, p));
  std::vector<FieldElt> out;
  for (auto& x : rb.normalized(0))
    if (degree_over(x, F.order()) > 1) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElt> primitive_orbit_reps(const FieldCtx& F, int n) {
  if (n < 3) throw FieldError("primitive_orbit_reps: n must be at least 3");
  const FieldCtx& E = extension_of(F, n);
  if (n == 3) return {E.generator_t()};
  const Embedding& emb = embed(F, E);
  const u64 q = F.order();
  RelativeBasis rb(F, E);
  std::vector<std::pair<UniPoly, FieldElt>> L;
  for (const auto& alpha : rb.normalized(1)) {
    std::vector<FieldElt> conj{alpha};
    for (int i = 1; i < n; ++i) conj.push_back(frobenius(conj.back(), q));
    bool full = true, minimal = true;
    for (int i = 1; i < n; ++i) {
      if (conj[static_cast<std::size_t>(i)] == alpha) full = false;
      if (conj[static_cast<std::size_t>(i)] <= alpha) minimal = false;
    }
    if (!full || !minimal) continue;
    FieldElt chi = ((conj[3] - conj[1]) * (conj[2] - conj[0])) / ((conj[3] - conj[0]) * (conj[2] - conj[1]));
    L.emplace_back(minimal_poly(chi, emb), alpha);
  }
  std::sort(L.begin(), L.end());
  std::vector<FieldElt> out;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (i > 0 && L[i].first == L[i - 1].first) continue;
    FieldElt a = L[i].second;
    for (int j = 0; j < L[i].first.degree(); ++j) {
      out.push_back(a);
      a = frobenius(a, q);
    }
  }
  return out;
}

std::vector<Pgl2> coset_reps_qp(const FieldCtx& F, int p) {
  if (p == 2) throw FieldError("coset_reps_qp: use coset_reps_q2 for p = 2");
  if (p < 3 || !is_prime(static_cast<u64>(p))) throw FieldError("coset_reps_qp: p must be an odd prime");
  const FieldCtx& E = extension_of(F, p);
  auto line = rational_points(E);
  Triples T(E);
  T.add(T.inf, T.zero, T.one);
  for (const auto& th : c_infinity_zero_reps(F, p)) T.add(T.inf, T.zero, ProjPoint::finite(th));
  for (const auto& eta : c_infinity_reps(F, p)) {
    const ProjPoint e = ProjPoint::finite(eta);
    for (const auto& th : line)
      if (!th.is_infinity() && !(th == e)) T.add(T.inf, e, th);
  }
  for (const auto& z : primitive_orbit_reps(F, p)) {
    const ProjPoint zp = ProjPoint::finite(z);
    for (const auto& eta : line) {
      if (eta == zp) continue;
      for (const auto& th : line)
        if (!(th == zp) && !(th == eta)) T.add(zp, eta, th);
    }
  }
  std::sort(T.out.begin(), T.out.end());
  return T.out;
}

}  // namespace hyperenum
