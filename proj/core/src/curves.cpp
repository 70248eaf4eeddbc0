#include "hyperenum/curves.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>

#include "hyperenum/galois_enum.hpp"

namespace hyperenum {

std::strong_ordering HyperCurve::operator<=>(const HyperCurve& o) const {
  if (auto c = f <=> o.f; c != 0) return c;
  return delta <=> o.delta;
}

FieldElt first_nonsquare(const FieldCtx& F) {
  if (F.characteristic() == 2) throw std::invalid_argument("first_nonsquare: characteristic 2");
  for (u64 r = 1; r < F.order(); ++r) {
    FieldElt x = F.element_at(r);
    if (!x.is_zero() && !is_square(x)) return x;
  }
  throw std::logic_error("first_nonsquare: none found");
}

std::vector<HyperCurve> curves_from_rep(const HomPoly& f) {
  const FieldCtx& F = f.ctx();
  if (F.characteristic() == 2) throw std::invalid_argument("curves_from_rep: q must be odd");
  if (f.degree() % 2 != 0 || f.degree() < 6) throw std::invalid_argument("curves_from_rep: degree must be even and >= 6");
  if (!is_separable(f)) throw std::invalid_argument("curves_from_rep: form not separable");
  const int genus = f.degree() / 2 - 1;
  const auto S = zero_set_stabilizer(f);
  int trivial = 0;
  for (const auto& g : S)
    if (square_class(g, f) == SquareClass::trivial) ++trivial;
  const int aut = 2 * trivial;
  const auto stab = S.size();
  if (static_cast<std::size_t>(trivial) < stab) return {HyperCurve{genus, f, F.one(), aut}};
  return {HyperCurve{genus, f, F.one(), aut}, HyperCurve{genus, f, first_nonsquare(F), aut}};
}

std::vector<HyperCurve> enumerate_curves(const FieldCtx& F, int genus, int threads) {
  if (F.characteristic() == 2) throw std::invalid_argument("enumerate_curves: q must be odd");
  if (genus < 2) throw std::invalid_argument("enumerate_curves: genus must be at least 2");
  const auto reps = sym_orbit_reps(F, 2 * genus + 2, threads);
  std::vector<std::vector<HyperCurve>> per(reps.size());
  auto work = [&](std::size_t i) { per[i] = curves_from_rep(reps[i].form); };
  if (threads <= 1) {
    for (std::size_t i = 0; i < reps.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < threads; ++w)
      jobs.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next++) < reps.size();) work(i);
      }));
    for (auto& j : jobs) j.get();
  }
  std::vector<HyperCurve> out;
  for (auto& v : per)
    for (auto& c : v) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

MassResult mass_check(const std::vector<HyperCurve>& curves, u64 q, int genus) {
  Rational sum = 0;
  for (const auto& c : curves) sum += Rational(1, c.aut_order);
  boost::multiprecision::cpp_int e = 1;
  for (int i = 0; i < 2 * genus - 1; ++i) e *= q;
  Rational expected(e);
  return {sum, expected, sum == expected};
}

std::vector<FieldElt> weierstrass_coeffs(const HyperCurve& c) {
  std::vector<FieldElt> out;
  for (int i = 0; i <= c.f.dehom().degree(); ++i) out.push_back(c.delta * c.f.coeff(i));
  return out;
}

}  // namespace hyperenum
