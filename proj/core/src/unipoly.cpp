#include <algorithm>
#include <sstream>

#include "hyperenum/ff.hpp"

namespace hyperenum {

UniPoly::UniPoly(const FieldCtx& ctx, std::vector<FieldElt> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
  for (const auto& x : c_)
    if (x.ctx_ptr() != ctx_) throw FieldError("polynomial coefficient from a different field");
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const FieldElt& c) { return UniPoly(c.ctx(), {c}); }

UniPoly UniPoly::x(const FieldCtx& ctx) { return UniPoly(ctx, {ctx.zero(), ctx.one()}); }

UniPoly UniPoly::linear_root(const FieldElt& r) { return UniPoly(r.ctx(), {-r, r.ctx().one()}); }

UniPoly UniPoly::from_ints(const FieldCtx& ctx, std::span<const i64> coeffs) {
  std::vector<FieldElt> c;
  c.reserve(coeffs.size());
  for (i64 v : coeffs) c.push_back(ctx.from_int(v));
  return UniPoly(ctx, std::move(c));
}

bool UniPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

FieldElt UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return ctx_->zero();
  return c_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) throw FieldError("monic: zero polynomial");
  if (c_.back().is_one()) return *this;
  FieldElt inv = c_.back().inv();
  return *this * inv;
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElt> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * ctx_->from_int(static_cast<i64>(i)));
  return UniPoly(*ctx_, std::move(d));
}

FieldElt UniPoly::eval(const FieldElt& x) const {
  if (x.ctx_ptr() != ctx_) throw FieldError("eval: context mismatch");
  FieldElt acc = ctx_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  if (o.ctx_ != ctx_) throw FieldError("polynomial context mismatch");
  std::vector<FieldElt> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return UniPoly(*ctx_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  if (o.ctx_ != ctx_) throw FieldError("polynomial context mismatch");
  std::vector<FieldElt> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
  return UniPoly(*ctx_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (o.ctx_ != ctx_) throw FieldError("polynomial context mismatch");
  if (c_.empty() || o.c_.empty()) return UniPoly(*ctx_);
  std::vector<FieldElt> r(c_.size() + o.c_.size() - 1, ctx_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return UniPoly(*ctx_, std::move(r));
}

UniPoly UniPoly::operator*(const FieldElt& s) const {
  if (s.ctx_ptr() != ctx_) throw FieldError("polynomial context mismatch");
  std::vector<FieldElt> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(x * s);
  return UniPoly(*ctx_, std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& m) const {
  if (m.ctx_ != ctx_) throw FieldError("polynomial context mismatch");
  if (m.is_zero()) throw FieldError("polynomial division by zero");
  if (degree() < m.degree()) return {UniPoly(*ctx_), *this};
  std::vector<FieldElt> rem = c_;
  const int dm = m.degree();
  std::vector<FieldElt> quo(static_cast<std::size_t>(degree() - dm + 1), ctx_->zero());
  const FieldElt lead_inv = m.leading().inv();
  const bool monic_div = m.leading().is_one();
  for (int i = degree(); i >= dm; --i) {
    const FieldElt& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    FieldElt c = monic_div ? top : top * lead_inv;
    quo[static_cast<std::size_t>(i - dm)] = c;
    for (int j = 0; j <= dm; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dm + j)];
      slot = slot - c * m.c_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dm));
  return {UniPoly(*ctx_, std::move(quo)), UniPoly(*ctx_, std::move(rem))};
}

UniPoly UniPoly::operator%(const UniPoly& m) const { return divmod(m).second; }
UniPoly UniPoly::operator/(const UniPoly& m) const { return divmod(m).first; }

bool UniPoly::operator==(const UniPoly& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }

std::strong_ordering UniPoly::operator<=>(const UniPoly& o) const {
  if (o.ctx_ != ctx_) throw FieldError("polynomial context mismatch");
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string to_string(const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    FieldElt c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool paren = f.ctx().degree() > 1 && i > 0 && !c.is_one();
    if (i == 0 || !c.is_one()) os << (paren ? "(" : "") << to_string(c) << (paren ? ")" : "");
    if (i > 0) {
      if (!c.is_one()) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a_in, const UniPoly& b_in) {
  UniPoly a = a_in, b = b_in;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

UniPoly powmod(const UniPoly& base, u64 e, const UniPoly& m) {
  UniPoly result = UniPoly::constant(m.ctx().one()) % m;
  UniPoly b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e > 0) b = (b * b) % m;
  }
  return result;
}

UniPoly pow(const UniPoly& base, u64 e) {
  UniPoly result = UniPoly::constant(base.ctx().one());
  UniPoly b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

FieldElt resultant(const UniPoly& a, const UniPoly& b) {
  const FieldCtx& ctx = a.ctx();
  if (&b.ctx() != &ctx) throw FieldError("resultant: context mismatch");
  if (a.is_zero() || b.is_zero()) return ctx.zero();
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  if (size == 0) return ctx.one();
  std::vector<std::vector<FieldElt>> s(static_cast<std::size_t>(size), std::vector<FieldElt>(static_cast<std::size_t>(size), ctx.zero()));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b.coeff(n - i);
  FieldElt det = ctx.one();
  for (int col = 0; col < size; ++col) {
    int sel = -1;
    for (int r = col; r < size; ++r)
      if (!s[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) return ctx.zero();
    if (sel != col) {
      std::swap(s[static_cast<std::size_t>(sel)], s[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const FieldElt piv = s[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det = det * piv;
    const FieldElt pinv = piv.inv();
    for (int r = col + 1; r < size; ++r) {
      const FieldElt f = s[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * pinv;
      if (f.is_zero()) continue;
      for (int c = col; c < size; ++c)
        s[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] - f * s[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  return det;
}

}  // namespace hyperenum
