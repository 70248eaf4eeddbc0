#include "hyperenum/ff.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace hyperenum {

namespace {

void require_same(const FieldCtx* a, const FieldCtx* b) {
  if (a != b || a == nullptr) throw FieldError("field context mismatch");
}

u64 inverse_mod(u64 a, u64 p) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(p), nr = static_cast<i64>(a % p);
  while (nr != 0) {
    i64 quo = r / nr;
    t -= quo * nt;
    std::swap(t, nt);
    r -= quo * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw FieldError("element is not invertible");
  if (t < 0) t += static_cast<i64>(p);
  return static_cast<u64>(t);
}

// Irreducibility over F_p for the modulus search; independent of any
// extension context.
bool irreducible_over_prime(const FieldCtx& fp, const std::vector<u32>& coeffs) {
  std::vector<FieldElt> c;
  c.reserve(coeffs.size());
  for (u32 v : coeffs) c.push_back(fp.from_int(v));
  return is_irreducible(UniPoly(fp, std::move(c)));
}

std::vector<u32> find_canonical_modulus(const FieldCtx& fp, int k) {
  const u32 p = fp.characteristic();
  std::vector<u32> digits(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<u32> coeffs(digits);
    coeffs.push_back(1);
    if (digits[0] != 0 && irreducible_over_prime(fp, coeffs)) return coeffs;
    // Increment with c_0 as the most significant digit.
    int i = k - 1;
    while (i >= 0) {
      if (++digits[static_cast<std::size_t>(i)] < p) break;
      digits[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) throw FieldError("no irreducible polynomial found");
  }
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<u32, int>, std::unique_ptr<FieldCtx>> fields;
  std::map<std::pair<const FieldCtx*, const FieldCtx*>, std::unique_ptr<Embedding>> embeddings;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Number theory helpers

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<u32, int> split_prime_power(u64 q) {
  if (q < 2) throw FieldError("not a prime power: " + std::to_string(q));
  auto ps = prime_factors(q);
  if (ps.size() != 1) throw FieldError("not a prime power: " + std::to_string(q));
  int k = 0;
  for (u64 v = q; v > 1; v /= ps[0]) ++k;
  return {static_cast<u32>(ps[0]), k};
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(u32 p, int k, std::vector<u32> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k; ++i) q_ *= p;
  neg_modulus_.resize(modulus_.size());
  for (std::size_t i = 0; i < modulus_.size(); ++i) neg_modulus_[i] = (p - modulus_[i]) % p;
  order_primes_ = prime_factors(q_ - 1);
  if (k_ > 1) {
    FieldElt t = generator_t();
    FieldElt tp = t.pow(p_);
    FieldElt cur = one();
    frob_rows_.resize(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) {
      frob_rows_[static_cast<std::size_t>(i)] = cur.c_;
      cur = mul(cur, tp);
    }
  }
}

const FieldCtx& FieldCtx::get(u32 p, int k) {
  if (p >= (1u << 20) || !is_prime(p)) throw FieldError("not a supported prime: " + std::to_string(p));
  if (k < 1 || k > kMaxDegree) throw FieldError("unsupported extension degree " + std::to_string(k));
  {
    unsigned __int128 q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > (static_cast<unsigned __int128>(1) << 62)) throw FieldError("field too large");
  }
  auto& reg = registry();
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.fields.find({p, k});
    if (it != reg.fields.end()) return *it->second;
  }
  std::vector<u32> modulus;
  if (k == 1) {
    modulus = {0, 1};
  } else {
    modulus = find_canonical_modulus(get(p, 1), k);
  }
  std::unique_ptr<FieldCtx> ctx(new FieldCtx(p, k, std::move(modulus)));
  std::lock_guard lock(reg.mu);
  auto [it, inserted] = reg.fields.emplace(std::make_pair(p, k), std::move(ctx));
  return *it->second;
}

FieldElt FieldCtx::make() const {
  FieldElt e;
  e.ctx_ = this;
  return e;
}

FieldElt FieldCtx::zero() const { return make(); }

FieldElt FieldCtx::one() const {
  FieldElt e = make();
  e.c_[0] = 1;
  return e;
}

FieldElt FieldCtx::from_int(i64 v) const {
  FieldElt e = make();
  i64 r = v % static_cast<i64>(p_);
  if (r < 0) r += p_;
  e.c_[0] = static_cast<u32>(r);
  return e;
}

FieldElt FieldCtx::generator_t() const {
  FieldElt e = make();
  if (k_ > 1) e.c_[1] = 1;
  return e;
}

FieldElt FieldCtx::from_coeffs(std::span<const u32> c) const {
  if (static_cast<int>(c.size()) > k_) throw FieldError("too many coefficients");
  FieldElt e = make();
  for (std::size_t i = 0; i < c.size(); ++i) e.c_[i] = c[i] % p_;
  return e;
}

FieldElt FieldCtx::decode(u64 code) const {
  if (code >= q_) throw FieldError("element code out of range");
  FieldElt e = make();
  for (int i = 0; i < k_; ++i) {
    e.c_[static_cast<std::size_t>(i)] = static_cast<u32>(code % p_);
    code /= p_;
  }
  return e;
}

FieldElt FieldCtx::element_at(u64 rank) const {
  if (rank >= q_) throw FieldError("element rank out of range");
  FieldElt e = make();
  for (int i = k_ - 1; i >= 0; --i) {
    e.c_[static_cast<std::size_t>(i)] = static_cast<u32>(rank % p_);
    rank /= p_;
  }
  return e;
}

u64 FieldCtx::rank_of(const FieldElt& x) const {
  require_same(this, x.ctx_ptr());
  u64 r = 0;
  for (int i = 0; i < k_; ++i) r = r * p_ + x.coeff(i);
  return r;
}

const std::vector<u64>& FieldCtx::order_prime_factors() const { return order_primes_; }

u64 FieldCtx::multiplicative_order(const FieldElt& x) const {
  if (x.is_zero()) throw FieldError("zero has no multiplicative order");
  u64 e = q_ - 1;
  for (u64 r : order_primes_) {
    while (e % r == 0 && x.pow(e / r).is_one()) e /= r;
  }
  return e;
}

const FieldElt& FieldCtx::multiplicative_generator() const {
  std::call_once(gen_once_, [this] {
    for (u64 r = 0; r < q_; ++r) {
      FieldElt x = element_at(r);
      if (x.is_zero()) continue;
      bool ok = true;
      for (u64 pr : order_primes_) {
        if (x.pow((q_ - 1) / pr).is_one()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen_ = x;
        return;
      }
    }
    throw FieldError("no multiplicative generator found");
  });
  return gen_;
}

FieldElt FieldCtx::add(const FieldElt& a, const FieldElt& b) const {
  FieldElt r = make();
  for (int i = 0; i < k_; ++i) {
    u32 s = a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)];
    r.c_[static_cast<std::size_t>(i)] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FieldElt FieldCtx::sub(const FieldElt& a, const FieldElt& b) const {
  FieldElt r = make();
  for (int i = 0; i < k_; ++i) {
    u32 x = a.c_[static_cast<std::size_t>(i)], y = b.c_[static_cast<std::size_t>(i)];
    r.c_[static_cast<std::size_t>(i)] = x >= y ? x - y : x + p_ - y;
  }
  return r;
}

FieldElt FieldCtx::neg(const FieldElt& a) const {
  FieldElt r = make();
  for (int i = 0; i < k_; ++i) {
    u32 x = a.c_[static_cast<std::size_t>(i)];
    r.c_[static_cast<std::size_t>(i)] = x == 0 ? 0 : p_ - x;
  }
  return r;
}

FieldElt FieldCtx::mul(const FieldElt& a, const FieldElt& b) const {
  FieldElt r = make();
  if (k_ == 1) {
    r.c_[0] = static_cast<u32>(static_cast<u64>(a.c_[0]) * b.c_[0] % p_);
    return r;
  }
  std::array<u64, 2 * kMaxDegree> t{};
  const auto k = static_cast<std::size_t>(k_);
  for (std::size_t i = 0; i < k; ++i) {
    const u64 ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < k; ++j) t[i + j] += ai * b.c_[j];
  }
  for (std::size_t i = 2 * k - 2; i >= k; --i) {
    const u64 c = t[i] % p_;
    if (c != 0) {
      for (std::size_t j = 0; j < k; ++j) t[i - k + j] += c * neg_modulus_[j];
    }
  }
  for (std::size_t i = 0; i < k; ++i) r.c_[i] = static_cast<u32>(t[i] % p_);
  return r;
}

FieldElt FieldCtx::inv(const FieldElt& a) const {
  if (a.is_zero()) throw FieldError("division by zero");
  if (k_ == 1) {
    FieldElt r = make();
    r.c_[0] = static_cast<u32>(inverse_mod(a.c_[0], p_));
    return r;
  }
  return a.pow(q_ - 2);
}

FieldElt FieldCtx::frobenius_p(const FieldElt& a) const {
  if (k_ == 1) return a;
  std::array<u64, kMaxDegree> acc{};
  const auto k = static_cast<std::size_t>(k_);
  for (std::size_t i = 0; i < k; ++i) {
    const u64 ai = a.c_[i];
    if (ai == 0) continue;
    const auto& row = frob_rows_[i];
    for (std::size_t j = 0; j < k; ++j) acc[j] += ai * row[j];
  }
  FieldElt r = make();
  for (std::size_t j = 0; j < k; ++j) r.c_[j] = static_cast<u32>(acc[j] % p_);
  return r;
}

// ---------------------------------------------------------------------------
// FieldElt

bool FieldElt::is_zero() const {
  for (int i = 0; i < ctx_->degree(); ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

bool FieldElt::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < ctx_->degree(); ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

u64 FieldElt::encode() const {
  u64 v = 0;
  for (int i = ctx_->degree() - 1; i >= 0; --i) v = v * ctx_->characteristic() + c_[static_cast<std::size_t>(i)];
  return v;
}

FieldElt FieldElt::operator+(const FieldElt& o) const {
  require_same(ctx_, o.ctx_);
  return ctx_->add(*this, o);
}
FieldElt FieldElt::operator-(const FieldElt& o) const {
  require_same(ctx_, o.ctx_);
  return ctx_->sub(*this, o);
}
FieldElt FieldElt::operator*(const FieldElt& o) const {
  require_same(ctx_, o.ctx_);
  return ctx_->mul(*this, o);
}
FieldElt FieldElt::operator/(const FieldElt& o) const {
  require_same(ctx_, o.ctx_);
  return ctx_->mul(*this, ctx_->inv(o));
}
FieldElt FieldElt::operator-() const { return ctx_->neg(*this); }
FieldElt FieldElt::inv() const { return ctx_->inv(*this); }

FieldElt FieldElt::pow(u64 e) const {
  FieldElt result = ctx_->one();
  FieldElt base = *this;
  while (e > 0) {
    if (e & 1) result = ctx_->mul(result, base);
    e >>= 1;
    if (e > 0) base = ctx_->mul(base, base);
  }
  return result;
}

bool FieldElt::operator==(const FieldElt& o) const {
  if (ctx_ != o.ctx_) return false;
  if (ctx_ == nullptr) return true;
  for (int i = 0; i < ctx_->degree(); ++i)
    if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::strong_ordering FieldElt::operator<=>(const FieldElt& o) const {
  require_same(ctx_, o.ctx_);
  for (int i = 0; i < ctx_->degree(); ++i) {
    auto a = c_[static_cast<std::size_t>(i)], b = o.c_[static_cast<std::size_t>(i)];
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const FieldElt& x) {
  if (!x.valid()) return "<invalid>";
  const int k = x.ctx().degree();
  if (k == 1) return std::to_string(x.coeff(0));
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < k; ++i) {
    u32 c = x.coeff(i);
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Factory helpers

const FieldCtx& make_prime_field(u64 p) {
  if (p >= (1u << 20) || !is_prime(p)) throw FieldError("not prime: " + std::to_string(p));
  return FieldCtx::get(static_cast<u32>(p), 1);
}

const FieldCtx& make_extension(const FieldCtx& base, int k) {
  if (!base.is_prime_field()) throw FieldError("extension base must be a prime field");
  if (k < 2) throw FieldError("extension degree must be at least 2");
  return FieldCtx::get(base.characteristic(), k);
}

const FieldCtx& field_of_order(u64 q) {
  auto [p, k] = split_prime_power(q);
  return FieldCtx::get(p, k);
}

const FieldCtx& extension_of(const FieldCtx& base, int n) {
  if (n < 1) throw FieldError("extension degree must be positive");
  return FieldCtx::get(base.characteristic(), base.degree() * n);
}

// ---------------------------------------------------------------------------
// Embeddings

Embedding::Embedding(const FieldCtx& src, const FieldCtx& dst) : src_(&src), dst_(&dst) {
  if (src.characteristic() != dst.characteristic()) throw FieldError("characteristic mismatch");
  if (dst.degree() % src.degree() != 0) throw FieldError("source degree does not divide target degree");
  const int m = src.degree();
  if (m == 1) {
    gen_image_ = dst.zero();
    powers_ = {dst.one()};
  } else if (&src == &dst) {
    gen_image_ = dst.generator_t();
  } else {
    std::vector<i64> mod(src.modulus().begin(), src.modulus().end());
    auto candidates = roots(UniPoly::from_ints(dst, mod));
    // Keep the system of embeddings compatible: the restriction to every
    // intermediate subfield must agree with the direct embedding of it.
    std::vector<int> divisors;
    for (int d = 2; d < m; ++d)
      if (m % d == 0) divisors.push_back(d);
    bool found = false;
    for (const auto& r : candidates) {
      bool ok = true;
      for (int d : divisors) {
        const FieldCtx& sub = FieldCtx::get(src.characteristic(), d);
        const Embedding& sub_to_src = embed(sub, src);
        const Embedding& sub_to_dst = embed(sub, dst);
        // Evaluate sub_to_src(t_d), a polynomial in the source generator, at r.
        const FieldElt via_src = sub_to_src.image_of_generator();
        FieldElt acc = dst.zero();
        FieldElt rp = dst.one();
        for (int i = 0; i < m; ++i) {
          acc = acc + rp * dst.from_int(via_src.coeff(i));
          rp = rp * r;
        }
        if (!(acc == sub_to_dst.image_of_generator())) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen_image_ = r;
        found = true;
        break;
      }
    }
    if (!found) throw FieldError("no compatible embedding found");
  }
  if (powers_.empty()) {
    FieldElt cur = dst.one();
    for (int i = 0; i < m; ++i) {
      powers_.push_back(cur);
      cur = cur * gen_image_;
    }
  }

  // Select m independent coordinate rows and invert that m x m block.
  const u32 p = dst.characteristic();
  const int k = dst.degree();
  std::vector<std::vector<u32>> basis;  // echelon rows
  std::vector<int> basis_pivot;
  for (int row = 0; row < k && static_cast<int>(pivot_rows_.size()) < m; ++row) {
    std::vector<u32> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = powers_[static_cast<std::size_t>(i)].coeff(row);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      u32 c = v[static_cast<std::size_t>(basis_pivot[b])];
      if (c == 0) continue;
      for (int i = 0; i < m; ++i)
        v[static_cast<std::size_t>(i)] =
            static_cast<u32>((v[static_cast<std::size_t>(i)] + static_cast<u64>(p - c) * basis[b][static_cast<std::size_t>(i)]) % p);
    }
    int piv = -1;
    for (int i = 0; i < m; ++i)
      if (v[static_cast<std::size_t>(i)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    u64 inv = inverse_mod(v[static_cast<std::size_t>(piv)], p);
    for (auto& x : v) x = static_cast<u32>(x * inv % p);
    basis.push_back(v);
    basis_pivot.push_back(piv);
    pivot_rows_.push_back(row);
  }
  if (static_cast<int>(pivot_rows_.size()) != m) throw FieldError("embedding basis is degenerate");
  // Gauss-Jordan on the m x m block A[r][i] = powers_[i].coeff(pivot_rows_[r]).
  std::vector<std::vector<u64>> a(static_cast<std::size_t>(m), std::vector<u64>(static_cast<std::size_t>(2 * m), 0));
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = powers_[static_cast<std::size_t>(i)].coeff(pivot_rows_[static_cast<std::size_t>(r)]);
    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(m + r)] = 1;
  }
  for (int col = 0; col < m; ++col) {
    int sel = -1;
    for (int r = col; r < m; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) throw FieldError("embedding basis is singular");
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(sel)]);
    u64 inv = inverse_mod(a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)], p);
    for (auto& x : a[static_cast<std::size_t>(col)]) x = x * inv % p;
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      u64 c = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (c == 0) continue;
      for (int j = 0; j < 2 * m; ++j)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
            (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] + (p - c) * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]) % p;
    }
  }
  pivot_inverse_.assign(static_cast<std::size_t>(m), std::vector<u32>(static_cast<std::size_t>(m)));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < m; ++j)
      pivot_inverse_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = static_cast<u32>(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(m + j)]);
}

FieldElt Embedding::operator()(const FieldElt& x) const {
  require_same(src_, x.ctx_ptr());
  if (src_ == dst_) return x;
  const int m = src_->degree();
  const u32 p = dst_->characteristic();
  std::array<u64, kMaxDegree> acc{};
  const int k = dst_->degree();
  for (int i = 0; i < m; ++i) {
    const u64 c = x.coeff(i);
    if (c == 0) continue;
    const auto& pw = powers_[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j) acc[static_cast<std::size_t>(j)] += c * pw.coeff(j);
  }
  std::array<u32, kMaxDegree> out{};
  for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = static_cast<u32>(acc[static_cast<std::size_t>(j)] % p);
  return dst_->from_coeffs(std::span<const u32>(out.data(), static_cast<std::size_t>(k)));
}

UniPoly Embedding::operator()(const UniPoly& f) const {
  std::vector<FieldElt> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back((*this)(x));
  return UniPoly(*dst_, std::move(c));
}

std::optional<FieldElt> Embedding::preimage(const FieldElt& y) const {
  require_same(dst_, y.ctx_ptr());
  if (src_ == dst_) return y;
  const int m = src_->degree();
  const u32 p = dst_->characteristic();
  std::array<u32, kMaxDegree> c{};
  for (int r = 0; r < m; ++r) {
    u64 s = 0;
    for (int j = 0; j < m; ++j)
      s += static_cast<u64>(pivot_inverse_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) * y.coeff(pivot_rows_[static_cast<std::size_t>(j)]);
    c[static_cast<std::size_t>(r)] = static_cast<u32>(s % p);
  }
  FieldElt x = src_->from_coeffs(std::span<const u32>(c.data(), static_cast<std::size_t>(m)));
  if (!((*this)(x) == y)) return std::nullopt;
  return x;
}

std::optional<UniPoly> Embedding::preimage(const UniPoly& f) const {
  std::vector<FieldElt> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) {
    auto v = preimage(x);
    if (!v) return std::nullopt;
    c.push_back(*v);
  }
  return UniPoly(*src_, std::move(c));
}

const Embedding& embed(const FieldCtx& src, const FieldCtx& dst) {
  auto& reg = registry();
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.embeddings.find({&src, &dst});
    if (it != reg.embeddings.end()) return *it->second;
  }
  auto e = std::make_unique<Embedding>(src, dst);
  std::lock_guard lock(reg.mu);
  auto [it, inserted] = reg.embeddings.emplace(std::make_pair(&src, &dst), std::move(e));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Frobenius, minimal and characteristic polynomials

namespace {
int log_p(u64 q0, u32 p) {
  int j = 0;
  while (q0 > 1) {
    if (q0 % p != 0) throw FieldError("exponent is not a power of the characteristic");
    q0 /= p;
    ++j;
  }
  if (q0 != 1) throw FieldError("exponent is not a power of the characteristic");
  return j;
}
}  // namespace

FieldElt frobenius(const FieldElt& x, u64 q0) {
  const int j = log_p(q0, x.ctx().characteristic());
  FieldElt y = x;
  const int k = x.ctx().degree();
  for (int i = 0; i < j % k; ++i) y = x.ctx().frobenius_p(y);
  return y;
}

FieldElt frobenius_iter(const FieldElt& x, u64 q_sub, int times) {
  const int j = log_p(q_sub, x.ctx().characteristic());
  const int k = x.ctx().degree();
  const long steps = (static_cast<long>(j) * times) % k;
  FieldElt y = x;
  for (long i = 0; i < steps; ++i) y = x.ctx().frobenius_p(y);
  return y;
}

int degree_over(const FieldElt& x, u64 q_sub) {
  FieldElt y = frobenius(x, q_sub);
  int d = 1;
  while (!(y == x)) {
    y = frobenius(y, q_sub);
    ++d;
  }
  return d;
}

UniPoly minimal_poly(const FieldElt& x, const Embedding& sub) {
  if (x.ctx_ptr() != &sub.target()) throw FieldError("minimal_poly: context mismatch");
  const u64 qs = sub.source().order();
  const FieldCtx& t = sub.target();
  UniPoly acc = UniPoly::constant(t.one());
  FieldElt y = x;
  do {
    acc = acc * UniPoly::linear_root(y);
    y = frobenius(y, qs);
  } while (!(y == x));
  auto down = sub.preimage(acc);
  if (!down) throw std::logic_error("minimal polynomial does not descend");
  return *down;
}

UniPoly char_poly(const FieldElt& x, const Embedding& sub, int n) {
  UniPoly mp = minimal_poly(x, sub);
  if (n % mp.degree() != 0) throw std::logic_error("minimal polynomial degree does not divide n");
  return pow(mp, static_cast<u64>(n / mp.degree()));
}

FieldElt element_of_order(const FieldCtx& ctx, u64 m) {
  const u64 q1 = ctx.order() - 1;
  if (m == 0 || q1 % m != 0) throw FieldError("order does not divide q - 1");
  return ctx.multiplicative_generator().pow(q1 / m);
}

FieldElt absolute_trace(const FieldElt& x) {
  const FieldCtx& ctx = x.ctx();
  FieldElt acc = x;
  FieldElt y = x;
  for (int i = 1; i < ctx.degree(); ++i) {
    y = ctx.frobenius_p(y);
    acc = acc + y;
  }
  return ctx.prime_field().from_int(acc.coeff(0));
}

bool is_square(const FieldElt& x) {
  const FieldCtx& ctx = x.ctx();
  if (ctx.characteristic() == 2) return true;
  if (x.is_zero()) throw FieldError("is_square: zero argument");
  return x.pow((ctx.order() - 1) / 2).is_one();
}

// ---------------------------------------------------------------------------
// Root finding and factorization

namespace {

FieldElt random_element(const FieldCtx& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, ctx.order() - 1);
  return ctx.element_at(dist(rng));
}

UniPoly random_poly(const FieldCtx& ctx, int deg_below, std::mt19937_64& rng) {
  std::vector<FieldElt> c;
  for (int i = 0; i < deg_below; ++i) c.push_back(random_element(ctx, rng));
  return UniPoly(ctx, std::move(c));
}

u64 checked_pow(u64 b, int e) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > (static_cast<unsigned __int128>(1) << 63)) throw FieldError("exponent overflow");
  }
  return static_cast<u64>(r);
}

// Splitting polynomial for equal-degree factorization with factors of
// degree d: a^{(Q^d-1)/2} - 1 in odd characteristic, the trace otherwise.
UniPoly splitter(const UniPoly& a, const UniPoly& g, int d) {
  const FieldCtx& ctx = g.ctx();
  if (ctx.characteristic() != 2) {
    const u64 qd = checked_pow(ctx.order(), d);
    return powmod(a, (qd - 1) / 2, g) - UniPoly::constant(ctx.one());
  }
  const int steps = ctx.degree() * d;
  UniPoly w = a % g;
  UniPoly acc = w;
  for (int i = 1; i < steps; ++i) {
    w = (w * w) % g;
    acc = acc + w;
  }
  return acc;
}

void equal_degree_split(const UniPoly& g, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  while (true) {
    UniPoly a = random_poly(g.ctx(), g.degree(), rng);
    if (a.degree() < 1) continue;
    UniPoly h = gcd(splitter(a, g, d), g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(g / h, d, rng, out);
      return;
    }
  }
}

// Product of the distinct linear factors of monic f over its field.
UniPoly linear_part(const UniPoly& f) {
  const FieldCtx& ctx = f.ctx();
  UniPoly x = UniPoly::x(ctx);
  UniPoly xq = powmod(x, ctx.order(), f);
  return gcd(xq - x, f);
}

}  // namespace

std::vector<FieldElt> roots(const UniPoly& f) {
  if (f.is_zero()) throw FieldError("roots of the zero polynomial");
  std::vector<FieldElt> out;
  if (f.degree() == 0) return out;
  UniPoly g = linear_part(f.monic());
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<UniPoly> lin;
  equal_degree_split(g, 1, rng, lin);
  for (const auto& l : lin) out.push_back(-l.coeff(0));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FieldElt> roots_in(const UniPoly& f, const Embedding& emb) {
  if (&f.ctx() != &emb.source()) throw FieldError("roots_in: context mismatch");
  return roots(emb(f));
}

std::vector<FieldElt> roots_by_scan(const UniPoly& f, const Embedding& emb) {
  if (&f.ctx() != &emb.source()) throw FieldError("roots_by_scan: context mismatch");
  UniPoly g = emb(f);
  std::vector<FieldElt> out;
  const FieldCtx& t = emb.target();
  for (u64 r = 0; r < t.order(); ++r) {
    FieldElt x = t.element_at(r);
    if (g.eval(x).is_zero()) out.push_back(x);
  }
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (!f.is_monic()) throw FieldError("is_irreducible: polynomial must be monic");
  if (f.degree() < 1) throw FieldError("is_irreducible: degree must be positive");
  if (f.degree() == 1) return true;
  const FieldCtx& ctx = f.ctx();
  UniPoly x = UniPoly::x(ctx);
  UniPoly h = x;
  for (int d = 1; d <= f.degree() / 2; ++d) {
    h = powmod(h, ctx.order(), f);
    if (gcd(h - x, f).degree() != 0) return false;
  }
  return true;
}

namespace {
// Distinct-degree factorization: (degree, product of all factors of it).
std::vector<std::pair<int, UniPoly>> distinct_degree(const UniPoly& f_in) {
  std::vector<std::pair<int, UniPoly>> out;
  UniPoly f = f_in.monic();
  const FieldCtx& ctx = f.ctx();
  UniPoly x = UniPoly::x(ctx);
  UniPoly h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, ctx.order(), f);
    UniPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.degree(), f);
  return out;
}
}  // namespace

std::vector<UniPoly> factor_squarefree(const UniPoly& f) {
  std::vector<UniPoly> out;
  std::mt19937_64 rng(0x2545f4914f6cdd1dULL);
  for (auto& [d, g] : distinct_degree(f)) equal_degree_split(g, d, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> factor_degrees(const UniPoly& f) {
  std::vector<int> out;
  for (auto& [d, g] : distinct_degree(f))
    for (int i = 0; i < g.degree() / d; ++i) out.push_back(d);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<UniPoly> monic_irreducibles(const FieldCtx& ctx, int d) {
  std::vector<UniPoly> out;
  const u64 q = ctx.order();
  u64 total = checked_pow(q, d);
  for (u64 idx = 0; idx < total; ++idx) {
    std::vector<FieldElt> c(static_cast<std::size_t>(d) + 1, ctx.zero());
    u64 v = idx;
    for (int i = d - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = ctx.element_at(v % q);
      v /= q;
    }
    c[static_cast<std::size_t>(d)] = ctx.one();
    UniPoly f(ctx, std::move(c));
    if (d > 1 && f.coeff(0).is_zero()) continue;
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperenum
