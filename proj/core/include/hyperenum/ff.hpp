#pragma once

// Exact arithmetic in finite fields F_{p^k}.
//
// Every field is represented as F_p[t]/(m(t)) where m is the first monic
// irreducible polynomial of degree k in the fixed ordering (coefficient
// vectors compared lexicographically from the constant term up). Contexts are
// interned: FieldCtx::get(p, k) always returns the same object, so field
// elements carry a plain pointer to their context and equality of contexts is
// pointer equality.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperenum {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest supported degree of a field over its prime subfield.
inline constexpr int kMaxDegree = 32;

class FieldCtx;
class UniPoly;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FieldElt {
 public:
  FieldElt() = default;

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  bool valid() const { return ctx_ != nullptr; }

  u32 coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  bool is_one() const;

  /// Serialization code sum c_i p^i over the power basis.
  u64 encode() const;

  FieldElt operator+(const FieldElt& o) const;
  FieldElt operator-(const FieldElt& o) const;
  FieldElt operator*(const FieldElt& o) const;
  FieldElt operator/(const FieldElt& o) const;
  FieldElt operator-() const;
  FieldElt& operator+=(const FieldElt& o) { return *this = *this + o; }
  FieldElt& operator-=(const FieldElt& o) { return *this = *this - o; }
  FieldElt& operator*=(const FieldElt& o) { return *this = *this * o; }

  FieldElt inv() const;
  FieldElt pow(u64 e) const;

  bool operator==(const FieldElt& o) const;
  std::strong_ordering operator<=>(const FieldElt& o) const;

 private:
  friend class FieldCtx;
  const FieldCtx* ctx_ = nullptr;
  std::array<u32, kMaxDegree> c_{};
};

std::string to_string(const FieldElt& x);

class FieldCtx {
 public:
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  /// Canonical context for F_{p^k}. Throws FieldError if p is not prime,
  /// k is out of range, or p^k does not fit comfortably in 62 bits.
  static const FieldCtx& get(u32 p, int k);

  u32 characteristic() const { return p_; }
  int degree() const { return k_; }
  u64 order() const { return q_; }
  /// Monic modulus over F_p, low-to-high, k+1 entries. For k == 1 it is x.
  std::span<const u32> modulus() const { return modulus_; }
  const FieldCtx& prime_field() const { return get(p_, 1); }
  bool is_prime_field() const { return k_ == 1; }

  FieldElt zero() const;
  FieldElt one() const;
  FieldElt from_int(i64 v) const;
  /// The power-basis generator t (zero for a prime field).
  FieldElt generator_t() const;
  FieldElt from_coeffs(std::span<const u32> c) const;
  FieldElt decode(u64 code) const;
  /// The element at position r of the fixed total ordering, 0 <= r < q.
  FieldElt element_at(u64 rank) const;
  u64 rank_of(const FieldElt& x) const;

  /// First element (in the fixed ordering) of multiplicative order q - 1.
  const FieldElt& multiplicative_generator() const;
  /// Distinct primes dividing q - 1.
  const std::vector<u64>& order_prime_factors() const;
  u64 multiplicative_order(const FieldElt& x) const;

  // Raw arithmetic used by FieldElt.
  FieldElt add(const FieldElt& a, const FieldElt& b) const;
  FieldElt sub(const FieldElt& a, const FieldElt& b) const;
  FieldElt neg(const FieldElt& a) const;
  FieldElt mul(const FieldElt& a, const FieldElt& b) const;
  FieldElt inv(const FieldElt& a) const;
  /// x -> x^p, computed as a linear map over F_p.
  FieldElt frobenius_p(const FieldElt& a) const;

 private:
  FieldCtx(u32 p, int k, std::vector<u32> modulus);
  FieldElt make() const;

  u32 p_;
  int k_;
  u64 q_;
  std::vector<u32> modulus_;
  std::vector<u32> neg_modulus_;
  // Images t^{i p} used by frobenius_p.
  std::vector<std::array<u32, kMaxDegree>> frob_rows_;
  std::vector<u64> order_primes_;
  mutable std::once_flag gen_once_;
  mutable FieldElt gen_;
};

bool is_prime(u64 n);
/// Distinct prime factors by trial division.
std::vector<u64> prime_factors(u64 n);
/// Splits q = p^k; throws FieldError when q is not a prime power.
std::pair<u32, int> split_prime_power(u64 q);

const FieldCtx& make_prime_field(u64 p);
const FieldCtx& make_extension(const FieldCtx& base, int k);
/// Context of order q (a prime power).
const FieldCtx& field_of_order(u64 q);
/// The degree-n extension of base, as a context over the same prime.
const FieldCtx& extension_of(const FieldCtx& base, int n);

/// Univariate polynomial over a single field context, low-to-high
/// coefficients, no trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  UniPoly(const FieldCtx& ctx, std::vector<FieldElt> coeffs);

  static UniPoly constant(const FieldElt& c);
  static UniPoly x(const FieldCtx& ctx);
  /// x - r
  static UniPoly linear_root(const FieldElt& r);
  /// Builds from prime-field integers (low-to-high), reducing mod p.
  static UniPoly from_ints(const FieldCtx& ctx, std::span<const i64> coeffs);

  const FieldCtx& ctx() const { return *ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  FieldElt coeff(int i) const;
  const FieldElt& leading() const { return c_.back(); }
  const std::vector<FieldElt>& coeffs() const { return c_; }

  UniPoly monic() const;
  UniPoly derivative() const;
  FieldElt eval(const FieldElt& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const FieldElt& s) const;
  UniPoly operator%(const UniPoly& m) const;
  UniPoly operator/(const UniPoly& m) const;
  /// Quotient and remainder; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& m) const;

  bool operator==(const UniPoly& o) const;
  /// Degree first, then coefficients from the constant term up.
  std::strong_ordering operator<=>(const UniPoly& o) const;

 private:
  void trim();
  const FieldCtx* ctx_;
  std::vector<FieldElt> c_;
};

std::string to_string(const UniPoly& f);

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly powmod(const UniPoly& base, u64 e, const UniPoly& m);
UniPoly pow(const UniPoly& base, u64 e);
/// Resultant via the Sylvester determinant.
FieldElt resultant(const UniPoly& a, const UniPoly& b);

/// Field embedding F_{p^m} -> F_{p^k}, m | k, determined by the image of the
/// source generator: the smallest root of the source modulus in the target
/// whose induced embeddings of intermediate subfields agree with the direct
/// ones. A field embeds into itself by the identity.
class Embedding {
 public:
  Embedding(const FieldCtx& src, const FieldCtx& dst);

  const FieldCtx& source() const { return *src_; }
  const FieldCtx& target() const { return *dst_; }
  const FieldElt& image_of_generator() const { return gen_image_; }

  FieldElt operator()(const FieldElt& x) const;
  UniPoly operator()(const UniPoly& f) const;
  /// The unique source element mapping to y, if y lies in the image.
  std::optional<FieldElt> preimage(const FieldElt& y) const;
  std::optional<UniPoly> preimage(const UniPoly& f) const;
  bool contains(const FieldElt& y) const { return preimage(y).has_value(); }

 private:
  const FieldCtx* src_;
  const FieldCtx* dst_;
  FieldElt gen_image_;
  std::vector<FieldElt> powers_;  // gen_image^i, i < m
  std::vector<int> pivot_rows_;
  std::vector<std::vector<u32>> pivot_inverse_;
};

/// Interned embedding; same semantics as constructing one.
const Embedding& embed(const FieldCtx& src, const FieldCtx& dst);

/// x^{q0}; q0 must be a power of the characteristic.
FieldElt frobenius(const FieldElt& x, u64 q0);
/// x^{|F|^j} where F = ctx-of-order q_sub; q_sub a power of p.
FieldElt frobenius_iter(const FieldElt& x, u64 q_sub, int times);

/// Smallest d >= 1 with x^{q_sub^d} = x.
int degree_over(const FieldElt& x, u64 q_sub);

UniPoly minimal_poly(const FieldElt& x, const Embedding& sub);
UniPoly char_poly(const FieldElt& x, const Embedding& sub, int n);

FieldElt element_of_order(const FieldCtx& ctx, u64 m);
/// x + x^p + ... + x^{p^{k-1}} as an element of the prime field.
FieldElt absolute_trace(const FieldElt& x);
/// Square test; every element is a square in characteristic 2.
bool is_square(const FieldElt& x);

/// Roots of f (over the source of emb) in the target field, sorted.
std::vector<FieldElt> roots_in(const UniPoly& f, const Embedding& emb);
/// Roots of f in its own field, sorted.
std::vector<FieldElt> roots(const UniPoly& f);
/// Exhaustive root scan over the target field, sorted. Slow for big fields.
std::vector<FieldElt> roots_by_scan(const UniPoly& f, const Embedding& emb);

bool is_irreducible(const UniPoly& f);
/// Monic irreducible factors of a monic squarefree polynomial, sorted.
std::vector<UniPoly> factor_squarefree(const UniPoly& f);
/// Degrees of irreducible factors of a monic squarefree polynomial,
/// non-increasing.
std::vector<int> factor_degrees(const UniPoly& f);

/// All monic irreducible polynomials of degree d over ctx, sorted.
std::vector<UniPoly> monic_irreducibles(const FieldCtx& ctx, int d);

}  // namespace hyperenum
