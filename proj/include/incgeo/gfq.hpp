#pragma once

// Exact arithmetic in GF(p^k) through discrete-log tables.
//
// Elements are encoded as the integer sum c_i * p^i of their coefficients in
// the polynomial basis 1, z, z^2, ... where z is a root of the Conway
// polynomial of degree k.  Because Conway polynomials are primitive, z is
// also a generator of the multiplicative group.

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace incgeo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Elt = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = 1u << 20;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // Cached per (p, k); repeated calls return the same object.
  static FieldPtr get(std::uint32_t p, std::uint32_t k);
  // Accepts any prime power q.
  static FieldPtr of_order(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt primitive() const { return exp_[1]; }
  Elt minus_one() const { return neg(1); }

  Elt add(Elt a, Elt b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
      Elt s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = log_[a], lb = log_[b];
    if (la > lb) std::swap(la, lb);
    std::int32_t z = zech_[lb - la];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
  }
  Elt neg(Elt a) const {
    if (a == 0 || p_ == 2) return a;
    if (k_ == 1) return p_ - a;
    return exp_[log_[a] + half_];
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elt inv(Elt a) const {
    if (a == 0) throw Error("division by zero in GF(" + std::to_string(q_) + ")");
    return a == 1 ? 1 : exp_[(q_ - 1) - log_[a]];
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const;
  // x -> x^(p^e)
  Elt frob(Elt a, std::uint32_t e) const {
    if (a == 0 || e % k_ == 0) return a;
    return exp_[static_cast<std::uint32_t>((std::uint64_t)log_[a] * frob_mult_[e % k_] % (q_ - 1))];
  }

  // Discrete log base z; a must be nonzero.
  std::uint32_t log(Elt a) const {
    if (a == 0) throw Error("log of zero");
    return log_[a];
  }
  Elt exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

  // Image of an integer under Z -> GF(p).
  Elt from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
  }
  bool is_square(Elt a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }
  // A square root when one exists.
  Elt sqrt(Elt a) const;

  // Smallest d | k with a in GF(p^d).
  std::uint32_t subfield_degree(Elt a) const;
  // GAP-style display: 0*Z(p), Z(p)^0, Z(p^d)^i.
  std::string format(Elt a) const;
  std::string name() const;

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  std::uint32_t p_, k_, q_, half_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elt> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;
  std::vector<std::uint64_t> frob_mult_;
};

// Conway polynomial of GF(p^k), coefficients low to high, monic.
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t k);

bool is_prime(std::uint64_t n);
// Returns (p, k) with q = p^k, or throws.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

// Field automorphism x -> x^(p^e).
struct FieldAut {
  FieldPtr field;
  std::uint32_t exponent = 0;

  FieldAut compose(const FieldAut& o) const;
  FieldAut inverse() const;
  bool is_identity() const { return exponent == 0; }
  Elt operator()(Elt x) const { return field->frob(x, exponent); }
  // Printed as F^(p^e), as in the display of collineations.
  std::string str() const;
};

// Value-semantic element carrying its field.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr f, Elt v) : f_(std::move(f)), v_(v) {}
  static FieldElem from_int(FieldPtr f, std::int64_t v) {
    Elt e = f->from_int(v);
    return {std::move(f), e};
  }

  const FieldPtr& field() const { return f_; }
  Elt value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return {check(o), f_->add(v_, o.v_)}; }
  FieldElem operator-(const FieldElem& o) const { return {check(o), f_->sub(v_, o.v_)}; }
  FieldElem operator*(const FieldElem& o) const { return {check(o), f_->mul(v_, o.v_)}; }
  FieldElem operator/(const FieldElem& o) const { return {check(o), f_->div(v_, o.v_)}; }
  FieldElem operator-() const { return {f_, f_->neg(v_)}; }
  FieldElem inverse() const { return {f_, f_->inv(v_)}; }
  FieldElem pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
  FieldElem frobenius(const FieldAut& a) const;

  bool operator==(const FieldElem& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  const FieldPtr& check(const FieldElem& o) const {
    if (f_ != o.f_) throw Error("field mismatch");
    return f_;
  }
  FieldPtr f_;
  Elt v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

// Ring embedding GF(p^k) -> GF(p^(k t)) sending z_small to z_big^((q^t-1)/(q-1)).
Elt embed_subfield(const Field& small, Elt x, const Field& big);
FieldElem embed_subfield(const FieldElem& x, const FieldPtr& big);
// Inverse of embed_subfield on its image; throws when x is outside the subfield.
Elt restrict_to_subfield(const Field& big, Elt x, const Field& small);
// Relative trace GF(q^t) -> GF(q).
Elt trace(const Field& big, Elt x, const Field& small);
FieldElem trace(const FieldElem& x, const FieldPtr& down_to);

}  // namespace incgeo
