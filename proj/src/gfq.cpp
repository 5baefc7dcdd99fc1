#include "incgeo/gfq.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace incgeo {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw Error("not a prime power: " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw Error("not a prime power: " + std::to_string(q));
  return {static_cast<std::uint32_t>(p), k};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low to high, length k (residues mod f)

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Arithmetic in Z_p[x]/(f) with f monic of degree k.
struct QuotientRing {
  std::uint32_t p, k;
  Poly f;

  Poly mul(const Poly& a, const Poly& b) const {
    std::vector<std::uint64_t> t(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      if (!a[i]) continue;
      for (std::uint32_t j = 0; j < k; ++j) t[i + j] = (t[i + j] + (std::uint64_t)a[i] * b[j]) % p;
    }
    for (std::uint32_t d = 2 * k - 1; d >= k && d < 2 * k; --d) {
      std::uint64_t c = t[d] % p;
      if (!c) continue;
      t[d] = 0;
      // x^d = x^(d-k) * x^k, and x^k = -sum f_i x^i
      for (std::uint32_t i = 0; i < k; ++i) {
        std::uint64_t sub = c * f[i] % p;
        t[d - k + i] = (t[d - k + i] + p - sub) % p;
      }
    }
    Poly r(k);
    for (std::uint32_t i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(t[i] % p);
    return r;
  }
  Poly pow(Poly a, std::uint64_t e) const {
    Poly r(k, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Poly x() const {
    Poly r(k, 0);
    if (k == 1) {
      r[0] = (p - f[0]) % p;
    } else {
      r[1] = 1;
    }
    return r;
  }
  // Evaluate a polynomial g (low to high, arbitrary degree) at element a.
  Poly eval(const Poly& g, const Poly& a) const {
    Poly r(k, 0);
    for (std::size_t i = g.size(); i-- > 0;) {
      r = mul(r, a);
      r[0] = (r[0] + g[i]) % p;
    }
    return r;
  }
};

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}
bool is_zero(const Poly& a) {
  for (auto c : a)
    if (c) return false;
  return true;
}

std::mutex& conway_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& conway_cache() {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> c;
  return c;
}

Poly compute_conway(std::uint32_t p, std::uint32_t k);

Poly conway_locked(std::uint32_t p, std::uint32_t k) {
  auto& cache = conway_cache();
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  Poly c = compute_conway(p, k);
  cache[{p, k}] = c;
  return c;
}

// Candidates x^k - a_{k-1} x^{k-1} + a_{k-2} x^{k-2} - ... + (-1)^k a_0 in
// lexicographic order of (a_{k-1}, ..., a_0); the first primitive one that is
// compatible with all proper subfields is the Conway polynomial.
Poly compute_conway(std::uint32_t p, std::uint32_t k) {
  const std::uint64_t q = ipow(p, k);
  const auto factors = prime_factors(q - 1);
  std::vector<std::uint32_t> divisors;
  for (std::uint32_t d = 1; d < k; ++d)
    if (k % d == 0) divisors.push_back(d);
  std::vector<Poly> sub;
  for (auto d : divisors) sub.push_back(conway_locked(p, d));

  std::vector<std::uint32_t> a(k, 0);  // a[0] is a_{k-1}
  while (true) {
    Poly f(k + 1);
    f[k] = 1;
    for (std::uint32_t j = 0; j < k; ++j) {
      std::uint32_t i = k - 1 - j;  // coefficient index
      std::uint32_t coeff = a[j];
      if ((k - i) % 2 == 1) coeff = (p - coeff) % p;
      f[i] = coeff;
    }
    if (f[0] != 0) {
      QuotientRing R{p, k, Poly(f.begin(), f.begin() + k)};
      Poly x = R.x();
      bool ok = is_one(R.pow(x, q - 1));
      for (auto r : factors) {
        if (!ok) break;
        if (is_one(R.pow(x, (q - 1) / r))) ok = false;
      }
      for (std::size_t s = 0; ok && s < divisors.size(); ++s) {
        std::uint64_t e = (q - 1) / (ipow(p, divisors[s]) - 1);
        if (!is_zero(R.eval(sub[s], R.pow(x, e)))) ok = false;
      }
      if (ok) return f;
    }
    // next tuple
    std::int64_t j = k - 1;
    while (j >= 0 && a[j] == p - 1) {
      a[j] = 0;
      --j;
    }
    if (j < 0) throw Error("no Conway polynomial found");
    ++a[j];
  }
}

}  // namespace

std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t k) {
  std::lock_guard<std::mutex> lock(conway_mutex());
  return conway_locked(p, k);
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(ipow(p, k))), modulus_(std::move(modulus)) {
  const std::uint32_t n = q_ - 1;
  half_ = (p_ == 2) ? 0 : n / 2;
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  // Successive powers of the root z as coefficient vectors.
  std::vector<std::uint32_t> cur(k_, 0);
  if (k_ == 1) {
    cur[0] = 1;
  } else {
    cur[0] = 1;
  }
  const std::uint32_t root1 = (p_ - modulus_[0]) % p_;  // k == 1 root
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t code = 0;
    for (std::uint32_t j = k_; j-- > 0;) code = code * p_ + cur[j];
    exp_[i] = code;
    exp_[i + n] = code;
    log_[code] = i;
    // multiply by z
    if (k_ == 1) {
      cur[0] = static_cast<std::uint32_t>((std::uint64_t)cur[0] * root1 % p_);
    } else {
      std::uint32_t top = cur[k_ - 1];
      for (std::uint32_t j = k_ - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      for (std::uint32_t j = 0; j < k_; ++j)
        cur[j] = static_cast<std::uint32_t>((cur[j] + (std::uint64_t)(p_ - 1) * top % p_ * modulus_[j]) % p_);
    }
  }
  // Zech logarithms: zech[i] = log(1 + z^i).
  zech_.assign(n == 0 ? 1 : n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    Elt v = exp_[i];
    // 1 + v via coefficient addition (constant coefficient is the lowest digit)
    Elt w = v - (v % p_) + ((v % p_) + 1) % p_;
    zech_[i] = (w == 0) ? -1 : static_cast<std::int32_t>(log_[w]);
  }
  frob_mult_.assign(k_, 1);
  for (std::uint32_t e = 1; e < k_; ++e) frob_mult_[e] = frob_mult_[e - 1] * p_;
}

FieldPtr Field::get(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error("field order above supported bound");
  }
  static std::mutex m;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  auto mod = conway_polynomial(p, k);
  FieldPtr f(new Field(p, k, std::move(mod)));
  cache[{p, k}] = f;
  return f;
}

FieldPtr Field::of_order(std::uint64_t q) {
  auto [p, k] = prime_power(q);
  return get(p, k);
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint32_t>((std::uint64_t)log_[a] * (e % (q_ - 1)) % (q_ - 1))];
}

Elt Field::sqrt(Elt a) const {
  if (a == 0) return 0;
  const std::uint32_t n = q_ - 1;
  std::uint32_t l = log_[a];
  if (p_ == 2) {
    // n is odd; 2 is invertible mod n
    std::uint64_t inv2 = (n + 1) / 2;
    return exp_[static_cast<std::uint32_t>(l * inv2 % n)];
  }
  if (l % 2) throw Error("not a square");
  return exp_[l / 2];
}

std::uint32_t Field::subfield_degree(Elt a) const {
  if (a == 0 || a == 1) return 1;
  for (std::uint32_t d = 1; d <= k_; ++d) {
    if (k_ % d) continue;
    std::uint64_t qd = ipow(p_, d);
    if (pow(a, qd) == a) return d;
  }
  return k_;
}

std::string Field::format(Elt a) const {
  std::ostringstream os;
  if (a == 0) {
    os << "0*Z(" << p_ << ")";
    return os.str();
  }
  std::uint32_t d = subfield_degree(a);
  std::uint64_t qd = ipow(p_, d);
  std::uint64_t m = (q_ - 1) / (qd - 1);
  std::uint64_t l = log_[a] / m;
  if (d == 1)
    os << "Z(" << p_ << ")";
  else
    os << "Z(" << p_ << "^" << d << ")";
  if (l != 1) os << "^" << l;
  return os.str();
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  return os.str();
}

FieldAut FieldAut::compose(const FieldAut& o) const {
  if (field != o.field) throw Error("field mismatch");
  return {field, (exponent + o.exponent) % field->degree()};
}

FieldAut FieldAut::inverse() const {
  return {field, (field->degree() - exponent) % field->degree()};
}

std::string FieldAut::str() const {
  return "F^" + std::to_string(ipow(field->p(), exponent));
}

FieldElem FieldElem::frobenius(const FieldAut& a) const {
  if (a.field != f_) throw Error("field mismatch");
  return {f_, a(v_)};
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
  return os << x.field()->format(x.value());
}

Elt embed_subfield(const Field& small, Elt x, const Field& big) {
  if (small.p() != big.p() || big.degree() % small.degree() != 0)
    throw Error("incompatible field degrees for subfield embedding");
  if (x == 0) return 0;
  std::uint64_t m = (big.order() - 1) / (small.order() - 1);
  return big.exp(static_cast<std::uint64_t>(small.log(x)) * m);
}

FieldElem embed_subfield(const FieldElem& x, const FieldPtr& big) {
  return {big, embed_subfield(*x.field(), x.value(), *big)};
}

Elt restrict_to_subfield(const Field& big, Elt x, const Field& small) {
  if (small.p() != big.p() || big.degree() % small.degree() != 0)
    throw Error("incompatible field degrees");
  if (x == 0) return 0;
  std::uint64_t m = (big.order() - 1) / (small.order() - 1);
  std::uint32_t l = big.log(x);
  if (l % m) throw Error("element is not in the subfield");
  return small.exp(l / m);
}

Elt trace(const Field& big, Elt x, const Field& small) {
  if (small.p() != big.p() || big.degree() % small.degree() != 0)
    throw Error("trace target is not a subfield");
  const std::uint32_t t = big.degree() / small.degree();
  Elt s = 0, y = x;
  for (std::uint32_t i = 0; i < t; ++i) {
    s = big.add(s, y);
    y = big.frob(y, small.degree());
  }
  return restrict_to_subfield(big, s, small);
}

FieldElem trace(const FieldElem& x, const FieldPtr& down_to) {
  return {down_to, trace(*x.field(), x.value(), *down_to)};
}

}  // namespace incgeo
