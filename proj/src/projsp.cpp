#include "incgeo/projsp.hpp"

#include <algorithm>

namespace incgeo {

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  BigInt num = 1, den = 1;
  BigInt Q = q;
  for (std::size_t i = 0; i < k; ++i) {
    num *= ipow(Q, n - i) - 1;
    den *= ipow(Q, i + 1) - 1;
  }
  return num / den;
}

GrassmannEnumerator::GrassmannEnumerator(FieldPtr f, std::size_t n, std::size_t k)
    : f_(std::move(f)), n_(n), k_(k) {
  if (k > n) throw Error("subspace dimension exceeds ambient dimension");
  const std::uint64_t q = f_->order();
  qpow_.resize(n * (k + 1) + 2);
  qpow_[0] = 1;
  for (std::size_t i = 1; i < qpow_.size(); ++i) qpow_[i] = qpow_[i - 1] * q;
  gauss_.assign(n + 1, std::vector<BigInt>(k + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) {
    gauss_[m][0] = 1;
    for (std::size_t j = 1; j <= k && j <= m; ++j)
      gauss_[m][j] = gauss_[m - 1][j - 1] + qpow_[j] * gauss_[m - 1][j];
  }
}

BigInt GrassmannEnumerator::block(std::size_t cn, std::size_t ck, std::size_t m) const {
  return qpow_[ck * (cn - 1 - m)] * gauss_[m][ck - 1];
}

Subspace GrassmannEnumerator::unrank0(BigInt r) const {
  if (r < 0 || r >= size()) throw Error("enumerator index out of range");
  const Field& F = *f_;
  const std::uint64_t q = F.order();
  Mat M(f_, k_, n_);
  std::size_t cn = n_, ck = k_;
  while (ck > 0) {
    std::size_t m = ck - 1;
    for (;; ++m) {
      BigInt b = block(cn, ck, m);
      if (r < b) break;
      r -= b;
    }
    const std::size_t width = cn - 1 - m;
    BigInt mult = qpow_[ck * width];
    BigInt tail = r % mult;
    r /= mult;
    M(ck - 1, m) = 1;
    // Digits fill rows 0..ck-1, columns m+1..cn-1, least significant last.
    for (std::size_t i = ck; i-- > 0;)
      for (std::size_t c = cn; c-- > m + 1;) {
        M(i, c) = static_cast<Elt>(static_cast<std::uint64_t>(tail % q));
        tail /= q;
      }
    cn = m;
    --ck;
  }
  (void)F;
  return Subspace::from_rref(std::move(M));
}

BigInt GrassmannEnumerator::rank0(const Subspace& s) const {
  if (s.dim() != k_ || s.ambient_dim() != n_ || s.field() != f_) throw Error("foreign element for enumerator");
  const std::uint64_t q = f_->order();
  auto piv = s.pivots();
  const Mat& M = s.basis();
  struct Level {
    BigInt offset, mult, tail;
  };
  std::vector<Level> levels;
  std::size_t cn = n_, ck = k_;
  while (ck > 0) {
    std::size_t m = piv[ck - 1];
    Level L;
    L.offset = 0;
    for (std::size_t mm = ck - 1; mm < m; ++mm) L.offset += block(cn, ck, mm);
    L.mult = qpow_[ck * (cn - 1 - m)];
    L.tail = 0;
    for (std::size_t i = 0; i < ck; ++i)
      for (std::size_t c = m + 1; c < cn; ++c) L.tail = L.tail * q + M(i, c);
    levels.push_back(std::move(L));
    cn = m;
    --ck;
  }
  BigInt r = 0;
  for (std::size_t i = levels.size(); i-- > 0;) r = levels[i].offset + r * levels[i].mult + levels[i].tail;
  return r;
}

Subspace GrassmannEnumerator::unrank(const BigInt& index) const {
  if (index < 1 || index > size()) throw Error("enumerator index out of range");
  return unrank0(index - 1);
}

BigInt GrassmannEnumerator::rank(const Subspace& s) const { return rank0(s) + 1; }

void LieGeometry::check_type(std::size_t type) const {
  if (type < 1 || type > rank())
    throw Error("type " + std::to_string(type) + " out of range 1.." + std::to_string(rank()));
}

std::vector<Subspace> LieGeometry::shadow(const std::vector<Subspace>& flag, std::size_t type) const {
  check_type(type);
  Subspace A(field(), vector_dim());
  Subspace B = Subspace::whole(field(), vector_dim());
  for (const auto& e : flag) {
    if (!is_element(e)) throw Error("flag member is not an element of " + name());
    if (e.dim() == type) {
      for (const auto& o : flag)
        if (!(o.contains(e) || e.contains(o))) return {};
      return {e};
    }
    if (e.dim() < type) A = span(A, e);
    else B = meet(B, e);
  }
  if (!B.contains(A)) return {};
  B = refine_upper(A, B);
  if (!B.contains(A) || B.dim() < type) return {};
  const std::size_t m = B.dim() - A.dim();
  const std::size_t j = type - A.dim();
  Mat K = complement_basis(A, B);
  GrassmannEnumerator en(field(), m, j);
  std::vector<Subspace> out;
  for (BigInt i = 0; i < en.size(); ++i) {
    Subspace U = en.unrank0(i);
    Subspace S = span(A, canonicalize(U.basis() * K));
    if (is_element(S)) out.push_back(std::move(S));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> LieGeometry::elements(std::size_t type) const {
  auto en = enumerator(type);
  std::vector<Subspace> out;
  BigInt n = en->size();
  if (n > 50000000) throw Error("element family too large to list");
  out.reserve(static_cast<std::size_t>(n));
  for (BigInt i = 1; i <= n; ++i) out.push_back(en->unrank(i));
  return out;
}

FiniteIncidenceStructure LieGeometry::materialize() const {
  std::vector<std::vector<Subspace>> els;
  std::vector<std::size_t> sizes;
  for (std::size_t t = 1; t <= rank(); ++t) {
    els.push_back(elements(t));
    sizes.push_back(els.back().size());
  }
  return FiniteIncidenceStructure(sizes, [&](const ElemRef& a, const ElemRef& b) {
    const Subspace& x = els[a.type - 1][a.index];
    const Subspace& y = els[b.type - 1][b.index];
    return x.dim() < y.dim() ? y.contains(x) : x.contains(y);
  });
}

FiniteIncidenceStructure LieGeometry::residue(const std::vector<Subspace>& flag) const {
  std::vector<std::size_t> types;
  std::vector<bool> used(rank() + 1, false);
  for (const auto& e : flag) {
    if (!is_element(e)) throw Error("flag member is not an element of " + name());
    if (used[e.dim()]) throw Error("flag contains two elements of the same type");
    used[e.dim()] = true;
  }
  std::vector<std::vector<Subspace>> els;
  std::vector<std::size_t> sizes;
  std::vector<int> labels;
  for (std::size_t t = 1; t <= rank(); ++t) {
    if (used[t]) continue;
    els.push_back(shadow(flag, t));
    sizes.push_back(els.back().size());
    labels.push_back(static_cast<int>(t));
  }
  FiniteIncidenceStructure r(sizes, [&](const ElemRef& a, const ElemRef& b) {
    const Subspace& x = els[a.type - 1][a.index];
    const Subspace& y = els[b.type - 1][b.index];
    return x.dim() < y.dim() ? y.contains(x) : x.contains(y);
  });
  r.set_type_labels(labels);
  return r;
}

bool is_incident(const Element& a, const Element& b) {
  if (a.geom != b.geom) throw Error("elements belong to different geometries");
  if (a.sub.dim() == b.sub.dim()) return a.sub == b.sub;
  return a.sub.dim() < b.sub.dim() ? b.sub.contains(a.sub) : a.sub.contains(b.sub);
}

Element make_element(const GeometryPtr& g, const Mat& m) {
  if (m.field() != g->field()) throw Error("matrix over the wrong field");
  if (m.cols() != g->vector_dim()) throw Error("matrix width does not match the ambient dimension");
  Subspace s = canonicalize(m);
  if (s.is_empty()) throw Error("zero matrix does not define an element");
  if (!g->is_element(s)) throw Error("subspace is not an element of " + g->name());
  return {g, std::move(s)};
}

Element element_to_element(const GeometryPtr& target, const Element& e) {
  if (e.sub.field() != target->field() || e.sub.ambient_dim() != target->vector_dim())
    throw Error("ambient mismatch");
  if (!target->is_element(e.sub)) throw Error("subspace is not an element of " + target->name());
  return {target, e.sub};
}

Flag make_flag(const GeometryPtr& g, std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end(), [](const Element& a, const Element& b) { return a.type() < b.type(); });
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].geom != g) throw Error("flag element from a different geometry");
    if (i && elems[i].type() == elems[i - 1].type()) throw Error("flag contains two elements of the same type");
    for (std::size_t j = 0; j < i; ++j)
      if (!is_incident(elems[i], elems[j])) throw Error("flag elements are not pairwise incident");
  }
  return {g, std::move(elems)};
}

std::vector<Element> shadow(const Flag& f, std::size_t type) {
  std::vector<Subspace> subs;
  for (const auto& e : f.elements) subs.push_back(e.sub);
  std::vector<Element> out;
  for (auto& s : f.geom->shadow(subs, type)) out.push_back({f.geom, std::move(s)});
  return out;
}

std::shared_ptr<const ProjSpace> ProjSpace::create(std::size_t d, std::uint64_t q) {
  return create(d, Field::of_order(q));
}

std::shared_ptr<const ProjSpace> ProjSpace::create(std::size_t d, const FieldPtr& f) {
  if (d < 1) throw Error("projective dimension must be at least 1");
  if (d > 64) throw Error("projective dimension too large");
  return std::make_shared<const ProjSpace>(f, d + 1);
}

std::string ProjSpace::name() const {
  return "ProjectiveSpace(" + std::to_string(proj_dim()) + ", " + std::to_string(field()->order()) + ")";
}

bool ProjSpace::is_element(const Subspace& s) const {
  return s.field() == field() && s.ambient_dim() == vector_dim() && s.dim() >= 1 && s.dim() <= rank();
}

BigInt ProjSpace::count(std::size_t type) const {
  check_type(type);
  return gaussian_binomial(vector_dim(), type, field()->order());
}

std::shared_ptr<const Enumerator> ProjSpace::enumerator(std::size_t type) const {
  check_type(type);
  return std::make_shared<GrassmannEnumerator>(field(), vector_dim(), type);
}

Subspace ProjSpace::hyperplane_by_dual_coordinates(const Vec& coeffs) const {
  if (coeffs.size() != vector_dim()) throw Error("dual coordinates have the wrong length");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](Elt x) { return x == 0; }))
    throw Error("dual coordinates must be nonzero");
  Mat col(field(), vector_dim(), 1, coeffs);
  return left_kernel(col);
}

}  // namespace incgeo
