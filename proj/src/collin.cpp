#include "incgeo/collin.hpp"

#include <cmath>
#include <numeric>

namespace incgeo {

namespace {

Mat normalized(Mat a) {
  const Field& F = a.F();
  for (Elt x : a.data()) {
    if (x != 0) {
      if (x != 1) a = a.scaled(F.inv(x));
      return a;
    }
  }
  throw Error("zero matrix is not a collineation");
}

std::uint32_t k_of(const FieldPtr& f) { return f->degree(); }

}  // namespace

Collineation::Collineation(Mat a, std::uint32_t frob) {
  if (a.rows() != a.cols() || a.rows() == 0) throw Error("collineation needs a square matrix");
  if (!a.invertible()) throw Error("collineation matrix is singular");
  e_ = frob % k_of(a.field());
  a_ = normalized(std::move(a));
}

Collineation Collineation::identity(const FieldPtr& f, std::size_t n) { return {Mat::identity(f, n), 0}; }

bool Collineation::is_identity() const { return e_ == 0 && a_ == Mat::identity(a_.field(), a_.rows()); }

Collineation Collineation::operator*(const Collineation& h) const {
  if (h.field() != field() || h.dim() != dim()) throw Error("ambient mismatch");
  const std::uint32_t k = k_of(field());
  Collineation r;
  r.a_ = normalized(a_ * h.a_.frobenius((k - e_) % k));
  r.e_ = (e_ + h.e_) % k;
  return r;
}

Collineation Collineation::inverse() const {
  const std::uint32_t k = k_of(field());
  Collineation r;
  r.a_ = normalized(a_.inverse().frobenius(e_));
  r.e_ = (k - e_) % k;
  return r;
}

Mat Collineation::act_rows(const Mat& m) const {
  if (m.cols() != dim() || m.field() != field()) throw Error("ambient mismatch");
  return (m * a_).frobenius(e_);
}

Subspace Collineation::act(const Subspace& s) const {
  if (s.ambient_dim() != dim() || s.field() != field()) throw Error("ambient mismatch");
  if (s.is_empty()) return s;
  return canonicalize(act_rows(s.basis()));
}

Vec Collineation::act_vector(std::span<const Elt> v) const {
  Vec r = vec_mat(*field(), v, a_);
  for (auto& x : r) x = field()->frob(x, e_);
  return r;
}

std::string Collineation::str() const {
  return "< a collineation: <matrix " + std::to_string(dim()) + "x" + std::to_string(dim()) + " over " +
         field()->name() + ">, " + aut().str() + ">";
}

Element act(const Element& e, const Collineation& g) {
  if (!e.geom) throw Error("element without geometry");
  return {e.geom, g.act(e.sub)};
}

std::string to_string(PolarFlavor f) {
  switch (f) {
    case PolarFlavor::SpecialIsometry: return "special-isometry";
    case PolarFlavor::Isometry: return "isometry";
    case PolarFlavor::Similarity: return "similarity";
    case PolarFlavor::Collineation: return "collineation";
  }
  return "?";
}

PolarFlavor parse_flavor(const std::string& s) {
  if (s == "special-isometry" || s == "special") return PolarFlavor::SpecialIsometry;
  if (s == "isometry") return PolarFlavor::Isometry;
  if (s == "similarity") return PolarFlavor::Similarity;
  if (s == "collineation") return PolarFlavor::Collineation;
  throw Error("unknown group flavour '" + s + "'");
}

CollGroup::CollGroup(FieldPtr f, std::size_t n, std::vector<Collineation> gens, std::string name,
                     std::optional<BigInt> order, GeometryPtr geom)
    : f_(std::move(f)), n_(n), gens_(std::move(gens)), name_(std::move(name)), order_(std::move(order)),
      geom_(std::move(geom)) {
  for (const auto& g : gens_)
    if (g.field() != f_ || g.dim() != n_) throw Error("generators do not share the ambient space");
}

std::string CollGroup::str() const {
  if (!name_.empty()) return name_;
  std::string s = "<projective collineation group";
  if (order_) s += " of size " + to_string(*order_);
  return s + " with " + std::to_string(gens_.size()) + " generators>";
}

// ---- orders ----------------------------------------------------------------

BigInt order_pgl(std::size_t n, std::uint64_t q) {
  BigInt r = 1, qn = ipow(q, n);
  for (std::size_t i = 0; i < n; ++i) r *= qn - ipow(q, i);
  return r / (q - 1);
}

BigInt order_psl(std::size_t n, std::uint64_t q) { return order_pgl(n, q) / std::gcd<std::uint64_t>(n, q - 1); }

BigInt order_pgammal(std::size_t n, std::uint64_t q) { return order_pgl(n, q) * prime_power(q).second; }

namespace {

// prod_{i=1..m} (q^{2i} - 1)
BigInt even_product(std::size_t m, std::uint64_t q) {
  BigInt r = 1;
  for (std::size_t i = 1; i <= m; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}

// Order of the linear isometry group.
BigInt linear_isometry_order(Family fam, std::size_t n, std::uint64_t q) {
  const std::size_t m = n / 2;
  switch (fam) {
    case Family::Symplectic: return ipow(q, m * m) * even_product(m, q);
    case Family::Hyperbolic:
      return 2 * ipow(q, m * (m - 1)) * (ipow(q, m) - 1) * even_product(m - 1, q);
    case Family::Elliptic:
      return 2 * ipow(q, m * (m - 1)) * (ipow(q, m) + 1) * even_product(m - 1, q);
    case Family::Parabolic: return (q % 2 ? 2 : 1) * ipow(q, m * m) * even_product(m, q);
    case Family::Hermitian: {
      const std::uint64_t q0 = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
      BigInt r = ipow(q0, n * (n - 1) / 2);
      for (std::size_t i = 1; i <= n; ++i) r *= (i % 2) ? BigInt(ipow(q0, i) + 1) : BigInt(ipow(q0, i) - 1);
      return r;
    }
  }
  return 0;
}

std::uint64_t hermitian_q0(const Field& F) {
  std::uint64_t q0 = 1;
  for (std::uint32_t i = 0; i < F.degree() / 2; ++i) q0 *= F.p();
  return q0;
}

}  // namespace

BigInt polar_group_order(Family fam, std::size_t n, std::uint64_t q, PolarFlavor flavor) {
  const BigInt lin = linear_isometry_order(fam, n, q);
  const std::uint64_t odd = q % 2;
  const std::uint64_t h = prime_power(q).second;
  if (fam == Family::Symplectic) {
    BigInt psp = lin / (odd ? 2 : 1);
    if (flavor == PolarFlavor::SpecialIsometry || flavor == PolarFlavor::Isometry) return psp;
    return flavor == PolarFlavor::Similarity ? lin : lin * h;
  }
  if (fam == Family::Hermitian) {
    const std::uint64_t q0 = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    BigInt pgu = lin / (q0 + 1);
    if (flavor == PolarFlavor::SpecialIsometry) return pgu / std::gcd<std::uint64_t>(n, q0 + 1);
    return flavor == PolarFlavor::Collineation ? pgu * h : pgu;
  }
  // orthogonal
  BigInt pgo = lin / (odd ? 2 : 1);
  switch (flavor) {
    case PolarFlavor::SpecialIsometry:
      if (!odd) return pgo;
      return n % 2 ? pgo : pgo / 2;
    case PolarFlavor::Isometry: return pgo;
    case PolarFlavor::Similarity: return n % 2 ? pgo : lin;
    case PolarFlavor::Collineation: return (n % 2 ? pgo : lin) * h;
  }
  return 0;
}

std::string polar_group_name(Family fam, std::size_t n, const Field& F, PolarFlavor flavor) {
  const std::string args = "(" + std::to_string(n) + "," +
                           (fam == Family::Hermitian ? std::to_string(hermitian_q0(F)) + "^2"
                                                     : std::to_string(F.order())) +
                           ")";
  const int fl = static_cast<int>(flavor);
  auto pick = [&](const char* s, const char* i, const char* g, const char* c) {
    const char* names[] = {s, i, g, c};
    return std::string(names[fl]) + args;
  };
  switch (fam) {
    case Family::Symplectic: return pick("PSp", "PSp", "PGSp", "PGammaSp");
    case Family::Hyperbolic: return pick("PSO+", "PGO+", "PDeltaO+", "PGammaO+");
    case Family::Elliptic: return pick("PSO-", "PGO-", "PDeltaO-", "PGammaO-");
    case Family::Parabolic: return pick("PSO", "PGO", "PGO", "PGammaO");
    case Family::Hermitian: return pick("PSU", "PGU", "PGU", "PGammaU");
  }
  return "?";
}

// ---- projective space groups ------------------------------------------------

namespace {

// Generators of SL(n,q): a transvection, a torus element and a signed n-cycle.
std::vector<Mat> sl_generators(const FieldPtr& f, std::size_t n) {
  const Field& F = *f;
  std::vector<Mat> gens;
  if (n < 2) return gens;
  Mat t = Mat::identity(f, n);
  t(0, 1) = 1;
  gens.push_back(t);
  if (F.order() > 3) {
    Mat h = Mat::identity(f, n);
    h(0, 0) = F.primitive();
    h(1, 1) = F.inv(F.primitive());
    gens.push_back(h);
  }
  Mat w(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) w(i, i + 1) = 1;
  w(n - 1, 0) = (n % 2) ? F.one() : F.minus_one();
  gens.push_back(w);
  return gens;
}

std::string pg_args(std::size_t n, const Field& F) {
  return "(" + std::to_string(n) + "," + std::to_string(F.order()) + ")";
}

std::vector<Collineation> to_collineations(const std::vector<Mat>& ms) {
  std::vector<Collineation> r;
  for (const auto& m : ms) {
    Collineation c(m);
    if (!c.is_identity()) r.push_back(c);
  }
  return r;
}

}  // namespace

CollGroupPtr special_group(const std::shared_ptr<const ProjSpace>& pg) {
  const auto& f = pg->field();
  const std::size_t n = pg->vector_dim();
  return std::make_shared<CollGroup>(f, n, to_collineations(sl_generators(f, n)), "PSL" + pg_args(n, *f),
                                     order_psl(n, f->order()), pg);
}

CollGroupPtr projectivity_group(const std::shared_ptr<const ProjSpace>& pg) {
  const auto& f = pg->field();
  const std::size_t n = pg->vector_dim();
  auto ms = sl_generators(f, n);
  if (f->order() > 2) {
    Mat d = Mat::identity(f, n);
    d(0, 0) = f->primitive();
    ms.push_back(d);
  }
  return std::make_shared<CollGroup>(f, n, to_collineations(ms), "PGL" + pg_args(n, *f), order_pgl(n, f->order()),
                                     pg);
}

CollGroupPtr collineation_group(const std::shared_ptr<const ProjSpace>& pg) {
  const auto& f = pg->field();
  const std::size_t n = pg->vector_dim();
  auto base = projectivity_group(pg);
  auto gens = base->generators();
  if (f->degree() > 1) gens.emplace_back(Mat::identity(f, n), 1);
  return std::make_shared<CollGroup>(f, n, gens, "PGammaL" + pg_args(n, *f), order_pgammal(n, f->order()), pg);
}

}  // namespace incgeo
