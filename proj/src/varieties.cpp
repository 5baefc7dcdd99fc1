#include "incgeo/varieties.hpp"

#include <map>

#include "incgeo/parallel.hpp"

namespace incgeo {

namespace {

std::vector<std::vector<std::size_t>> pairs_lex(std::size_t n) {
  std::vector<std::vector<std::size_t>> r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) r.push_back({i, j});
  return r;
}

Exponents mono(std::size_t nvars, std::initializer_list<std::size_t> vars) {
  Exponents e(nvars, 0);
  for (auto v : vars) ++e[v];
  return e;
}

}  // namespace

Variety Variety::projective(std::shared_ptr<const ProjSpace> pg, std::vector<MultiPoly> polys) {
  if (!pg) throw Error("missing ambient space");
  Variety v;
  v.f_ = pg->field();
  v.nvars_ = pg->vector_dim();
  for (const auto& p : polys) {
    if (p.field() != v.f_ && !p.is_zero()) throw Error("polynomial over the wrong field");
    if (p.nvars() != v.nvars_) throw Error("polynomial has " + std::to_string(p.nvars()) + " variables, expected " +
                                           std::to_string(v.nvars_));
    if (!p.is_homogeneous()) throw Error("polynomial " + p.str() + " is not homogeneous");
  }
  v.pg_ = std::move(pg);
  v.polys_ = std::move(polys);
  return v;
}

Variety Variety::affine(std::size_t n, FieldPtr f, std::vector<MultiPoly> polys) {
  if (n < 1) throw Error("affine dimension must be at least 1");
  for (const auto& p : polys)
    if (p.nvars() != n) throw Error("polynomial has " + std::to_string(p.nvars()) + " variables, expected " +
                                    std::to_string(n));
  Variety v;
  v.f_ = std::move(f);
  v.nvars_ = n;
  v.polys_ = std::move(polys);
  v.label_ = "Affine";
  return v;
}

std::string Variety::polynomials_str() const {
  std::string s = "[ ";
  for (std::size_t i = 0; i < polys_.size(); ++i) s += (i ? ", " : "") + polys_[i].str();
  return s + " ]";
}

std::string Variety::str() const {
  if (is_projective()) return label_ + " Variety in " + pg_->name();
  return label_ + " Variety in AffineSpace(" + std::to_string(nvars_) + ", " + std::to_string(f_->order()) + ")";
}

bool Variety::contains(std::span<const Elt> x) const {
  if (x.size() != nvars_) throw Error("point has the wrong number of coordinates");
  for (const auto& p : polys_)
    if (!p.is_zero() && p.eval(x) != 0) return false;
  return !extra_ || extra_(x);
}

bool Variety::contains(const Subspace& point) const {
  if (!is_projective() || !pg_->is_element(point) || point.dim() != 1) throw Error("a projective point is expected");
  return contains(point.basis().row(0));
}

BigInt Variety::ambient_points() const {
  if (is_projective()) return pg_->count(1);
  BigInt n = 1;
  for (std::size_t i = 0; i < nvars_; ++i) n *= f_->order();
  return n;
}

Vec Variety::ambient_point(const BigInt& index0) const {
  if (is_projective()) return pg_->enumerator(1)->unrank(index0 + 1).basis().row_vec(0);
  Vec x(nvars_);
  BigInt r = index0;
  for (std::size_t i = nvars_; i-- > 0;) {
    x[i] = static_cast<Elt>(r % f_->order());
    r /= f_->order();
  }
  return x;
}

std::vector<Vec> Variety::points() const {
  const BigInt total = ambient_points();
  if (total > kScanBound) throw Error("ambient space has " + to_string(total) + " points, above the scan bound");
  const auto n = static_cast<std::size_t>(total);
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::vector<Vec>> found(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    for (std::size_t i = c * kChunk; i < std::min(n, (c + 1) * kChunk); ++i) {
      Vec x = ambient_point(i);
      if (contains(x)) found[c].push_back(std::move(x));
    }
  });
  std::vector<Vec> out;
  for (auto& f : found)
    for (auto& x : f) out.push_back(std::move(x));
  return out;
}

Vec Variety::random_point(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  const BigInt total = ambient_points();
  // rejection on unrank, then a full scan as the fallback
  for (int tries = 0; tries < 256; ++tries) {
    BigInt r = 0;
    for (int w = 0; w < 4; ++w) r = (r << 64) + BigInt(rng());
    Vec x = ambient_point(r % total);
    if (contains(x)) return x;
  }
  const auto pts = points();
  if (pts.empty()) throw Error("the variety has no points");
  return pts[rng() % pts.size()];
}

PolarPtr Variety::to_polar_space() const {
  if (!form_) throw Error("only hermitian and quadric varieties have a polar space");
  return PolarSpace::from_form(*form_);
}

Variety variety_of_form(const Form& f) {
  if (f.kind() != FormKind::Hermitian && f.kind() != FormKind::Quadratic)
    throw Error("a hermitian or quadratic form is expected");
  Variety v = Variety::projective(ProjSpace::create(f.dim() - 1, f.field()), {f.polynomial()});
  v.set_label(f.kind() == FormKind::Hermitian ? "Hermitian" : "Quadric");
  v.set_form(f);
  return v;
}

Variety hermitian_variety(std::size_t n, std::uint64_t q2) {
  const FieldPtr f = Field::of_order(q2);
  if (f->degree() % 2 != 0) throw Error("hermitian varieties need a square order, got " + std::to_string(q2));
  if (n < 1) throw Error("projective dimension must be at least 1");
  return variety_of_form(Form::create(FormKind::Hermitian, Mat::identity(f, n + 1)));
}

Variety quadric_variety(Family fam, std::size_t n, std::uint64_t q) {
  const std::size_t d = n + 1;
  const bool ok = (fam == Family::Parabolic && d % 2 == 1) ||
                  ((fam == Family::Hyperbolic || fam == Family::Elliptic) && d % 2 == 0);
  if (!ok) throw Error("no " + to_string(fam) + " quadric in projective dimension " + std::to_string(n));
  return variety_of_form(standard_form(fam, d, Field::of_order(q)));
}

MappedVariety veronese_variety(const std::shared_ptr<const ProjSpace>& pg) {
  GeometryMorphism map = veronese_map(pg);
  const std::size_t n = pg->vector_dim(), m = n * (n + 1) / 2;
  const FieldPtr f = pg->field();
  auto at = [n](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };
  std::vector<MultiPoly> polys;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiPoly p(f, m);
      p.add_term(mono(m, {at(i, j), at(i, j)}), 1);
      p.add_term(mono(m, {at(i, i), at(j, j)}), f->minus_one());
      polys.push_back(p);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        MultiPoly p(f, m);
        p.add_term(mono(m, {at(i, i), at(j, k)}), 1);
        p.add_term(mono(m, {at(i, j), at(i, k)}), f->minus_one());
        polys.push_back(p);
      }
  Variety v = Variety::projective(std::static_pointer_cast<const ProjSpace>(map.target()), polys);
  v.set_label("Veronese");
  return {std::move(v), std::move(map)};
}

MappedVariety grassmann_variety(const std::shared_ptr<const ProjSpace>& pg, std::size_t k) {
  GeometryMorphism map = grassmann_map(pg, k);
  auto target = std::static_pointer_cast<const ProjSpace>(map.target());
  const FieldPtr f = pg->field();
  std::vector<MultiPoly> polys;
  if (k == 1) {
    const std::size_t n = pg->vector_dim();
    const auto pr = pairs_lex(n);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
    for (std::size_t t = 0; t < pr.size(); ++t) idx[{pr[t][0], pr[t][1]}] = t;
    const std::size_t m = pr.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t a = j + 1; a < n; ++a)
          for (std::size_t b = a + 1; b < n; ++b) {
            MultiPoly p(f, m);
            p.add_term(mono(m, {idx[{i, j}], idx[{a, b}]}), 1);
            p.add_term(mono(m, {idx[{i, a}], idx[{j, b}]}), f->minus_one());
            p.add_term(mono(m, {idx[{i, b}], idx[{j, a}]}), 1);
            polys.push_back(p);
          }
  }
  Variety v = Variety::projective(target, polys);
  v.set_label("Grassmann");
  if (k > 1) {
    auto m = std::make_shared<GeometryMorphism>(map);
    v.set_membership([m, f](std::span<const Elt> x) {
      try {
        m->preimage(Subspace::from_vector(f, Vec(x.begin(), x.end())));
        return true;
      } catch (const Error&) {
        return false;
      }
    });
  }
  return {std::move(v), std::move(map)};
}

SegreVariety segre_variety(const std::shared_ptr<const ProjSpace>& a, const std::shared_ptr<const ProjSpace>& b) {
  SegreMap map = segre_map(a, b);
  const std::size_t r = a->vector_dim(), c = b->vector_dim(), m = r * c;
  const FieldPtr f = a->field();
  std::vector<MultiPoly> polys;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t i2 = i + 1; i2 < r; ++i2)
      for (std::size_t j = 0; j < c; ++j)
        for (std::size_t j2 = j + 1; j2 < c; ++j2) {
          MultiPoly p(f, m);
          p.add_term(mono(m, {i * c + j, i2 * c + j2}), 1);
          p.add_term(mono(m, {i * c + j2, i2 * c + j}), f->minus_one());
          polys.push_back(p);
        }
  Variety v = Variety::projective(map.target, polys);
  v.set_label("Segre");
  return {std::move(v), std::move(map)};
}

}  // namespace incgeo
