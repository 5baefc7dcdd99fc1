#include "incgeo/morph.hpp"

#include <algorithm>

namespace incgeo {

GeometryMorphism::GeometryMorphism(std::string kind, GeometryPtr source, GeometryPtr target, Map fwd, Map inv,
                                   std::vector<std::size_t> types, Intertwiner inter)
    : kind_(std::move(kind)),
      src_(std::move(source)),
      tgt_(std::move(target)),
      fwd_(std::move(fwd)),
      inv_(std::move(inv)),
      types_(std::move(types)),
      inter_(std::move(inter)) {}

Subspace GeometryMorphism::apply(const Subspace& e) const {
  if (!src_->is_element(e)) throw Error("element is not in the source geometry " + src_->name());
  if (!types_.empty() && std::find(types_.begin(), types_.end(), e.dim()) == types_.end())
    throw Error("type mismatch: the " + kind_ + " map is not defined on elements of type " + std::to_string(e.dim()));
  return fwd_(e);
}

Subspace GeometryMorphism::preimage(const Subspace& e) const {
  if (!tgt_->is_element(e)) throw Error("element is not in the target geometry " + tgt_->name());
  Subspace r = inv_(e);
  if (!src_->is_element(r) || fwd_(r) != e) throw Error("element is not in the image");
  return r;
}

Collineation GeometryMorphism::intertwine(const Collineation& g) const {
  if (!inter_) throw Error("No intertwiner computed");
  return inter_(g);
}

std::string GeometryMorphism::str() const {
  return "<geometry morphism from <Elements of " + src_->name() + "> to <Elements of " + tgt_->name() + ">>";
}

Mat embed_matrix(const Mat& m, const FieldPtr& big) {
  Mat r(big, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = embed_subfield(m.F(), m(i, j), *big);
  return r;
}

namespace {

Subspace times(const Subspace& s, const Mat& d) { return canonicalize(s.basis() * d); }

Mat restrict_matrix(const Mat& m, const FieldPtr& small) {
  Mat r(small, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (small->degree() % m.F().subfield_degree(m(i, j)) != 0) throw Error("element is not in the image");
      r(i, j) = restrict_to_subfield(m.F(), m(i, j), *small);
    }
  return r;
}

// Vector-level map D between two polar spaces with the same split model.
Mat polar_iso_matrix(const PolarSpace& a, const PolarSpace& b) {
  if (a.field() != b.field() || a.vector_dim() != b.vector_dim() || a.family() != b.family())
    throw Error("class mismatch: " + a.name() + " and " + b.name());
  return a.base_change_inverse() * b.base_change();
}

// g -> D^-1 g D on semilinear maps.
GeometryMorphism::Intertwiner conjugator(const Mat& d, const FieldPtr& big = nullptr) {
  const Mat dinv = d.inverse();
  return [d, dinv, big](const Collineation& g) {
    Mat a = big ? embed_matrix(g.matrix(), big) : g.matrix();
    const std::uint32_t k = d.F().degree();
    const std::uint32_t e = g.frobenius();
    return Collineation(dinv * a * d.frobenius((k - e) % k), e);
  };
}

PolarPtr as_polar(const GeometryPtr& g) { return std::dynamic_pointer_cast<const PolarSpace>(g); }

}  // namespace

GeometryMorphism isomorphism_polar_spaces(const PolarPtr& a, const PolarPtr& b) {
  const Mat d = polar_iso_matrix(*a, *b);
  const Mat dinv = d.inverse();
  return GeometryMorphism(
      "isomorphism", a, b, [d](const Subspace& s) { return times(s, d); },
      [dinv](const Subspace& s) { return times(s, dinv); }, {}, conjugator(d));
}

GeometryMorphism embedding_by_subspace(const GeometryPtr& small, const GeometryPtr& big, const Subspace& target) {
  if (small->field() != big->field()) throw Error("field mismatch");
  if (target.ambient_dim() != big->vector_dim() || target.dim() != small->vector_dim())
    throw Error("dimension mismatch: the target subspace must have projective dimension " +
                std::to_string(small->proj_dim()));
  Mat d = Mat::identity(small->field(), small->vector_dim());
  auto sp = as_polar(small);
  auto bp = as_polar(big);
  if (sp || bp) {
    if (!sp || !bp) throw Error("class mismatch: both geometries must be polar spaces or both projective");
    const SubspaceType ty = bp->type_of_subspace(target);
    if (ty.radical_dim != 0 || ty.name != to_string(sp->family()))
      throw Error("class mismatch: the target subspace is " + ty.name + ", the source is " +
                  to_string(sp->family()));
    auto restricted = PolarSpace::from_form(bp->form().transform(target.basis()));
    d = polar_iso_matrix(*sp, *restricted);
  }
  const Mat db = d * target.basis();
  const Mat dinv = d.inverse();
  const std::vector<std::size_t> piv = target.pivots();
  return GeometryMorphism(
      "subspace", small, big, [db](const Subspace& s) { return times(s, db); },
      [target, dinv, piv](const Subspace& s) {
        if (!target.contains(s)) throw Error("element is not in the image");
        Mat c(s.field(), s.dim(), piv.size());
        for (std::size_t i = 0; i < s.dim(); ++i)
          for (std::size_t j = 0; j < piv.size(); ++j) c(i, j) = s.basis()(i, piv[j]);
        return times(Subspace::from_rref(c), dinv);
      });
}

GeometryMorphism embedding_by_subfield(const GeometryPtr& small, const GeometryPtr& big) {
  const FieldPtr fs = small->field(), fb = big->field();
  if (fs->p() != fb->p() || fb->degree() % fs->degree() != 0 || fs == fb)
    throw Error("the target field must be a proper extension of the source field");
  if (small->vector_dim() != big->vector_dim()) throw Error("dimension mismatch");
  auto sp = as_polar(small);
  auto bp = as_polar(big);
  Mat d = Mat::identity(fb, big->vector_dim());
  if (sp || bp) {
    if (!sp || !bp) throw Error("no admissible class pairing");
    PolarPtr ext;
    try {
      ext = PolarSpace::from_form(Form::create(sp->form().kind(), embed_matrix(sp->form().gram(), fb)));
    } catch (const Error&) {
      throw Error("no admissible class pairing for " + sp->name() + " into " + bp->name());
    }
    if (ext->family() != bp->family())
      throw Error("no admissible class pairing: " + sp->name() + " extends to " + ext->name() + ", not " +
                  bp->name());
    d = polar_iso_matrix(*ext, *bp);
  }
  const Mat dinv = d.inverse();
  return GeometryMorphism(
      "subfield", small, big, [fb, d](const Subspace& s) { return canonicalize(embed_matrix(s.basis(), fb) * d); },
      [fs, dinv](const Subspace& s) { return Subspace::from_rref(restrict_matrix(times(s, dinv).basis(), fs)); },
      {}, conjugator(d, fb));
}

namespace {

// GF(q^t) as GF(q)^t in the basis 1, z, ..., z^(t-1) (z the primitive element of GF(q^t)).
struct Reduction {
  FieldPtr K, k;
  std::size_t t = 1;
  std::vector<Elt> zpow;   // in K
  std::vector<Elt> coeff;  // coeff[x * t + j], in k

  Reduction(FieldPtr big, FieldPtr sub) : K(std::move(big)), k(std::move(sub)) {
    t = K->degree() / k->degree();
    zpow.assign(t, 1);
    for (std::size_t j = 1; j < t; ++j) zpow[j] = K->mul(zpow[j - 1], K->primitive());
    coeff.assign(static_cast<std::size_t>(K->order()) * t, 0);
    std::vector<Elt> c(t, 0);
    const std::uint64_t total = static_cast<std::uint64_t>(K->order());
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t r = code;
      Elt x = 0;
      for (std::size_t j = 0; j < t; ++j) {
        c[j] = static_cast<Elt>(r % k->order());
        r /= k->order();
        x = K->add(x, K->mul(embed_subfield(*k, c[j], *K), zpow[j]));
      }
      std::copy(c.begin(), c.end(), coeff.begin() + static_cast<std::ptrdiff_t>(x) * t);
    }
  }
  // Phi^-1: K^r -> k^(rt)
  Vec down(std::span<const Elt> v) const {
    Vec r(v.size() * t);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < t; ++j) r[i * t + j] = coeff[static_cast<std::size_t>(v[i]) * t + j];
    return r;
  }
  Vec up(std::span<const Elt> u) const {
    Vec r(u.size() / t, 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < t; ++j) r[i] = K->add(r[i], K->mul(embed_subfield(*k, u[i * t + j], *K), zpow[j]));
    return r;
  }
  Mat blowup(const Subspace& s) const {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < t; ++j) {
        Vec v = s.basis().row_vec(i);
        for (auto& x : v) x = K->mul(x, zpow[j]);
        rows.push_back(down(v));
      }
    return Mat::from_rows(k, s.ambient_dim() * t, rows);
  }
  // Phi(e_a) for the unit vector at index a = i t + j.
  Vec unit_image(std::size_t r, std::size_t a) const {
    Vec v(r, 0);
    v[a / t] = zpow[a % t];
    return v;
  }
};

Form induced_form(const Form& f, const Reduction& red, Elt alpha) {
  const Field& K = *red.K;
  const std::size_t r = f.dim(), n = r * red.t;
  Mat g(red.k, n, n);
  auto tr = [&](Elt x) { return trace(K, K.mul(alpha, x), *red.k); };
  if (f.is_quadratic()) {
    for (std::size_t a = 0; a < n; ++a) {
      const Vec ua = red.unit_image(r, a);
      g(a, a) = tr(f.eval(ua));
      for (std::size_t b = a + 1; b < n; ++b) g(a, b) = tr(f.eval(ua, red.unit_image(r, b)));
    }
    return Form::create(FormKind::Quadratic, g);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g(a, b) = tr(f.eval(red.unit_image(r, a), red.unit_image(r, b)));
  const Field& k = *red.k;
  bool alt = true, sym = true;
  for (std::size_t a = 0; a < n; ++a) {
    alt = alt && g(a, a) == 0;
    for (std::size_t b = 0; b < n; ++b) {
      alt = alt && g(a, b) == k.neg(g(b, a));
      sym = sym && g(a, b) == g(b, a);
    }
  }
  if (alt) return Form::create(FormKind::Alternating, g);
  if (f.kind() == FormKind::Hermitian && red.t % 2 == 1 && k.degree() % 2 == 0)
    return Form::create(FormKind::Hermitian, g);
  if (sym) return Form::create(FormKind::BilinearSymmetric, g);
  throw Error("the induced trace form is not reflexive");
}

}  // namespace

GeometryMorphism embedding_by_field_reduction(const GeometryPtr& small, const GeometryPtr& big, Elt alpha) {
  const FieldPtr K = small->field(), k = big->field();
  if (K->p() != k->p() || K->degree() % k->degree() != 0 || K == k)
    throw Error("the source field must be a proper extension of the target field");
  auto red = std::make_shared<Reduction>(K, k);
  if (big->vector_dim() != small->vector_dim() * red->t)
    throw Error("dimension mismatch: expected a target of vector dimension " +
                std::to_string(small->vector_dim() * red->t));
  auto sp = as_polar(small);
  auto bp = as_polar(big);
  Mat d = Mat::identity(k, big->vector_dim());
  if (sp || bp) {
    if (!sp || !bp) throw Error("induced form class does not match the target");
    if (alpha == 0) throw Error("alpha must be nonzero (the trace form would vanish)");
    auto ind = PolarSpace::from_form(induced_form(sp->form(), *red, alpha));
    if (ind->family() != bp->family())
      throw Error("induced form class " + ind->name() + " differs from the requested target " + bp->name());
    d = polar_iso_matrix(*ind, *bp);
  }
  const Mat dinv = d.inverse();
  return GeometryMorphism(
      "fieldred", small, big, [red, d](const Subspace& s) { return canonicalize(red->blowup(s) * d); },
      [red, dinv](const Subspace& s) {
        const Mat m = s.basis() * dinv;
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(red->up(m.row(i)));
        if (s.dim() % red->t) throw Error("element is not in the image");
        return canonicalize(Mat::from_rows(red->K, s.ambient_dim() / red->t, rows));
      });
}

PolarPtr klein_quadric(const FieldPtr& f) {
  Mat g(f, 6, 6);
  g(0, 5) = 1, g(1, 4) = 1, g(2, 3) = 1;
  return PolarSpace::from_form(Form::create(FormKind::Quadratic, g));
}

namespace {

constexpr std::size_t kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

Subspace line_from_plucker(const FieldPtr& f, const Vec& x) {
  const Field& F = *f;
  Mat p(f, 4, 4);
  for (std::size_t c = 0; c < 6; ++c) {
    const Elt v = c == 4 ? F.neg(x[c]) : x[c];
    p(kPairs[c][0], kPairs[c][1]) = v;
    p(kPairs[c][1], kPairs[c][0]) = F.neg(v);
  }
  Subspace s = canonicalize(p);
  if (s.dim() != 2) throw Error("element is not in the image");
  return s;
}

// S L2(A) S for the signed Pluecker coordinates.
Mat klein_matrix(const Mat& a) {
  const Field& F = a.F();
  Mat r(a.field(), 6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const auto [p, q] = kPairs[i];
      const auto [u, v] = kPairs[j];
      Elt x = F.sub(F.mul(a(p, u), a(q, v)), F.mul(a(p, v), a(q, u)));
      if ((i == 4) != (j == 4)) x = F.neg(x);
      r(i, j) = x;
    }
  return r;
}

}  // namespace

Vec plucker(const Subspace& line) {
  if (line.dim() != 2 || line.ambient_dim() != 4) throw Error("the Klein correspondence needs a line of PG(3,q)");
  const Field& F = *line.field();
  const auto u = line.basis().row(0), v = line.basis().row(1);
  Vec x(6);
  for (std::size_t c = 0; c < 6; ++c) {
    const auto [i, j] = kPairs[c];
    x[c] = F.sub(F.mul(u[i], v[j]), F.mul(u[j], v[i]));
  }
  x[4] = F.neg(x[4]);
  return x;
}

GeometryMorphism klein_correspondence(const std::shared_ptr<const ProjSpace>& pg, const PolarPtr& target) {
  if (pg->vector_dim() != 4) throw Error("the Klein correspondence is defined on PG(3,q)");
  if (target->family() != Family::Hyperbolic || target->vector_dim() != 6 || target->field() != pg->field())
    throw Error("the Klein target must be Q+(5,q) over the same field");
  const Mat d = polar_iso_matrix(*klein_quadric(pg->field()), *target);
  const Mat dinv = d.inverse();
  const FieldPtr f = pg->field();
  auto to = [d, f](const Subspace& s) { return canonicalize(Mat::from_rows(f, 6, {plucker(s)}) * d); };
  auto from = [dinv, f](const Subspace& s) {
    if (s.dim() != 1) throw Error("the Klein preimage needs a point of the quadric");
    return line_from_plucker(f, (s.basis() * dinv).row_vec(0));
  };
  auto inter = [d, dinv](const Collineation& g) {
    const std::uint32_t k = d.F().degree();
    const std::uint32_t e = g.frobenius();
    return Collineation(dinv * klein_matrix(g.matrix()) * d.frobenius((k - e) % k), e);
  };
  return GeometryMorphism("klein", pg, target, to, from, {2}, inter);
}

GeometryMorphism klein_correspondence(const FieldPtr& f) {
  return klein_correspondence(ProjSpace::create(3, f), klein_quadric(f));
}

GeometryMorphism natural_duality(const PolarPtr& q4, const PolarPtr& w3) {
  if (q4->field() != w3->field()) throw Error("mismatched q: " + q4->name() + " and " + w3->name());
  if (q4->family() != Family::Parabolic || q4->vector_dim() != 5)
    throw Error("the first argument must be a parabolic quadric Q(4,q)");
  if (w3->family() != Family::Symplectic || w3->vector_dim() != 4)
    throw Error("the second argument must be a symplectic space W(3,q)");
  const FieldPtr f = q4->field();
  const Field& F = *f;
  // W with f(e0,e1) = f(e2,e3) = 1: t.i. lines satisfy p01 + p23 = 0, i.e. x6 = -x1.
  Mat gw(f, 4, 4);
  gw(0, 1) = 1, gw(1, 0) = F.minus_one(), gw(2, 3) = 1, gw(3, 2) = F.minus_one();
  auto wstd = PolarSpace::from_form(Form::create(FormKind::Alternating, gw));
  // Klein form on the hyperplane section: -y1^2 + y2 y5 + y3 y4.
  Mat gq(f, 5, 5);
  gq(0, 0) = F.minus_one(), gq(1, 4) = 1, gq(2, 3) = 1;
  auto section = PolarSpace::from_form(Form::create(FormKind::Quadratic, gq));
  const Mat dw = polar_iso_matrix(*w3, *wstd), dwinv = dw.inverse();
  const Mat dq = polar_iso_matrix(*section, *q4), dqinv = dq.inverse();

  auto wline_to_qpoint = [=](const Subspace& l) {
    Vec x = plucker(times(l, dw));
    return canonicalize(Mat::from_rows(f, 5, {Vec(x.begin(), x.begin() + 5)}) * dq);
  };
  auto qpoint_to_wline = [=](const Subspace& p) {
    Vec y = (p.basis() * dqinv).row_vec(0);
    y.push_back(F.neg(y[0]));
    return times(line_from_plucker(f, y), dwinv);
  };
  auto fwd = [=](const Subspace& e) {
    if (e.dim() == 1) return qpoint_to_wline(e);
    const Mat& b = e.basis();
    return meet(qpoint_to_wline(Subspace::from_vector(f, b.row_vec(0))),
                qpoint_to_wline(Subspace::from_vector(f, b.row_vec(1))));
  };
  auto inv = [=](const Subspace& e) {
    if (e.dim() == 2) return wline_to_qpoint(e);
    const Subspace p = times(e, dw);
    const Mat c = complement_basis(p, wstd->perp(p));
    Subspace a = wline_to_qpoint(times(span(p, Subspace::from_vector(f, c.row_vec(0))), dwinv));
    Subspace b = wline_to_qpoint(times(span(p, Subspace::from_vector(f, c.row_vec(1))), dwinv));
    return span(a, b);
  };
  return GeometryMorphism("duality", q4, w3, fwd, inv);
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

Elt minor(const Mat& b, const std::vector<std::size_t>& cols) {
  Mat m(b.field(), b.rows(), cols.size());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = b(i, cols[j]);
  return m.det();
}

}  // namespace

GeometryMorphism veronese_map(const std::shared_ptr<const ProjSpace>& pg) {
  const std::size_t n = pg->vector_dim();
  const FieldPtr f = pg->field();
  auto target = ProjSpace::create(n * (n + 1) / 2 - 1, f);
  auto fwd = [n, f](const Subspace& p) {
    const auto x = p.basis().row(0);
    Vec y;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) y.push_back(f->mul(x[i], x[j]));
    return Subspace::from_vector(f, y);
  };
  auto inv = [n, f](const Subspace& s) {
    if (s.dim() != 1) throw Error("element is not in the image");
    const auto y = s.basis().row(0);
    auto at = [&](std::size_t i, std::size_t j) {
      if (i > j) std::swap(i, j);
      return y[i * n - i * (i - 1) / 2 + (j - i)];
    };
    for (std::size_t i = 0; i < n; ++i)
      if (at(i, i) != 0) {
        Vec x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = at(i, j);
        return Subspace::from_vector(f, x);
      }
    throw Error("element is not in the image");
  };
  return GeometryMorphism("veronese", pg, target, fwd, inv, {1});
}

GeometryMorphism grassmann_map(const std::shared_ptr<const ProjSpace>& pg, std::size_t k) {
  const std::size_t n = pg->vector_dim();
  if (k < 1 || k + 2 > n) throw Error("grassmann map needs 1 <= k <= n-1");
  const FieldPtr f = pg->field();
  auto sets = std::make_shared<std::vector<std::vector<std::size_t>>>(combinations(n, k + 1));
  auto target = ProjSpace::create(sets->size() - 1, f);
  auto fwd = [sets, f](const Subspace& s) {
    Vec y;
    for (const auto& c : *sets) y.push_back(minor(s.basis(), c));
    return Subspace::from_vector(f, y);
  };
  auto inv = [sets, f, n, k](const Subspace& s) {
    if (s.dim() != 1) throw Error("element is not in the image");
    const auto y = s.basis().row(0);
    std::size_t lead = 0;
    while (lead < y.size() && y[lead] == 0) ++lead;
    const auto& J = (*sets)[lead];
    auto coord = [&](std::vector<std::size_t> c) -> Elt {
      // sign of the sorting permutation
      bool odd = false;
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) {
          if (c[a] == c[b]) return 0;
          odd ^= c[a] > c[b];
        }
      std::sort(c.begin(), c.end());
      const auto it = std::lower_bound(sets->begin(), sets->end(), c);
      const Elt v = y[static_cast<std::size_t>(it - sets->begin())];
      return odd ? f->neg(v) : v;
    };
    Mat m(f, k + 1, n);
    const Elt scale = f->inv(y[lead]);
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        auto jj = J;
        jj[r] = c;
        m(r, c) = f->mul(coord(jj), scale);
      }
    return canonicalize(m);
  };
  return GeometryMorphism("grassmann", pg, target, fwd, inv, {k + 1});
}

SegreMap segre_map(const std::shared_ptr<const ProjSpace>& a, const std::shared_ptr<const ProjSpace>& b) {
  if (a->field() != b->field()) throw Error("field mismatch");
  return {a, b, ProjSpace::create(a->vector_dim() * b->vector_dim() - 1, a->field())};
}

Subspace SegreMap::apply(const Subspace& x, const Subspace& y) const {
  if (!a->is_element(x) || x.dim() != 1 || !b->is_element(y) || y.dim() != 1)
    throw Error("type mismatch: the Segre map takes a pair of points");
  const Field& F = *a->field();
  Vec z;
  for (auto u : x.basis().row(0))
    for (auto v : y.basis().row(0)) z.push_back(F.mul(u, v));
  return Subspace::from_vector(a->field(), z);
}

std::pair<Subspace, Subspace> SegreMap::preimage(const Subspace& z) const {
  if (!target->is_element(z) || z.dim() != 1) throw Error("element is not in the image");
  const std::size_t n = a->vector_dim(), m = b->vector_dim();
  const auto v = z.basis().row(0);
  std::size_t i0 = 0, j0 = 0;
  while (v[i0 * m + j0] == 0) {
    if (++j0 == m) j0 = 0, ++i0;
  }
  Vec x(n), y(m);
  for (std::size_t i = 0; i < n; ++i) x[i] = v[i * m + j0];
  for (std::size_t j = 0; j < m; ++j) y[j] = v[i0 * m + j];
  auto r = std::make_pair(Subspace::from_vector(a->field(), x), Subspace::from_vector(a->field(), y));
  if (apply(r.first, r.second) != z) throw Error("element is not in the image");
  return r;
}

}  // namespace incgeo
