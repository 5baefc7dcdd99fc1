// Generators of the collineation groups of a polar space, built on the split
// form and moved to user coordinates.

#include <map>
#include <set>

#include "incgeo/collin.hpp"

namespace incgeo {

namespace {

struct Ctx {
  const Form& S;
  const Field& F;
  FieldPtr f;
  std::size_t n;
  std::uint32_t comp;  // Frobenius exponent of sigma
  Elt sigma(Elt x) const { return F.frob(x, comp); }
  Vec unit(std::size_t i) const {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  }
  Elt b(std::size_t i, std::size_t j) const { return S.eval(unit(i), unit(j)); }
};

// Some a with a + a^sigma = t (t fixed by sigma).
Elt trace_preimage(const Ctx& c, Elt t) {
  if (t == 0) return 0;
  if (c.F.p() != 2) return c.F.div(t, c.F.from_int(2));
  for (Elt w = 0; w < c.F.order(); ++w)
    if (c.F.add(w, c.sigma(w)) == 1) return c.F.mul(t, w);
  throw Error("internal: trace not surjective");
}

void set_row(Mat& m, std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
}

void axpy(const Field& F, Vec& y, Elt a, const Vec& x) {
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = F.add(y[j], F.mul(a, x[j]));
}

// Unipotent element fixing e0 = e_{2i}, moving e1 = e_{2i+1} by v (+ a e0), and
// correcting the vectors beyond the pair so that the form is preserved.
Mat unipotent(const Ctx& c, std::size_t i, const Vec& v, Elt a) {
  const Field& F = c.F;
  const std::size_t i0 = 2 * i, i1 = 2 * i + 1;
  const Elt cp = c.b(i1, i0);
  Mat m = Mat::identity(c.f, c.n);
  Vec r1 = c.unit(i1);
  axpy(F, r1, 1, v);
  r1[i0] = F.add(r1[i0], a);
  set_row(m, i1, r1);
  for (std::size_t l = i1 + 1; l < c.n; ++l) {
    Elt phi = c.sigma(F.neg(F.div(c.S.eval(v, c.unit(l)), cp)));
    m(l, i0) = F.add(m(l, i0), phi);
  }
  return m;
}

Elt unipotent_shift(const Ctx& c, std::size_t i, const Vec& v) {
  const Field& F = c.F;
  const Elt ce = c.b(2 * i, 2 * i + 1);
  switch (c.S.kind()) {
    case FormKind::Quadratic: return F.neg(F.div(c.S.eval(v), ce));
    case FormKind::Hermitian: return trace_preimage(c, F.neg(c.S.eval(v, v)));
    default: return 0;
  }
}

// All 2x2 blocks g on the anisotropic plane (coordinates t, t+1) with Q(xg) = mu Q(x).
std::vector<Mat> binary_similarities(const Ctx& c, std::size_t t, Elt mu) {
  const Field& F = c.F;
  const std::size_t q = F.order();
  auto Q2 = [&](Elt x0, Elt x1) {
    Vec v(c.n, 0);
    v[t] = x0;
    v[t + 1] = x1;
    return c.S.eval(v);
  };
  auto B2 = [&](Elt x0, Elt x1, Elt y0, Elt y1) {
    Vec u(c.n, 0), w(c.n, 0);
    u[t] = x0, u[t + 1] = x1, w[t] = y0, w[t + 1] = y1;
    return c.S.eval(u, w);
  };
  const Elt qu = F.mul(mu, Q2(1, 0)), qw = F.mul(mu, Q2(0, 1)), buw = F.mul(mu, B2(1, 0, 0, 1));
  std::vector<Mat> out;
  for (Elt x0 = 0; x0 < q; ++x0)
    for (Elt x1 = 0; x1 < q; ++x1) {
      if (Q2(x0, x1) != qu) continue;
      // y with b(x, y) = buw: b(x, .) is a nonzero functional (y0, y1) -> l0 y0 + l1 y1.
      const Elt l0 = B2(x0, x1, 1, 0), l1 = B2(x0, x1, 0, 1);
      for (Elt s = 0; s < q; ++s) {
        Elt y0, y1;
        if (l1 != 0) {
          y0 = s;
          y1 = F.div(F.sub(buw, F.mul(l0, s)), l1);
        } else {
          y1 = s;
          y0 = F.div(buw, l0);
        }
        if (Q2(y0, y1) != qw) continue;
        Mat g = Mat::identity(c.f, 2);
        g(0, 0) = x0, g(0, 1) = x1, g(1, 0) = y0, g(1, 1) = y1;
        out.push_back(g);
      }
    }
  return out;
}

Mat embed_block(const Ctx& c, std::size_t t, const Mat& blk) {
  Mat m = Mat::identity(c.f, c.n);
  for (std::size_t i = 0; i < blk.rows(); ++i)
    for (std::size_t j = 0; j < blk.cols(); ++j) m(t + i, t + j) = blk(i, j);
  return m;
}

std::size_t block_order(const Mat& g) {
  const Mat id = Mat::identity(g.field(), g.rows());
  Mat x = g;
  std::size_t k = 1;
  while (x != id) {
    x = x * g;
    ++k;
  }
  return k;
}

// Linear isometry generators of the split form.
std::vector<Mat> isometry_generators(const Ctx& c, std::size_t pairs, std::size_t aniso) {
  const Field& F = c.F;
  std::vector<Mat> gens;
  const std::size_t tail = 2 * pairs;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t i0 = 2 * i, i1 = 2 * i + 1;
    const Elt ce = c.b(i0, i1), cp = c.b(i1, i0);
    // torus
    const Elt lam = F.primitive(), lam2 = c.sigma(F.inv(lam));
    if (lam != 1 || lam2 != 1) {
      Mat t = Mat::identity(c.f, c.n);
      t(i0, i0) = lam;
      t(i1, i1) = lam2;
      gens.push_back(t);
    }
    // Weyl element swapping the pair
    Mat w = Mat::identity(c.f, c.n);
    w(i0, i0) = 0, w(i1, i1) = 0;
    w(i0, i1) = 1;
    w(i1, i0) = c.sigma(F.div(ce, cp));
    gens.push_back(w);
    // unipotent radical: the first coordinate beyond the pair, plus the centre
    if (i1 + 1 < c.n) {
      Vec v = c.unit(i1 + 1);
      gens.push_back(unipotent(c, i, v, unipotent_shift(c, i, v)));
    }
    if (c.S.kind() == FormKind::Alternating) {
      gens.push_back(unipotent(c, i, Vec(c.n, 0), 1));
    } else if (c.S.kind() == FormKind::Hermitian) {
      for (Elt a = 1; a < F.order(); ++a)
        if (F.add(F.mul(a, ce), F.mul(c.sigma(a), cp)) == 0) {
          gens.push_back(unipotent(c, i, Vec(c.n, 0), a));
          break;
        }
    }
  }
  if (aniso == 1 && c.S.kind() == FormKind::Quadratic && F.p() != 2) {
    Mat d = Mat::identity(c.f, c.n);
    d(tail, tail) = F.minus_one();
    gens.push_back(d);
  } else if (aniso == 1 && c.S.kind() == FormKind::Hermitian) {
    // z^(q0-1) generates the norm-1 group
    std::uint64_t q0 = 1;
    for (std::uint32_t j = 0; j < F.degree() / 2; ++j) q0 *= F.p();
    Mat d = Mat::identity(c.f, c.n);
    d(tail, tail) = F.exp(q0 - 1);
    if (d(tail, tail) != 1) gens.push_back(d);
  } else if (aniso == 2) {
    auto iso = binary_similarities(c, tail, 1);
    const Mat* rot = &iso.front();
    std::size_t best = 0;
    for (const auto& g : iso) {
      std::size_t o = block_order(g);
      if (o > best) best = o, rot = &g;
    }
    std::set<Mat> cyc;
    Mat x = *rot;
    for (std::size_t k = 0; k < best; ++k, x = x * *rot) cyc.insert(x);
    gens.push_back(embed_block(c, tail, *rot));
    for (const auto& g : iso)
      if (!cyc.count(g)) {
        gens.push_back(embed_block(c, tail, g));
        break;
      }
  }
  return gens;
}

// Extra linear similarity with multiplier z, when the similarity group is larger.
std::optional<Mat> similarity_generator(const Ctx& c, Family fam, std::size_t pairs, std::size_t aniso) {
  if (fam == Family::Parabolic || fam == Family::Hermitian) return std::nullopt;
  const Field& F = c.F;
  if (F.order() == 2) return std::nullopt;
  const Elt z = F.primitive();
  Mat d = Mat::identity(c.f, c.n);
  for (std::size_t i = 0; i < pairs; ++i) d(2 * i, 2 * i) = z;
  if (aniso == 2) {
    auto sims = binary_similarities(c, 2 * pairs, z);
    const Mat& blk = sims.front();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) d(2 * pairs + i, 2 * pairs + j) = blk(i, j);
  }
  return d;
}

// Kernel of the determinant on the group generated by gens, via Schreier generators.
std::vector<Mat> determinant_kernel(const FieldPtr& f, std::size_t n, const std::vector<Mat>& gens) {
  const Field& F = *f;
  std::map<Elt, Mat> rep;
  rep.emplace(1, Mat::identity(f, n));
  std::vector<Elt> queue{1};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Elt d = queue[h];
    for (const auto& g : gens) {
      const Elt d2 = F.mul(d, g.det());
      if (!rep.count(d2)) {
        rep.emplace(d2, rep.at(d) * g);
        queue.push_back(d2);
      }
    }
  }
  std::vector<Mat> out;
  for (const auto& [d, t] : rep)
    for (const auto& g : gens) {
      const Elt d2 = F.mul(d, g.det());
      out.push_back(t * g * rep.at(d2).inverse());
    }
  return out;
}

}  // namespace

bool preserves_form(const Form& f, const Collineation& g, PolarFlavor flavor) {
  if (g.field() != f.field() || g.dim() != f.dim()) return false;
  const std::uint32_t th = g.frobenius();
  if (flavor != PolarFlavor::Collineation && th != 0) return false;
  const Field& F = f.F();
  const std::size_t n = f.dim();
  const Mat B = g.matrix().frobenius(th);
  // pairs of (value on basis, value on images)
  std::vector<std::pair<Elt, Elt>> vals;
  auto e = [&](std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_quadratic()) {
      vals.emplace_back(F.frob(f.eval(e(i)), th), f.eval(B.row(i)));
      for (std::size_t j = i + 1; j < n; ++j)
        vals.emplace_back(F.frob(f.eval(e(i), e(j)), th), f.eval(B.row(i), B.row(j)));
    } else {
      for (std::size_t j = 0; j < n; ++j)
        vals.emplace_back(F.frob(f.eval(e(i), e(j)), th), f.eval(B.row(i), B.row(j)));
    }
  }
  Elt lam = 0;
  for (auto [a, b] : vals)
    if (a != 0) {
      lam = F.div(b, a);
      break;
    }
  if (lam == 0) return false;
  for (auto [a, b] : vals)
    if (F.mul(lam, a) != b) return false;
  if (flavor == PolarFlavor::Similarity || flavor == PolarFlavor::Collineation) return true;
  // A representative mu*A with multiplier 1 (and determinant 1 for special isometries).
  const Elt det = g.matrix().det();
  const bool herm = f.kind() == FormKind::Hermitian;
  for (Elt mu = 1; mu < F.order(); ++mu) {
    const Elt norm = herm ? F.mul(mu, F.frob(mu, f.companion())) : F.mul(mu, mu);
    if (F.mul(lam, norm) != 1) continue;
    if (flavor == PolarFlavor::Isometry) return true;
    if (F.mul(F.pow(mu, n), det) == 1) return true;
  }
  return false;
}

CollGroupPtr polar_group(const PolarPtr& ps, PolarFlavor flavor) {
  const Form& S = ps->split_model();
  const FieldPtr& f = ps->field();
  const Field& F = *f;
  const std::size_t n = ps->vector_dim();
  const Split& sp = ps->split_data();
  Ctx c{S, F, f, n, S.companion()};

  std::vector<Mat> lin = isometry_generators(c, sp.pairs, sp.aniso);
  if (flavor == PolarFlavor::SpecialIsometry) lin = determinant_kernel(f, n, lin);
  if (flavor == PolarFlavor::Similarity || flavor == PolarFlavor::Collineation)
    if (auto d = similarity_generator(c, ps->family(), sp.pairs, sp.aniso)) lin.push_back(*d);

  const Mat& C = ps->base_change();
  const Mat& Ci = ps->base_change_inverse();
  std::set<Collineation> seen;
  std::vector<Collineation> gens;
  auto add = [&](const Collineation& g) {
    if (g.is_identity() || !seen.insert(g).second) return;
    if (!preserves_form(ps->form(), g, flavor))
      throw Error("internal: generator violates the " + to_string(flavor) + " condition");
    gens.push_back(g);
  };
  for (const auto& m : lin) add(Collineation(Ci * m * C));
  if (flavor == PolarFlavor::Collineation && F.degree() > 1) {
    // x -> (x D)^phi with D carrying S^(phi^-1) to a multiple of S.
    const std::uint32_t k = F.degree();
    const Split s2 = split(S.frobenius(k - 1));
    add(Collineation(Ci * s2.C * C.frobenius(k - 1), 1));
  }
  return std::make_shared<CollGroup>(f, n, gens, polar_group_name(ps->family(), n, F, flavor),
                                     polar_group_order(ps->family(), n, F.order(), flavor), ps);
}

}  // namespace incgeo
