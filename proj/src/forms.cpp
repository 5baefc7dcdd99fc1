#include "incgeo/forms.hpp"

#include <map>
#include <mutex>

namespace incgeo {

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::BilinearSymmetric: return "bilinear-symmetric";
    case FormKind::Alternating: return "alternating";
    case FormKind::Hermitian: return "hermitian";
    case FormKind::Quadratic: return "quadratic";
  }
  return "?";
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Symplectic: return "symplectic";
    case Family::Hyperbolic: return "hyperbolic";
    case Family::Elliptic: return "elliptic";
    case Family::Parabolic: return "parabolic";
    case Family::Hermitian: return "hermitian";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "symplectic") return Family::Symplectic;
  if (s == "hyperbolic") return Family::Hyperbolic;
  if (s == "elliptic") return Family::Elliptic;
  if (s == "parabolic") return Family::Parabolic;
  if (s == "hermitian") return Family::Hermitian;
  throw Error("unknown polar family '" + s + "'");
}

namespace {

Mat fold_upper(const Mat& m) {
  const Field& F = m.F();
  Mat q(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    q(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < m.cols(); ++j) q(i, j) = F.add(m(i, j), m(j, i));
  }
  return q;
}

}  // namespace

Form Form::create(FormKind kind, Mat gram) {
  if (gram.rows() != gram.cols()) throw Error("gram matrix must be square");
  if (!gram.field()) throw Error("gram matrix has no field");
  const Field& F = gram.F();
  const std::size_t n = gram.rows();
  Form f;
  f.kind_ = kind;
  switch (kind) {
    case FormKind::Alternating:
      for (std::size_t i = 0; i < n; ++i) {
        if (gram(i, i) != 0) throw Error("alternating form needs a zero diagonal");
        for (std::size_t j = i + 1; j < n; ++j)
          if (gram(i, j) != F.neg(gram(j, i))) throw Error("alternating form must be antisymmetric");
      }
      f.gram_ = gram;
      f.polar_ = gram;
      break;
    case FormKind::Hermitian: {
      if (F.degree() % 2) throw Error("hermitian form requires a square field order");
      f.companion_ = F.degree() / 2;
      if (gram.transpose() != gram.frobenius(f.companion_))
        throw Error("hermitian gram must equal its conjugate transpose");
      f.gram_ = gram;
      f.polar_ = gram;
      break;
    }
    case FormKind::BilinearSymmetric: {
      if (gram.transpose() != gram) throw Error("symmetric bilinear form needs a symmetric gram");
      if (F.p() == 2) {
        for (std::size_t i = 0; i < n; ++i)
          if (gram(i, i) != 0)
            throw Error("symmetric bilinear form with nonzero diagonal in characteristic 2 is unsupported");
        return create(FormKind::Alternating, std::move(gram));
      }
      // Q(x) = f(x,x).
      f = create(FormKind::Quadratic, gram);
      f.from_bilinear_ = true;
      return f;
    }
    case FormKind::Quadratic: {
      f.gram_ = fold_upper(gram);
      f.polar_ = f.gram_;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) f.polar_(i, j) = i < j ? f.gram_(i, j) : f.gram_(j, i);
          else f.polar_(i, i) = F.add(f.gram_(i, i), f.gram_(i, i));
      break;
    }
  }
  return f;
}

Elt Form::eval(std::span<const Elt> u, std::span<const Elt> v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw Error("vector length does not match form dimension");
  const Field& Fd = F();
  Elt s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!v[j]) continue;
    Elt col = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] && polar_(i, j)) col = Fd.add(col, Fd.mul(u[i], polar_(i, j)));
    if (col) s = Fd.add(s, Fd.mul(col, Fd.frob(v[j], companion_)));
  }
  return s;
}

Elt Form::eval(std::span<const Elt> u) const {
  if (kind_ != FormKind::Quadratic) return eval(u, u);
  const std::size_t n = dim();
  if (u.size() != n) throw Error("vector length does not match form dimension");
  const Field& Fd = F();
  Elt s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!u[i]) continue;
    Elt row = 0;
    for (std::size_t j = i; j < n; ++j)
      if (u[j] && gram_(i, j)) row = Fd.add(row, Fd.mul(gram_(i, j), u[j]));
    if (row) s = Fd.add(s, Fd.mul(u[i], row));
  }
  return s;
}

bool Form::is_singular_vector(std::span<const Elt> u) const { return eval(u) == 0; }

bool Form::is_totally_isotropic(const Subspace& s) const {
  const Mat& b = s.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (eval(b.row(i)) != 0) return false;
    for (std::size_t j = i + 1; j < b.rows(); ++j)
      if (eval(b.row(i), b.row(j)) != 0) return false;
  }
  return true;
}

Form Form::transform(const Mat& m) const {
  if (m.cols() != dim()) throw Error("transform matrix width mismatch");
  Form r;
  r.kind_ = kind_;
  r.companion_ = companion_;
  r.from_bilinear_ = from_bilinear_;
  if (kind_ == FormKind::Quadratic) {
    Mat g = m * gram_ * m.transpose();
    Form t = create(FormKind::Quadratic, g);
    t.from_bilinear_ = from_bilinear_;
    return t;
  }
  Mat g = m * gram_ * m.frobenius(companion_).transpose();
  r.gram_ = g;
  r.polar_ = g;
  return r;
}

Form Form::scaled(Elt s) const {
  Form r = *this;
  r.gram_ = gram_.scaled(s);
  r.polar_ = polar_.scaled(s);
  if (kind_ == FormKind::Hermitian && F().frob(s, companion_) != s)
    throw Error("hermitian forms may only be scaled by subfield elements");
  return r;
}

Form Form::frobenius(std::uint32_t e) const {
  Form r = *this;
  r.gram_ = gram_.frobenius(e);
  r.polar_ = polar_.frobenius(e);
  return r;
}

MultiPoly Form::polynomial() const {
  const std::size_t n = dim();
  MultiPoly p(field(), n);
  if (kind_ == FormKind::Quadratic) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) p.add_quadratic(i, j, gram_(i, j));
  } else if (kind_ == FormKind::Hermitian) {
    std::uint32_t q0 = 1;
    for (std::uint32_t i = 0; i < companion_; ++i) q0 *= F().p();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!gram_(i, j)) continue;
        Exponents e(n, 0);
        e[i] += 1;
        e[j] += q0;
        p.add_term(e, gram_(i, j));
      }
  }
  return p;
}

std::string Form::equation() const {
  if (kind_ == FormKind::Quadratic || kind_ == FormKind::Hermitian) return polynomial().str() + "=0";
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      Elt c = gram_(i, j);
      if (!c) continue;
      std::string term =
          coefficient_prefix(F(), c) + "x" + std::to_string(i + 1) + "*y" + std::to_string(j + 1);
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
  return (out.empty() ? "0" : out) + "=0";
}

Subspace radical(const Form& f) {
  Subspace r = left_kernel(f.polar_gram());
  if (!f.is_quadratic() || f.F().p() != 2 || r.is_empty()) return r;
  // In characteristic 2, Q is semilinear on the bilinear radical: Q(sum c_i r_i) = (sum c_i sqrt(Q(r_i)))^2.
  const Field& F = f.F();
  Mat col(f.field(), r.dim(), 1);
  for (std::size_t i = 0; i < r.dim(); ++i) col(i, 0) = F.sqrt(f.eval(r.basis().row(i)));
  Subspace k = left_kernel(col);
  if (k.is_empty()) return Subspace(f.field(), f.dim());
  return canonicalize(k.basis() * r.basis());
}

bool is_degenerate(const Form& f) { return !radical(f).is_empty(); }

namespace {

std::mutex g_as_mutex;
std::map<const Field*, std::vector<std::int64_t>> g_as_tables;

// t with t^2 + t = d in characteristic 2.
std::optional<Elt> artin_schreier(const Field& F, Elt d) {
  const std::vector<std::int64_t>* tab;
  {
    std::lock_guard<std::mutex> lk(g_as_mutex);
    auto& t = g_as_tables[&F];
    if (t.empty()) {
      t.assign(F.order(), -1);
      for (Elt x = 0; x < F.order(); ++x) {
        Elt y = F.add(F.mul(x, x), x);
        if (t[y] < 0) t[y] = x;
      }
    }
    tab = &t;
  }
  std::int64_t r = (*tab)[d];
  if (r < 0) return std::nullopt;
  return static_cast<Elt>(r);
}

Vec axpy(const Field& F, Elt a, const Vec& x, const Vec& y) {
  Vec r = y;
  if (a)
    for (std::size_t i = 0; i < r.size(); ++i)
      if (x[i]) r[i] = F.add(r[i], F.mul(a, x[i]));
  return r;
}

Vec scale(const Field& F, Elt a, const Vec& x) {
  Vec r = x;
  for (auto& v : r) v = F.mul(v, a);
  return r;
}

bool is_zero(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

class Splitter {
 public:
  explicit Splitter(const Form& f) : f_(f), F_(f.F()) {}

  std::optional<Vec> singular_in(const std::vector<Vec>& W) const {
    if (W.empty()) return std::nullopt;
    if (f_.kind() == FormKind::Alternating) return W[0];
    if (f_.kind() == FormKind::Hermitian) {
      const Vec& w0 = W[0];
      Elt a = f_.eval(w0);
      if (a == 0) return w0;
      if (W.size() < 2) return std::nullopt;
      Vec w1 = axpy(F_, F_.neg(F_.div(f_.eval(W[1], w0), a)), w0, W[1]);
      Elt d = f_.eval(w1);
      if (d == 0) return w1;
      Elt x = norm_preimage(F_, F_.neg(F_.div(d, a)));
      return axpy(F_, x, w0, w1);
    }
    for (std::size_t i = 0; i < W.size() && i < 3; ++i)
      if (f_.eval(W[i]) == 0) return W[i];
    if (W.size() < 2) return std::nullopt;
    const Vec& w0 = W[0];
    Elt a = f_.eval(w0);
    auto try_line = [&](const Vec& v) -> std::optional<Vec> {
      auto x = quadratic_root(F_, a, f_.eval(w0, v), f_.eval(v));
      if (!x) return std::nullopt;
      return axpy(F_, *x, w0, v);
    };
    if (auto r = try_line(W[1])) return r;
    if (W.size() < 3) return std::nullopt;
    for (Elt y = 0; y < F_.order(); ++y)
      if (auto r = try_line(axpy(F_, y, W[1], W[2]))) return r;
    throw Error("internal: no singular vector in a 3-space");
  }

  Split run() {
    if (is_degenerate(f_)) throw Error("degenerate form");
    const std::size_t n = f_.dim();
    std::vector<Vec> W;
    for (std::size_t i = 0; i < n; ++i) {
      Vec v(n, 0);
      v[i] = 1;
      W.push_back(v);
    }
    std::vector<Vec> rows;
    Split s;
    while (auto e = singular_in(W)) {
      Vec fv;
      for (const auto& w : W) {
        Elt b = f_.eval(*e, w);
        if (b) {
          fv = scale(F_, F_.frob(F_.inv(b), f_.companion()), w);
          break;
        }
      }
      if (fv.empty()) throw Error("internal: isotropic vector in the radical");
      if (f_.is_quadratic()) {
        fv = axpy(F_, F_.neg(f_.eval(fv)), *e, fv);
      } else if (f_.kind() == FormKind::Hermitian) {
        Elt hf = f_.eval(fv);
        if (hf) {
          Elt c;
          if (F_.p() != 2) {
            c = F_.neg(F_.div(hf, F_.from_int(2)));
          } else {
            c = F_.mul(hf, trace_one());
          }
          fv = axpy(F_, c, *e, fv);
        }
      }
      Elt bfe = f_.eval(fv, *e);
      std::vector<Vec> next;
      for (const auto& w : W) {
        Elt alpha = f_.eval(w, fv);
        Elt beta = F_.div(f_.eval(w, *e), bfe);
        Vec p = axpy(F_, F_.neg(alpha), *e, axpy(F_, F_.neg(beta), fv, w));
        if (!is_zero(p)) next.push_back(p);
      }
      W = reduce(next);
      rows.push_back(*e);
      rows.push_back(fv);
      ++s.pairs;
    }
    s.aniso = W.size();
    switch (f_.kind()) {
      case FormKind::Alternating:
        s.family = Family::Symplectic;
        if (!W.empty()) throw Error("internal: symplectic remainder");
        break;
      case FormKind::Hermitian:
        s.family = Family::Hermitian;
        if (W.size() > 1) throw Error("internal: hermitian remainder");
        if (W.size() == 1) rows.push_back(scale(F_, norm_preimage(F_, F_.inv(f_.eval(W[0]))), W[0]));
        break;
      default:
        if (W.size() == 0) {
          s.family = Family::Hyperbolic;
        } else if (W.size() == 1) {
          s.family = Family::Parabolic;
          Elt a = f_.eval(W[0]);
          if (F_.is_square(a)) {
            rows.push_back(scale(F_, F_.inv(F_.sqrt(a)), W[0]));
          } else {
            s.scalar = a;
            for (std::size_t i = 0; i < rows.size(); i += 2) rows[i] = scale(F_, a, rows[i]);
            rows.push_back(W[0]);
          }
        } else if (W.size() == 2) {
          s.family = Family::Elliptic;
          auto [u, w] = elliptic_pair(W[0], W[1]);
          rows.push_back(u);
          rows.push_back(w);
        } else {
          throw Error("internal: anisotropic remainder of dimension > 2");
        }
    }
    s.C = Mat::from_rows(f_.field(), n, rows);
    return s;
  }

 private:
  std::vector<Vec> reduce(const std::vector<Vec>& vs) const {
    if (vs.empty()) return {};
    Mat m = Mat::from_rows(f_.field(), f_.dim(), vs);
    m.rref();
    std::vector<Vec> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vec(i));
    return out;
  }

  Elt trace_one() const {
    for (Elt t = 0; t < F_.order(); ++t)
      if (F_.add(t, F_.frob(t, f_.companion())) == 1) return t;
    throw Error("internal: trace not surjective");
  }

  std::pair<Vec, Vec> elliptic_pair(const Vec& w0, const Vec& w1) const {
    // u with Q(u) = 1.
    Vec u;
    Elt a = f_.eval(w0);
    if (F_.is_square(a)) {
      u = scale(F_, F_.inv(F_.sqrt(a)), w0);
    } else {
      Elt b01 = f_.eval(w0, w1), q1 = f_.eval(w1);
      for (Elt t = 1; t < F_.order() && u.empty(); ++t) {
        // a s^2 + b01 t s + t^2 q1 - 1 = 0
        auto s = quadratic_root(F_, a, F_.mul(b01, t), F_.sub(F_.mul(F_.mul(t, t), q1), 1));
        if (s) u = axpy(F_, *s, w0, scale(F_, t, w1));
      }
    }
    if (u.empty()) throw Error("internal: anisotropic binary form misses 1");
    Vec v = Mat::from_rows(f_.field(), f_.dim(), {u, w0}).rank() == 2 ? w0 : w1;
    Elt nu = elliptic_nu(F_);
    Elt buu = f_.eval(u, u), buv = f_.eval(u, v);
    auto check = [&](Elt s, Elt t) -> std::optional<Vec> {
      Vec w = axpy(F_, s, u, scale(F_, t, v));
      if (f_.eval(u, w) == 1 && f_.eval(w) == nu) return w;
      return std::nullopt;
    };
    if (buu) {
      for (Elt t = 0; t < F_.order(); ++t) {
        Elt s = F_.div(F_.sub(1, F_.mul(t, buv)), buu);
        if (auto w = check(s, t)) return {u, *w};
      }
    } else {
      Elt t = F_.inv(buv);
      Elt c = F_.sub(F_.mul(F_.mul(t, t), f_.eval(v)), nu);
      auto s = quadratic_root(F_, 1, 1, c);
      if (s)
        if (auto w = check(*s, t)) return {u, *w};
    }
    throw Error("internal: elliptic completion failed");
  }

  const Form& f_;
  const Field& F_;
};

}  // namespace

std::optional<Elt> quadratic_root(const Field& F, Elt a, Elt b, Elt c) {
  if (a == 0) {
    if (b) return F.neg(F.div(c, b));
    if (c == 0) return Elt{0};
    return std::nullopt;
  }
  if (F.p() != 2) {
    Elt disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), F.mul(a, c)));
    if (!F.is_square(disc)) return std::nullopt;
    return F.div(F.add(F.neg(b), F.sqrt(disc)), F.mul(F.from_int(2), a));
  }
  if (b == 0) return F.sqrt(F.div(c, a));
  auto t = artin_schreier(F, F.div(F.mul(a, c), F.mul(b, b)));
  if (!t) return std::nullopt;
  return F.mul(F.div(b, a), *t);
}

Elt norm_preimage(const Field& F, Elt a) {
  if (a == 0) return 0;
  if (F.degree() % 2) throw Error("norm map needs a square field order");
  std::uint32_t q0 = 1;
  for (std::uint32_t i = 0; i < F.degree() / 2; ++i) q0 *= F.p();
  std::uint32_t j = F.log(a);
  if (j % (q0 + 1)) throw Error("element is not in the norm subfield");
  return F.exp(j / (q0 + 1));
}

Split split(const Form& f) { return Splitter(f).run(); }

std::size_t witt_index(const Form& f) { return split(f).pairs; }

FormClass classify(const Form& f) {
  Split s = split(f);
  return FormClass{s.family, s.pairs, false, 0};
}

Elt elliptic_nu(const Field& F) {
  for (Elt nu = 0; nu < F.order(); ++nu)
    if (!quadratic_root(F, 1, 1, nu)) return nu;
  throw Error("internal: no irreducible x^2+x+nu");
}

namespace {

void check_dims(Family fam, std::size_t n, const Field& F) {
  switch (fam) {
    case Family::Symplectic:
    case Family::Hyperbolic:
    case Family::Elliptic:
      if (n < 2 || n % 2) throw Error(to_string(fam) + " forms need even vector dimension");
      break;
    case Family::Parabolic:
      if (n % 2 == 0) throw Error("parabolic forms need odd vector dimension");
      break;
    case Family::Hermitian:
      if (n < 1) throw Error("hermitian forms need dimension at least 1");
      if (F.degree() % 2) throw Error("hermitian forms need a square field order");
      break;
  }
}

}  // namespace

Form split_form(Family fam, std::size_t n, const FieldPtr& f) {
  check_dims(fam, n, *f);
  const Field& F = *f;
  Mat g(f, n, n);
  std::size_t hyp = n;
  if (fam == Family::Parabolic) hyp = n - 1;
  if (fam == Family::Elliptic) hyp = n - 2;
  if (fam == Family::Hermitian) hyp = n - n % 2;
  for (std::size_t i = 0; i < hyp; i += 2) {
    g(i, i + 1) = 1;
    if (fam == Family::Symplectic) g(i + 1, i) = F.minus_one();
    if (fam == Family::Hermitian) g(i + 1, i) = 1;
  }
  switch (fam) {
    case Family::Symplectic: return Form::create(FormKind::Alternating, g);
    case Family::Hermitian:
      if (n % 2) g(n - 1, n - 1) = 1;
      return Form::create(FormKind::Hermitian, g);
    case Family::Parabolic: g(n - 1, n - 1) = 1; break;
    case Family::Elliptic:
      g(n - 2, n - 2) = 1;
      g(n - 2, n - 1) = 1;
      g(n - 1, n - 1) = elliptic_nu(F);
      break;
    case Family::Hyperbolic: break;
  }
  return Form::create(FormKind::Quadratic, g);
}

Form standard_form(Family fam, std::size_t n, const FieldPtr& f) {
  check_dims(fam, n, *f);
  Mat g(f, n, n);
  switch (fam) {
    case Family::Symplectic:
    case Family::Hyperbolic: return split_form(fam, n, f);
    case Family::Hermitian:
      return Form::create(FormKind::Hermitian, Mat::identity(f, n));
    case Family::Parabolic:
      g(0, 0) = 1;
      for (std::size_t i = 1; i + 1 < n; i += 2) g(i, i + 1) = 1;
      break;
    case Family::Elliptic:
      g(0, 0) = 1;
      g(0, 1) = 1;
      g(1, 1) = elliptic_nu(*f);
      for (std::size_t i = 2; i + 1 < n; i += 2) g(i, i + 1) = 1;
      break;
  }
  return Form::create(FormKind::Quadratic, g);
}

Standardized standardize(const Form& f) {
  Split su = split(f);
  Form std = standard_form(su.family, f.dim(), f.field());
  Split ss = split(std);
  Standardized r;
  r.C = ss.C.inverse() * su.C;
  r.scalar = f.F().div(su.scalar, ss.scalar);
  r.standard = std;
  if (!(f.transform(r.C) == std.scaled(r.scalar))) throw Error("internal: standardization check failed");
  return r;
}

}  // namespace incgeo
