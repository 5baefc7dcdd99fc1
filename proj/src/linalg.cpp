#include "incgeo/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace incgeo {

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elt> data)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(data)) {
  if (a_.size() != rows * cols) throw Error("matrix data size mismatch");
}

Mat Mat::identity(FieldPtr f, std::size_t n) {
  Mat m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_ints(FieldPtr f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f->from_int(rows[i][j]);
  }
  return m;
}

Mat Mat::from_rows(FieldPtr f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] >= f->order()) throw Error("matrix entry outside field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Mat Mat::operator*(const Mat& b) const {
  if (cols_ != b.rows_) throw Error("matrix dimension mismatch");
  if (f_ != b.f_) throw Error("field mismatch");
  const Field& F = *f_;
  Mat r(f_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Elt x = (*this)(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        Elt y = b(k, j);
        if (y) r(i, j) = F.add(r(i, j), F.mul(x, y));
      }
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::frobenius(std::uint32_t e) const {
  Mat r = *this;
  if (e % f_->degree() == 0) return r;
  for (auto& x : r.a_) x = f_->frob(x, e);
  return r;
}

Mat Mat::scaled(Elt s) const {
  Mat r = *this;
  for (auto& x : r.a_) x = f_->mul(x, s);
  return r;
}

Mat Mat::stacked(const Mat& b) const {
  if (rows_ == 0 && !f_) return b;
  if (cols_ != b.cols_) throw Error("column mismatch in stack");
  if (f_ != b.f_) throw Error("field mismatch");
  Mat r(f_, rows_ + b.rows_, cols_);
  std::copy(a_.begin(), a_.end(), r.a_.begin());
  std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + a_.size());
  return r;
}

Mat Mat::select_rows(std::size_t from, std::size_t count) const {
  Mat r(f_, count, cols_);
  std::copy(a_.begin() + from * cols_, a_.begin() + (from + count) * cols_, r.a_.begin());
  return r;
}

std::vector<std::size_t> Mat::rref() {
  const Field& F = *f_;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
    Elt inv = F.inv((*this)(r, c));
    if (inv != 1)
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = F.mul((*this)(r, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Elt x = (*this)(i, c);
      if (!x) continue;
      Elt nx = F.neg(x);
      for (std::size_t j = c; j < cols_; ++j) {
        Elt y = (*this)(r, j);
        if (y) (*this)(i, j) = F.add((*this)(i, j), F.mul(nx, y));
      }
    }
    piv.push_back(c);
    ++r;
  }
  rows_ = r;
  a_.resize(r * cols_);
  return piv;
}

std::size_t Mat::rank() const {
  Mat t = *this;
  return t.rref().size();
}

Elt Mat::det() const {
  if (rows_ != cols_) throw Error("determinant of non-square matrix");
  const Field& F = *f_;
  Mat m = *this;
  Elt d = 1;
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      d = F.neg(d);
    }
    Elt pv = m(c, c);
    d = F.mul(d, pv);
    Elt inv = F.inv(pv);
    for (std::size_t i = c + 1; i < n; ++i) {
      Elt x = m(i, c);
      if (!x) continue;
      Elt fct = F.neg(F.mul(x, inv));
      for (std::size_t j = c; j < n; ++j) m(i, j) = F.add(m(i, j), F.mul(fct, m(c, j)));
    }
  }
  return d;
}

bool Mat::invertible() const { return rows_ == cols_ && rank() == rows_; }

Mat Mat::inverse() const {
  if (rows_ != cols_) throw Error("inverse of non-square matrix");
  const std::size_t n = rows_;
  Mat aug(f_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = aug.rref();
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error("matrix is singular");
  Mat r(f_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

bool Mat::operator<(const Mat& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return a_ < o.a_;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Vec vec_mat(const Field& F, std::span<const Elt> v, const Mat& m) {
  if (v.size() != m.rows()) throw Error("vector/matrix size mismatch");
  Vec r(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    Elt x = v[k];
    if (!x) continue;
    auto row = m.row(k);
    for (std::size_t j = 0; j < r.size(); ++j)
      if (row[j]) r[j] = F.add(r[j], F.mul(x, row[j]));
  }
  return r;
}

Elt dot(const Field& F, std::span<const Elt> a, std::span<const Elt> b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Elt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

Subspace Subspace::from_matrix(Mat m) {
  m.rref();
  return from_rref(std::move(m));
}

Subspace Subspace::from_vector(const FieldPtr& f, const Vec& v) {
  return from_matrix(Mat(f, 1, v.size(), v));
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto r = basis_.row(i);
    std::size_t c = 0;
    while (r[c] == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

Vec Subspace::reduce(std::span<const Elt> v) const {
  const Field& F = *field();
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto row = basis_.row(i);
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    Elt x = r[c];
    if (!x) continue;
    Elt nx = F.neg(x);
    for (std::size_t j = c; j < r.size(); ++j)
      if (row[j]) r[j] = F.add(r[j], F.mul(nx, row[j]));
  }
  return r;
}

bool Subspace::contains_vector(std::span<const Elt> v) const {
  if (v.size() != ambient_dim()) throw Error("ambient dimension mismatch");
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elt x) { return x == 0; });
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_dim() != ambient_dim() || o.field() != field()) throw Error("ambient mismatch");
  if (o.dim() > dim()) return false;
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains_vector(o.basis_.row(i))) return false;
  return true;
}

std::string Subspace::key() const {
  std::string k;
  k.reserve(8 + basis_.data().size() * 4);
  auto put = [&k](std::uint32_t x) {
    for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
  };
  put(static_cast<std::uint32_t>(basis_.rows()));
  put(static_cast<std::uint32_t>(basis_.cols()));
  for (auto x : basis_.data()) put(x);
  return k;
}

bool Subspace::operator<(const Subspace& o) const { return basis_ < o.basis_; }

Subspace canonicalize(const Mat& m) { return Subspace::from_matrix(m); }

Subspace span(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) throw Error("ambient mismatch");
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return Subspace::from_matrix(a.basis().stacked(b.basis()));
}

Subspace left_kernel(const Mat& m) {
  // Solve x m = 0, i.e. m^T x^T = 0: null space of m^T.
  const std::size_t n = m.rows();
  Mat t = m.transpose();
  auto piv = t.rref();
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  const Field& F = m.F();
  Mat ker(m.field(), n - piv.size(), n);
  std::size_t r = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    ker(r, free) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) ker(r, piv[i]) = F.neg(t(i, free));
    ++r;
  }
  return Subspace::from_matrix(std::move(ker));
}

Subspace annihilator(const Subspace& s) {
  if (s.is_empty()) return Subspace::whole(s.field(), s.ambient_dim());
  return left_kernel(s.basis().transpose());
}

Subspace meet(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) throw Error("ambient mismatch");
  if (a.is_empty() || b.is_empty()) return Subspace(a.field(), a.ambient_dim());
  return annihilator(span(annihilator(a), annihilator(b)));
}

Mat complement_basis(const Subspace& inner, const Subspace& outer) {
  // Greedily add rows of the outer basis not already spanned.
  std::vector<Vec> extra;
  Subspace cur = inner;
  for (std::size_t i = 0; i < outer.dim() && cur.dim() < outer.dim(); ++i) {
    Vec v = outer.basis().row_vec(i);
    if (!cur.contains_vector(v)) {
      extra.push_back(v);
      cur = span(cur, Subspace::from_vector(outer.field(), v));
    }
  }
  return Mat::from_rows(outer.field(), outer.ambient_dim(), extra);
}

}  // namespace incgeo
