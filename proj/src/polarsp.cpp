#include "incgeo/polarsp.hpp"

#include <algorithm>

namespace incgeo {

std::size_t polar_rank(Family fam, std::size_t n) {
  switch (fam) {
    case Family::Symplectic:
    case Family::Hyperbolic: return n / 2;
    case Family::Elliptic: return n / 2 - 1;
    case Family::Parabolic: return (n - 1) / 2;
    case Family::Hermitian: return n / 2;
  }
  return 0;
}

BigInt polar_count(Family fam, std::size_t n, std::uint64_t q, std::size_t k) {
  const std::size_t r = polar_rank(fam, n);
  if (k > r) return 0;
  // Product over i < k of (Q^(r-i) - 1)(Q^(r+e-i-1) + 1) / (Q^(i+1) - 1), written
  // with integer exponents in base b (b = sqrt(q) for hermitian, else q).
  BigInt b;
  std::size_t a = 1, two_e = 0;
  if (fam == Family::Hermitian) {
    auto [p, h] = prime_power(q);
    if (h % 2) throw Error("hermitian polar space needs a square order");
    b = ipow(BigInt(p), h / 2);
    a = 2;
    two_e = n % 2 ? 3 : 1;
  } else {
    b = q;
    two_e = fam == Family::Hyperbolic ? 0 : fam == Family::Elliptic ? 4 : 2;
    // Exponents below are in units of q^(1/2) when a = 2; here a = 1 so halve 2e.
  }
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= ipow(b, a * (r - i)) - 1;
    std::size_t ex = a == 2 ? 2 * (r - i - 1) + two_e : (r - i - 1) + two_e / 2;
    num *= ipow(b, ex) + 1;
    den *= ipow(b, a * (i + 1)) - 1;
  }
  return num / den;
}

std::shared_ptr<const PolarSpace> PolarSpace::standard(Family fam, std::size_t d, std::uint64_t q) {
  return standard(fam, d, Field::of_order(q));
}

std::shared_ptr<const PolarSpace> PolarSpace::standard(Family fam, std::size_t d, const FieldPtr& f) {
  return from_form(standard_form(fam, d + 1, f));
}

std::shared_ptr<const PolarSpace> PolarSpace::from_form(const Form& f) {
  return std::make_shared<const PolarSpace>(f);
}

PolarSpace::PolarSpace(const Form& f) : LieGeometry(f.field(), f.dim()), form_(f) {
  if (is_degenerate(f)) throw Error("degenerate form does not define a polar space");
  split_ = split(f);
  if (split_.pairs == 0) throw Error("anisotropic form (Witt index 0) does not define a polar space");
  cinv_ = split_.C.inverse();
  split_form_value_ = split_form(split_.family, f.dim(), f.field());
}

std::string PolarSpace::name() const {
  const std::string d = std::to_string(proj_dim());
  const std::uint64_t q = field()->order();
  switch (family()) {
    case Family::Symplectic: return "W(" + d + ", " + std::to_string(q) + ")";
    case Family::Hyperbolic: return "Q+(" + d + ", " + std::to_string(q) + ")";
    case Family::Elliptic: return "Q-(" + d + ", " + std::to_string(q) + ")";
    case Family::Parabolic: return "Q(" + d + ", " + std::to_string(q) + ")";
    case Family::Hermitian: {
      std::uint64_t q0 = 1;
      for (std::uint32_t i = 0; i < field()->degree() / 2; ++i) q0 *= field()->p();
      return "H(" + d + ", " + std::to_string(q0) + "^2)";
    }
  }
  return "?";
}

std::string PolarSpace::display() const { return name() + ": " + form_.equation(); }

bool PolarSpace::is_element(const Subspace& s) const {
  return s.field() == field() && s.ambient_dim() == vector_dim() && s.dim() >= 1 && s.dim() <= rank() &&
         form_.is_totally_isotropic(s);
}

BigInt PolarSpace::count(std::size_t type) const {
  check_type(type);
  return polar_count(family(), vector_dim(), field()->order(), type);
}

bool PolarSpace::has_polarity() const {
  return !(form_.is_quadratic() && field()->p() == 2 && vector_dim() % 2 == 1);
}

Subspace PolarSpace::perp(const Subspace& s) const {
  if (s.ambient_dim() != vector_dim() || s.field() != field()) throw Error("ambient mismatch");
  if (s.is_empty()) return Subspace::whole(field(), vector_dim());
  Mat m = form_.polar_gram() * s.basis().frobenius(form_.companion()).transpose();
  return left_kernel(m);
}

Subspace PolarSpace::polarity(const Subspace& s) const {
  if (!has_polarity()) throw Error("no polarity of the ambient projective space");
  return perp(s);
}

Subspace PolarSpace::tangent_space(const Subspace& point) const {
  if (point.dim() != 1 || !is_element(point)) throw Error("tangent space needs a point of the polar space");
  return perp(point);
}

SubspaceType PolarSpace::type_of_subspace(const Subspace& s) const {
  if (s.ambient_dim() != vector_dim() || s.field() != field()) throw Error("ambient mismatch");
  if (s.is_empty()) throw Error("empty subspace");
  Form r = form_.transform(s.basis());
  Subspace rad = radical(r);
  if (!rad.is_empty()) return {"degenerate", rad.dim()};
  if (r.is_quadratic() && r.dim() == 1) return {"parabolic", 0};
  return {to_string(split(r).family), 0};
}

Subspace PolarSpace::refine_upper(const Subspace& lower, const Subspace& upper) const {
  return meet(upper, perp(lower));
}

namespace {

Vec tail(const Vec& v) { return Vec(v.begin() + 2, v.end()); }

class PolarEnumerator : public Enumerator {
 public:
  PolarEnumerator(const PolarSpace& ps, std::size_t k)
      : f_(ps.field()), F_(*f_), fam_(ps.family()), N_(ps.vector_dim()), P_(ps.rank()), k_(k),
        C_(ps.base_change()), Cinv_(ps.base_change_inverse()),
        ps_(std::static_pointer_cast<const PolarSpace>(ps.shared_from_this())) {
    const Form& sf = ps.split_model();
    const std::uint64_t q = F_.order();
    for (std::size_t l = 0; l <= P_; ++l) {
      std::size_t dim = N_ - 2 * l;
      Mat sel(f_, dim, N_);
      for (std::size_t i = 0; i < dim; ++i) sel(i, 2 * l + i) = 1;
      levels_.push_back(sf.transform(sel));
    }
    qpow_.resize(N_ * N_ + 2);
    qpow_[0] = 1;
    for (std::size_t i = 1; i < qpow_.size(); ++i) qpow_[i] = qpow_[i - 1] * q;
    if (fam_ == Family::Symplectic) {
      mA_ = q;
      c_ = F_.minus_one();
    } else if (fam_ == Family::Hermitian) {
      std::uint32_t e = F_.degree() / 2;
      for (Elt a = 0; a < q; ++a)
        if (F_.add(a, F_.frob(a, e)) == 0) ker_.push_back(a);
      mA_ = ker_.size();
      if (F_.p() == 2)
        for (Elt t = 0; t < q; ++t)
          if (F_.add(t, F_.frob(t, e)) == 1) {
            t1_ = t;
            break;
          }
    }
    cnt_.assign(P_ + 1, std::vector<BigInt>(k_ + 1, 0));
    for (std::size_t l = P_ + 1; l-- > 0;) {
      cnt_[l][0] = 1;
      if (l == P_) continue;
      const std::size_t Nl = N_ - 2 * l;
      for (std::size_t j = 1; j <= k_; ++j) {
        if (j > P_ - l) break;
        cnt_[l][j] = BigInt(mA_) * qpow_[Nl - 1 - j] * cnt_[l + 1][j - 1] + cnt_[l + 1][j - 1] +
                     qpow_[j] * cnt_[l + 1][j];
      }
    }
  }

  BigInt size() const override { return cnt_[0][k_]; }

  Subspace unrank(const BigInt& index) const override {
    if (index < 1 || index > size()) throw Error("enumerator index out of range");
    Subspace s = unrank_level(0, k_, index - 1);
    return canonicalize(s.basis() * C_);
  }

  BigInt rank(const Subspace& s) const override {
    if (s.dim() != k_ || !ps_->is_element(s)) throw Error("foreign element for enumerator");
    return rank_level(0, k_, canonicalize(s.basis() * Cinv_)) + 1;
  }

 private:
  // x with x + x^sigma = s.
  Elt trace_solution(Elt s) const {
    if (F_.p() != 2) return F_.div(s, F_.from_int(2));
    return F_.mul(s, t1_);
  }

  Elt beta(std::size_t l, const Vec& r, const Vec& r0) const {
    return F_.neg(F_.div(levels_[l + 1].eval(r, r0), c_));
  }

  Subspace unrank_level(std::size_t l, std::size_t k, BigInt r) const {
    const std::size_t Nl = N_ - 2 * l;
    if (k == 0) return Subspace(f_, Nl);
    const std::uint64_t q = F_.order();
    const std::size_t free = Nl - 1 - k;
    BigInt A = BigInt(mA_) * qpow_[free] * cnt_[l + 1][k - 1];
    std::vector<Vec> rows;
    if (r < A) {
      std::uint64_t a_idx = static_cast<std::uint64_t>(r % mA_);
      r /= mA_;
      BigInt digits = r % qpow_[free];
      r /= qpow_[free];
      Subspace R = unrank_level(l + 1, k - 1, r);
      auto piv = R.pivots();
      Vec r0(Nl - 2, 0);
      std::vector<std::size_t> freecols;
      for (std::size_t c = 0; c < Nl - 2; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) freecols.push_back(c);
      for (std::size_t i = freecols.size(); i-- > 0;) {
        r0[freecols[i]] = static_cast<Elt>(static_cast<std::uint64_t>(digits % q));
        digits /= q;
      }
      Elt a = 0;
      const Form& sub = levels_[l + 1];
      if (fam_ == Family::Symplectic) {
        a = static_cast<Elt>(a_idx);
      } else if (fam_ == Family::Hermitian) {
        a = F_.add(trace_solution(F_.neg(sub.eval(r0, r0))), ker_[a_idx]);
      } else {
        a = F_.neg(sub.eval(r0));
      }
      Vec v{1, a};
      v.insert(v.end(), r0.begin(), r0.end());
      rows.push_back(v);
      for (std::size_t i = 0; i < R.dim(); ++i) {
        Vec ri = R.basis().row_vec(i);
        Vec t{0, beta(l, ri, r0)};
        t.insert(t.end(), ri.begin(), ri.end());
        rows.push_back(t);
      }
      return canonicalize(Mat::from_rows(f_, Nl, rows));
    }
    r -= A;
    if (r < cnt_[l + 1][k - 1]) {
      Subspace S2 = unrank_level(l + 1, k - 1, r);
      Vec e1(Nl, 0);
      e1[1] = 1;
      rows.push_back(e1);
      for (std::size_t i = 0; i < S2.dim(); ++i) {
        Vec t{0, 0};
        auto ri = S2.basis().row(i);
        t.insert(t.end(), ri.begin(), ri.end());
        rows.push_back(t);
      }
      return canonicalize(Mat::from_rows(f_, Nl, rows));
    }
    r -= cnt_[l + 1][k - 1];
    BigInt lam = r % qpow_[k];
    r /= qpow_[k];
    Subspace S1 = unrank_level(l + 1, k, r);
    std::vector<Elt> lv(k);
    for (std::size_t i = k; i-- > 0;) {
      lv[i] = static_cast<Elt>(static_cast<std::uint64_t>(lam % q));
      lam /= q;
    }
    for (std::size_t i = 0; i < k; ++i) {
      Vec t{0, lv[i]};
      auto ri = S1.basis().row(i);
      t.insert(t.end(), ri.begin(), ri.end());
      rows.push_back(t);
    }
    return canonicalize(Mat::from_rows(f_, Nl, rows));
  }

  BigInt rank_level(std::size_t l, std::size_t k, const Subspace& S) const {
    if (k == 0) return 0;
    const std::size_t Nl = N_ - 2 * l;
    const std::uint64_t q = F_.order();
    const std::size_t free = Nl - 1 - k;
    BigInt A = BigInt(mA_) * qpow_[free] * cnt_[l + 1][k - 1];
    const Mat& M = S.basis();
    if (M(0, 0) != 0) {
      Vec v = M.row_vec(0);
      Vec pv = tail(v);
      std::vector<Vec> trows;
      for (std::size_t i = 1; i < M.rows(); ++i) trows.push_back(tail(M.row_vec(i)));
      Subspace R = trows.empty() ? Subspace(f_, Nl - 2) : canonicalize(Mat::from_rows(f_, Nl - 2, trows));
      Vec r0 = R.reduce(pv);
      Vec rt(Nl - 2);
      for (std::size_t i = 0; i < rt.size(); ++i) rt[i] = F_.sub(r0[i], pv[i]);
      Elt a = F_.add(v[1], beta(l, rt, pv));
      std::uint64_t a_idx = 0;
      const Form& sub = levels_[l + 1];
      if (fam_ == Family::Symplectic) {
        a_idx = a;
      } else if (fam_ == Family::Hermitian) {
        Elt d = F_.sub(a, trace_solution(F_.neg(sub.eval(r0, r0))));
        auto it = std::lower_bound(ker_.begin(), ker_.end(), d);
        if (it == ker_.end() || *it != d) throw Error("internal: hermitian enumerator mismatch");
        a_idx = static_cast<std::uint64_t>(it - ker_.begin());
      }
      auto piv = R.pivots();
      BigInt digits = 0;
      for (std::size_t c = 0; c < Nl - 2; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) digits = digits * q + r0[c];
      return (rank_level(l + 1, k - 1, R) * qpow_[free] + digits) * mA_ + a_idx;
    }
    Vec e1(Nl, 0);
    e1[1] = 1;
    if (S.contains_vector(e1)) {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(tail(M.row_vec(i)));
      Subspace S2 = canonicalize(Mat::from_rows(f_, Nl - 2, rows));
      return A + rank_level(l + 1, k - 1, S2);
    }
    // Columns reordered as (tail..., x_1) so the RREF exposes the graph of lambda.
    Mat aug(f_, M.rows(), Nl - 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      for (std::size_t c = 2; c < Nl; ++c) aug(i, c - 2) = M(i, c);
      aug(i, Nl - 2) = M(i, 1);
    }
    aug.rref();
    Mat s1(f_, k, Nl - 2);
    BigInt lam = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < Nl - 2; ++c) s1(i, c) = aug(i, c);
      lam = lam * q + aug(i, Nl - 2);
    }
    Subspace S1 = Subspace::from_rref(std::move(s1));
    return A + cnt_[l + 1][k - 1] + rank_level(l + 1, k, S1) * qpow_[k] + lam;
  }

  FieldPtr f_;
  const Field& F_;
  Family fam_;
  std::size_t N_, P_, k_;
  Mat C_, Cinv_;
  std::shared_ptr<const PolarSpace> ps_;
  std::vector<Form> levels_;
  std::vector<BigInt> qpow_;
  std::vector<std::vector<BigInt>> cnt_;
  std::uint64_t mA_ = 1;
  Elt c_ = 1;
  std::vector<Elt> ker_;
  Elt t1_ = 0;
};

}  // namespace

std::shared_ptr<const Enumerator> PolarSpace::enumerator(std::size_t type) const {
  check_type(type);
  return std::make_shared<PolarEnumerator>(*this, type);
}

}  // namespace incgeo
