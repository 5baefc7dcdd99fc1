#pragma once

// Dense matrices over GF(q) and canonical (reduced row echelon) subspaces.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "incgeo/gfq.hpp"

namespace incgeo {

using Vec = std::vector<Elt>;

class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, std::size_t rows, std::size_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  Mat(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elt> data);
  static Mat identity(FieldPtr f, std::size_t n);
  // Rows given as integers reduced into the prime field.
  static Mat from_ints(FieldPtr f, const std::vector<std::vector<std::int64_t>>& rows);
  static Mat from_rows(FieldPtr f, std::size_t cols, const std::vector<Vec>& rows);

  const FieldPtr& field() const { return f_; }
  const Field& F() const { return *f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elt operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::span<Elt> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const Elt> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }
  const std::vector<Elt>& data() const { return a_; }

  Mat operator*(const Mat& b) const;
  Mat transpose() const;
  // Entrywise x -> x^(p^e).
  Mat frobenius(std::uint32_t e) const;
  Mat scaled(Elt s) const;
  Mat stacked(const Mat& b) const;
  Mat select_rows(std::size_t from, std::size_t count) const;

  // In-place reduced row echelon form; returns pivot columns.  Zero rows are dropped.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  Elt det() const;
  bool invertible() const;
  Mat inverse() const;

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const;

  std::string str() const;

 private:
  FieldPtr f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elt> a_;
};

Vec vec_mat(const Field& F, std::span<const Elt> v, const Mat& m);
Elt dot(const Field& F, std::span<const Elt> a, std::span<const Elt> b);

// A projective subspace, stored as the RREF basis of its vector subspace.
class Subspace {
 public:
  Subspace() = default;
  // Empty subspace of V(n, q).
  Subspace(FieldPtr f, std::size_t n) : basis_(std::move(f), 0, n) {}
  // Canonical form of the row space of m.
  static Subspace from_matrix(Mat m);
  // Trusted: m already in RREF without zero rows.
  static Subspace from_rref(Mat m) {
    Subspace s;
    s.basis_ = std::move(m);
    return s;
  }
  static Subspace from_vector(const FieldPtr& f, const Vec& v);
  static Subspace whole(const FieldPtr& f, std::size_t n) { return from_rref(Mat::identity(f, n)); }

  const FieldPtr& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  // Vector dimension (projective dimension + 1).
  std::size_t dim() const { return basis_.rows(); }
  bool is_empty() const { return basis_.rows() == 0; }
  const Mat& basis() const { return basis_; }
  std::vector<std::size_t> pivots() const;

  bool contains_vector(std::span<const Elt> v) const;
  bool contains(const Subspace& o) const;
  // Reduce v modulo the subspace (zero on pivot columns).
  Vec reduce(std::span<const Elt> v) const;

  // Byte key used for hashing; equal iff subspaces are equal.
  std::string key() const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const;

 private:
  Mat basis_;
};

Subspace canonicalize(const Mat& m);
Subspace span(const Subspace& a, const Subspace& b);
Subspace meet(const Subspace& a, const Subspace& b);
// {x : x m = 0}
Subspace left_kernel(const Mat& m);
// {x : x . b = 0 for b in s} under the standard dot product.
Subspace annihilator(const Subspace& s);
// Basis vectors (rows) extending `inner` to a basis of `outer`.
Mat complement_basis(const Subspace& inner, const Subspace& outer);

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return std::hash<std::string>{}(s.key()); }
};

}  // namespace incgeo
