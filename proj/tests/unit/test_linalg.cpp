#include "doctest.h"

#include <random>

#include "incgeo/linalg.hpp"

using namespace incgeo;

namespace {
Mat random_mat(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Mat m(f, r, c);
  std::uniform_int_distribution<Elt> d(0, f->order() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}
}  // namespace

TEST_CASE("canonicalize") {
  auto f = Field::get(5, 1);
  auto s = canonicalize(Mat::from_ints(f, {{0, 1, 0}, {2, 0, 0}}));
  CHECK(s.basis() == Mat::from_ints(f, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(canonicalize(Mat::identity(f, 3)).basis() == Mat::identity(f, 3));
  CHECK(canonicalize(Mat(f, 3, 3)).is_empty());
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Mat m = random_mat(f, 2, 5, rng);
    Mat sw(f, 2, 5);
    for (std::size_t j = 0; j < 5; ++j) {
      sw(0, j) = f->add(m(1, j), f->mul(3, m(0, j)));
      sw(1, j) = m(0, j);
    }
    auto a = canonicalize(m);
    CHECK(a == canonicalize(sw));
    CHECK(canonicalize(a.basis()) == a);
    for (std::size_t i = 0; i < 2; ++i) CHECK(a.contains_vector(m.row(i)));
  }
}

TEST_CASE("kernel by exhaustive scan") {
  auto f = Field::get(3, 1);
  Mat m = Mat::from_ints(f, {{1, 0, 2, 1}, {0, 1, 1, 1}, {1, 1, 0, 2}});
  CHECK(m.rank() == 2);
  auto k = left_kernel(m);
  CHECK(k.dim() == 1);
  // Brute force over all 3^3 row combinations.
  int zeros = 0;
  for (Elt a = 0; a < 3; ++a)
    for (Elt b = 0; b < 3; ++b)
      for (Elt c = 0; c < 3; ++c) {
        Vec x{a, b, c};
        Vec y = vec_mat(*f, x, m);
        bool z = std::all_of(y.begin(), y.end(), [](Elt e) { return e == 0; });
        if (z) ++zeros;
        CHECK(z == k.contains_vector(x));
      }
  CHECK(zeros == 3);
  CHECK(left_kernel(Mat::identity(f, 3)).is_empty());
  CHECK(left_kernel(Mat(f, 3, 3)).dim() == 3);
}

TEST_CASE("modular dimension law") {
  std::mt19937 rng(11);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    auto f = Field::of_order(q);
    for (int t = 0; t < 40; ++t) {
      std::size_t n = 2 + rng() % 6;
      auto a = canonicalize(random_mat(f, 1 + rng() % n, n, rng));
      auto b = canonicalize(random_mat(f, 1 + rng() % n, n, rng));
      auto s = span(a, b), m = meet(a, b);
      CHECK(a.dim() + b.dim() == s.dim() + m.dim());
      CHECK(a.contains(m));
      CHECK(b.contains(m));
      CHECK(s.contains(a));
      CHECK(meet(a, a) == a);
      CHECK(meet(a, b) == meet(b, a));
    }
  }
}

TEST_CASE("inverse and determinant") {
  std::mt19937 rng(3);
  auto f = Field::get(2, 3);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_mat(f, 4, 4, rng);
    if (m.det() == 0) {
      CHECK_THROWS_AS(m.inverse(), Error);
      continue;
    }
    CHECK(m * m.inverse() == Mat::identity(f, 4));
  }
}
