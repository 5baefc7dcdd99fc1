#include "doctest.h"

#include <random>

#include "incgeo/collin.hpp"
#include "incgeo/orbits.hpp"

using namespace incgeo;

namespace {

Mat random_invertible(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elt> d(0, f->order() - 1);
  for (;;) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (m.invertible()) return m;
  }
}

Collineation random_collineation(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  return {random_invertible(f, n, rng), static_cast<std::uint32_t>(rng() % f->degree())};
}

Subspace random_subspace(const FieldPtr& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elt> d(0, f->order() - 1);
  for (;;) {
    Mat m(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    auto s = Subspace::from_matrix(m);
    if (s.dim() == k) return s;
  }
}

// Every projective class (A, e) with A normalized, filtered by pred.
template <class Pred>
std::uint64_t count_collineations(const FieldPtr& f, std::size_t n, Pred pred) {
  const std::uint64_t q = f->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= q;
  std::uint64_t hits = 0;
  Mat m(f, n, n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    Elt first = 0;
    for (std::size_t i = 0; i < n * n; ++i) {
      Elt x = static_cast<Elt>(c % q);
      c /= q;
      m(i / n, i % n) = x;
      if (first == 0) first = x;
    }
    if (first != 1 || !m.invertible()) continue;
    for (std::uint32_t e = 0; e < f->degree(); ++e)
      if (pred(Collineation(m, e))) ++hits;
  }
  return hits;
}

CollGroupPtr forget_order(const CollGroupPtr& g) {
  return std::make_shared<CollGroup>(g->field(), g->dim(), g->generators(), g->name(), std::nullopt, g->geometry());
}

const PolarFlavor kFlavors[] = {PolarFlavor::SpecialIsometry, PolarFlavor::Isometry, PolarFlavor::Similarity,
                                PolarFlavor::Collineation};

}  // namespace

TEST_CASE("projective group orders") {
  CHECK(order_pgl(5, 27) == BigInt("22496309500661613496614846025474560"));
  CHECK(order_pgammal(5, 27) == BigInt("67488928501984840489844538076423680"));
  CHECK(order_psl(3, 49) == BigInt("11072935641600"));
  auto pg = ProjSpace::create(4, 27);
  CHECK(projectivity_group(pg)->name() == "PGL(5,27)");
  CHECK(*collineation_group(pg)->known_order() == order_pgammal(5, 27));
  CHECK(special_group(ProjSpace::create(2, 49))->name() == "PSL(3,49)");
}

TEST_CASE("collineation basics") {
  auto F = Field::of_order(343);
  auto fr = Collineation(Mat::identity(F, 3), 2);
  CHECK(fr.aut().str() == "F^49");
  CHECK(fr.str() == "< a collineation: <matrix 3x3 over GF(343)>, F^49>");
  CHECK((fr * Collineation(Mat::identity(F, 3), 2)).frobenius() == 1);
  CHECK(Collineation(Mat::identity(F, 3).scaled(F->primitive())).is_identity());
  CHECK_THROWS_AS(Collineation(Mat(F, 3, 3)), Error);

  std::mt19937_64 rng(7);
  auto F4 = Field::of_order(4);
  for (int t = 0; t < 200; ++t) {
    auto g = random_collineation(F4, 4, rng);
    CHECK(g.inverse().inverse() == g);
    CHECK((g * g.inverse()).is_identity());
    CHECK((g * Collineation::identity(F4, 4)) == g);
  }
  // action axioms on random triples in PG(3,4)
  for (int t = 0; t < 500; ++t) {
    auto g = random_collineation(F4, 4, rng), h = random_collineation(F4, 4, rng);
    auto s = random_subspace(F4, 4, 1 + rng() % 3, rng);
    CHECK(h.act(g.act(s)) == (g * h).act(s));
    CHECK(g.act(s).dim() == s.dim());
  }
}

TEST_CASE("action axioms exhaustive on PG(2,2)") {
  auto F = Field::of_order(2);
  std::vector<Collineation> all;
  count_collineations(F, 3, [&](const Collineation& g) {
    all.push_back(g);
    return true;
  });
  REQUIRE(all.size() == 168);
  auto pg = ProjSpace::create(2, 2);
  auto pts = pg->elements(1), lines = pg->elements(2);
  std::size_t bad = 0;
  for (const auto& g : all)
    for (const auto& h : all) {
      const auto gh = g * h;
      for (const auto& p : pts) bad += h.act(g.act(p)) != gh.act(p);
      bad += h.act(g.act(lines[0])) != gh.act(lines[0]);
    }
  CHECK(bad == 0);
  for (const auto& p : pts) CHECK(Collineation::identity(F, 3).act(p) == p);
  // formula order equals the count
  CHECK(order_pgl(3, 2) == all.size());
}

TEST_CASE("group orders versus Schreier-Sims") {
  for (auto [d, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {1, 5}, {1, 9}, {2, 3}, {3, 2}}) {
    auto pg = ProjSpace::create(d, q);
    for (auto g : {projectivity_group(pg), collineation_group(pg), special_group(pg)}) {
      INFO(g->name());
      CHECK(group_order(*forget_order(g)) == *g->known_order());
    }
  }
  CHECK(group_order(*forget_order(projectivity_group(ProjSpace::create(2, 4)))) == 60480);
}

TEST_CASE("polar groups: form conditions, closure and orders") {
  struct Case {
    Family fam;
    int d, q;
  };
  const std::vector<Case> cases = {
      {Family::Symplectic, 3, 2}, {Family::Symplectic, 3, 3},  {Family::Symplectic, 5, 2},
      {Family::Symplectic, 1, 4}, {Family::Hyperbolic, 1, 5},  {Family::Hyperbolic, 3, 2},
      {Family::Hyperbolic, 3, 3}, {Family::Hyperbolic, 3, 4},  {Family::Hyperbolic, 5, 2},
      {Family::Elliptic, 3, 2},    {Family::Elliptic, 3, 3},
      {Family::Elliptic, 3, 4},   {Family::Elliptic, 5, 2},    {Family::Parabolic, 2, 3},
      {Family::Parabolic, 2, 4},  {Family::Parabolic, 2, 9},   {Family::Parabolic, 4, 2},
      {Family::Parabolic, 4, 3},  {Family::Hermitian, 2, 4},   {Family::Hermitian, 3, 4},
      {Family::Hermitian, 2, 9},  {Family::Hermitian, 1, 4},   {Family::Hermitian, 1, 9},
  };
  for (const auto& c : cases) {
    auto ps = PolarSpace::standard(c.fam, c.d, c.q);
    auto pts = ps->elements(1);
    std::set<std::string> keys;
    for (const auto& p : pts) keys.insert(p.key());
    for (auto fl : kFlavors) {
      auto g = polar_group(ps, fl);
      INFO(g->name());
      for (const auto& x : g->generators()) {
        CHECK(preserves_form(ps->form(), x, fl));
        if (c.q <= 3)
          for (const auto& p : pts) CHECK(keys.count(x.act(p).key()) == 1);
      }
      CHECK(group_order(*forget_order(g)) == *g->known_order());
    }
  }
}

TEST_CASE("polar group orders versus exhaustive search") {
  struct Case {
    Family fam;
    int d, q;
  };
  for (const Case& c : std::vector<Case>{{Family::Symplectic, 3, 2},
                                         {Family::Hyperbolic, 3, 2},
                                         {Family::Elliptic, 3, 2},
                                         {Family::Parabolic, 2, 3},
                                         {Family::Parabolic, 2, 4},
                                         {Family::Hermitian, 2, 4},
                                         {Family::Hyperbolic, 1, 5},
                                         {Family::Hermitian, 1, 9}}) {
    auto ps = PolarSpace::standard(c.fam, c.d, c.q);
    for (auto fl : kFlavors) {
      INFO(polar_group_name(c.fam, c.d + 1, *ps->field(), fl));
      auto n = count_collineations(ps->field(), c.d + 1,
                                   [&](const Collineation& x) { return preserves_form(ps->form(), x, fl); });
      CHECK(polar_group_order(c.fam, c.d + 1, c.q, fl) == n);
    }
  }
}

TEST_CASE("polar groups of user forms") {
  auto F9 = Field::of_order(9);
  auto conic = PolarSpace::from_form(Form::create(FormKind::Quadratic, Mat::identity(F9, 3)));
  auto sim = polar_group(conic, PolarFlavor::Similarity);
  CHECK(*sim->known_order() == 720);
  CHECK(group_order(*forget_order(sim)) == 720);
  CHECK(sim->name() == "PGO(3,9)");

  auto h = PolarSpace::standard(Family::Hermitian, 2, 4);
  CHECK(polar_group(h, PolarFlavor::Collineation)->name() == "PGammaU(3,2^2)");
  CHECK(polar_group(h, PolarFlavor::SpecialIsometry)->name() == "PSU(3,2^2)");
  CHECK(*polar_group(h, PolarFlavor::Collineation)->known_order() == 432);
  CHECK(polar_group(PolarSpace::standard(Family::Parabolic, 6, 5), PolarFlavor::Collineation)->name() ==
        "PGammaO(7,5)");
  CHECK(polar_group(PolarSpace::standard(Family::Hermitian, 3, 81), PolarFlavor::Collineation)->name() ==
        "PGammaU(4,9^2)");

  // W(3,3) with a permuted gram matrix
  auto F3 = Field::of_order(3);
  auto w = PolarSpace::from_form(Form::create(
      FormKind::Alternating, Mat::from_ints(F3, {{0, 0, 1, 1}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {-1, -1, 0, 0}})));
  auto iso = polar_group(w, PolarFlavor::Isometry);
  for (const auto& x : iso->generators()) {
    // f(ug, vg) = f(u, v) on basis pairs up to the projective scalar
    CHECK(preserves_form(w->form(), x, PolarFlavor::Isometry));
  }
  CHECK(group_order(*forget_order(iso)) == 25920);

  // Elliptic quadric over GF(4) given by a non-split form
  auto F4 = Field::of_order(4);
  Mat g(F4, 4, 4);
  g(0, 0) = 1, g(0, 1) = 1, g(1, 1) = F4->primitive(), g(2, 3) = 1, g(2, 2) = 1;
  auto el = PolarSpace::from_form(Form::create(FormKind::Quadratic, g));
  REQUIRE(el->family() == Family::Elliptic);
  for (auto fl : kFlavors) {
    auto grp = polar_group(el, fl);
    INFO(grp->name());
    CHECK(group_order(*forget_order(grp)) == *grp->known_order());
  }
}
