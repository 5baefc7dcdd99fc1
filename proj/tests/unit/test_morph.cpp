#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "incgeo/morph.hpp"
#include "incgeo/orbits.hpp"

using namespace incgeo;

namespace {

bool incident(const Subspace& a, const Subspace& b) { return a.contains(b) || b.contains(a); }

// phi(e) I phi(f) <=> e I f over all pairs of the given element families.
void check_incidence_equivalence(const GeometryMorphism& m, const std::vector<std::size_t>& types) {
  std::vector<Subspace> all;
  for (auto t : types)
    for (auto& e : m.source()->elements(t)) all.push_back(e);
  std::vector<Subspace> img;
  for (const auto& e : all) img.push_back(m.apply(e));
  std::size_t bad = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) bad += incident(all[i], all[j]) != incident(img[i], img[j]);
  CHECK(bad == 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(m.target()->is_element(img[i]));
    CHECK(m.preimage(img[i]) == all[i]);
  }
}

// phi(e^g) = phi(e)^theta(g) for generators and random words.
void check_intertwiner(const GeometryMorphism& m, const CollGroupPtr& g, std::size_t type) {
  std::mt19937_64 rng(11);
  std::vector<Collineation> xs = g->generators();
  for (int i = 0; i < 100; ++i) {
    Collineation w = Collineation::identity(g->field(), g->dim());
    for (int j = 0; j < 6; ++j) w = w * g->generators()[rng() % g->generators().size()];
    xs.push_back(w);
  }
  auto elems = m.source()->elements(type);
  std::size_t bad = 0;
  for (const auto& x : xs) {
    const Collineation y = m.intertwine(x);
    for (std::size_t i = 0; i < 5; ++i) {
      const auto& e = elems[rng() % elems.size()];
      bad += m.apply(x.act(e)) != y.act(m.apply(e));
    }
  }
  CHECK(bad == 0);
}

std::map<std::size_t, std::size_t> distribution(const std::vector<Subspace>& pts, const std::vector<Subspace>& blocks) {
  std::map<std::size_t, std::size_t> d;
  for (const auto& b : blocks) {
    std::size_t n = 0;
    for (const auto& p : pts) n += b.contains(p);
    ++d[n];
  }
  return d;
}

using Dist = std::map<std::size_t, std::size_t>;

}  // namespace

TEST_CASE("isomorphisms of polar spaces") {
  auto F5 = Field::of_order(5);
  auto a = PolarSpace::from_form(Form::create(FormKind::Quadratic, Mat::from_ints(F5, {{1, 0, 0}, {0, 0, 1}, {0, 0, 0}})));
  auto b = PolarSpace::from_form(Form::create(FormKind::Quadratic, Mat::from_ints(F5, {{0, 0, -1}, {0, 1, 0}, {0, 0, 0}})));
  auto iso = isomorphism_polar_spaces(a, b);
  check_incidence_equivalence(iso, {1});
  check_intertwiner(iso, polar_group(a, PolarFlavor::Collineation), 1);
  auto ga = polar_group(a, PolarFlavor::Isometry);
  for (const auto& x : ga->generators()) CHECK(preserves_form(b->form(), iso.intertwine(x), PolarFlavor::Isometry));

  auto self = isomorphism_polar_spaces(a, a);
  for (const auto& p : a->elements(1)) CHECK(self.apply(p) == p);

  auto F7 = Field::of_order(7);
  auto klein = klein_quadric(F7);
  auto std7 = PolarSpace::standard(Family::Hyperbolic, 5, F7);
  auto k2s = isomorphism_polar_spaces(klein, std7);
  auto lines = klein->elements(2);
  for (std::size_t i = 0; i < lines.size(); i += 97) CHECK(std7->is_element(k2s.apply(lines[i])));
  check_intertwiner(k2s, polar_group(klein, PolarFlavor::Collineation), 3);

  auto q3 = PolarSpace::standard(Family::Hyperbolic, 3, 3);
  check_incidence_equivalence(isomorphism_polar_spaces(PolarSpace::from_form(Form::create(
                                  FormKind::Quadratic, Mat::from_ints(Field::of_order(3), {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}))), q3),
                              {1, 2});
  CHECK_THROWS_AS(isomorphism_polar_spaces(q3, PolarSpace::standard(Family::Elliptic, 3, 3)), Error);
}

TEST_CASE("embedding by subspace") {
  auto pg2 = ProjSpace::create(2, 5);
  auto pg4 = ProjSpace::create(4, 5);
  auto F5 = pg2->field();
  auto plane = canonicalize(Mat::from_ints(F5, {{1, 0, 2, 0, 1}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 3}}));
  auto em = embedding_by_subspace(pg2, pg4, plane);
  check_incidence_equivalence(em, {1, 2});
  for (const auto& l : pg2->elements(2)) CHECK(plane.contains(em.apply(l)));
  CHECK_THROWS_AS(embedding_by_subspace(pg2, pg4, pg4->elements(2)[0]), Error);
  CHECK_THROWS_AS(em.preimage(pg4->elements(1)[0].contains(plane) ? pg4->elements(1)[1] : pg4->elements(1)[0]),
                  Error);

  // a conic in a parabolic plane of Q-(5,11)
  auto e = PolarSpace::standard(Family::Elliptic, 5, 11);
  auto F = e->field();
  auto conic = PolarSpace::standard(Family::Parabolic, 2, F);
  std::mt19937_64 rng(3);
  Subspace target;
  for (;;) {
    Mat m(F, 3, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = static_cast<Elt>(rng() % 11);
    target = canonicalize(m);
    if (target.dim() == 3 && e->type_of_subspace(target).name == "parabolic") break;
  }
  auto ce = embedding_by_subspace(conic, e, target);
  auto pts = conic->elements(1);
  CHECK(pts.size() == 12);
  std::set<Subspace> imgs;
  for (const auto& p : pts) {
    auto x = ce.apply(p);
    CHECK(e->is_element(x));
    CHECK(target.contains(x));
    CHECK(ce.preimage(x) == p);
    imgs.insert(x);
  }
  CHECK(imgs.size() == 12);
  CHECK_THROWS_AS(embedding_by_subspace(PolarSpace::standard(Family::Hyperbolic, 1, F), e, target), Error);
}

TEST_CASE("embedding by subfield") {
  auto pg3 = ProjSpace::create(2, 3);
  for (auto [q, expect] : std::vector<std::pair<int, Dist>>{{27, {{0, 432}, {1, 312}, {4, 13}}}, {9, {{1, 78}, {4, 13}}}}) {
    auto big = ProjSpace::create(2, q);
    auto em = embedding_by_subfield(pg3, big);
    std::vector<Subspace> pts;
    for (const auto& p : pg3->elements(1)) pts.push_back(em.apply(p));
    CHECK(distribution(pts, big->elements(2)) == expect);
  }
  auto em9 = embedding_by_subfield(pg3, ProjSpace::create(2, 9));
  check_incidence_equivalence(em9, {1, 2});
  check_intertwiner(em9, collineation_group(pg3), 2);
  CHECK_THROWS_AS(embedding_by_subfield(pg3, ProjSpace::create(2, 4)), Error);

  auto qm = PolarSpace::standard(Family::Elliptic, 5, 2);
  auto F4 = Field::of_order(4);
  auto qp = PolarSpace::standard(Family::Hyperbolic, 5, F4);
  auto sub = embedding_by_subfield(qm, qp);
  CHECK(sub.str() == "<geometry morphism from <Elements of Q-(5, 2)> to <Elements of Q+(5, 4)>>");
  check_incidence_equivalence(sub, {1, 2});
  check_intertwiner(sub, polar_group(qm, PolarFlavor::Isometry), 1);
  auto gq = polar_group(qm, PolarFlavor::Isometry);
  for (const auto& x : gq->generators()) CHECK(preserves_form(qp->form(), sub.intertwine(x), PolarFlavor::Isometry));
  CHECK(embedding_by_subfield(PolarSpace::standard(Family::Hyperbolic, 5, 2), qp).kind() == "subfield");
  CHECK_THROWS_AS(embedding_by_subfield(PolarSpace::standard(Family::Symplectic, 5, 2), qp), Error);
  CHECK_THROWS_AS(embedding_by_subfield(qm, PolarSpace::standard(Family::Elliptic, 5, F4)), Error);
}

TEST_CASE("subfield pipeline through the Klein correspondence") {
  auto F4 = Field::of_order(4);
  auto qm = PolarSpace::standard(Family::Elliptic, 5, 2);
  auto sub = embedding_by_subfield(qm, klein_quadric(F4));
  auto kl = klein_correspondence(F4);
  std::set<Subspace> pts;
  std::size_t nlines = 0;
  for (const auto& p : qm->elements(1)) {
    auto l = kl.preimage(sub.apply(p));
    ++nlines;
    for (const auto& x : ProjSpace::create(3, F4)->elements(1))
      if (l.contains(x)) pts.insert(x);
  }
  CHECK(nlines == 27);
  std::vector<Subspace> pv(pts.begin(), pts.end());
  auto pg = ProjSpace::create(3, F4);
  CHECK(distribution(pv, pg->elements(2)) == Dist{{1, 90}, {3, 240}, {5, 27}});
  CHECK(distribution(pv, pg->elements(3)) == Dist{{9, 40}, {13, 45}});
}

TEST_CASE("embedding by field reduction") {
  auto h = PolarSpace::standard(Family::Hermitian, 2, 4);
  auto w = PolarSpace::standard(Family::Symplectic, 5, 2);
  auto fr = embedding_by_field_reduction(h, w);
  std::vector<Subspace> imgs;
  for (const auto& p : h->elements(1)) {
    auto l = fr.apply(p);
    CHECK(l.dim() == 2);
    CHECK(w->is_element(l));
    imgs.push_back(l);
  }
  CHECK(imgs.size() == 9);
  for (std::size_t i = 0; i < imgs.size(); ++i)
    for (std::size_t j = i + 1; j < imgs.size(); ++j) CHECK(meet(imgs[i], imgs[j]).is_empty());
  for (std::size_t i = 0; i < imgs.size(); ++i) CHECK(fr.preimage(imgs[i]) == h->elements(1)[i]);
  CHECK_THROWS_AS(embedding_by_field_reduction(h, w, 0), Error);
  CHECK_THROWS_AS(embedding_by_field_reduction(h, PolarSpace::standard(Family::Hyperbolic, 5, 2)), Error);

  // line spread of PG(5,2) from the points of PG(2,4)
  auto pg = ProjSpace::create(2, 4);
  auto pr = embedding_by_field_reduction(pg, ProjSpace::create(5, 2));
  std::vector<Subspace> spread;
  for (const auto& p : pg->elements(1)) spread.push_back(pr.apply(p));
  std::size_t meets = 0;
  for (std::size_t i = 0; i < spread.size(); ++i)
    for (std::size_t j = i + 1; j < spread.size(); ++j) meets += !meet(spread[i], spread[j]).is_empty();
  CHECK(meets == 0);
  CHECK(spread.size() * 3 == 63);
  check_incidence_equivalence(pr, {1, 2});
}

TEST_CASE("Klein correspondence") {
  auto F7 = Field::of_order(7);
  auto kl = klein_correspondence(F7);
  auto kq = std::dynamic_pointer_cast<const PolarSpace>(kl.target());
  REQUIRE(kq);
  CHECK(kq->display() == "Q+(5, 7): x_1*x_6+x_2*x_5+x_3*x_4=0");
  auto e12 = canonicalize(Mat::from_ints(F7, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(kl.apply(e12) == Subspace::from_vector(F7, {1, 0, 0, 0, 0, 0}));
  CHECK_THROWS_AS(kl.apply(Subspace::from_vector(F7, {1, 0, 0, 0})), Error);

  // bijection at q = 7
  auto lines = kl.source()->elements(2);
  std::set<std::string> keys;
  for (const auto& l : lines) {
    auto x = kl.apply(l);
    CHECK(kq->is_element(x));
    keys.insert(x.key());
  }
  CHECK(lines.size() == 2850);
  CHECK(keys.size() == 2850);
  CHECK(kq->count(1) == 2850);

  // lines meet <=> the polar form vanishes on their images
  for (int q : {2, 3}) {
    auto k = klein_correspondence(Field::of_order(q));
    auto ls = k.source()->elements(2);
    auto form = std::dynamic_pointer_cast<const PolarSpace>(k.target())->form();
    std::vector<Vec> img;
    for (const auto& l : ls) img.push_back(k.apply(l).basis().row_vec(0));
    std::size_t bad = 0;
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = 0; j < ls.size(); ++j)
        bad += meet(ls[i], ls[j]).is_empty() != (form.polar(img[i], img[j]) != 0);
    CHECK(bad == 0);
    for (std::size_t i = 0; i < ls.size(); ++i) CHECK(k.preimage(k.apply(ls[i])) == ls[i]);
  }

  auto pg = ProjSpace::create(3, 3);
  auto k3 = klein_correspondence(pg, PolarSpace::standard(Family::Hyperbolic, 5, pg->field()));
  check_intertwiner(k3, collineation_group(pg), 2);
  auto gpg = collineation_group(pg);
  for (const auto& x : gpg->generators())
    CHECK(preserves_form(std::dynamic_pointer_cast<const PolarSpace>(k3.target())->form(), k3.intertwine(x),
                         PolarFlavor::Collineation));
}

TEST_CASE("natural duality") {
  auto q4 = PolarSpace::standard(Family::Parabolic, 4, 2);
  auto w3 = PolarSpace::standard(Family::Symplectic, 3, 2);
  auto d = natural_duality(q4, w3);
  auto pts = q4->elements(1), lines = q4->elements(2);
  REQUIRE(pts.size() == 15);
  REQUIRE(lines.size() == 15);
  std::size_t bad = 0;
  for (const auto& p : pts) {
    CHECK(d.apply(p).dim() == 2);
    CHECK(d.preimage(d.apply(p)) == p);
    for (const auto& l : lines) bad += l.contains(p) != incident(d.apply(p), d.apply(l));
  }
  CHECK(bad == 0);
  for (const auto& l : lines) CHECK(d.apply(l).dim() == 1);

  auto F3 = Field::of_order(3);
  auto w = PolarSpace::from_form(Form::create(
      FormKind::Alternating, Mat::from_ints(F3, {{0, 0, 1, 1}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {-1, -1, 0, 0}})));
  auto d3 = natural_duality(PolarSpace::standard(Family::Parabolic, 4, F3), w);
  auto l = d3.preimage(w->elements(1)[4]);
  CHECK(l.dim() == 2);
  CHECK(d3.source()->is_element(l));
  check_incidence_equivalence(d3, {1, 2});
  CHECK_THROWS_AS(natural_duality(q4, PolarSpace::standard(Family::Symplectic, 3, 3)), Error);
}

TEST_CASE("Veronese, Segre and Grassmann maps") {
  auto pg = ProjSpace::create(2, 3);
  auto F3 = pg->field();
  auto v = veronese_map(pg);
  CHECK(v.apply(Subspace::from_vector(F3, {1, 0, 0})) == Subspace::from_vector(F3, {1, 0, 0, 0, 0, 0}));
  std::vector<Subspace> variety;
  for (const auto& p : pg->elements(1)) {
    variety.push_back(v.apply(p));
    CHECK(v.preimage(variety.back()) == p);
  }
  for (const auto& l : pg->elements(2)) {
    Subspace s(F3, 6);
    for (const auto& p : pg->elements(1))
      if (l.contains(p)) s = span(s, v.apply(p));
    CHECK(s.dim() == 3);
    std::size_t n = 0;
    for (const auto& x : variety) n += s.contains(x);
    CHECK(n == 4);
  }
  CHECK_THROWS_AS(v.apply(pg->elements(2)[0]), Error);

  auto p1 = ProjSpace::create(1, 2);
  auto sg = segre_map(p1, p1);
  std::set<Subspace> img;
  for (const auto& a : p1->elements(1))
    for (const auto& b : p1->elements(1)) {
      auto z = sg.apply(a, b);
      const auto r = z.basis().row(0);
      const Field& F2 = *p1->field();
      CHECK(F2.sub(F2.mul(r[0], r[3]), F2.mul(r[1], r[2])) == 0);
      CHECK(sg.preimage(z) == std::make_pair(a, b));
      img.insert(z);
    }
  CHECK(img.size() == 9);

  // n = 3, k = 1 agrees with Klein up to the sign of the fifth coordinate
  auto pg3 = ProjSpace::create(3, 3);
  auto gr = grassmann_map(pg3, 1);
  auto kl = klein_correspondence(pg3->field());
  for (const auto& l : pg3->elements(2)) {
    Vec a = gr.apply(l).basis().row_vec(0), b = plucker(l);
    b[4] = F3->neg(b[4]);
    CHECK(Subspace::from_vector(F3, a) == Subspace::from_vector(F3, b));
    CHECK(gr.preimage(gr.apply(l)) == l);
  }
  auto g42 = grassmann_map(ProjSpace::create(4, 2), 2);
  std::set<Subspace> gimg;
  for (const auto& p : g42.source()->elements(3)) {
    gimg.insert(g42.apply(p));
    CHECK(g42.preimage(g42.apply(p)) == p);
  }
  CHECK(gimg.size() == 155);
  CHECK_THROWS_AS(grassmann_map(pg3, 3), Error);
}
