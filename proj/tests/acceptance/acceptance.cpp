// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values are either quoted constants or recomputed here by brute force.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "incgeo/cosetgeo.hpp"
#include "incgeo/gpoly.hpp"
#include "incgeo/morph.hpp"
#include "incgeo/orbits.hpp"
#include "incgeo/varieties.hpp"

using namespace incgeo;

namespace {

// Collects failed expectations of one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }
};

int failed = 0;

void criterion(int n, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = c.failures.empty();
  failed += !ok;
  std::printf("%s %2d %s (%.2f s)\n", ok ? "PASS" : "FAIL", n, title.c_str(), secs);
  for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
  std::fflush(stdout);
}

using Dist = std::map<std::size_t, std::size_t>;

std::string dist_str(const Dist& d) {
  std::string s = "{";
  for (auto [k, v] : d) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(v);
  return s + "}";
}

Dist distribution(const std::vector<Subspace>& pts, const std::vector<Subspace>& blocks) {
  Dist d;
  for (const auto& b : blocks) {
    std::size_t n = 0;
    for (const auto& p : pts) n += b.contains(p);
    ++d[n];
  }
  return d;
}

// Every element of a permutation group by closure.
std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  std::set<Perm> seen{perm_identity(n)};
  std::vector<Perm> q{perm_identity(n)};
  for (std::size_t h = 0; h < q.size(); ++h)
    for (const auto& g : gens) {
      Perm x = perm_mul(q[h], g);
      if (seen.insert(x).second) q.push_back(x);
    }
  return seen;
}

std::set<Perm> group_elements(const CollGroup& g) {
  auto nm = nice_monomorphism(g);
  std::vector<Perm> ps;
  for (const auto& e : nm->generators) ps.push_back(e.perm);
  return closure(ps, nm->degree());
}

CollGroupPtr forget_order(const CollGroupPtr& g) {
  return std::make_shared<CollGroup>(g->field(), g->dim(), g->generators(), g->name(), std::nullopt, g->geometry());
}

// All projective classes (A, e), A with first nonzero entry 1, passing pred.
template <class Pred>
void each_collineation(const FieldPtr& f, std::size_t n, Pred pred) {
  const std::uint64_t q = f->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= q;
  Mat m(f, n, n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    Elt first = 0;
    for (std::size_t i = 0; i < n * n; ++i) {
      const Elt x = static_cast<Elt>(c % q);
      c /= q;
      m(i / n, i % n) = x;
      if (first == 0) first = x;
    }
    if (first != 1 || !m.invertible()) continue;
    for (std::uint32_t e = 0; e < f->degree(); ++e) pred(Collineation(m, e));
  }
}

// Totally isotropic subspaces of each type, by running through all of PG.
std::vector<std::set<std::string>> brute_elements(const PolarSpace& ps) {
  auto pg = ProjSpace::create(ps.proj_dim(), ps.field());
  std::vector<std::set<std::string>> out(ps.vector_dim() + 1);
  for (std::size_t k = 1; k <= ps.proj_dim(); ++k) {
    auto en = pg->enumerator(k);
    for (BigInt i = 1; i <= en->size(); ++i) {
      auto s = en->unrank(i);
      if (ps.form().is_totally_isotropic(s)) out[k].insert(s.key());
    }
  }
  return out;
}

// Normalized nonzero vectors of V(n,q).
std::vector<Vec> all_points(const Field& F, std::size_t n) {
  std::vector<Vec> pts;
  Vec v(n, 0);
  std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool lead) {
    if (i == n) {
      if (lead) pts.push_back(v);
      return;
    }
    if (!lead) {
      rec(i + 1, false);
      v[i] = 1;
      rec(i + 1, true);
      v[i] = 0;
      return;
    }
    for (Elt x = 0; x < F.order(); ++x) {
      v[i] = x;
      rec(i + 1, true);
    }
    v[i] = 0;
  };
  rec(0, false);
  return pts;
}

// Largest totally singular subspace by exhaustive search.
std::size_t brute_witt(const Form& f) {
  auto pts = all_points(f.F(), f.dim());
  std::vector<std::size_t> sing;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (f.is_singular_vector(pts[i])) sing.push_back(i);
  std::size_t best = 0;
  std::function<void(const std::vector<std::size_t>&, std::size_t)> dfs = [&](const std::vector<std::size_t>& chosen,
                                                                               std::size_t from) {
    best = std::max(best, chosen.size());
    for (std::size_t k = from; k < sing.size() && best < f.dim() / 2; ++k) {
      const Vec& p = pts[sing[k]];
      bool ok = true;
      for (auto c : chosen) ok = ok && f.eval(pts[c], p) == 0;
      if (!ok) continue;
      std::vector<Vec> rows;
      for (auto c : chosen) rows.push_back(pts[c]);
      rows.push_back(p);
      if (Mat::from_rows(f.field(), f.dim(), rows).rank() != rows.size()) continue;
      auto next = chosen;
      next.push_back(sing[k]);
      dfs(next, k + 1);
    }
  };
  dfs({}, 0);
  return best;
}

// Diameter of a connected graph by BFS from every vertex.
std::size_t bfs_diameter(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < adj.size(); ++s) {
    std::vector<int> d(adj.size(), -1);
    std::vector<std::uint32_t> q{s};
    d[s] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (auto w : adj[q[h]])
        if (d[w] < 0) {
          d[w] = d[q[h]] + 1;
          q.push_back(w);
        }
    if (q.size() != adj.size()) return SIZE_MAX;
    best = std::max<std::size_t>(best, d[q.back()]);
  }
  return best;
}

// Shortest cycle through each edge, with the edge removed.
std::size_t brute_girth(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::size_t best = 0;
  for (std::uint32_t u = 0; u < adj.size(); ++u)
    for (auto v : adj[u]) {
      if (v < u) continue;
      std::vector<int> d(adj.size(), -1);
      std::vector<std::uint32_t> q{u};
      d[u] = 0;
      for (std::size_t h = 0; h < q.size(); ++h)
        for (auto w : adj[q[h]]) {
          if ((q[h] == u && w == v) || d[w] >= 0) continue;
          d[w] = d[q[h]] + 1;
          q.push_back(w);
        }
      if (d[v] > 0 && (best == 0 || static_cast<std::size_t>(d[v] + 1) < best)) best = d[v] + 1;
    }
  return best;
}

const std::vector<std::vector<std::size_t>> kPlane4 = {
    {1, 2, 3, 4, 5},     {1, 6, 7, 8, 9},     {1, 10, 11, 12, 13}, {1, 14, 15, 16, 17}, {1, 18, 19, 20, 21},
    {2, 6, 10, 14, 18},  {2, 7, 11, 15, 19},  {2, 8, 12, 16, 20},  {2, 9, 13, 17, 21},  {3, 6, 11, 16, 21},
    {3, 7, 10, 17, 20},  {3, 8, 13, 14, 19},  {3, 9, 12, 15, 18},  {4, 6, 12, 17, 19},  {4, 7, 13, 16, 18},
    {4, 8, 10, 15, 21},  {4, 9, 11, 14, 20},  {5, 6, 13, 15, 20},  {5, 7, 12, 14, 21},  {5, 8, 11, 17, 18},
    {5, 9, 10, 16, 19}};

// Sym on the 1-based points of s inside Sym(n), by a transposition and a cycle.
std::vector<Perm> sym_on(std::size_t n, const std::vector<std::uint32_t>& s) {
  Perm t = perm_identity(n), c = perm_identity(n);
  std::swap(t[s[0] - 1], t[s[1] - 1]);
  for (std::size_t i = 0; i < s.size(); ++i) c[s[i] - 1] = s[(i + 1) % s.size()] - 1;
  return {t, c};
}

CosetGeometry sym8(const std::vector<std::size_t>& types) {
  const std::vector<std::vector<std::vector<std::uint32_t>>> parts = {
      {{2, 3, 4, 5, 6, 7, 8}},      {{1, 3, 4, 5, 6, 7, 8}}, {{1, 2, 4, 5, 6, 7, 8}},
      {{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 2, 3, 4, 5}, {6, 7, 8}}, {{1, 2, 3, 4, 5, 7, 8}},
      {{1, 2, 3, 4, 5, 6, 8}}};
  std::vector<std::vector<Perm>> subs;
  for (auto t : types) {
    std::vector<Perm> gens;
    for (const auto& p : parts[t - 1]) {
      auto g = sym_on(8, p);
      gens.insert(gens.end(), g.begin(), g.end());
    }
    subs.push_back(gens);
  }
  return CosetGeometry(8, sym_on(8, {1, 2, 3, 4, 5, 6, 7, 8}), subs);
}

// |orbit| * |stab| = |G|, the stabiliser fixes e and its order is recomputed from its generators.
void orbit_stabiliser(Check& c, const CollGroupPtr& g, const Subspace& e, const std::string& what) {
  const auto o = orbit(g->generators(), e);
  const auto st = stabiliser(g, e);
  c.equal(*st->known_order() * o.size(), group_order(*g), what + " orbit-stabiliser");
  for (const auto& x : st->generators()) c.expect(x.act(e) == e, what + " stabiliser generator moves the element");
  c.equal(group_order(*forget_order(st)), *st->known_order(), what + " stabiliser order from generators");
}

}  // namespace

int main() {
  criterion(1, "projective group orders", [](Check& c) {
    c.equal(order_pgl(5, 27), BigInt("22496309500661613496614846025474560"), "|PGL(5,27)|");
    c.equal(order_pgammal(5, 27), BigInt("67488928501984840489844538076423680"), "|PGammaL(5,27)|");
    c.equal(order_psl(3, 49), BigInt("11072935641600"), "|PSL(3,49)|");
    c.equal(*projectivity_group(ProjSpace::create(4, 27))->known_order(), order_pgl(5, 27), "group object PGL(5,27)");
    c.equal(*special_group(ProjSpace::create(2, 49))->known_order(), order_psl(3, 49), "group object PSL(3,49)");
    for (auto [d, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {1, 5}, {1, 9}, {2, 4}}) {
      auto pg = ProjSpace::create(d, q);
      for (const auto& g : {projectivity_group(pg), collineation_group(pg), special_group(pg)}) {
        c.equal(group_order(*forget_order(g)), *g->known_order(), g->name() + " Schreier-Sims");
        c.equal(BigInt(group_elements(*g).size()), *g->known_order(), g->name() + " closure");
      }
    }
  });

  criterion(2, "Q(6,3) line enumerator", [](Check& c) {
    auto ps = PolarSpace::standard(Family::Parabolic, 6, 3);
    auto en = ps->enumerator(2);
    c.equal(en->size(), BigInt(3640), "number of lines");
    c.equal(en->rank(en->unrank(3081)), BigInt(3081), "rank(unrank(3081))");
    std::set<std::string> seen;
    std::size_t bad = 0;
    for (BigInt i = 1; i <= en->size(); ++i) {
      auto s = en->unrank(i);
      bad += en->rank(s) != i || !ps->is_element(s) || s.dim() != 2;
      seen.insert(s.key());
    }
    c.equal(bad, 0u, "roundtrip failures");
    c.equal(seen.size(), 3640u, "distinct lines");
  });

  criterion(3, "closed-form counts", [](Check& c) {
    const BigInt want("508233536514931541724405776067904925314839705888016");
    c.equal(polar_count(Family::Parabolic, 17, 2401, 1), want, "points of Q(16,7^4)");
    c.equal(PolarSpace::standard(Family::Parabolic, 16, 2401)->count(1), want, "points of Q(16,7^4) object");
    c.equal(ProjSpace::create(3, 81)->count(1), BigInt(538084), "points of PG(3,81)");
    c.equal(PolarSpace::standard(Family::Hermitian, 3, 81)->count(2), BigInt(7300), "lines of H(3,81)");
  });

  criterion(4, "Q(6,5) line orbit and stabiliser", [](Check& c) {
    auto ps = PolarSpace::standard(Family::Parabolic, 6, 5);
    auto g = polar_group(ps, PolarFlavor::Collineation);
    auto line = ps->enumerator(2)->unrank(1);
    const auto o = orbit(g->generators(), line);
    c.equal(o.size(), 101556u, "orbit size");
    c.equal(ps->count(2), BigInt(101556), "line count");
    auto st = stabiliser(g, line);
    c.equal(*st->known_order(), BigInt(4500000000), "stabiliser order");
    c.equal(*st->known_order() * o.size(), *g->known_order(), "orbit * stabiliser");
    c.equal(group_order(*forget_order(g)), *g->known_order(), "group order from generators");
    for (const auto& x : st->generators()) c.expect(x.act(line) == line, "stabiliser generator moves the line");
    auto other = o.elements[o.size() / 2];
    c.equal(*stabiliser(g, other)->known_order(), BigInt(4500000000), "stabiliser of another line");
  });

  criterion(5, "Klein correspondence", [](Check& c) {
    auto F7 = Field::of_order(7);
    auto kl = klein_correspondence(F7);
    auto kq = std::dynamic_pointer_cast<const PolarSpace>(kl.target());
    c.equal(kq->display(), std::string("Q+(5, 7): x_1*x_6+x_2*x_5+x_3*x_4=0"), "quadric");
    auto lines = kl.source()->elements(2);
    std::set<std::string> keys;
    std::size_t bad = 0;
    for (const auto& l : lines) {
      auto x = kl.apply(l);
      bad += !kq->is_element(x) || x.dim() != 1 || kl.preimage(x) != l;
      keys.insert(x.key());
    }
    c.equal(lines.size(), 2850u, "lines of PG(3,7)");
    c.equal(keys.size(), 2850u, "distinct images");
    c.equal(kq->elements(1).size(), 2850u, "points of the quadric");
    c.equal(bad, 0u, "bad images");
    for (int q : {2, 3}) {
      auto k = klein_correspondence(Field::of_order(q));
      auto ls = k.source()->elements(2);
      auto form = std::dynamic_pointer_cast<const PolarSpace>(k.target())->form();
      std::vector<Vec> img;
      for (const auto& l : ls) img.push_back(k.apply(l).basis().row_vec(0));
      std::size_t wrong = 0;
      for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = 0; j < ls.size(); ++j)
          wrong += meet(ls[i], ls[j]).is_empty() != (form.polar(img[i], img[j]) != 0);
      c.equal(wrong, 0u, "meet vs polar form at q=" + std::to_string(q));
    }
  });

  criterion(6, "subfield embeddings of PG(2,3)", [](Check& c) {
    auto pg3 = ProjSpace::create(2, 3);
    for (auto [q, want] : std::vector<std::pair<int, Dist>>{{27, {{0, 432}, {1, 312}, {4, 13}}}, {9, {{1, 78}, {4, 13}}}}) {
      auto big = ProjSpace::create(2, q);
      auto em = embedding_by_subfield(pg3, big);
      std::vector<Subspace> pts;
      for (const auto& p : pg3->elements(1)) pts.push_back(em.apply(p));
      c.equal(dist_str(distribution(pts, big->elements(2))), dist_str(want), "PG(2," + std::to_string(q) + ")");
    }
  });

  criterion(7, "hermitian curve from Q-(5,2)", [](Check& c) {
    auto F4 = Field::of_order(4);
    auto qm = PolarSpace::standard(Family::Elliptic, 5, 2);
    auto sub = embedding_by_subfield(qm, klein_quadric(F4));
    auto kl = klein_correspondence(F4);
    auto pg = ProjSpace::create(3, F4);
    const auto all_pts = pg->elements(1);
    std::set<Subspace> pts;
    for (const auto& p : qm->elements(1)) {
      auto l = kl.preimage(sub.apply(p));
      for (const auto& x : all_pts)
        if (l.contains(x)) pts.insert(x);
    }
    std::vector<Subspace> pv(pts.begin(), pts.end());
    c.equal(pv.size(), 45u, "point union");
    c.equal(dist_str(distribution(pv, pg->elements(2))), dist_str({{1, 90}, {3, 240}, {5, 27}}), "lines");
    c.equal(dist_str(distribution(pv, pg->elements(3))), dist_str({{9, 40}, {13, 45}}), "planes");
  });

  criterion(8, "field reduction H(2,4) to W(5,2)", [](Check& c) {
    auto h = PolarSpace::standard(Family::Hermitian, 2, 4);
    auto w = PolarSpace::standard(Family::Symplectic, 5, 2);
    auto fr = embedding_by_field_reduction(h, w);
    std::vector<Subspace> imgs;
    for (const auto& p : h->elements(1)) imgs.push_back(fr.apply(p));
    c.equal(imgs.size(), 9u, "image lines");
    for (const auto& l : imgs) {
      c.equal(l.dim(), 2u, "image type");
      c.expect(w->form().is_totally_isotropic(l), "image line not totally isotropic");
    }
    std::size_t meets = 0;
    for (std::size_t i = 0; i < imgs.size(); ++i)
      for (std::size_t j = i + 1; j < imgs.size(); ++j) meets += !meet(imgs[i], imgs[j]).is_empty();
    c.equal(meets, 0u, "meeting pairs");
  });

  criterion(9, "split Cayley hexagon of order 3", [](Check& c) {
    auto h3 = split_cayley_hexagon(3);
    c.equal(h3.num_points(), 364u, "points");
    c.equal(h3.num_lines(), 364u, "lines");
    auto quad = split_cayley_quadric(Field::of_order(3));
    auto pg = ProjSpace::create(6, 3);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < h3.num_points(); ++i) {
      const auto& p = h3.point_elements()[i];
      const auto ql = quad->shadow({p}, 2);
      std::size_t hex = 0;
      for (const auto& l : ql) hex += is_hexagon_line(l);
      bad += ql.size() != 40 || hex != 4 || h3.lines_on(i).size() != 4;
      if (i % 91 == 0) c.equal(pg->shadow({p}, 2).size(), 364u, "ambient lines through a point");
    }
    c.equal(bad, 0u, "points without 4 hexagon lines among 40 quadric lines");
    const auto adj = h3.incidence_graph();
    c.equal(brute_girth(adj), 12u, "girth");
    c.equal(bfs_diameter(adj), 6u, "diameter");
  });

  criterion(10, "generalised polygons", [](Check& c) {
    auto p4 = GenPolygon::by_blocks(kPlane4);
    c.equal(p4.str(), std::string("<projective plane order 4>"), "21 blocks");
    auto gq = GenPolygon::from_geometry(PolarSpace::standard(Family::Hermitian, 3, 9));
    c.equal(gq.str(), std::string("<generalised quadrangle of order [ 9, 3 ]>"), "H(3,9)");
    auto bad = kPlane4;
    bad[9] = {3, 6, 7, 16, 21};  // shares 6 and 7 with {1,6,7,8,9}
    try {
      GenPolygon::by_blocks(bad);
      c.expect(false, "corrupted block set accepted");
    } catch (const Error& e) {
      const std::string msg = e.what();
      c.expect(msg.find("cycle of length 4") != std::string::npos, "rejection without a witness: " + msg);
      std::printf("       rejected: %s\n", msg.c_str());
    }
  });

  criterion(11, "Sym(8) coset geometry", [](Check& c) {
    auto full = sym8({1, 2, 3, 4, 5, 6, 7}).structure().firmness();
    c.expect(full.firm && full.thin && !full.thick, "rank 7: firm/thin/thick should be true/true/false");
    auto tr = sym8({1, 2, 3, 4, 5}).structure().firmness();
    c.expect(tr.firm && !tr.thin && !tr.thick, "truncation {1..5}: should be true/false/false");
    auto tr2 = sym8({4, 5}).structure().firmness();
    c.expect(tr2.thick, "truncation {4,5}: should be thick");
  });

  criterion(12, "polarity guard", [](Check& c) {
    auto qm = PolarSpace::standard(Family::Elliptic, 5, 7);
    c.expect(qm->has_polarity(), "Q-(5,7) has no polarity");
    auto p = ProjSpace::create(5, 7)->enumerator(1)->unrank(100);
    auto h = qm->polarity(p);
    c.equal(h.dim(), 5u, "image of a point is a hyperplane");
    c.expect(qm->polarity(h) == p, "polarity is not an involution");
    auto q44 = PolarSpace::standard(Family::Parabolic, 4, 4);
    c.expect(!q44->has_polarity(), "Q(4,4) reports a polarity");
    try {
      q44->polarity(q44->enumerator(1)->unrank(1));
      c.expect(false, "Q(4,4) polarity did not raise");
    } catch (const Error& e) {
      c.equal(std::string(e.what()), std::string("no polarity of the ambient projective space"), "error text");
    }
  });

  criterion(13, "varieties", [](Check& c) {
    auto pg = ProjSpace::create(5, 5);
    auto f1 = MultiPoly::parse(pg->field(), 6, "x_1^2+x_2^2+x_3^2+x_4^2+x_5^2+x_6^2");
    auto f2 = MultiPoly::parse(pg->field(), 6, "x_1*x_2+x_3*x_4+x_5*x_6");
    c.equal(Variety::projective(pg, {f1, f2}).size(), BigInt(156), "PG(5,5) variety");
    auto hv = hermitian_variety(3, 9);
    c.equal(hv.polynomials_str(), std::string("[ x_1^4+x_2^4+x_3^4+x_4^4 ]"), "hermitian polynomial");
    auto gq = GenPolygon::from_geometry(hv.to_polar_space());
    c.expect(gq.gonality() == 4 && gq.s() == 9 && gq.t() == 3, "H(3,9) is not a GQ of order (9,3)");
    auto p2 = ProjSpace::create(2, 3);
    auto [vv, vm] = veronese_variety(p2);
    std::vector<Subspace> vpts;
    for (const auto& v : vv.points()) vpts.push_back(Subspace::from_vector(p2->field(), v));
    c.equal(vpts.size(), 13u, "Veronese points");
    std::size_t bad = 0;
    for (const auto& l : p2->elements(2)) {
      Subspace s(p2->field(), 6);
      for (const auto& p : p2->elements(1))
        if (l.contains(p)) s = span(s, vm.apply(p));
      std::size_t n = 0;
      for (const auto& x : vpts) n += s.contains(x);
      bad += s.dim() != 3 || n != 4;
    }
    c.equal(bad, 0u, "line images not spanning a plane with 4 variety points");
  });

  criterion(14, "property suites", [](Check& c) {
    // action axioms over all of PGammaL(3,2)
    auto F2 = Field::of_order(2);
    std::vector<Collineation> all;
    each_collineation(F2, 3, [&](const Collineation& g) { all.push_back(g); });
    c.equal(all.size(), 168u, "collineations of PG(2,2)");
    auto pg22 = ProjSpace::create(2, 2);
    std::vector<Subspace> elems = pg22->elements(1);
    for (const auto& l : pg22->elements(2)) elems.push_back(l);
    std::size_t bad = 0;
    for (const auto& g : all) {
      for (const auto& e : elems) bad += Collineation::identity(F2, 3).act(e) != e || g.act(e).dim() != e.dim();
      for (const auto& h : all) {
        const auto gh = g * h;
        for (const auto& e : elems) bad += h.act(g.act(e)) != gh.act(e);
      }
    }
    c.equal(bad, 0u, "action axiom violations");

    // Witt index of random nondegenerate quadratic forms
    std::mt19937 rng(17);
    for (std::uint64_t q : {2, 3, 4}) {
      auto f = Field::of_order(q);
      std::uniform_int_distribution<Elt> d(0, f->order() - 1);
      for (std::size_t n = 2; n <= 6; ++n)
        for (int t = 0; t < 4; ++t) {
          Mat g(f, n, n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) g(i, j) = d(rng);
          auto fm = Form::create(FormKind::Quadratic, g);
          if (is_degenerate(fm)) continue;
          c.equal(witt_index(fm), brute_witt(fm), "Witt index n=" + std::to_string(n) + " q=" + std::to_string(q));
        }
    }

    // dimension law for span and meet
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      auto f = Field::of_order(q);
      std::uniform_int_distribution<Elt> d(0, f->order() - 1);
      auto rnd = [&](std::size_t r, std::size_t n) {
        Mat m(f, r, n);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        return canonicalize(m);
      };
      for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 6;
        auto a = rnd(1 + rng() % n, n), b = rnd(1 + rng() % n, n);
        auto s = span(a, b), m = meet(a, b);
        bad += a.dim() + b.dim() != s.dim() + m.dim() || !a.contains(m) || !b.contains(m) || !s.contains(b);
      }
    }
    c.equal(bad, 0u, "span/meet law violations");

    // enumerators against brute force
    for (auto [fam, label] : {std::pair{Family::Symplectic, "W(3,2)"}, std::pair{Family::Parabolic, "Q(4,2)"}}) {
      auto ps = PolarSpace::standard(fam, fam == Family::Symplectic ? 3 : 4, 2);
      auto brute = brute_elements(*ps);
      for (std::size_t k = 1; k < ps->vector_dim(); ++k) {
        std::set<std::string> got;
        if (k <= ps->rank()) {
          auto en = ps->enumerator(k);
          for (BigInt i = 1; i <= en->size(); ++i) got.insert(en->unrank(i).key());
        }
        c.expect(got == brute[k], std::string(label) + " type " + std::to_string(k) + " differs from brute force");
      }
    }

    // orbit-stabiliser identity
    orbit_stabiliser(c, polar_group(PolarSpace::standard(Family::Symplectic, 3, 3), PolarFlavor::Collineation),
                     PolarSpace::standard(Family::Symplectic, 3, 3)->elements(2)[7], "W(3,3) line");
    {
      auto ps = PolarSpace::standard(Family::Parabolic, 4, 3);
      orbit_stabiliser(c, polar_group(ps, PolarFlavor::Isometry), ps->elements(1)[3], "Q(4,3) point");
    }
    {
      auto ps = PolarSpace::standard(Family::Hermitian, 3, 4);
      orbit_stabiliser(c, polar_group(ps, PolarFlavor::Collineation), ps->elements(2)[2], "H(3,4) line");
    }
    {
      auto pg = ProjSpace::create(3, 3);
      orbit_stabiliser(c, collineation_group(pg), pg->elements(2)[11], "PG(3,3) line");
    }

    // setwise stabilisers in PGL(2,5) against the full element list
    auto pg = ProjSpace::create(1, 5);
    auto g = projectivity_group(pg);
    auto pts = pg->elements(1);
    auto nm = nice_monomorphism(*g);
    auto elements = group_elements(*g);
    c.equal(elements.size(), 120u, "|PGL(2,5)|");
    auto brute = [&](const std::vector<Subspace>& set) {
      std::set<std::uint32_t> s;
      for (const auto& p : set) s.insert(nm->domain->index_of(p));
      std::size_t n = 0;
      for (const auto& x : elements) {
        bool ok = true;
        for (auto i : s) ok = ok && s.count(x[i]);
        n += ok;
      }
      return BigInt(n);
    };
    for (std::uint32_t mask = 1; mask < (1u << pts.size()); ++mask) {
      std::vector<Subspace> set;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask >> i & 1) set.push_back(pts[i]);
      c.equal(*setwise_stabiliser(g, set)->known_order(), brute(set), "setwise stabiliser mask " + std::to_string(mask));
    }
  });

  std::printf("%s\n", failed ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS");
  return failed ? 1 : 0;
}
