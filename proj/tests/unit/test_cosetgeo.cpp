#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "incgeo/cosetgeo.hpp"

using namespace incgeo;

namespace {

// Symmetric group on the 1-based points of `s` inside Sym(n).
std::vector<Perm> sym_on(std::size_t n, std::vector<std::uint32_t> s) {
  std::vector<Perm> r;
  if (s.size() < 2) return r;
  Perm t = perm_identity(n), c = perm_identity(n);
  std::swap(t[s[0] - 1], t[s[1] - 1]);
  for (std::size_t i = 0; i < s.size(); ++i) c[s[i] - 1] = s[(i + 1) % s.size()] - 1;
  r.push_back(t);
  r.push_back(c);
  return r;
}

std::vector<Perm> young(std::size_t n, const std::vector<std::vector<std::uint32_t>>& parts) {
  std::vector<Perm> r;
  for (const auto& p : parts) {
    auto g = sym_on(n, p);
    r.insert(r.end(), g.begin(), g.end());
  }
  if (r.empty()) r.push_back(perm_identity(n));
  return r;
}

std::vector<std::vector<Perm>> sym8_parabolics() {
  return {young(8, {{2, 3, 4, 5, 6, 7, 8}}),       young(8, {{1, 3, 4, 5, 6, 7, 8}}),
          young(8, {{1, 2, 4, 5, 6, 7, 8}}),       young(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
          young(8, {{1, 2, 3, 4, 5}, {6, 7, 8}}),  young(8, {{1, 2, 3, 4, 5, 7, 8}}),
          young(8, {{1, 2, 3, 4, 5, 6, 8}})};
}

CosetGeometry sym8(const std::vector<std::size_t>& types) {
  auto all = sym8_parabolics();
  std::vector<std::vector<Perm>> sub;
  for (auto t : types) sub.push_back(all[t - 1]);
  return CosetGeometry(8, sym_on(8, {1, 2, 3, 4, 5, 6, 7, 8}), sub);
}

// Automorphisms of the Fano plane {i, i+1, i+3} mod 7, found by brute force.
struct Fano {
  std::vector<std::set<std::uint32_t>> lines;
  std::vector<Perm> group;
  Fano() {
    for (std::uint32_t i = 0; i < 7; ++i) lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
    Perm p(7);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (const auto& l : lines) {
        std::set<std::uint32_t> im;
        for (auto x : l) im.insert(p[x]);
        ok = ok && std::find(lines.begin(), lines.end(), im) != lines.end();
      }
      if (ok) group.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<Perm> stab_point() const {
    std::vector<Perm> r;
    for (const auto& g : group)
      if (g[0] == 0) r.push_back(g);
    return r;
  }
  std::vector<Perm> stab_line() const {
    std::vector<Perm> r;
    for (const auto& g : group) {
      std::set<std::uint32_t> im;
      for (auto x : lines[0]) im.insert(g[x]);
      if (im == lines[0]) r.push_back(g);
    }
    return r;
  }
};

}  // namespace

TEST_CASE("cycle notation parsing") {
  CHECK(parse_cycles("(1,2)(3,4,5)", 6) == Perm{1, 0, 3, 4, 2, 5});
  CHECK(parse_cycles("()", 3) == perm_identity(3));
  CHECK(perm_cycles(parse_cycles("( 6,10)", 10)) == "(6,10)");
  CHECK_THROWS_AS(parse_cycles("(1,9)", 4), Error);
  CHECK_THROWS_AS(parse_cycles("(1,1)", 4), Error);
  CHECK_THROWS_AS(parse_cycles("1,2", 4), Error);
}

TEST_CASE("Sym(8) parabolic geometry: firm, thin, thick") {
  auto cg = sym8({1, 2, 3, 4, 5, 6, 7});
  CHECK(cg.rank() == 7);
  CHECK(cg.group_order() == 40320);
  const std::vector<std::size_t> sizes{8, 8, 8, 70, 56, 8, 8};
  for (std::size_t t = 1; t <= 7; ++t) {
    CHECK(cg.size(t) == sizes[t - 1]);
    CHECK(BigInt(cg.size(t)) * cg.subgroup_order(t) == cg.group_order());
  }
  auto f = cg.structure().firmness();
  CHECK(f.firm);
  CHECK(f.thin);
  CHECK_FALSE(f.thick);

  auto tr = sym8({1, 2, 3, 4, 5}).structure().firmness();
  CHECK(tr.firm);
  CHECK_FALSE(tr.thin);
  CHECK_FALSE(tr.thick);

  auto tr2 = sym8({4, 5}).structure().firmness();
  CHECK(tr2.firm);
  CHECK_FALSE(tr2.thin);
  CHECK(tr2.thick);

  // some point/4-set pair is not incident
  bool some_false = false;
  for (std::size_t a = 0; a < cg.size(1) && !some_false; ++a)
    for (std::size_t b = 0; b < cg.size(4); ++b) some_false = some_false || !cg.is_incident({1, a}, {4, b});
  CHECK(some_false);
  CHECK(cg.is_incident({4, 3}, {4, 3}));
  CHECK_FALSE(cg.is_incident({4, 3}, {4, 4}));
}

TEST_CASE("coset incidence equals nonempty intersection") {
  Fano fano;
  REQUIRE(fano.group.size() == 168);
  const auto sp = fano.stab_point(), sl = fano.stab_line();
  CosetGeometry cg(7, fano.group, {sp, sl});
  REQUIRE(cg.size(1) == 7);
  REQUIRE(cg.size(2) == 7);
  // explicit cosets as element sets
  auto coset = [&](const Perm& g, const std::vector<Perm>& h) {
    std::set<Perm> s;
    for (const auto& x : h) s.insert(perm_mul(g, x));
    return s;
  };
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) {
      const auto ca = coset(cg.representative(1, a), sp), cb = coset(cg.representative(2, b), sl);
      bool meet = false;
      for (const auto& x : ca) meet = meet || cb.count(x);
      CHECK(cg.is_incident({1, a}, {2, b}) == meet);
    }
  // each point on 3 lines
  for (std::size_t a = 0; a < 7; ++a) CHECK(cg.structure().neighbours({1, a}, 2).count() == 3);
  // representatives land in their own coset
  for (std::size_t a = 0; a < 7; ++a) CHECK(cg.index_of(1, cg.representative(1, a)) == a);
}

TEST_CASE("left action preserves incidence") {
  auto cg = sym8({1, 4, 5});
  for (const auto& x : cg.generators())
    for (std::size_t a = 0; a < cg.size(1); ++a)
      for (std::size_t b = 0; b < cg.size(3); ++b) {
        const ElemRef ea{1, a}, eb{3, b};
        CHECK(cg.is_incident(cg.act(x, ea), cg.act(x, eb)) == cg.is_incident(ea, eb));
      }
  // x.(gH) = (xg)H
  const Perm x = cg.generators()[1];
  for (std::size_t a = 0; a < cg.size(2); ++a)
    CHECK(cg.act(x, {2, a}).index == cg.index_of(2, perm_mul(x, cg.representative(2, a))));
}

TEST_CASE("transposition tree geometry: shadows and shared representatives") {
  const std::vector<std::string> inv{"(1,2)", "(1,3)", "(3,4)", "(4,5)", "(4,6)", "(6,9)", "(6,10)", "(7,10)", "(8,10)"};
  std::vector<Perm> gens;
  for (const auto& s : inv) gens.push_back(parse_cycles(s, 10));
  std::vector<std::vector<Perm>> par;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Perm> h;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) h.push_back(gens[j]);
    par.push_back(h);
  }
  CosetGeometry cg(10, gens, par);
  CHECK(cg.rank() == 9);
  CHECK(cg.group_order() == 3628800);
  CHECK(cg.str() == "CosetGeometry( Group( [ (1,2), (1,3), (3,4), (4,5), (4,6), (6,9), (6,10), (7,10), (8,10) ] ) )");
  // dropping (4,5) splits the tree into sizes 9 and 1
  CHECK(cg.size(4) == 10);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t a = rng() % cg.size(2);
    const Bits sh = cg.structure().neighbours({2, a}, 3);
    REQUIRE(sh.any());
    std::vector<std::size_t> v;
    for (auto j = sh.find_first(); j != Bits::npos; j = sh.find_next(j)) v.push_back(j);
    const std::size_t b = v[rng() % v.size()];
    CHECK(cg.is_incident({2, a}, {3, b}));
    auto flag = cg.structure().make_flag({{2, a}, {3, b}});
    CHECK(cg.structure().shadow(flag, 4).any());
  }
  // gG_i I gG_j for a shared representative g
  const Perm g = parse_cycles("(1,7,3)(2,9)(5,10,8)", 10);
  for (std::size_t i = 1; i <= 9; ++i)
    for (std::size_t j = i + 1; j <= 9; ++j) CHECK(cg.is_incident({i, cg.index_of(i, g)}, {j, cg.index_of(j, g)}));
}

TEST_CASE("coset geometry errors and trivial cases") {
  auto g = sym_on(4, {1, 2, 3, 4});
  CHECK_THROWS_WITH_AS(CosetGeometry(4, {parse_cycles("(1,2,3)", 4)}, {{parse_cycles("(1,2)", 4)}}),
                       doctest::Contains("not contained"), Error);
  CHECK_THROWS_WITH_AS(CosetGeometry(4, g, {{perm_identity(4)}}, 10), doctest::Contains("bound"), Error);
  CosetGeometry whole(4, g, {g});
  CHECK(whole.rank() == 1);
  CHECK(whole.size(1) == 1);
}

TEST_CASE("diagram of PG(2,2) from its parabolics") {
  Fano fano;
  CosetGeometry cg(7, fano.group, {fano.stab_point(), fano.stab_line()});
  const auto ft = flag_transitivity(cg);
  CHECK(ft.transitive);
  CHECK(ft.chambers == 21);
  const auto d = diagram(cg);
  REQUIRE(d.edges.size() == 1);
  CHECK(d.edges[0].gonality == 3);
  CHECK(d.edges[0].point_diameter == 3);
  CHECK(d.edges[0].line_diameter == 3);
  CHECK(diagram_to_dot(d) ==
        "graph diagram {\n  t1 [label=\"s=2, n=7\"];\n  t2 [label=\"s=2, n=7\"];\n  t1 -- t2 [label=\"3 3 3\"];\n}\n");
}

TEST_CASE("digon residues give no diagram edge") {
  const Perm a = parse_cycles("(1,2)", 4), b = parse_cycles("(3,4)", 4);
  CosetGeometry cg(4, {a, b}, {{a}, {b}});
  const auto d = diagram(cg);
  CHECK(d.edges.empty());
  CHECK(diagram_to_dot(d) == "graph diagram {\n  t1 [label=\"s=1, n=2\"];\n  t2 [label=\"s=1, n=2\"];\n}\n");
}

TEST_CASE("diagram of the Sym(8) truncation is independent of the chamber") {
  auto cg = sym8({1, 2, 3, 4, 5});
  const auto d = diagram(cg);
  CHECK(d.flag_transitive);
  // another chamber: the image of the base chamber under a group element
  const Perm x = parse_cycles("(1,5,2,8)(3,6)", 8);
  std::vector<std::size_t> ch;
  for (std::size_t t = 1; t <= 5; ++t) ch.push_back(cg.act(x, {t, 0}).index);
  CHECK(diagram_to_dot(diagram(cg, ch)) == diagram_to_dot(d));
  // the three point types form a triangle (distinct points)
  std::size_t point_pairs = 0;
  for (const auto& e : d.edges)
    if (e.j <= 3) ++point_pairs;
  CHECK(point_pairs == 3);
  CHECK(d.sizes == std::vector<std::size_t>{8, 8, 8, 70, 56});
}
