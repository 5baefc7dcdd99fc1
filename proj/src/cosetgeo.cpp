#include "incgeo/cosetgeo.hpp"

#include <algorithm>
#include <sstream>

#include "incgeo/gpoly.hpp"
#include "incgeo/parallel.hpp"

namespace incgeo {

Perm parse_cycles(const std::string& s, std::size_t degree) {
  Perm p = perm_identity(degree);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw Error("bad permutation \"" + s + "\": " + why); };
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == ')' && cyc.empty()) break;
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) fail("expected a point");
      const unsigned long v = std::stoul(s.substr(i, j - i));
      if (v < 1 || v > degree) fail("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      i = j;
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ')') break;
      fail("expected ',' or ')'");
    }
    ++i;
    std::vector<bool> seen(degree);
    for (auto c : cyc) {
      if (seen[c]) fail("repeated point in a cycle");
      seen[c] = true;
    }
    // cycles compose left to right
    Perm c = perm_identity(degree);
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = cyc[(k + 1) % cyc.size()];
    p = perm_mul(p, c);
  }
  return p;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p) h = (h ^ x) * 1099511628211ull;
  return h;
}

namespace {

std::vector<GroupElem> as_elems(const std::vector<Perm>& ps) {
  std::vector<GroupElem> r;
  for (const auto& p : ps) r.push_back({p, std::nullopt});
  return r;
}

}  // namespace

Perm CosetGeometry::canon(const TypeData& t, Perm k) const {
  // lex-least h k over h in H, greedily along the base 0,1,...
  for (std::size_t i = 0; i < t.chain->levels(); ++i) {
    const auto& orb = t.chain->orbit(i);
    if (orb.size() == 1) continue;
    std::uint32_t best = orb[0];
    for (auto o : orb)
      if (k[o] < k[best]) best = o;
    if (best != t.chain->base_point(i)) k = perm_mul(t.chain->transversal(i, best).perm, k);
  }
  return k;
}

std::uint32_t CosetGeometry::lookup(const TypeData& t, const Perm& k) const {
  auto it = t.index.find(k);
  if (it == t.index.end()) throw Error("internal: coset not enumerated");
  return it->second;
}

CosetGeometry::CosetGeometry(std::size_t degree, std::vector<Perm> group_gens, std::vector<std::vector<Perm>> subgroups,
                             std::size_t bound)
    : deg_(degree), gens_(std::move(group_gens)) {
  for (const auto& g : gens_)
    if (g.size() != deg_) throw Error("generator degree mismatch");
  if (subgroups.empty()) throw Error("a coset geometry needs at least one subgroup");
  gchain_ = std::make_shared<StabChain>(deg_);
  gchain_->build_deterministic(as_elems(gens_));
  std::vector<std::uint32_t> base(deg_);
  for (std::uint32_t i = 0; i < deg_; ++i) base[i] = i;
  std::size_t total = 0;
  for (std::size_t ty = 0; ty < subgroups.size(); ++ty) {
    TypeData t;
    for (const auto& h : subgroups[ty]) {
      if (h.size() != deg_) throw Error("subgroup generator degree mismatch");
      if (!gchain_->contains(h))
        throw Error("subgroup " + std::to_string(ty + 1) + " is not contained in the group (" + perm_cycles(h) + ")");
    }
    t.chain = std::make_shared<StabChain>(deg_, base);
    t.chain->build_deterministic(as_elems(subgroups[ty]));
    const BigInt idx = gchain_->order() / t.chain->order();
    if (idx > BigInt(bound - total)) throw Error("coset geometry exceeds the size bound of " + std::to_string(bound));
    total += static_cast<std::size_t>(idx);
    // cosets gH <-> right cosets H g^-1; x acts by k -> k x^-1
    std::vector<Perm> ginv;
    for (const auto& g : gens_) ginv.push_back(perm_inv(g));
    t.elems.push_back(canon(t, perm_identity(deg_)));
    t.index.emplace(t.elems[0], 0);
    for (std::size_t h = 0; h < t.elems.size(); ++h)
      for (const auto& xi : ginv) {
        Perm k = canon(t, perm_mul(t.elems[h], xi));
        if (t.index.count(k)) continue;
        t.index.emplace(k, static_cast<std::uint32_t>(t.elems.size()));
        t.elems.push_back(std::move(k));
      }
    if (BigInt(t.elems.size()) != idx) throw Error("internal: coset count differs from the index");
    types_.push_back(std::move(t));
  }

  // Incidence: the cosets of G_j meeting G_i form the orbit S_ij of G_j under G_i;
  // g G_i then meets exactly g S_ij.
  const std::size_t r = types_.size();
  std::vector<std::size_t> sizes;
  for (const auto& t : types_) sizes.push_back(t.elems.size());
  std::vector<std::vector<std::vector<Bits>>> adj(r, std::vector<std::vector<Bits>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      const TypeData& tj = types_[j];
      std::vector<Perm> hinv;
      for (const auto& g : types_[i].chain->strong_generators(0)) hinv.push_back(perm_inv(g.perm));
      std::vector<std::uint32_t> sij{0};
      std::vector<bool> in(tj.elems.size());
      in[0] = true;
      for (std::size_t h = 0; h < sij.size(); ++h)
        for (const auto& x : hinv) {
          const std::uint32_t c = lookup(tj, canon(tj, perm_mul(tj.elems[sij[h]], x)));
          if (!in[c]) in[c] = true, sij.push_back(c);
        }
      adj[i][j].assign(sizes[i], Bits(sizes[j]));
      parallel_for(sizes[i], [&](std::size_t c) {
        // g = key^-1 represents the coset; g . (s G_j) <-> key_s g^-1 = key_s key_c
        const Perm& kc = types_[i].elems[c];
        for (auto s : sij) adj[i][j][c].set(lookup(tj, canon(tj, perm_mul(tj.elems[s], kc))));
      });
    }
  structure_ = FiniteIncidenceStructure(sizes, std::move(adj));
}

Perm CosetGeometry::representative(std::size_t type, std::size_t index) const { return perm_inv(key(type, index)); }

std::size_t CosetGeometry::index_of(std::size_t type, const Perm& g) const {
  const TypeData& t = types_.at(type - 1);
  return lookup(t, canon(t, perm_inv(g)));
}

bool CosetGeometry::is_incident(const ElemRef& a, const ElemRef& b) const {
  if (a.type < 1 || a.type > rank() || b.type < 1 || b.type > rank()) throw Error("type out of range");
  if (a.index >= size(a.type) || b.index >= size(b.type)) throw Error("element index out of range");
  if (a.type == b.type) return a.index == b.index;
  return structure_.incident(a, b);
}

ElemRef CosetGeometry::act(const Perm& x, const ElemRef& e) const {
  const TypeData& t = types_.at(e.type - 1);
  return {e.type, lookup(t, canon(t, perm_mul(t.elems.at(e.index), perm_inv(x))))};
}

std::string CosetGeometry::str() const {
  std::string s = "CosetGeometry( Group( [ ";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + perm_cycles(gens_[i]);
  return s + " ] ) )";
}

FlagTransitivity flag_transitivity(const CosetGeometry& cg) {
  const auto& st = cg.structure();
  FlagTransitivity ft;
  std::vector<std::size_t> all;
  for (std::size_t t = 1; t <= cg.rank(); ++t) all.push_back(t);
  std::size_t n = 0;
  st.for_each_flag(all, [&](const std::vector<ElemRef>&) { ++n; });
  ft.chambers = n;
  // G acting on all elements; chamber stabiliser via a chain based at the base chamber.
  std::vector<std::size_t> offset{0};
  for (std::size_t t = 1; t <= cg.rank(); ++t) offset.push_back(offset.back() + cg.size(t));
  std::vector<GroupElem> gens;
  for (const auto& x : cg.generators()) {
    Perm p(offset.back());
    for (std::size_t t = 1; t <= cg.rank(); ++t)
      for (std::size_t i = 0; i < cg.size(t); ++i)
        p[offset[t - 1] + i] = static_cast<std::uint32_t>(offset[t - 1] + cg.act(x, {t, i}).index);
    gens.push_back({std::move(p), std::nullopt});
  }
  std::vector<std::uint32_t> base;
  for (std::size_t t = 1; t <= cg.rank(); ++t) base.push_back(static_cast<std::uint32_t>(offset[t - 1]));
  StabChain ch(offset.back(), base);
  ch.build_deterministic(gens);
  // Orbit of the chamber = product of the orbit lengths along its base prefix.
  ft.orbit = 1;
  for (std::size_t i = 0; i < base.size(); ++i) ft.orbit *= ch.orbit(i).size();
  ft.transitive = ft.orbit == ft.chambers;
  return ft;
}

DiagramEdge rank2_parameters(const FiniteIncidenceStructure& s) {
  if (s.rank() != 2) throw Error("rank-2 structure expected");
  const std::size_t np = s.size(1), nl = s.size(2);
  std::vector<std::vector<std::uint32_t>> adj(np + nl);
  for (std::size_t i = 0; i < np; ++i) {
    const Bits& b = s.neighbours({1, i}, 2);
    for (auto j = b.find_first(); j != Bits::npos; j = b.find_next(j)) {
      adj[i].push_back(static_cast<std::uint32_t>(np + j));
      adj[np + j].push_back(static_cast<std::uint32_t>(i));
    }
  }
  DiagramEdge e;
  const GraphStats st = graph_stats(adj);
  e.gonality = st.girth / 2;
  auto ecc = [&](std::uint32_t root) {
    std::vector<int> d(adj.size(), -1);
    std::vector<std::uint32_t> q{root};
    d[root] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (auto v : adj[q[h]])
        if (d[v] < 0) d[v] = d[q[h]] + 1, q.push_back(v);
    if (q.size() != adj.size()) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(d[q.back()]);
  };
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    auto& slot = v < np ? e.point_diameter : e.line_diameter;
    slot = std::max(slot, ecc(v));
  }
  // a generalised digon has every point on every line
  bool digon = true;
  for (std::size_t i = 0; i < np; ++i) digon = digon && s.neighbours({1, i}, 2).count() == nl;
  if (digon) e.gonality = 2;
  return e;
}

Diagram diagram(const CosetGeometry& cg, std::vector<std::size_t> chamber) {
  const std::size_t r = cg.rank();
  if (chamber.empty()) chamber.assign(r, 0);
  if (chamber.size() != r) throw Error("a chamber needs one element per type");
  const auto& st = cg.structure();
  std::vector<ElemRef> flag;
  for (std::size_t t = 1; t <= r; ++t) flag.push_back({t, chamber[t - 1]});
  st.make_flag(flag);
  Diagram d;
  d.flag_transitive = flag_transitivity(cg).transitive;
  for (std::size_t t = 1; t <= r; ++t) {
    std::vector<ElemRef> f;
    for (const auto& e : flag)
      if (e.type != t) f.push_back(e);
    d.orders.push_back(st.residue(f).size(1) - 1);
    d.sizes.push_back(cg.size(t));
  }
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = i + 1; j <= r; ++j) {
      std::vector<ElemRef> f;
      for (const auto& e : flag)
        if (e.type != i && e.type != j) f.push_back(e);
      DiagramEdge e = rank2_parameters(st.residue(f));
      e.i = i, e.j = j;
      if (e.gonality != 2) d.edges.push_back(e);
    }
  return d;
}

std::string diagram_to_dot(const Diagram& d) {
  std::ostringstream os;
  os << "graph diagram {\n";
  for (std::size_t t = 0; t < d.orders.size(); ++t)
    os << "  t" << t + 1 << " [label=\"s=" << d.orders[t] << ", n=" << d.sizes[t] << "\"];\n";
  for (const auto& e : d.edges)
    os << "  t" << e.i << " -- t" << e.j << " [label=\"" << e.gonality << " " << e.point_diameter << " "
       << e.line_diameter << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace incgeo
