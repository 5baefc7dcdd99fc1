#include "incgeo/orbits.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "incgeo/parallel.hpp"

namespace incgeo {

std::int64_t Orbit::find(const Subspace& s) const {
  auto it = index.find(s.key());
  return it == index.end() ? -1 : it->second;
}

std::vector<std::size_t> Orbit::word(std::uint32_t i) const {
  std::vector<std::size_t> w;
  for (; via[i] >= 0; i = parent[i]) w.push_back(static_cast<std::size_t>(via[i]));
  std::reverse(w.begin(), w.end());
  return w;
}

Orbit orbit(const std::vector<Collineation>& gens, const Subspace& seed) {
  Orbit o;
  o.elements.push_back(seed);
  o.index.emplace(seed.key(), 0);
  o.via.push_back(-1);
  o.parent.push_back(0);
  const std::size_t ng = gens.size();
  constexpr std::size_t kChunk = 2048;
  std::vector<std::pair<Subspace, std::string>> imgs;
  for (std::size_t start = 0; start < o.elements.size();) {
    const std::size_t end = std::min(o.elements.size(), start + kChunk);
    imgs.assign((end - start) * ng, {});
    parallel_for(imgs.size(), [&](std::size_t t) {
      Subspace s = gens[t % ng].act(o.elements[start + t / ng]);
      std::string k = s.key();
      imgs[t] = {std::move(s), std::move(k)};
    });
    for (std::size_t t = 0; t < imgs.size(); ++t) {
      auto& [s, k] = imgs[t];
      if (o.index.count(k)) continue;
      o.index.emplace(std::move(k), static_cast<std::uint32_t>(o.elements.size()));
      o.elements.push_back(std::move(s));
      o.via.push_back(static_cast<std::int32_t>(t % ng));
      o.parent.push_back(static_cast<std::uint32_t>(start + t / ng));
    }
    start = end;
  }
  return o;
}

ActionDomain::ActionDomain(std::vector<Subspace> elems) : elements(std::move(elems)) {
  index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i].key(), static_cast<std::uint32_t>(i)).second)
      throw Error("action domain has repeated elements");
}

std::uint32_t ActionDomain::index_of(const Subspace& s) const {
  auto it = index.find(s.key());
  if (it == index.end()) throw Error("element outside the action domain");
  return it->second;
}

Perm action_perm(const ActionDomain& dom, const Collineation& g) {
  Perm p(dom.size());
  parallel_for(dom.size(), [&](std::size_t i) {
    auto it = dom.index.find(g.act(dom.elements[i]).key());
    if (it == dom.index.end()) throw Error("domain not closed under the action");
    p[i] = it->second;
  });
  return p;
}

std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Collineation>& gens,
                                               const std::vector<Subspace>& domain) {
  ActionDomain dom(domain);
  std::vector<Perm> ps;
  for (const auto& g : gens) ps.push_back(action_perm(dom, g));
  std::vector<bool> seen(dom.size());
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t i = 0; i < dom.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> orb{i};
    seen[i] = true;
    for (std::size_t h = 0; h < orb.size(); ++h)
      for (const auto& p : ps)
        if (!seen[p[orb[h]]]) {
          seen[p[orb[h]]] = true;
          orb.push_back(p[orb[h]]);
        }
    out.push_back(std::move(orb));
  }
  return out;
}

ActionHomomorphism action_homomorphism(const CollGroup& g, std::vector<Subspace> domain) {
  ActionHomomorphism h;
  h.domain = std::make_shared<ActionDomain>(std::move(domain));
  for (const auto& x : g.generators()) h.generator_images.push_back(action_perm(*h.domain, x));
  return h;
}

namespace {

struct DomainChoice {
  GeometryPtr geom;
  std::size_t type = 1;
};

DomainChoice choose_domain(const CollGroup& g) {
  GeometryPtr geom = g.geometry();
  // Rank-one polar spaces on a line may have too few points to be faithful.
  if (!geom || (geom->is_polar() && geom->vector_dim() <= 2))
    return {ProjSpace::create(g.dim() - 1, g.field()), 1};
  std::size_t best = 1;
  for (std::size_t t = 2; t <= geom->rank(); ++t)
    if (geom->count(t) < geom->count(best)) best = t;
  return {geom, best};
}

std::vector<GroupElem> images(const ActionDomain& dom, const std::vector<Collineation>& gens) {
  std::vector<GroupElem> r;
  for (const auto& x : gens) r.push_back({action_perm(dom, x), x});
  return r;
}

std::shared_ptr<NiceMonomorphism> make_nice(const DomainChoice& dc, std::shared_ptr<const ActionDomain> dom,
                                            const CollGroup& g) {
  auto nm = std::make_shared<NiceMonomorphism>();
  nm->geometry = dc.geom;
  nm->type = dc.type;
  nm->domain = std::move(dom);
  nm->generators = images(*nm->domain, g.generators());
  nm->chain = std::make_shared<StabChain>(nm->domain->size());
  if (g.known_order())
    nm->chain->build_with_order(nm->generators, *g.known_order(), kChainSeed);
  else
    nm->chain->build_deterministic(nm->generators);
  return nm;
}

}  // namespace

std::shared_ptr<const NiceMonomorphism> nice_monomorphism(const CollGroup& g) {
  if (g.nice) return g.nice;
  const DomainChoice dc = choose_domain(g);
  auto dom = std::make_shared<ActionDomain>(dc.geom->elements(dc.type));
  g.nice = make_nice(dc, std::move(dom), g);
  if (!g.known_order()) g.set_order(g.nice->chain->order());
  return g.nice;
}

BigInt group_order(const CollGroup& g) {
  if (g.known_order()) return *g.known_order();
  return nice_monomorphism(g)->chain->order();
}

bool group_contains(const CollGroup& g, const Collineation& x) {
  auto nm = nice_monomorphism(g);
  return nm->chain->contains(action_perm(*nm->domain, x));
}

CollGroupPtr subgroup(const CollGroupPtr& parent, std::vector<Collineation> gens) {
  return std::make_shared<CollGroup>(parent->field(), parent->dim(), std::move(gens), std::string{}, std::nullopt,
                                     parent->geometry());
}

namespace {

CollGroupPtr from_chain(const CollGroupPtr& parent, const NiceMonomorphism& pnm, std::shared_ptr<StabChain> chain,
                        std::vector<GroupElem> gens) {
  std::vector<Collineation> cs;
  std::set<Collineation> seen;
  std::vector<GroupElem> kept;
  for (auto& e : gens)
    if (!perm_is_identity(e.perm) && seen.insert(*e.coll).second) {
      cs.push_back(*e.coll);
      kept.push_back(std::move(e));
    }
  auto r = std::make_shared<CollGroup>(parent->field(), parent->dim(), std::move(cs), std::string{}, chain->order(),
                                       parent->geometry());
  auto nm = std::make_shared<NiceMonomorphism>();
  nm->geometry = pnm.geometry;
  nm->type = pnm.type;
  nm->domain = pnm.domain;
  nm->generators = std::move(kept);
  nm->chain = std::move(chain);
  r->nice = nm;
  return r;
}

}  // namespace

CollGroupPtr stabiliser(const CollGroupPtr& g, const Subspace& e) {
  auto nm = nice_monomorphism(*g);
  const BigInt ord = group_order(*g);
  const Orbit o = orbit(g->generators(), e);
  const BigInt target = ord / o.size();
  if (target * o.size() != ord) throw Error("internal: orbit length does not divide the group order");
  auto chain = std::make_shared<StabChain>(nm->degree());
  std::mt19937_64 rng(kChainSeed);
  auto next = [&]() {
    GroupElem x = nm->chain->random_element(rng);
    const std::int64_t i = o.find(x.coll->act(e));
    GroupElem u = nm->chain->identity_elem();
    for (auto k : o.word(static_cast<std::uint32_t>(i))) u = u * nm->generators[k];
    return x * u.inverse();
  };
  chain->build_from_source(next, target, {});
  return from_chain(g, *nm, chain, chain->strong_generators(0));
}

CollGroupPtr setwise_stabiliser(const CollGroupPtr& g, const std::vector<Subspace>& set) {
  if (set.empty()) return g;
  const std::size_t type = set.front().dim();
  for (const auto& s : set)
    if (s.dim() != type) throw Error("setwise stabiliser needs elements of one type");
  std::set<std::string> keys;
  for (const auto& s : set) keys.insert(s.key());
  bool invariant = true;
  for (const auto& x : g->generators())
    for (const auto& s : set)
      if (!keys.count(x.act(s).key())) invariant = false;
  if (invariant) return g;

  auto nm = nice_monomorphism(*g);
  std::shared_ptr<const ActionDomain> dom = nm->domain;
  std::vector<GroupElem> gens = nm->generators;
  DomainChoice dc{nm->geometry, nm->type};
  if (type != nm->type) {
    dc = DomainChoice{nm->geometry, type};
    dom = std::make_shared<ActionDomain>(dc.geom->elements(type));
    gens = images(*dom, g->generators());
  }
  std::vector<std::uint32_t> pts;
  std::vector<bool> in_set(dom->size());
  for (const auto& s : set) {
    const std::uint32_t i = dom->index_of(s);
    if (!in_set[i]) pts.push_back(i);
    in_set[i] = true;
  }
  std::sort(pts.begin(), pts.end());
  auto chain = std::make_shared<StabChain>(dom->size(), pts);
  chain->build_with_order(gens, group_order(*g), kChainSeed);
  const std::size_t m = pts.size();

  // Coset representatives p = u_{m-1} ... u_0 with all base images inside the set.
  std::vector<GroupElem> good;
  auto rec = [&](auto&& self, std::size_t lvl, const GroupElem& p) -> void {
    if (lvl == m) {
      for (auto x : pts)
        if (!in_set[p.perm[x]]) return;
      good.push_back(p);
      return;
    }
    for (auto gamma : chain->orbit(lvl))
      if (in_set[p.perm[gamma]]) self(self, lvl + 1, chain->transversal(lvl, gamma) * p);
  };
  rec(rec, 0, chain->identity_elem());

  std::vector<GroupElem> sgens = chain->strong_generators(m);
  BigInt korder = 1;
  for (std::size_t i = m; i < chain->levels(); ++i) korder *= chain->orbit(i).size();
  for (auto& x : good) sgens.push_back(std::move(x));
  const BigInt target = korder * static_cast<std::uint64_t>(sgens.size() - chain->strong_generators(m).size());

  // Chain of the result on the same domain.
  auto res = std::make_shared<StabChain>(dom->size());
  res->build_with_order(sgens, target, kChainSeed);
  NiceMonomorphism pn;
  pn.geometry = dc.geom;
  pn.type = dc.type;
  pn.domain = dom;
  return from_chain(g, pn, res, sgens);
}

}  // namespace incgeo
