#include "incgeo/perm.hpp"

#include <sstream>

namespace incgeo {

Perm perm_identity(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool perm_is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

std::string perm_cycles(const Perm& a) {
  std::ostringstream os;
  std::vector<bool> seen(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == i) continue;
    os << "(" << i + 1;
    seen[i] = true;
    for (std::uint32_t j = a[i]; j != i; j = a[j]) {
      os << "," << j + 1;
      seen[j] = true;
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

GroupElem GroupElem::operator*(const GroupElem& o) const {
  GroupElem r{perm_mul(perm, o.perm), std::nullopt};
  if (coll && o.coll) r.coll = *coll * *o.coll;
  return r;
}

GroupElem GroupElem::inverse() const {
  GroupElem r{perm_inv(perm), std::nullopt};
  if (coll) r.coll = coll->inverse();
  return r;
}

// ---- stabiliser chain -------------------------------------------------------

StabChain::StabChain(std::size_t degree, std::vector<std::uint32_t> base_prefix) : deg_(degree) {
  for (auto b : base_prefix) {
    if (b >= deg_) throw Error("base point out of range");
    new_level(b);
  }
}

void StabChain::new_level(std::uint32_t b) {
  Level l;
  l.base = b;
  l.sv.assign(deg_, kOut);
  l.sv[b] = kBase;
  l.orbit = {b};
  lv_.push_back(std::move(l));
}

std::vector<std::uint32_t> StabChain::base() const {
  std::vector<std::uint32_t> r;
  for (const auto& l : lv_) r.push_back(l.base);
  return r;
}

BigInt StabChain::order() const {
  BigInt r = 1;
  for (const auto& l : lv_) r *= l.orbit.size();
  return r;
}

void StabChain::extend_orbit(std::size_t i) {
  Level& l = lv_[i];
  // Re-scan everything: new generators can reach new points from old ones.
  for (std::size_t h = 0; h < l.orbit.size(); ++h) {
    const std::uint32_t x = l.orbit[h];
    for (std::size_t k = 0; k < l.gens.size(); ++k) {
      const std::uint32_t y = pool_[l.gens[k]].perm[x];
      if (l.sv[y] == kOut) {
        l.sv[y] = static_cast<std::int32_t>(k);
        l.orbit.push_back(y);
      }
    }
  }
}

void StabChain::add_strong(const GroupElem& g, std::size_t upto) {
  if (upto == lv_.size()) {
    std::uint32_t moved = 0;
    while (g.perm[moved] == moved) ++moved;
    new_level(moved);
  }
  pool_.push_back(g);
  pool_inv_.push_back(g.inverse());
  for (std::size_t i = 0; i <= upto; ++i) {
    lv_[i].gens.push_back(pool_.size() - 1);
    extend_orbit(i);
  }
}

std::pair<GroupElem, std::size_t> StabChain::sift(GroupElem g, std::size_t from) const {
  for (std::size_t i = from; i < lv_.size(); ++i) {
    const Level& l = lv_[i];
    std::uint32_t b = g.perm[l.base];
    if (l.sv[b] == kOut) return {std::move(g), i};
    while (b != l.base) {
      const GroupElem& s = pool_inv_[l.gens[l.sv[b]]];
      for (auto& x : g.perm) x = s.perm[x];
      if (g.coll && s.coll) g.coll = *g.coll * *s.coll;
      b = s.perm[b];
    }
  }
  return {std::move(g), lv_.size()};
}

bool StabChain::contains(const Perm& p) const {
  if (p.size() != deg_) return false;
  auto [r, lvl] = sift(GroupElem{p, std::nullopt});
  return lvl == lv_.size() && perm_is_identity(r.perm);
}

bool StabChain::add_element(const GroupElem& g) {
  auto [r, lvl] = sift(g);
  if (lvl == lv_.size() && perm_is_identity(r.perm)) return false;
  add_strong(r, lvl);
  return true;
}

GroupElem StabChain::transversal(std::size_t i, std::uint32_t pt) const {
  const Level& l = lv_[i];
  if (l.sv[pt] == kOut) throw Error("point not in basic orbit");
  // Walk back to the base collecting generators, then multiply in order.
  std::vector<std::size_t> word;
  for (std::uint32_t b = pt; b != l.base;) {
    const std::size_t k = l.gens[l.sv[b]];
    word.push_back(k);
    b = pool_inv_[k].perm[b];
  }
  GroupElem u = identity_elem();
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = u * pool_[*it];
  return u;
}

GroupElem StabChain::identity_elem() const {
  GroupElem g{perm_identity(deg_), std::nullopt};
  if (!pool_.empty() && pool_.front().coll)
    g.coll = Collineation::identity(pool_.front().coll->field(), pool_.front().coll->dim());
  return g;
}

std::vector<GroupElem> StabChain::strong_generators(std::size_t i) const {
  std::vector<GroupElem> r;
  if (i < lv_.size())
    for (auto k : lv_[i].gens) r.push_back(pool_[k]);
  return r;
}

GroupElem StabChain::random_element(std::mt19937_64& rng) const {
  GroupElem g = identity_elem();
  for (std::size_t i = lv_.size(); i-- > 0;) {
    const auto& orb = lv_[i].orbit;
    std::uniform_int_distribution<std::size_t> d(0, orb.size() - 1);
    g = g * transversal(i, orb[d(rng)]);
  }
  return g;
}

// Holt's SCHREIERSIMS closure on the current strong generators.
void StabChain::schreier_close() {
  std::size_t i = lv_.size();
  while (i-- > 0) {
    bool restart = false;
    for (std::size_t h = 0; h < lv_[i].orbit.size() && !restart; ++h) {
      const std::uint32_t beta = lv_[i].orbit[h];
      const GroupElem ub = transversal(i, beta);
      for (std::size_t k = 0; k < lv_[i].gens.size() && !restart; ++k) {
        const GroupElem& s = pool_[lv_[i].gens[k]];
        const std::uint32_t img = s.perm[beta];
        // tree edge: u_beta s = u_img
        if (lv_[i].sv[img] == static_cast<std::int32_t>(k) && pool_inv_[lv_[i].gens[k]].perm[img] == beta) continue;
        GroupElem x = ub * s * transversal(i, img).inverse();
        auto [r, lvl] = sift(std::move(x), i + 1);
        if (lvl == lv_.size() && perm_is_identity(r.perm)) continue;
        // r fixes base points 0..lvl-1 (and at least 0..i)
        if (lvl == lv_.size()) {
          std::uint32_t moved = 0;
          while (r.perm[moved] == moved) ++moved;
          new_level(moved);
        }
        pool_.push_back(r);
        pool_inv_.push_back(r.inverse());
        for (std::size_t j = i + 1; j <= lvl; ++j) {
          lv_[j].gens.push_back(pool_.size() - 1);
          extend_orbit(j);
        }
        i = lvl + 1;  // re-check from the deepest touched level
        restart = true;
      }
    }
  }
}

void StabChain::build_deterministic(const std::vector<GroupElem>& gens) {
  for (const auto& g : gens) add_element(g);
  schreier_close();
}

void StabChain::build_with_order(const std::vector<GroupElem>& gens, const BigInt& target, std::uint64_t seed) {
  for (const auto& g : gens) add_element(g);
  if (order() >= target) {
    if (order() != target) throw Error("internal: chain order exceeds the expected order");
    return;
  }
  RandomSource src(gens, deg_, seed);
  build_from_source([&] { return src.next(); }, target, gens);
}

// ---- random source ----------------------------------------------------------

RandomSource::RandomSource(std::vector<GroupElem> gens, std::size_t degree, std::uint64_t seed) : rng_(seed) {
  GroupElem id{perm_identity(degree), std::nullopt};
  if (!gens.empty() && gens.front().coll)
    id.coll = Collineation::identity(gens.front().coll->field(), gens.front().coll->dim());
  if (gens.empty()) gens.push_back(id);
  s_ = gens;
  while (s_.size() < 10) s_.push_back(gens[s_.size() % gens.size()]);
  acc_ = id;
  for (int i = 0; i < 60; ++i) next();
}

GroupElem RandomSource::next() {
  std::uniform_int_distribution<std::size_t> d(0, s_.size() - 1);
  std::size_t a = d(rng_), b = d(rng_);
  while (b == a) b = d(rng_);
  const bool inv = rng_() & 1;
  s_[a] = inv ? s_[a] * s_[b].inverse() : s_[a] * s_[b];
  acc_ = acc_ * s_[a];
  return acc_;
}

// ---- permutation groups -----------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens) : deg_(degree), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.size() != deg_) throw Error("permutation degree mismatch");
}

const StabChain& PermGroup::chain() const {
  if (!chain_) {
    StabChain c(deg_);
    std::vector<GroupElem> gs;
    for (const auto& g : gens_) gs.push_back({g, std::nullopt});
    c.build_deterministic(gs);
    chain_ = std::move(c);
  }
  return *chain_;
}

}  // namespace incgeo
