#include "incgeo/incidence.hpp"

#include <algorithm>
#include <numeric>

namespace incgeo {

FiniteIncidenceStructure::FiniteIncidenceStructure(std::vector<std::size_t> sizes, const Predicate& incident)
    : sizes_(std::move(sizes)) {
  const std::size_t n = sizes_.size();
  labels_.resize(n);
  std::iota(labels_.begin(), labels_.end(), 1);
  adj_.assign(n, std::vector<std::vector<Bits>>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (s != t) adj_[s][t].assign(sizes_[s], Bits(sizes_[t]));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t)
      for (std::size_t i = 0; i < sizes_[s]; ++i)
        for (std::size_t j = 0; j < sizes_[t]; ++j)
          if (incident({s + 1, i}, {t + 1, j})) {
            adj_[s][t][i].set(j);
            adj_[t][s][j].set(i);
          }
}

FiniteIncidenceStructure::FiniteIncidenceStructure(std::vector<std::size_t> sizes,
                                                   std::vector<std::vector<std::vector<Bits>>> adj)
    : sizes_(std::move(sizes)), adj_(std::move(adj)) {
  labels_.resize(sizes_.size());
  std::iota(labels_.begin(), labels_.end(), 1);
}

std::size_t FiniteIncidenceStructure::total_size() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

bool FiniteIncidenceStructure::incident(const ElemRef& a, const ElemRef& b) const {
  if (a.type < 1 || a.type > rank() || b.type < 1 || b.type > rank()) throw Error("invalid type");
  if (a.index >= size(a.type) || b.index >= size(b.type)) throw Error("element index out of range");
  if (a.type == b.type) return a.index == b.index;
  return adj_[a.type - 1][b.type - 1][a.index].test(b.index);
}

const Bits& FiniteIncidenceStructure::neighbours(const ElemRef& a, std::size_t type) const {
  if (a.type == type) throw Error("neighbours within one type");
  return adj_[a.type - 1][type - 1][a.index];
}

std::vector<ElemRef> FiniteIncidenceStructure::make_flag(std::vector<ElemRef> elems) const {
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].type < 1 || elems[i].type > rank()) throw Error("invalid type in flag");
    if (elems[i].index >= size(elems[i].type)) throw Error("element index out of range");
    if (i && elems[i].type == elems[i - 1].type) throw Error("flag contains two elements of the same type");
    for (std::size_t j = 0; j < i; ++j)
      if (!incident(elems[i], elems[j])) throw Error("flag elements are not pairwise incident");
  }
  return elems;
}

Bits FiniteIncidenceStructure::shadow(const std::vector<ElemRef>& flag, std::size_t type) const {
  if (type < 1 || type > rank()) throw Error("invalid type");
  Bits b(size(type));
  b.set();
  for (const auto& e : flag) {
    if (e.type == type) {
      Bits one(size(type));
      one.set(e.index);
      b &= one;
    } else {
      b &= neighbours(e, type);
    }
  }
  return b;
}

FiniteIncidenceStructure FiniteIncidenceStructure::residue(const std::vector<ElemRef>& flag) const {
  std::vector<bool> used(rank() + 1, false);
  for (const auto& e : flag) used[e.type] = true;
  std::vector<std::size_t> types;
  for (std::size_t t = 1; t <= rank(); ++t)
    if (!used[t]) types.push_back(t);
  std::vector<std::vector<std::size_t>> members(types.size());
  std::vector<std::vector<std::size_t>> pos(types.size());
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < types.size(); ++k) {
    Bits s = shadow(flag, types[k]);
    pos[k].assign(size(types[k]), SIZE_MAX);
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
      pos[k][i] = members[k].size();
      members[k].push_back(i);
    }
    sizes.push_back(members[k].size());
  }
  const std::size_t n = types.size();
  std::vector<std::vector<std::vector<Bits>>> adj(n, std::vector<std::vector<Bits>>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      adj[s][t].assign(sizes[s], Bits(sizes[t]));
      for (std::size_t i = 0; i < sizes[s]; ++i) {
        const Bits& nb = adj_[types[s] - 1][types[t] - 1][members[s][i]];
        for (std::size_t j = 0; j < sizes[t]; ++j)
          if (nb.test(members[t][j])) adj[s][t][i].set(j);
      }
    }
  FiniteIncidenceStructure r(sizes, std::move(adj));
  std::vector<int> labels;
  for (auto t : types) labels.push_back(labels_[t - 1]);
  r.labels_ = labels;
  return r;
}

bool FiniteIncidenceStructure::is_incidence_geometry() const {
  const std::size_t n = rank();
  if (n == 0) return true;
  // Depth-first over flags built with increasing types; cand[t] = shadow of the current flag.
  std::vector<Bits> cand(n);
  for (std::size_t t = 0; t < n; ++t) {
    cand[t] = Bits(sizes_[t]);
    cand[t].set();
  }
  std::vector<bool> in_flag(n, false);
  std::size_t flag_size = 0;
  bool ok = true;
  std::function<void(std::size_t)> rec = [&](std::size_t next_type) {
    if (!ok) return;
    if (flag_size < n) {
      bool extends = false;
      for (std::size_t t = 0; t < n && !extends; ++t)
        if (!in_flag[t] && cand[t].any()) extends = true;
      if (!extends) {
        ok = false;
        return;
      }
    }
    for (std::size_t t = next_type; t < n; ++t) {
      for (auto i = cand[t].find_first(); i != Bits::npos; i = cand[t].find_next(i)) {
        std::vector<Bits> saved = cand;
        for (std::size_t u = 0; u < n; ++u)
          if (u != t && !in_flag[u]) cand[u] &= adj_[t][u][i];
        in_flag[t] = true;
        ++flag_size;
        cand[t].reset();
        rec(t + 1);
        cand = std::move(saved);
        in_flag[t] = false;
        --flag_size;
        if (!ok) return;
      }
    }
  };
  rec(0);
  return ok;
}

void FiniteIncidenceStructure::for_each_flag(const std::vector<std::size_t>& types,
                                             const std::function<void(const std::vector<ElemRef>&)>& fn) const {
  std::vector<ElemRef> flag;
  std::function<void(std::size_t, const std::vector<Bits>&)> rec = [&](std::size_t k,
                                                                        const std::vector<Bits>& cand) {
    if (k == types.size()) {
      fn(flag);
      return;
    }
    std::size_t t = types[k] - 1;
    for (auto i = cand[k].find_first(); i != Bits::npos; i = cand[k].find_next(i)) {
      std::vector<Bits> next = cand;
      for (std::size_t m = k + 1; m < types.size(); ++m) next[m] &= adj_[t][types[m] - 1][i];
      flag.push_back({types[k], i});
      rec(k + 1, next);
      flag.pop_back();
    }
  };
  std::vector<Bits> cand;
  for (auto t : types) {
    if (t < 1 || t > rank()) throw Error("invalid type");
    Bits b(sizes_[t - 1]);
    b.set();
    cand.push_back(b);
  }
  rec(0, cand);
}

FiniteIncidenceStructure::Firmness FiniteIncidenceStructure::firmness() const {
  Firmness f;
  bool first = true;
  for (std::size_t i = 1; i <= rank(); ++i) {
    std::vector<std::size_t> types;
    for (std::size_t t = 1; t <= rank(); ++t)
      if (t != i) types.push_back(t);
    for_each_flag(types, [&](const std::vector<ElemRef>& flag) {
      std::size_t c = shadow(flag, i).count();
      if (first) {
        f.min_ext = f.max_ext = c;
        first = false;
      }
      f.min_ext = std::min(f.min_ext, c);
      f.max_ext = std::max(f.max_ext, c);
    });
  }
  f.firm = f.min_ext >= 2;
  f.thin = f.min_ext == 2 && f.max_ext == 2;
  f.thick = f.min_ext >= 3;
  return f;
}

FiniteIncidenceStructure point_line_structure(std::size_t npoints, const std::vector<std::vector<std::size_t>>& lines) {
  std::vector<std::vector<std::vector<Bits>>> adj(2, std::vector<std::vector<Bits>>(2));
  adj[0][1].assign(npoints, Bits(lines.size()));
  adj[1][0].assign(lines.size(), Bits(npoints));
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (auto p : lines[l]) {
      if (p >= npoints) throw Error("point index out of range");
      adj[0][1][p].set(l);
      adj[1][0][l].set(p);
    }
  return FiniteIncidenceStructure({npoints, lines.size()}, std::move(adj));
}

}  // namespace incgeo
