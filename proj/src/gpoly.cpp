#include "incgeo/gpoly.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <set>
#include <sstream>

#include "incgeo/parallel.hpp"

namespace incgeo {

namespace {

struct RootResult {
  std::size_t girth = 0, ecc = 0;
  std::uint32_t cu = 0, cv = 0, far = 0;
  bool disconnected = false;
  std::vector<std::int64_t> parent;
};

RootResult bfs(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t root, bool keep_parent) {
  const std::size_t n = adj.size();
  std::vector<std::int64_t> dist(n, -1), par(n, -1);
  std::vector<std::uint32_t> q{root};
  dist[root] = 0;
  RootResult r;
  for (std::size_t h = 0; h < q.size(); ++h) {
    const std::uint32_t u = q[h];
    for (auto v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        par[v] = u;
        q.push_back(v);
      } else if (par[u] != v) {
        const std::size_t c = static_cast<std::size_t>(dist[u] + dist[v] + 1);
        if (r.girth == 0 || c < r.girth) r.girth = c, r.cu = u, r.cv = v;
      }
    }
  }
  r.disconnected = q.size() != n;
  r.far = q.back();
  r.ecc = static_cast<std::size_t>(dist[q.back()]);
  if (r.disconnected)
    for (std::uint32_t v = 0; v < n; ++v)
      if (dist[v] < 0) {
        r.far = v;
        break;
      }
  if (keep_parent) r.parent = std::move(par);
  return r;
}

}  // namespace

GraphStats graph_stats(const std::vector<std::vector<std::uint32_t>>& adj) {
  GraphStats st;
  const std::size_t n = adj.size();
  if (n == 0) return st;
  std::vector<RootResult> res(n);
  parallel_for(n, [&](std::size_t i) { res[i] = bfs(adj, static_cast<std::uint32_t>(i), false); });
  std::size_t best_root = n, far_root = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = res[i];
    if (r.girth && (st.girth == 0 || r.girth < st.girth)) st.girth = r.girth, best_root = i;
    const std::size_t e = r.disconnected ? std::numeric_limits<std::size_t>::max() : r.ecc;
    if (i == 0 || e > st.diameter) st.diameter = e, far_root = i;
  }
  st.far_pair = {static_cast<std::uint32_t>(far_root), res[far_root].far};
  if (best_root < n) {
    // Odd cycles are impossible in bipartite graphs, so this closes a cycle of length girth.
    RootResult r = bfs(adj, static_cast<std::uint32_t>(best_root), true);
    std::vector<std::uint32_t> a, b;
    for (std::int64_t x = r.cu; x >= 0; x = r.parent[x]) a.push_back(static_cast<std::uint32_t>(x));
    for (std::int64_t x = r.cv; x >= 0; x = r.parent[x]) b.push_back(static_cast<std::uint32_t>(x));
    std::reverse(a.begin(), a.end());
    b.pop_back();
    a.insert(a.end(), b.begin(), b.end());
    st.short_cycle = std::move(a);
  }
  return st;
}

GenPolygon GenPolygon::by_blocks(const std::vector<std::vector<std::size_t>>& blocks) {
  if (blocks.empty()) throw Error("no blocks given");
  std::size_t np = 0;
  std::set<std::size_t> seen;
  for (const auto& b : blocks) {
    if (b.size() < 3) throw Error("every block needs at least three points");
    std::set<std::size_t> inb;
    for (auto p : b) {
      if (p == 0) throw Error("block points are 1-based");
      if (!inb.insert(p).second) throw Error("repeated point " + std::to_string(p) + " in a block");
      seen.insert(p);
      np = std::max(np, p);
    }
  }
  if (seen.size() != np) throw Error("block points must be exactly 1.." + std::to_string(np));
  GenPolygon g;
  g.pt_lines_.resize(np);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    std::vector<std::uint32_t> l;
    for (auto p : blocks[j]) l.push_back(static_cast<std::uint32_t>(p - 1));
    std::sort(l.begin(), l.end());
    for (auto p : l) g.pt_lines_[p].push_back(static_cast<std::uint32_t>(j));
    g.line_pts_.push_back(std::move(l));
  }
  g.verify();
  return g;
}

GenPolygon GenPolygon::by_incidence(std::size_t npoints, std::size_t nlines,
                                    const std::function<bool(std::size_t, std::size_t)>& incident) {
  GenPolygon g;
  g.pt_lines_.resize(npoints);
  g.line_pts_.resize(nlines);
  for (std::size_t j = 0; j < nlines; ++j)
    for (std::size_t i = 0; i < npoints; ++i)
      if (incident(i, j)) {
        g.line_pts_[j].push_back(static_cast<std::uint32_t>(i));
        g.pt_lines_[i].push_back(static_cast<std::uint32_t>(j));
      }
  g.verify();
  return g;
}

GenPolygon GenPolygon::from_geometry(const GeometryPtr& geo) {
  if (geo->rank() != 2) throw Error("a generalised polygon needs a geometry of rank 2");
  auto pts = geo->elements(1), lns = geo->elements(2);
  std::unordered_map<std::string, std::uint32_t> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) idx.emplace(pts[i].key(), static_cast<std::uint32_t>(i));
  const FieldPtr f = geo->field();
  const std::uint64_t q = f->order();
  GenPolygon g;
  g.pt_lines_.resize(pts.size());
  for (std::size_t j = 0; j < lns.size(); ++j) {
    // every point of the line: combinations of its two basis rows
    const Mat& b = lns[j].basis();
    std::vector<std::uint32_t> on;
    for (std::uint64_t c = 0; c <= q; ++c) {
      Vec v(b.cols());
      for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = c == q ? b(1, k) : f->add(b(0, k), f->mul(static_cast<Elt>(c), b(1, k)));
      on.push_back(idx.at(Subspace::from_vector(f, v).key()));
    }
    std::sort(on.begin(), on.end());
    for (auto p : on) g.pt_lines_[p].push_back(static_cast<std::uint32_t>(j));
    g.line_pts_.push_back(std::move(on));
  }
  g.verify();
  g.set_elements(std::move(pts), std::move(lns));
  return g;
}

void GenPolygon::verify() {
  const std::size_t np = num_points(), nl = num_lines();
  if (np == 0 || nl == 0) throw Error("not a generalised polygon: empty point or line set");
  auto adj = incidence_graph();
  GraphStats st = graph_stats(adj);
  auto vname = [&](std::uint32_t v) {
    return v < np ? "p" + std::to_string(v + 1) : "l" + std::to_string(v - np + 1);
  };
  if (st.diameter == std::numeric_limits<std::size_t>::max())
    throw Error("not a generalised polygon: incidence graph is disconnected (" + vname(st.far_pair.first) +
                " cannot reach " + vname(st.far_pair.second) + ")");
  if (st.girth == 0) throw Error("not a generalised polygon: incidence graph has no cycle");
  const std::size_t n = st.girth / 2;
  if (st.diameter != n) {
    std::string cyc;
    for (auto v : st.short_cycle) cyc += (cyc.empty() ? "" : ", ") + vname(v);
    throw Error("not a generalised polygon: cycle of length " + std::to_string(st.girth) + " (" + cyc +
                ") but " + vname(st.far_pair.first) + " and " + vname(st.far_pair.second) + " are at distance " +
                std::to_string(st.diameter));
  }
  if (n != 2 && n != 3 && n != 4 && n != 6 && n != 8)
    throw Error("not a generalised polygon: gonality " + std::to_string(n) + " is not in {2,3,4,6,8}");
  const std::size_t sp = line_pts_[0].size(), tp = pt_lines_[0].size();
  for (const auto& l : line_pts_)
    if (l.size() != sp) throw Error("not a generalised polygon: lines of different sizes");
  for (const auto& p : pt_lines_)
    if (p.size() != tp) throw Error("not a generalised polygon: points on different numbers of lines");
  if (sp < 2 || tp < 2) throw Error("not a generalised polygon: degenerate order");
  n_ = n;
  s_ = sp - 1;
  t_ = tp - 1;
}

bool GenPolygon::incident(std::size_t point, std::size_t line) const {
  const auto& l = line_pts_.at(line);
  return std::binary_search(l.begin(), l.end(), static_cast<std::uint32_t>(point));
}

std::size_t GenPolygon::distance(const ElemRef& a, const ElemRef& b) const {
  auto vid = [&](const ElemRef& e) -> std::uint32_t {
    if (e.type == 1 && e.index < num_points()) return static_cast<std::uint32_t>(e.index);
    if (e.type == 2 && e.index < num_lines()) return static_cast<std::uint32_t>(num_points() + e.index);
    throw Error("element is not in this polygon");
  };
  const std::uint32_t s = vid(a), t = vid(b);
  if (s == t) return 0;
  auto adj = incidence_graph();
  std::vector<std::int64_t> d(adj.size(), -1);
  std::vector<std::uint32_t> q{s};
  d[s] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (auto v : adj[q[h]])
      if (d[v] < 0) {
        d[v] = d[q[h]] + 1;
        if (v == t) return static_cast<std::size_t>(d[v]);
        q.push_back(v);
      }
  throw Error("elements are not connected");
}

void GenPolygon::set_elements(std::vector<Subspace> pts, std::vector<Subspace> lns) {
  if (pts.size() != num_points() || lns.size() != num_lines()) throw Error("element list size mismatch");
  pts_ = std::move(pts);
  lns_ = std::move(lns);
}

std::string GenPolygon::str() const {
  const std::string ord = "[ " + std::to_string(s_) + ", " + std::to_string(t_) + " ]";
  switch (n_) {
    case 2: return "<generalised digon of order " + ord + ">";
    case 3: return "<projective plane order " + std::to_string(s_) + ">";
    case 4: return "<generalised quadrangle of order " + ord + ">";
    case 6: return "<generalised hexagon of order " + ord + ">";
    default: return "<generalised octagon of order " + ord + ">";
  }
}

std::vector<std::vector<std::uint32_t>> GenPolygon::incidence_graph() const {
  const std::size_t np = num_points();
  std::vector<std::vector<std::uint32_t>> adj(np + num_lines());
  for (std::size_t j = 0; j < num_lines(); ++j)
    for (auto p : line_pts_[j]) {
      adj[p].push_back(static_cast<std::uint32_t>(np + j));
      adj[np + j].push_back(p);
    }
  return adj;
}

std::string GenPolygon::incidence_graph_dot() const {
  std::ostringstream os;
  os << "graph incidence {\n";
  for (std::size_t i = 0; i < num_points(); ++i) os << "  p" << i + 1 << ";\n";
  for (std::size_t j = 0; j < num_lines(); ++j) os << "  l" << j + 1 << ";\n";
  for (std::size_t j = 0; j < num_lines(); ++j)
    for (auto p : line_pts_[j]) os << "  p" << p + 1 << " -- l" << j + 1 << ";\n";
  os << "}\n";
  return os.str();
}

FiniteIncidenceStructure GenPolygon::structure() const {
  std::vector<std::vector<std::size_t>> lines;
  for (const auto& l : line_pts_) lines.emplace_back(l.begin(), l.end());
  return point_line_structure(num_points(), lines);
}

PolarPtr split_cayley_quadric(const FieldPtr& f) {
  const Field& F = *f;
  Mat g(f, 7, 7);
  g(0, 4) = F.minus_one(), g(1, 5) = F.minus_one(), g(2, 6) = F.minus_one(), g(3, 3) = 1;
  return PolarSpace::from_form(Form::create(FormKind::Quadratic, g));
}

bool is_hexagon_line(const Subspace& line) {
  const Field& F = *line.field();
  const auto x = line.basis().row(0), y = line.basis().row(1);
  auto p = [&](std::size_t i, std::size_t j) { return F.sub(F.mul(x[i], y[j]), F.mul(x[j], y[i])); };
  // Coordinates X0..X6 with X0X4+X1X5+X2X6 = X3^2.
  return p(1, 2) == p(3, 4) && p(5, 4) == p(3, 2) && p(2, 0) == p(3, 5) && p(6, 5) == p(3, 0) &&
         p(0, 1) == p(3, 6) && p(4, 6) == p(3, 1);
}

GenPolygon split_cayley_hexagon(std::uint64_t q) {
  if (q > 5) throw Error("split Cayley hexagon construction is limited to q <= 5");
  auto f = Field::of_order(q);
  auto quad = split_cayley_quadric(f);
  auto pts = quad->elements(1);
  std::vector<Subspace> lns;
  for (auto& l : quad->elements(2))
    if (is_hexagon_line(l)) lns.push_back(std::move(l));
  std::unordered_map<std::string, std::uint32_t> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) idx.emplace(pts[i].key(), static_cast<std::uint32_t>(i));
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& l : lns) {
    std::vector<std::size_t> b;
    const Mat& m = l.basis();
    for (std::uint64_t c = 0; c <= q; ++c) {
      Vec v(7);
      for (std::size_t k = 0; k < 7; ++k) v[k] = c == q ? m(1, k) : f->add(m(0, k), f->mul(static_cast<Elt>(c), m(1, k)));
      b.push_back(idx.at(Subspace::from_vector(f, v).key()) + 1);
    }
    blocks.push_back(std::move(b));
  }
  GenPolygon g = GenPolygon::by_blocks(blocks);
  if (g.gonality() != 6 || g.s() != q || g.t() != q) throw Error("internal: split Cayley hexagon failed verification");
  g.set_elements(std::move(pts), std::move(lns));
  g.set_name("H(" + std::to_string(q) + ")");
  return g;
}

}  // namespace incgeo
