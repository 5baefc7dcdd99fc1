// gp, coset, variety

#include <sstream>

#include "cli.hpp"
#include "incgeo/cosetgeo.hpp"
#include "incgeo/gpoly.hpp"
#include "incgeo/varieties.hpp"

namespace incgeo::cli {

namespace {

// "p3" / "l7" (1-based) -> element reference.
ElemRef parse_gp_element(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'p' && s[0] != 'l')) throw UsageError("expected p<index> or l<index>, got '" + s + "'");
  std::size_t i = 0;
  try {
    i = std::stoul(s.substr(1));
  } catch (const std::exception&) {
    throw UsageError("bad element index in '" + s + "'");
  }
  if (i == 0) throw UsageError("element indices are 1-based");
  return {s[0] == 'p' ? 1u : 2u, i - 1};
}

// "2:5" (type 1-based, index 1-based).
ElemRef parse_coset_element(const std::string& s) {
  const auto c = s.find(':');
  if (c == std::string::npos) throw UsageError("expected type:index, got '" + s + "'");
  try {
    const std::size_t t = std::stoul(s.substr(0, c)), i = std::stoul(s.substr(c + 1));
    if (t == 0 || i == 0) throw UsageError("type and index are 1-based");
    return {t, i - 1};
  } catch (const std::logic_error&) {
    throw UsageError("bad element '" + s + "'");
  }
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> r;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      r.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw UsageError("bad list '" + s + "'");
    }
  }
  return r;
}

json gp_summary(const GenPolygon& gp) {
  return {{"name", gp.name()},     {"display", gp.str()},     {"gonality", gp.gonality()}, {"order", {gp.s(), gp.t()}},
          {"points", gp.num_points()}, {"lines", gp.num_lines()}, {"girth", gp.girth()},    {"diameter", gp.diameter()}};
}

}  // namespace

void add_gp(CLI::App& app, Handler& h) {
  auto* sub = app.add_subcommand("gp", "generalised polygons");
  struct Opts {
    std::string blocks, geom, dot, from, to;
    std::uint64_t hexagon = 0;
  };
  auto o = std::make_shared<Opts>();
  auto* b = sub->add_option("--blocks", o->blocks, "JSON file with a list of blocks (1-based points)");
  auto* hx = sub->add_option("--hexagon", o->hexagon, "split Cayley hexagon H(q)");
  auto* g = sub->add_option("--geom", o->geom, "rank-2 Lie geometry, e.g. W(3,2), PG(2,4), H(3,9)");
  b->excludes(hx)->excludes(g);
  hx->excludes(g);
  sub->add_option("--dot", o->dot, "write the incidence graph as DOT");
  sub->require_subcommand(1);

  auto build = [o]() -> GenPolygon {
    if (!o->blocks.empty()) {
      json j = read_json_file(o->blocks);
      if (j.is_object()) j = j.at("blocks");
      return GenPolygon::by_blocks(j.get<std::vector<std::vector<std::size_t>>>());
    }
    if (o->hexagon) return split_cayley_hexagon(o->hexagon);
    if (!o->geom.empty()) return GenPolygon::from_geometry(parse_geometry_name(o->geom));
    throw UsageError("choose one of --blocks, --hexagon, --geom");
  };
  auto with_dot = [o](const GenPolygon& gp) {
    if (!o->dot.empty()) write_file(o->dot, gp.incidence_graph_dot());
  };

  auto* verify = sub->add_subcommand("verify", "check the axioms and report the parameters");
  verify->callback([&h, build, with_dot] {
    h = [build, with_dot] {
      const GenPolygon gp = build();
      with_dot(gp);
      return Result{gp_summary(gp), gp.name()};
    };
  });
  auto* dist = sub->add_subcommand("distance", "incidence-graph distance between p<i>/l<j>");
  dist->add_option("--from", o->from, "element, e.g. p1")->required();
  dist->add_option("--to", o->to, "element, e.g. l2")->required();
  dist->callback([&h, build, with_dot, o] {
    h = [build, with_dot, o] {
      const GenPolygon gp = build();
      with_dot(gp);
      const std::size_t d = gp.distance(parse_gp_element(o->from), parse_gp_element(o->to));
      return Result{{{"distance", d}}, std::to_string(d)};
    };
  });
}

void add_coset(CLI::App& app, Handler& h) {
  auto* sub = app.add_subcommand("coset", "coset geometries of permutation groups");
  struct Opts {
    std::string input, json_text, types, dot, chamber, a, b;
    std::size_t bound = CosetGeometry::kDefaultBound;
  };
  auto o = std::make_shared<Opts>();
  auto* in = sub->add_option("--input", o->input,
                             "JSON file {\"degree\":n,\"group\":[cycles],\"subgroups\":[[cycles],...]}");
  auto* js = sub->add_option("--json", o->json_text, "the same JSON inline");
  in->excludes(js);
  sub->add_option("--types", o->types, "comma-separated subgroup numbers to keep (truncation)");
  sub->add_option("--bound", o->bound, "maximum total number of elements");
  sub->add_option("--dot", o->dot, "write the diagram as DOT");
  sub->require_subcommand(1);

  auto build = [o]() -> CosetGeometry {
    json j;
    if (!o->input.empty())
      j = read_json_file(o->input);
    else if (!o->json_text.empty())
      j = parse_json(o->json_text, "--json");
    else
      throw UsageError("give --input or --json");
    const auto n = j.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto& c : j.at("group")) gens.push_back(parse_cycles(c.get<std::string>(), n));
    std::vector<std::vector<Perm>> subs;
    for (const auto& s : j.at("subgroups")) {
      std::vector<Perm> hs;
      for (const auto& c : s) hs.push_back(parse_cycles(c.get<std::string>(), n));
      if (hs.empty()) hs.push_back(perm_identity(n));
      subs.push_back(hs);
    }
    if (!o->types.empty()) {
      std::vector<std::vector<Perm>> keep;
      for (auto t : parse_list(o->types)) {
        if (t < 1 || t > subs.size()) throw Error("type " + std::to_string(t) + " out of range");
        keep.push_back(subs[t - 1]);
      }
      subs = keep;
    }
    return CosetGeometry(n, gens, subs, o->bound);
  };
  auto with_dot = [o](const CosetGeometry& cg) {
    if (!o->dot.empty()) write_file(o->dot, diagram_to_dot(diagram(cg)));
  };

  auto* info = sub->add_subcommand("info", "rank, group order and element counts");
  info->callback([&h, build, with_dot] {
    h = [build, with_dot] {
      const CosetGeometry cg = build();
      with_dot(cg);
      json sizes = json::array(), orders = json::array();
      for (std::size_t t = 1; t <= cg.rank(); ++t) {
        sizes.push_back(cg.size(t));
        orders.push_back(big(cg.subgroup_order(t)));
      }
      return Result{{{"display", cg.str()},
                     {"rank", cg.rank()},
                     {"group_order", big(cg.group_order())},
                     {"sizes", sizes},
                     {"subgroup_orders", orders}},
                    cg.str()};
    };
  });
  auto* firm = sub->add_subcommand("firmness", "firm / thin / thick");
  firm->callback([&h, build, with_dot] {
    h = [build, with_dot] {
      const CosetGeometry cg = build();
      with_dot(cg);
      const auto f = cg.structure().firmness();
      auto tf = [](bool b) { return b ? "true" : "false"; };
      return Result{{{"firm", f.firm},
                     {"thin", f.thin},
                     {"thick", f.thick},
                     {"min_extensions", f.min_ext},
                     {"max_extensions", f.max_ext}},
                    std::string("firm: ") + tf(f.firm) + "\nthin: " + tf(f.thin) + "\nthick: " + tf(f.thick)};
    };
  });
  auto* diag = sub->add_subcommand("diagram", "diagram from the residues of a chamber");
  diag->add_option("--chamber", o->chamber, "comma-separated 1-based element indices, one per type");
  diag->callback([&h, build, o] {
    h = [build, o] {
      const CosetGeometry cg = build();
      std::vector<std::size_t> ch;
      for (auto i : parse_list(o->chamber)) {
        if (i == 0) throw UsageError("chamber indices are 1-based");
        ch.push_back(i - 1);
      }
      const Diagram d = diagram(cg, ch);
      const std::string dot = diagram_to_dot(d);
      if (!o->dot.empty()) write_file(o->dot, dot);
      json edges = json::array();
      for (const auto& e : d.edges)
        edges.push_back({{"types", {e.i, e.j}},
                         {"gonality", e.gonality},
                         {"point_diameter", e.point_diameter},
                         {"line_diameter", e.line_diameter}});
      if (!d.flag_transitive) std::cerr << "warning: the group is not flag-transitive; parameters are per chamber\n";
      return Result{{{"flag_transitive", d.flag_transitive},
                     {"orders", d.orders},
                     {"sizes", d.sizes},
                     {"edges", edges},
                     {"dot", dot}},
                    dot};
    };
  });
  auto* inc = sub->add_subcommand("incident", "incidence of two cosets given as type:index");
  inc->add_option("--a", o->a, "first element, e.g. 2:5")->required();
  inc->add_option("--b", o->b, "second element")->required();
  inc->callback([&h, build, with_dot, o] {
    h = [build, with_dot, o] {
      const CosetGeometry cg = build();
      with_dot(cg);
      const bool r = cg.is_incident(parse_coset_element(o->a), parse_coset_element(o->b));
      return Result{{{"incident", r}}, r ? "true" : "false"};
    };
  });
}

void add_variety(CLI::App& app, Handler& h) {
  auto* sub = app.add_subcommand("variety", "algebraic varieties");
  struct Opts {
    std::size_t dim = 0, k = 0;
    std::uint64_t q = 0, seed = 0;
    std::vector<std::string> polys;
    bool affine = false, hermitian = false, veronese = false;
    std::string quadric;
    std::size_t limit = 0;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--dim", o->dim, "dimension of the ambient space (source space for veronese/grassmann)")->required();
  sub->add_option("--q", o->q, "field order")->required();
  auto* p = sub->add_option("--poly", o->polys, "defining polynomial, e.g. x_1*x_2+x_3^2 (repeatable)");
  sub->add_flag("--affine", o->affine, "affine ambient AG(dim,q)");
  auto* he = sub->add_flag("--hermitian", o->hermitian, "hermitian variety sum x_i^(sqrt(q)+1)");
  auto* qu = sub->add_option("--quadric", o->quadric, "standard quadric: parabolic, hyperbolic, elliptic");
  auto* ve = sub->add_flag("--veronese", o->veronese, "Veronese variety of PG(dim,q)");
  auto* gr = sub->add_option("--grassmann", o->k, "Grassmann variety of k-spaces of PG(dim,q)");
  p->excludes(he)->excludes(qu)->excludes(ve)->excludes(gr);
  he->excludes(qu)->excludes(ve)->excludes(gr);
  qu->excludes(ve)->excludes(gr);
  ve->excludes(gr);
  sub->require_subcommand(1);

  auto build = [o]() -> Variety {
    if (o->hermitian) return hermitian_variety(o->dim, o->q);
    if (!o->quadric.empty()) return quadric_variety(parse_family(o->quadric), o->dim, o->q);
    if (o->veronese) return veronese_variety(ProjSpace::create(o->dim, o->q)).variety;
    if (o->k) return grassmann_variety(ProjSpace::create(o->dim, o->q), o->k).variety;
    const FieldPtr f = Field::of_order(o->q);
    const std::size_t m = o->affine ? o->dim : o->dim + 1;
    std::vector<MultiPoly> ps;
    for (const auto& s : o->polys) ps.push_back(MultiPoly::parse(f, m, s));
    if (o->affine) return Variety::affine(o->dim, f, ps);
    return Variety::projective(ProjSpace::create(o->dim, f), ps);
  };

  auto* size = sub->add_subcommand("size", "number of points");
  size->callback([&h, build] {
    h = [build] {
      const Variety v = build();
      const BigInt n = v.size();
      return Result{{{"name", v.str()}, {"size", big(n)}}, to_string(n)};
    };
  });
  auto* pts = sub->add_subcommand("points", "points in enumerator order");
  pts->add_option("--limit", o->limit, "at most this many points (0: all)");
  pts->callback([&h, build, o] {
    h = [build, o] {
      const Variety v = build();
      const auto all = v.points();
      json arr = json::array();
      std::string pretty;
      for (std::size_t i = 0; i < all.size() && (!o->limit || i < o->limit); ++i) {
        arr.push_back(vec_json(all[i]));
        std::string row;
        for (std::size_t c = 0; c < all[i].size(); ++c) row += (c ? "," : "") + v.field()->format(all[i][c]);
        pretty += "[ " + row + " ]\n";
      }
      return Result{{{"total", all.size()}, {"points", arr}}, pretty};
    };
  });
  auto* rnd = sub->add_subcommand("random", "random point (needs --seed)");
  rnd->add_option("--seed", o->seed, "RNG seed")->required();
  rnd->callback([&h, build, o] {
    h = [build, o] {
      const Vec x = build().random_point(o->seed);
      return Result{{{"point", vec_json(x)}}, vec_json(x).dump()};
    };
  });
  auto* polys = sub->add_subcommand("polynomials", "name and defining polynomials");
  polys->callback([&h, build] {
    h = [build] {
      const Variety v = build();
      json arr = json::array();
      for (const auto& q : v.polynomials()) arr.push_back(q.str());
      return Result{{{"name", v.str()}, {"polynomials", arr}}, v.str() + "\n" + v.polynomials_str()};
    };
  });
  auto* polar = sub->add_subcommand("polar", "polar space of a hermitian or quadric variety");
  polar->callback([&h, build] {
    h = [build] {
      const PolarPtr ps = build().to_polar_space();
      json d{{"name", ps->name()}, {"display", ps->display()}, {"rank", ps->rank()}};
      std::string pretty = ps->display();
      if (ps->rank() == 2) {
        // a generalised quadrangle: s + 1 points per line, t + 1 = L (s + 1) / P
        const BigInt s = ps->field()->order();
        const BigInt t = ps->count(2) * (s + 1) / ps->count(1) - 1;
        d["gq_order"] = {big(s), big(t)};
        pretty += "\ngeneralised quadrangle of order [ " + to_string(s) + ", " + to_string(t) + " ]";
      }
      return Result{d, pretty};
    };
  });
}

}  // namespace incgeo::cli
