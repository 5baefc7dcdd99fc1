// pg, polar, group, orbit, stab, morph

#include <random>

#include "cli.hpp"
#include "incgeo/morph.hpp"
#include "incgeo/orbits.hpp"

namespace incgeo::cli {

namespace {

constexpr std::size_t kListBound = 100000;

BigInt random_index(const BigInt& n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BigInt r = 0;
  for (int w = 0; w < 4; ++w) r = (r << 64) + BigInt(rng());
  return r % n + 1;
}

void add_space_actions(CLI::App* sub, const std::shared_ptr<GeomOpts>& g, Handler& h, bool polar) {
  auto type = std::make_shared<std::size_t>(1);
  auto limit = std::make_shared<std::size_t>(0);
  auto index = std::make_shared<std::string>();
  auto elem = std::make_shared<std::string>();
  auto seed = std::make_shared<std::uint64_t>(0);

  auto geo = [g, polar]() -> GeometryPtr { return polar ? GeometryPtr(g->polar()) : g->build(); };

  auto* count = sub->add_subcommand("count", "number of elements of a type");
  count->add_option("--type", *type, "element type (1 = points)");
  count->callback([&h, geo, type] {
    h = [geo, type] {
      const BigInt n = geo()->count(*type);
      return Result{{{"count", big(n)}}, to_string(n)};
    };
  });

  auto* name = sub->add_subcommand("name", "name and defining equation");
  name->callback([&h, geo, polar] {
    h = [geo, polar] {
      const auto x = geo();
      json d{{"name", x->name()}, {"rank", x->rank()}};
      std::string pretty = x->name();
      if (polar) {
        auto p = std::static_pointer_cast<const PolarSpace>(x);
        d["display"] = p->display();
        d["family"] = to_string(p->family());
        pretty = p->display();
      }
      return Result{d, pretty};
    };
  });

  auto* list = sub->add_subcommand("list", "elements of a type in enumerator order");
  list->add_option("--type", *type, "element type");
  list->add_option("--limit", *limit, "at most this many elements (0: all)");
  list->callback([&h, geo, type, limit] {
    h = [geo, type, limit] {
      const auto x = geo();
      const BigInt total = x->count(*type);
      BigInt take = *limit ? std::min<BigInt>(total, *limit) : total;
      if (take > kListBound) throw UsageError("too many elements to list (" + to_string(total) + "); use --limit");
      auto en = x->enumerator(*type);
      json arr = json::array();
      std::string pretty;
      for (BigInt i = 1; i <= take; ++i) {
        const Subspace s = en->unrank(i);
        arr.push_back(elem_json(s));
        pretty += pretty_element(s) + "\n";
      }
      return Result{{{"total", big(total)}, {"elements", arr}}, pretty};
    };
  });

  auto* unrank = sub->add_subcommand("unrank", "element at a 1-based enumerator index");
  unrank->add_option("--type", *type, "element type");
  unrank->add_option("--index", *index, "1-based index")->required();
  unrank->callback([&h, geo, type, index] {
    h = [geo, type, index] {
      BigInt i;
      try {
        i = BigInt(*index);
      } catch (const std::exception&) {
        throw UsageError("--index must be an integer");
      }
      const Subspace s = geo()->enumerator(*type)->unrank(i);
      return Result{{{"index", big(i)}, {"element", elem_json(s)}}, pretty_element(s)};
    };
  });

  auto* rank = sub->add_subcommand("rank", "1-based enumerator index of an element");
  rank->add_option("--element-json", *elem, "element JSON")->required();
  rank->callback([&h, geo, elem] {
    h = [geo, elem] {
      const auto x = geo();
      const Subspace s = parse_element(x, *elem);
      const BigInt i = x->enumerator(s.dim())->rank(s);
      return Result{{{"type", s.dim()}, {"index", big(i)}}, to_string(i)};
    };
  });

  auto* random = sub->add_subcommand("random", "uniformly random element (needs --seed)");
  random->add_option("--type", *type, "element type");
  random->add_option("--seed", *seed, "RNG seed")->required();
  random->callback([&h, geo, type, seed] {
    h = [geo, type, seed] {
      const auto x = geo();
      const BigInt i = random_index(x->count(*type), *seed);
      const Subspace s = x->enumerator(*type)->unrank(i);
      return Result{{{"index", big(i)}, {"element", elem_json(s)}}, pretty_element(s)};
    };
  });

  if (!polar) return;
  auto* pol = sub->add_subcommand("polarity", "image of an element under the polarity");
  pol->add_option("--element-json", *elem, "subspace of the ambient space")->required();
  pol->callback([&h, g, elem] {
    h = [g, elem] {
      const auto p = g->polar();
      const Subspace s = parse_element(ProjSpace::create(p->proj_dim(), p->field()), *elem);
      const Subspace img = p->polarity(s);
      return Result{{{"image", elem_json(img)}}, pretty_element(img)};
    };
  });
  auto* ty = sub->add_subcommand("type", "class of the form restricted to a subspace");
  ty->add_option("--element-json", *elem, "subspace of the ambient space")->required();
  ty->callback([&h, g, elem] {
    h = [g, elem] {
      const auto p = g->polar();
      const Subspace s = parse_element(ProjSpace::create(p->proj_dim(), p->field()), *elem);
      const auto t = p->type_of_subspace(s);
      return Result{{{"class", t.name}, {"radical_dim", t.radical_dim}, {"totally_isotropic", p->is_element(s)}},
                    t.name};
    };
  });
}

struct GroupOpts {
  GeomOpts geo;
  std::string group = "pgammal";
  std::string flavor = "collineation";
  void add(CLI::App* app) {
    geo.add(app, true);
    app->add_option("--group", group, "group of a projective space")->check(CLI::IsMember({"pgl", "pgammal", "psl"}));
    app->add_option("--flavor", flavor, "group of a polar space")
        ->check(CLI::IsMember({"special-isometry", "isometry", "similarity", "collineation"}));
  }
  CollGroupPtr build() const {
    const GeometryPtr g = geo.build();
    if (auto p = std::dynamic_pointer_cast<const PolarSpace>(g)) return polar_group(p, parse_flavor(flavor));
    auto pg = std::static_pointer_cast<const ProjSpace>(g);
    if (group == "pgl") return projectivity_group(pg);
    if (group == "psl") return special_group(pg);
    return collineation_group(pg);
  }
};

BigInt order_of(const CollGroup& g) { return g.known_order() ? *g.known_order() : group_order(g); }

}  // namespace

void add_pg(CLI::App& app, Handler& h) {
  auto* sub = app.add_subcommand("pg", "projective space PG(d,q)");
  auto g = std::make_shared<GeomOpts>();
  g->add(sub, false);
  sub->require_subcommand(1);
  add_space_actions(sub, g, h, false);
}

void add_polar(CLI::App& app, Handler& h) {
  auto* sub = app.add_subcommand("polar", "classical polar space");
  auto g = std::make_shared<GeomOpts>();
  g->space = "polar";
  g->add(sub, false);
  sub->require_subcommand(1);
  add_space_actions(sub, g, h, true);
}

void add_group(CLI::App& app, Handler& h) {
  auto* sub = app.add_subcommand("group", "collineation groups and their orders");
  struct Opts {
    std::size_t pgl = 0, pgammal = 0, psl = 0;
    std::uint64_t q = 0;
    std::string geom, flavor = "collineation";
    bool verify = false;
  };
  auto o = std::make_shared<Opts>();
  auto* pgl = sub->add_option("--pgl", o->pgl, "PGL(n,q), n = vector dimension");
  auto* pgam = sub->add_option("--pgammal", o->pgammal, "PGammaL(n,q)");
  auto* psl = sub->add_option("--psl", o->psl, "PSL(n,q)");
  auto* geom = sub->add_option("--geom", o->geom, "group of a polar space, e.g. Q(6,5)");
  pgl->excludes(pgam)->excludes(psl)->excludes(geom);
  pgam->excludes(psl)->excludes(geom);
  psl->excludes(geom);
  sub->add_option("--q", o->q, "field order");
  sub->add_option("--flavor", o->flavor, "polar group flavour")
      ->check(CLI::IsMember({"special-isometry", "isometry", "similarity", "collineation"}));
  sub->require_subcommand(1);

  auto closed = [o]() -> std::pair<std::string, BigInt> {
    if (!o->geom.empty()) {
      auto p = std::dynamic_pointer_cast<const PolarSpace>(parse_geometry_name(o->geom));
      if (!p) throw UsageError("--geom must name a polar space");
      const auto fl = parse_flavor(o->flavor);
      return {polar_group_name(p->family(), p->vector_dim(), *p->field(), fl),
              polar_group_order(p->family(), p->vector_dim(), p->field()->order(), fl)};
    }
    if (o->q == 0) throw UsageError("--q is required");
    const std::string args = "(" + std::to_string(o->pgl + o->pgammal + o->psl) + "," + std::to_string(o->q) + ")";
    if (o->pgl) return {"PGL" + args, order_pgl(o->pgl, o->q)};
    if (o->pgammal) return {"PGammaL" + args, order_pgammal(o->pgammal, o->q)};
    if (o->psl) return {"PSL" + args, order_psl(o->psl, o->q)};
    throw UsageError("choose one of --pgl, --pgammal, --psl, --geom");
  };
  auto build = [o]() -> CollGroupPtr {
    if (!o->geom.empty()) {
      auto p = std::dynamic_pointer_cast<const PolarSpace>(parse_geometry_name(o->geom));
      return polar_group(p, parse_flavor(o->flavor));
    }
    const std::size_t n = o->pgl + o->pgammal + o->psl;
    if (n < 2) throw Error("the vector dimension must be at least 2");
    auto pg = ProjSpace::create(n - 1, o->q);
    if (o->pgl) return projectivity_group(pg);
    if (o->psl) return special_group(pg);
    return collineation_group(pg);
  };

  auto* order = sub->add_subcommand("order", "group order (closed formula)");
  order->add_flag("--verify", o->verify, "also compute the order with a stabiliser chain");
  order->callback([&h, o, closed, build] {
    h = [o, closed, build] {
      const auto [name, n] = closed();
      json d{{"name", name}, {"order", big(n)}};
      if (o->verify) {
        const auto g = build();
        const BigInt c = group_order(CollGroup(g->field(), g->dim(), g->generators(), g->name(), std::nullopt, g->geometry()));
        d["chain_order"] = big(c);
        d["verified"] = c == n;
        if (c != n) throw Error("stabiliser chain order " + to_string(c) + " differs from the formula " + to_string(n));
      }
      return Result{d, to_string(n)};
    };
  });
  auto* gens = sub->add_subcommand("generators", "generating collineations");
  gens->callback([&h, build] {
    h = [build] {
      const auto g = build();
      json arr = json::array();
      std::string pretty = g->str() + "\n";
      for (const auto& c : g->generators()) {
        arr.push_back(coll_json(c));
        pretty += c.str() + "\n";
      }
      return Result{{{"name", g->name()}, {"generators", arr}}, pretty};
    };
  });
}

void add_orbit(CLI::App& app, Handler& h) {
  auto* sub = app.add_subcommand("orbit", "orbit of an element under a collineation group");
  auto o = std::make_shared<GroupOpts>();
  o->add(sub);
  auto elem = std::make_shared<std::string>();
  auto list = std::make_shared<bool>(false);
  sub->add_option("--element-json", *elem, "seed element")->required();
  sub->add_flag("--list", *list, "include the orbit elements");
  sub->callback([&h, o, elem, list] {
    h = [o, elem, list] {
      const auto g = o->build();
      const Subspace s = parse_element(o->geo.build(), *elem);
      const Orbit orb = orbit(g->generators(), s);
      json d{{"group", g->name()}, {"size", orb.size()}};
      if (*list) {
        json arr = json::array();
        for (const auto& e : orb.elements) arr.push_back(elem_json(e));
        d["elements"] = arr;
      }
      return Result{d, std::to_string(orb.size())};
    };
  });
}

void add_stab(CLI::App& app, Handler& h) {
  auto* sub = app.add_subcommand("stab", "stabiliser of an element in a collineation group");
  auto o = std::make_shared<GroupOpts>();
  o->add(sub);
  auto elem = std::make_shared<std::string>();
  auto check = std::make_shared<bool>(false);
  sub->add_option("--element-json", *elem, "element")->required();
  sub->add_flag("--check-orbit", *check, "also enumerate the orbit and verify |orbit|*|stab| = |G|");
  sub->callback([&h, o, elem, check] {
    h = [o, elem, check] {
      const auto g = o->build();
      const Subspace s = parse_element(o->geo.build(), *elem);
      const auto st = stabiliser(g, s);
      const BigInt go = order_of(*g), so = order_of(*st);
      json gens = json::array();
      for (const auto& c : st->generators()) gens.push_back(coll_json(c));
      json d{{"group", g->name()}, {"group_order", big(go)}, {"order", big(so)}, {"orbit_size", big(go / so)},
             {"generators", gens}};
      if (*check) {
        const BigInt n = orbit(g->generators(), s).size();
        d["orbit_enumerated"] = big(n);
        if (n * so != go) throw Error("orbit-stabiliser identity fails: " + to_string(n) + " * " + to_string(so));
      }
      return Result{d, to_string(so)};
    };
  });
}

void add_morph(CLI::App& app, Handler& h) {
  auto* sub = app.add_subcommand("morph", "geometry morphisms");
  struct Opts {
    std::string kind, from, to, target, elem;
    std::size_t k = 1;
    Elt alpha = 1;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--kind", o->kind, "morphism kind")
      ->required()
      ->check(CLI::IsMember(
          {"klein", "duality", "subfield", "fieldred", "subspace", "polar-iso", "veronese", "grassmann"}));
  sub->add_option("--from", o->from, "source geometry, e.g. PG(3,7)")->required();
  sub->add_option("--to", o->to, "target geometry");
  sub->add_option("--target-json", o->target, "subspace of the target ambient space (kind subspace)");
  sub->add_option("--k", o->k, "projective dimension of the subspaces (kind grassmann)");
  sub->add_option("--alpha", o->alpha, "trace-form scalar code (kind fieldred)");
  sub->require_subcommand(1);

  auto build = [o]() -> GeometryMorphism {
    const GeometryPtr src = parse_geometry_name(o->from);
    GeometryPtr dst;
    if (!o->to.empty()) dst = parse_geometry_name(o->to);
    auto need_to = [&] {
      if (!dst) throw UsageError("--to is required for kind " + o->kind);
    };
    auto as_pg = [&]() {
      auto pg = std::dynamic_pointer_cast<const ProjSpace>(src);
      if (!pg) throw Error("kind " + o->kind + " needs a projective space as source");
      return pg;
    };
    auto as_polar = [](const GeometryPtr& g) {
      auto p = std::dynamic_pointer_cast<const PolarSpace>(g);
      if (!p) throw Error(g->name() + " is not a polar space");
      return p;
    };
    if (o->kind == "klein") {
      const auto pg = as_pg();
      if (pg->proj_dim() != 3) throw Error("the Klein correspondence needs PG(3,q) as source");
      if (!dst) return klein_correspondence(pg->field());
      return klein_correspondence(pg, as_polar(dst));
    }
    if (o->kind == "duality") {
      const auto s = as_polar(src);
      return natural_duality(s, dst ? as_polar(dst) : PolarSpace::standard(Family::Symplectic, 3, s->field()));
    }
    if (o->kind == "subfield") return need_to(), embedding_by_subfield(src, dst);
    if (o->kind == "fieldred") return need_to(), embedding_by_field_reduction(src, dst, o->alpha);
    if (o->kind == "polar-iso") return need_to(), isomorphism_polar_spaces(as_polar(src), as_polar(dst));
    if (o->kind == "veronese") return veronese_map(as_pg());
    if (o->kind == "grassmann") return grassmann_map(as_pg(), o->k);
    need_to();
    if (o->target.empty()) throw UsageError("--target-json is required for kind subspace");
    const Subspace t = parse_element(ProjSpace::create(dst->proj_dim(), dst->field()), o->target);
    return embedding_by_subspace(src, dst, t);
  };

  auto* info = sub->add_subcommand("info", "source, target and display string");
  info->callback([&h, build] {
    h = [build] {
      const auto m = build();
      return Result{{{"kind", m.kind()},
                     {"source", m.source()->name()},
                     {"target", m.target()->name()},
                     {"types", m.types()},
                     {"intertwiner", m.has_intertwiner()},
                     {"display", m.str()}},
                    m.str()};
    };
  });
  for (const bool inverse : {false, true}) {
    auto* act = sub->add_subcommand(inverse ? "preimage" : "apply", inverse ? "preimage of a target element"
                                                                           : "image of a source element");
    act->add_option("--element-json", o->elem, "element JSON")->required();
    act->callback([&h, build, o, inverse] {
      h = [build, o, inverse] {
        const auto m = build();
        const Subspace e = parse_element(inverse ? m.target() : m.source(), o->elem);
        const Subspace r = inverse ? m.preimage(e) : m.apply(e);
        return Result{{{"element", elem_json(e)}, {inverse ? "preimage" : "image", elem_json(r)}},
                      pretty_element(e) + " -> " + pretty_element(r)};
      };
    });
  }
}

}  // namespace incgeo::cli
