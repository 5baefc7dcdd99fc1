#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"

namespace incgeo::cli {

json big(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(v);
  if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min())) return static_cast<std::int64_t>(v);
  return to_string(v);
}

json vec_json(std::span<const Elt> v) { return json(std::vector<Elt>(v.begin(), v.end())); }

json mat_json(const Mat& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

json elem_json(const Subspace& s) { return {{"type", s.dim()}, {"basis", mat_json(s.basis())}}; }

json coll_json(const Collineation& c) { return {{"matrix", mat_json(c.matrix())}, {"frobenius", c.frobenius()}}; }

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + what + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Mat parse_matrix(const FieldPtr& f, const json& j, std::size_t cols) {
  if (!j.is_array() || j.empty()) throw UsageError("a nonempty matrix is expected");
  Mat m(f, j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw UsageError("matrix row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer()) throw UsageError("matrix entries must be integers (field element codes)");
      const auto v = row[c].get<std::int64_t>();
      if (v < 0 || v >= static_cast<std::int64_t>(f->order()))
        throw UsageError("entry " + std::to_string(v) + " is not an element code of GF(" + std::to_string(f->order()) +
                         ")");
      m(i, c) = static_cast<Elt>(v);
    }
  }
  return m;
}

Subspace parse_element(const GeometryPtr& g, const std::string& text) {
  const json j = parse_json(text, "--element-json");
  json basis = j;
  std::optional<std::size_t> type;
  if (j.is_object()) {
    if (!j.contains("basis")) throw UsageError("element JSON needs a \"basis\"");
    basis = j["basis"];
    if (j.contains("type")) type = j["type"].get<std::size_t>();
  }
  if (basis.is_array() && !basis.empty() && basis[0].is_number()) basis = json::array({basis});
  const Subspace s = Subspace::from_matrix(parse_matrix(g->field(), basis, g->vector_dim()));
  if (type && *type != s.dim())
    throw Error("basis spans a subspace of type " + std::to_string(s.dim()) + ", not " + std::to_string(*type));
  if (!g->is_element(s)) throw Error("not an element of " + g->name());
  return s;
}

std::string pretty_element(const Subspace& s) {
  static const char* names[] = {"empty subspace", "point", "line", "plane", "solid"};
  std::string out = s.dim() < 5 ? names[s.dim()] : "subspace of type " + std::to_string(s.dim());
  out += " [";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    out += i ? "; " : " ";
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) out += (c ? "," : "") + s.field()->format(s.basis()(i, c));
  }
  return out + " ]";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

GeometryPtr parse_geometry_name(const std::string& name) {
  static const std::regex re(R"(^\s*(PG|W|Q\+|Q-|Q|H)\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
  std::smatch m;
  if (!std::regex_match(name, m, re))
    throw UsageError("cannot parse geometry '" + name + "' (expected PG(n,q), W(n,q), Q(n,q), Q+(n,q), Q-(n,q), H(n,q^2))");
  const std::size_t d = std::stoul(m[2]);
  const std::uint64_t q = std::stoull(m[3]);
  const std::string k = m[1];
  if (k == "PG") return ProjSpace::create(d, q);
  const Family fam = k == "W"    ? Family::Symplectic
                     : k == "Q+" ? Family::Hyperbolic
                     : k == "Q-" ? Family::Elliptic
                     : k == "Q"  ? Family::Parabolic
                                 : Family::Hermitian;
  return PolarSpace::standard(fam, d, q);
}

void GeomOpts::add(CLI::App* app, bool with_space) {
  app->add_option("--geom", geom, "geometry by name, e.g. PG(3,4), Q-(5,2), W(3,3), H(3,9)");
  if (with_space) app->add_option("--space", space, "pg or polar")->check(CLI::IsMember({"pg", "polar"}));
  app->add_option("--kind", kind, "polar family: symplectic, hyperbolic, elliptic, parabolic, hermitian");
  app->add_option("--d,--dim", d, "projective dimension");
  app->add_option("--q", q, "field order");
  app->add_option("--gram-json", gram, "gram matrix of a user form (element codes)");
  app->add_option("--form", form, "form kind for --gram-json")
      ->check(CLI::IsMember({"quadratic", "hermitian", "alternating", "symmetric"}));
}

void GeomOpts::need_dq() const {
  if (d < 0 || q == 0) throw UsageError("give --geom, or both --d/--dim and --q");
}

PolarPtr GeomOpts::polar() const {
  if (!geom.empty()) {
    auto p = std::dynamic_pointer_cast<const PolarSpace>(parse_geometry_name(geom));
    if (!p) throw UsageError("'" + geom + "' is not a polar space");
    return p;
  }
  need_dq();
  const auto dd = static_cast<std::size_t>(d);
  if (!gram.empty()) {
    const FieldPtr f = Field::of_order(q);
    const Mat m = parse_matrix(f, parse_json(gram, "--gram-json"), dd + 1);
    const FormKind k = form == "hermitian"     ? FormKind::Hermitian
                       : form == "alternating" ? FormKind::Alternating
                       : form == "symmetric"   ? FormKind::BilinearSymmetric
                                               : FormKind::Quadratic;
    return PolarSpace::from_form(Form::create(k, m));
  }
  if (kind.empty()) throw UsageError("a polar space needs --kind or --gram-json");
  return PolarSpace::standard(parse_family(kind), dd, q);
}

GeometryPtr GeomOpts::build() const {
  if (!geom.empty()) return parse_geometry_name(geom);
  if (space == "pg") {
    need_dq();
    return ProjSpace::create(static_cast<std::size_t>(d), q);
  }
  return polar();
}

}  // namespace incgeo::cli
