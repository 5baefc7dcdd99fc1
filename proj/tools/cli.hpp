#pragma once

#include <CLI11.hpp>
#include <functional>
#include <json.hpp>
#include <stdexcept>
#include <string>

#include "incgeo/collin.hpp"
#include "incgeo/polarsp.hpp"
#include "incgeo/projsp.hpp"

namespace incgeo::cli {

using nlohmann::json;

// Bad flags or malformed input text; exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Result {
  json data;
  std::string pretty;
};
using Handler = std::function<Result()>;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json big(const BigInt& v);
json vec_json(std::span<const Elt> v);
json mat_json(const Mat& m);
json elem_json(const Subspace& s);
json coll_json(const Collineation& c);

json parse_json(const std::string& text, const std::string& what);
json read_json_file(const std::string& path);
Mat parse_matrix(const FieldPtr& f, const json& j, std::size_t cols);
// {"type":k,"basis":[[...]]}, a bare matrix, or a bare vector (a point).
Subspace parse_element(const GeometryPtr& g, const std::string& text);

std::string pretty_element(const Subspace& s);
void write_file(const std::string& path, const std::string& text);

// "PG(3,4)", "Q-(5,2)", "W(3,3)", "H(3,9)" (standard forms).
GeometryPtr parse_geometry_name(const std::string& name);

// Geometry descriptor shared by several subcommands.
struct GeomOpts {
  std::string geom;
  std::string space = "pg";
  std::string kind;
  long d = -1;
  std::uint64_t q = 0;
  std::string gram;
  std::string form = "quadratic";
  void add(CLI::App* app, bool with_space);
  GeometryPtr build() const;
  PolarPtr polar() const;
  void need_dq() const;
};

void add_pg(CLI::App& app, Handler& h);
void add_polar(CLI::App& app, Handler& h);
void add_group(CLI::App& app, Handler& h);
void add_orbit(CLI::App& app, Handler& h);
void add_stab(CLI::App& app, Handler& h);
void add_morph(CLI::App& app, Handler& h);
void add_gp(CLI::App& app, Handler& h);
void add_coset(CLI::App& app, Handler& h);
void add_variety(CLI::App& app, Handler& h);

}  // namespace incgeo::cli
