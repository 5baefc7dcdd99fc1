// incgeo: batch front end. Prints {"status","data","error"} on stdout.

#include <iostream>

#include "cli.hpp"

using namespace incgeo;
using namespace incgeo::cli;

namespace {

int emit_error(const std::string& msg, int code, bool pretty) {
  std::cerr << "error: " << msg << "\n";
  if (!pretty) std::cout << json{{"status", "error"}, {"data", nullptr}, {"error", msg}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite incidence geometry: projective and polar spaces, groups, morphisms, polygons, coset geometries, varieties"};
  app.name("incgeo");
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
  app.require_subcommand(1);
  app.fallthrough();
  app.footer("Worker threads: INCGEO_THREADS (default 1).");

  Handler handler;
  add_pg(app, handler);
  add_polar(app, handler);
  add_group(app, handler);
  add_orbit(app, handler);
  add_stab(app, handler);
  add_morph(app, handler);
  add_gp(app, handler);
  add_coset(app, handler);
  add_variety(app, handler);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(e.what(), 1, pretty);
  }
  if (!handler) return emit_error("no action given; see --help", 1, pretty);

  try {
    Result r = handler();
    if (pretty)
      std::cout << r.pretty << (r.pretty.empty() || r.pretty.back() == '\n' ? "" : "\n");
    else
      std::cout << json{{"status", "ok"}, {"data", r.data}, {"error", nullptr}}.dump() << "\n";
    return 0;
  } catch (const UsageError& e) {
    return emit_error(e.what(), 1, pretty);
  } catch (const json::exception& e) {
    return emit_error(std::string("malformed JSON input: ") + e.what(), 1, pretty);
  } catch (const Error& e) {
    return emit_error(e.what(), 2, pretty);
  } catch (const std::exception& e) {
    return emit_error(e.what(), 2, pretty);
  }
}
