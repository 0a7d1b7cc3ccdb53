#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lfc/completion.hpp"
#include "lfc/io.hpp"

using namespace lfc;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kNotFound = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw SchemaError(out, "cannot write file");
  f << text;
}

Document load(const std::string& path, const std::string& kind, Strictness mode) {
  Document doc = parse_document(read_file(path), mode);
  if (doc.kind != kind) throw SchemaError("$.kind", "expected \"" + kind + "\", found \"" + doc.kind + "\"");
  return doc;
}

SubdivisionSeed load_seed(const std::string& path, Strictness mode) {
  return seed_from_json(load(path, "seed", mode).payload, "$.payload", mode);
}

void print_report(const WindowReport& rep) {
  for (const auto& c : rep.checks)
    std::cerr << (c.passed ? "pass " : "FAIL ") << c.name << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally finite completions of polyhedral complexes"};
  app.require_subcommand(1);
  bool lax = false;
  app.add_flag("--lax", lax, "accept non-canonical rationals and unknown fields");
  std::string input, output, window, point, sigma_path, pi_path, cls = "all", stratum, coords, svg, center, name,
                                                                    out_dir;
  std::size_t budget = 100000;

  auto* validate = app.add_subcommand("validate", "validate a JSON document");
  validate->add_option("file", input)->required();

  auto* complete = app.add_subcommand("complete", "locally finite completion relative to a fan");
  complete->add_option("complex", input)->required();
  complete->add_option("--sigma", sigma_path, "fan document")->required();
  complete->add_option("--class", cls, "all | q | zonotopal | gamma:<g> | gamma-vertices:<g>");
  complete->add_option("--pi", pi_path, "use this finite completion instead of computing one");
  complete->add_option("-o,--output", output);

  auto* zon = app.add_subcommand("complete-zonotopal", "zonotopal completion");
  zon->add_option("complex", input)->required();
  zon->add_option("--center", center, "star center x,y,...");
  zon->add_option("-o,--output", output);

  auto* poly = app.add_subcommand("complete-polytopal", "polytopal completion");
  poly->add_option("complex", input)->required();
  poly->add_option("-o,--output", output);

  auto* query = app.add_subcommand("query", "cells meeting a window");
  query->add_option("seed", input)->required();
  query->add_option("--window", window, "lo:hi,lo:hi,...")->required();
  query->add_option("-o,--output", output);

  auto* check = app.add_subcommand("check-window", "validate the completion on a window");
  check->add_option("seed", input)->required();
  check->add_option("--window", window)->required();
  check->add_option("-o,--output", output);

  auto* locate = app.add_subcommand("locate", "cell containing a point in its relative interior");
  locate->add_option("seed", input)->required();
  locate->add_option("--point", point)->required();

  auto* cert = app.add_subcommand("boundary-cert", "cells whose closure meets a boundary point");
  cert->add_option("seed", input)->required();
  cert->add_option("--stratum", stratum, "hash of a cone of the fan")->required();
  cert->add_option("--coords", coords, "quotient coordinates");
  cert->add_option("--budget", budget);
  cert->add_option("-o,--output", output);

  auto* render = app.add_subcommand("render", "SVG drawing of a planar window");
  render->add_option("seed", input)->required();
  render->add_option("--window", window)->required();
  render->add_option("--svg", svg)->required();

  auto* examples = app.add_subcommand("examples", "write bundled example inputs");
  examples->add_option("name", name)->required()->check(CLI::IsMember(bundled_example_names()));
  examples->add_option("--out-dir", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  const Strictness mode = lax ? Strictness::kLax : Strictness::kStrict;

  try {
    if (*validate) {
      Document doc = parse_document(read_file(input), mode);
      if (doc.kind == "seed") {
        auto seed = seed_from_json(doc.payload, "$.payload", mode);
        build_seed(seed.pi, seed.phi, seed.sigma, seed.cls, seed.ray_choices);
      }
      std::cout << "valid " << doc.kind << "\n";
    } else if (*complete) {
      Complex phi = complex_from_json(load(input, "complex", mode).payload, "$.payload", mode);
      Fan sigma = fan_from_json(load(sigma_path, "fan", mode).payload, "$.payload", mode);
      ClassSpec kind = ClassSpec::parse(cls);
      SubdivisionSeed seed =
          pi_path.empty()
              ? complete_locally_finite(phi, sigma, kind)
              : build_seed(complex_from_json(load(pi_path, "complex", mode).payload, "$.payload", mode), phi, sigma,
                           kind);
      emit(serialize(make_document("seed", to_json(seed))), output);
    } else if (*zon) {
      Complex phi = complex_from_json(load(input, "complex", mode).payload, "$.payload", mode);
      std::optional<Vec> w;
      if (!center.empty()) w = parse_point(center);
      emit(serialize(make_document("seed", to_json(zonotopal_completion(phi, w)))), output);
    } else if (*poly) {
      Complex phi = complex_from_json(load(input, "complex", mode).payload, "$.payload", mode);
      emit(serialize(make_document("seed", to_json(polytopal_completion(phi)))), output);
    } else if (*query) {
      auto seed = load_seed(input, mode);
      auto cells = cells_in_window(seed, parse_window(window));
      emit(serialize(make_document("report", Json{{"cells", to_json(cells)}})), output);
    } else if (*check) {
      auto seed = load_seed(input, mode);
      auto rep = validate_window(seed, parse_window(window));
      print_report(rep);
      emit(serialize(make_document("report", to_json(rep))), output);
      return rep.ok() ? kOk : kInvalid;
    } else if (*locate) {
      auto seed = load_seed(input, mode);
      auto c = locate_point(seed, parse_point(point));
      std::cout << c.id.to_string() << " " << c.geometry.describe() << "\n";
    } else if (*cert) {
      auto seed = load_seed(input, mode);
      std::optional<Polyhedron> tau;
      for (const auto& s : seed.sigma_cones)
        if (s.hash() == stratum) tau = s;
      if (!tau) throw StratumNotInFan("no cone of the fan has hash " + stratum);
      Vec x = coords.empty() ? Vec{} : parse_point(coords);
      auto cells = boundary_certificate(seed, ExtendedPoint{*tau, x}, budget);
      emit(serialize(make_document("report", Json{{"cells", to_json(cells)}})), output);
    } else if (*render) {
      auto seed = load_seed(input, mode);
      emit(render_svg(seed, parse_window(window)), svg);
    } else if (*examples) {
      ExampleBundle b = bundled_example(name);
      if (out_dir.empty()) {
        std::cout << serialize(make_document("complex", to_json(b.phi)));
      } else {
        std::filesystem::create_directories(out_dir);
        emit(serialize(make_document("complex", to_json(b.phi))), out_dir + "/phi.json");
        emit(serialize(make_document("fan", to_json(b.sigma))), out_dir + "/sigma.json");
        if (b.pi) emit(serialize(make_document("complex", to_json(*b.pi))), out_dir + "/pi.json");
        std::cout << "class " << b.cls << "\n";
      }
    }
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CompletionNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotFound;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotFound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
