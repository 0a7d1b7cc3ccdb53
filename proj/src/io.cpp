#include "lfc/io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace lfc {

SchemaError::SchemaError(std::string p, const std::string& message)
    : Error(p + ": " + message), path(std::move(p)) {}

namespace {

void require(bool ok, const std::string& path, const std::string& message) {
  if (!ok) throw SchemaError(path, message);
}

void check_keys(const Json& j, const std::string& path, const std::set<std::string>& required,
                const std::set<std::string>& optional, Strictness mode) {
  require(j.is_object(), path, "expected an object");
  for (const auto& k : required) require(j.contains(k), path, "missing field \"" + k + "\"");
  if (mode == Strictness::kLax) return;
  for (auto it = j.begin(); it != j.end(); ++it)
    require(required.count(it.key()) || optional.count(it.key()), path + "." + it.key(), "unknown field");
}

std::size_t dim_from_json(const Json& j, const std::string& path) {
  require(j.is_number_unsigned(), path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<Row> rows_from_json(const Json& j, const std::string& path, std::size_t d, Strictness mode) {
  require(j.is_array(), path, "expected an array of rows");
  std::vector<Row> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    require(j[i].is_array() && j[i].size() == 2, p, "expected [normal, offset]");
    Row r{vec_from_json(j[i][0], p + "[0]", mode), scalar_from_json(j[i][1], p + "[1]", mode)};
    require(r.normal.size() == d, p + "[0]", "normal has length " + std::to_string(r.normal.size()) +
                                                 ", expected " + std::to_string(d));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json rows_to_json(const std::vector<Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(Json::array({to_json(r.normal), to_json(r.offset)}));
  return out;
}

}  // namespace

Json to_json(const Scalar& s) { return to_string(s); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Polyhedron& p) {
  Json out;
  out["dim"] = p.ambient_dim();
  out["inequalities"] = rows_to_json(p.hrep().inequalities);
  out["equalities"] = rows_to_json(p.hrep().equalities);
  return out;
}

Json to_json(const Complex& c) {
  Json out;
  out["dim"] = c.ambient_dim;
  Json cells = Json::array();
  for (const auto& m : c.maximal) cells.push_back(to_json(m));
  out["cells"] = cells;
  return out;
}

Json to_json(const SubdivisionSeed& seed) {
  Json out;
  out["class"] = seed.cls.to_string();
  out["pi"] = to_json(seed.pi);
  Json phi = Json::array();
  for (const auto& c : seed.phi.maximal) phi.push_back(c.hash());
  out["phi"] = phi;
  out["sigma"] = to_json(seed.sigma);
  Json rays = Json::array();
  for (const auto& r : seed.ray_choices)
    rays.push_back(Json{{"cone", r.cone.hash()}, {"generator", to_json(r.v)}, {"step", to_json(r.gamma)}});
  out["rays"] = rays;
  return out;
}

Json to_json(const WindowReport& r) {
  Json out;
  out["ok"] = r.ok();
  out["cells"] = r.cell_count;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  out["checks"] = checks;
  return out;
}

Json to_json(const std::vector<MaterializedCell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells)
    out.push_back(Json{{"id", c.id.to_string()}, {"hash", c.geometry.hash()}, {"polyhedron", to_json(c.geometry)}});
  return out;
}

Scalar scalar_from_json(const Json& j, const std::string& path, Strictness mode) {
  require(j.is_string(), path, "expected a rational string \"p/q\"");
  try {
    return parse_scalar(j.get<std::string>(), mode == Strictness::kStrict);
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

Vec vec_from_json(const Json& j, const std::string& path, Strictness mode) {
  require(j.is_array(), path, "expected an array of rationals");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(scalar_from_json(j[i], path + "[" + std::to_string(i) + "]", mode));
  return v;
}

Polyhedron polyhedron_from_json(const Json& j, const std::string& path, Strictness mode) {
  check_keys(j, path, {"dim", "inequalities"}, {"equalities"}, mode);
  std::size_t d = dim_from_json(j["dim"], path + ".dim");
  LinearSystem sys(d);
  sys.inequalities = rows_from_json(j["inequalities"], path + ".inequalities", d, mode);
  if (j.contains("equalities")) sys.equalities = rows_from_json(j["equalities"], path + ".equalities", d, mode);
  try {
    return Polyhedron::from_system(sys);
  } catch (const EmptyPolyhedron&) {
    throw SchemaError(path, "polyhedron is empty");
  }
}

namespace {

std::vector<Polyhedron> cells_from_json(const Json& j, const std::string& path, std::size_t& d, Strictness mode) {
  check_keys(j, path, {"dim", "cells"}, {}, mode);
  d = dim_from_json(j["dim"], path + ".dim");
  require(j["cells"].is_array(), path + ".cells", "expected an array of polyhedra");
  std::vector<Polyhedron> cells;
  for (std::size_t i = 0; i < j["cells"].size(); ++i) {
    const std::string p = path + ".cells[" + std::to_string(i) + "]";
    cells.push_back(polyhedron_from_json(j["cells"][i], p, mode));
    require(cells.back().ambient_dim() == d, p + ".dim", "cell dimension differs from the complex");
  }
  return cells;
}

}  // namespace

Complex complex_from_json(const Json& j, const std::string& path, Strictness mode) {
  std::size_t d = 0;
  auto cells = cells_from_json(j, path, d, mode);
  return validate_complex(d, cells);
}

Fan fan_from_json(const Json& j, const std::string& path, Strictness mode) {
  std::size_t d = 0;
  auto cells = cells_from_json(j, path, d, mode);
  if (cells.empty()) return zero_fan(d);
  return validate_fan(d, cells);
}

SubdivisionSeed seed_from_json(const Json& j, const std::string& path, Strictness mode) {
  check_keys(j, path, {"class", "pi", "phi", "sigma", "rays"}, {}, mode);
  SubdivisionSeed seed;
  require(j["class"].is_string(), path + ".class", "expected a class string");
  try {
    seed.cls = ClassSpec::parse(j["class"].get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(path + ".class", e.what());
  }
  seed.pi = complex_from_json(j["pi"], path + ".pi", mode);
  seed.sigma = fan_from_json(j["sigma"], path + ".sigma", mode);
  const std::size_t d = seed.pi.ambient_dim;
  require(seed.sigma.ambient_dim == d, path + ".sigma.dim", "fan dimension differs from the complex");
  std::map<std::string, Polyhedron> by_hash;
  for (const auto& c : seed.pi.cells()) {
    by_hash.emplace(c.hash(), c);
    auto rec = recession_cone(c);
    by_hash.emplace(rec.hash(), rec);
  }
  require(j["phi"].is_array(), path + ".phi", "expected an array of cell hashes");
  seed.phi.ambient_dim = d;
  for (std::size_t i = 0; i < j["phi"].size(); ++i) {
    const std::string p = path + ".phi[" + std::to_string(i) + "]";
    require(j["phi"][i].is_string(), p, "expected a cell hash");
    auto it = by_hash.find(j["phi"][i].get<std::string>());
    require(it != by_hash.end(), p, "hash does not name a cell of pi");
    seed.phi.maximal.push_back(it->second);
  }
  seed.phi = validate_complex(d, seed.phi.maximal);
  require(j["rays"].is_array(), path + ".rays", "expected an array of ray choices");
  for (std::size_t i = 0; i < j["rays"].size(); ++i) {
    const std::string p = path + ".rays[" + std::to_string(i) + "]";
    const Json& r = j["rays"][i];
    check_keys(r, p, {"cone", "generator", "step"}, {}, mode);
    require(r["cone"].is_string(), p + ".cone", "expected a cone hash");
    auto it = by_hash.find(r["cone"].get<std::string>());
    require(it != by_hash.end(), p + ".cone", "hash does not name a recession cone of pi");
    RayChoice rc{it->second, vec_from_json(r["generator"], p + ".generator", mode),
                 scalar_from_json(r["step"], p + ".step", mode)};
    require(rc.v.size() == d, p + ".generator", "wrong length");
    require(sgn(rc.gamma) > 0, p + ".step", "step must be positive");
    seed.ray_choices.push_back(std::move(rc));
  }
  std::vector<Polyhedron> cones = seed.sigma.maximal;
  for (const auto& c : seed.pi.cells()) cones.push_back(recession_cone(c));
  try {
    seed.sigma_prime = validate_fan(d, cones);
  } catch (const Error&) {
    seed.sigma_prime = seed.sigma;
  }
  seed.compile();
  return seed;
}

Document make_document(const std::string& kind, Json payload) { return Document{"1", kind, std::move(payload)}; }

Document parse_document(const std::string& text, Strictness mode) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  check_keys(j, "$", {"schema_version", "kind", "payload"}, {}, mode);
  require(j["schema_version"] == "1", "$.schema_version", "unsupported schema version");
  require(j["kind"].is_string(), "$.kind", "expected a string");
  Document doc{"1", j["kind"].get<std::string>(), j["payload"]};
  static const std::set<std::string> kinds = {"complex", "fan", "seed", "window", "report"};
  require(kinds.count(doc.kind), "$.kind", "unknown kind \"" + doc.kind + "\"");
  const std::string p = "$.payload";
  if (doc.kind == "complex") complex_from_json(doc.payload, p, mode);
  else if (doc.kind == "fan") fan_from_json(doc.payload, p, mode);
  else if (doc.kind == "seed") seed_from_json(doc.payload, p, mode);
  else if (doc.kind == "window") {
    check_keys(doc.payload, p, {"lo", "hi"}, {}, mode);
    make_box(vec_from_json(doc.payload["lo"], p + ".lo", mode), vec_from_json(doc.payload["hi"], p + ".hi", mode));
  }
  return doc;
}

std::string serialize(const Document& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = doc.kind;
  j["payload"] = doc.payload;
  return j.dump(2) + "\n";
}

Polyhedron parse_window(const std::string& text) {
  Vec lo, hi;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw Error("window \"" + text + "\": expected lo:hi per coordinate");
    lo.push_back(parse_scalar(part.substr(0, colon), false));
    hi.push_back(parse_scalar(part.substr(colon + 1), false));
    if (hi.back() < lo.back()) throw Error("window \"" + text + "\": empty interval");
  }
  if (lo.empty()) throw Error("empty window");
  return make_box(lo, hi);
}

Vec parse_point(const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(parse_scalar(part, false));
  if (v.empty()) throw Error("empty point");
  return v;
}

std::string render_svg(const SubdivisionSeed& seed, const Polyhedron& window) {
  if (seed.ambient_dim() != 2) throw DimensionMismatch("render_svg: only planar seeds can be drawn");
  if (!window.is_bounded()) throw PreconditionViolation("render_svg: window must be bounded");
  Vec lo = window.vrep().vertices[0], hi = lo;
  for (const auto& v : window.vrep().vertices)
    for (std::size_t i = 0; i < 2; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  const double px = 60, pad = 10;
  const double x0 = lo[0].get_d(), top = hi[1].get_d();
  const double w = Scalar(hi[0] - lo[0]).get_d() * px + 2 * pad;
  const double h = Scalar(hi[1] - lo[1]).get_d() * px + 2 * pad;
  auto sx = [&](const Scalar& x) { return (x.get_d() - x0) * px + pad; };
  auto sy = [&](const Scalar& y) { return (top - y.get_d()) * px + pad; };
  std::set<std::string> original;
  for (const auto& c : seed.phi_cells) original.insert(c.key());
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  for (const auto& c : cells_in_window(seed, window)) {
    auto clipped = intersect(c.geometry, window);
    if (!clipped) continue;
    auto verts = clipped->vrep().vertices;
    const bool phi = original.count(c.geometry.key()) > 0;
    const std::string id = c.id.to_string();
    if (clipped->dim() == 0) {
      os << "  <circle data-id=\"" << id << "\" cx=\"" << sx(verts[0][0]) << "\" cy=\"" << sy(verts[0][1])
         << "\" r=\"2\" fill=\"black\"/>\n";
      continue;
    }
    Scalar cx = 0, cy = 0;
    for (const auto& v : verts) cx += v[0], cy += v[1];
    cx /= static_cast<long>(verts.size());
    cy /= static_cast<long>(verts.size());
    auto angle = [&](const Vec& a) { return std::atan2(a[1].get_d() - cy.get_d(), a[0].get_d() - cx.get_d()); };
    std::sort(verts.begin(), verts.end(), [&](const Vec& a, const Vec& b) { return angle(a) < angle(b); });
    if (clipped->dim() == 1) {
      os << "  <line data-id=\"" << id << "\" x1=\"" << sx(verts[0][0]) << "\" y1=\"" << sy(verts[0][1]) << "\" x2=\""
         << sx(verts[1][0]) << "\" y2=\"" << sy(verts[1][1]) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      continue;
    }
    os << "  <polygon data-id=\"" << id << "\" points=\"";
    for (std::size_t i = 0; i < verts.size(); ++i) os << (i ? " " : "") << sx(verts[i][0]) << "," << sy(verts[i][1]);
    os << "\" fill=\"" << (phi ? "#d9d9d9" : "#ffffff") << "\" stroke=\"none\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

Polyhedron half(const std::string& text) {
  // "a,b>=c" style rows separated by ';'
  LinearSystem sys(2);
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    auto ge = row.find(">=");
    auto le = row.find("<=");
    bool lower = ge != std::string::npos;
    auto at = lower ? ge : le;
    Vec n = parse_point(row.substr(0, at));
    Scalar b = parse_scalar(row.substr(at + 2), false);
    if (lower) sys.ge(n, b);
    else sys.le(n, b);
  }
  return Polyhedron::from_system(sys);
}

}  // namespace

std::vector<std::string> bundled_example_names() { return {"one", "three", "square-zonotopal"}; }

ExampleBundle bundled_example(const std::string& name) {
  ExampleBundle b;
  if (name == "one") {
    std::vector<Polyhedron> all = {half("1,0>=0;0,1>=0"), half("1,0<=0;0,1>=0"), half("1,0<=0;0,1<=0"),
                                   half("1,0>=0;0,1<=0")};
    b.phi = validate_complex(2, {all[1], all[2], all[3]});
    b.pi = validate_complex(2, all);
    b.sigma = recession_fan(b.phi);
    b.cls = "gamma:1";
  } else if (name == "three") {
    std::vector<Polyhedron> all = {half("1,0>=1;0,1>=0"),         half("1,0<=1;1,0>=0;0,1>=0"), half("1,0<=0;0,1>=0"),
                                   half("1,0<=0;0,1<=0"),         half("1,0<=1;1,0>=0;0,1<=0"), half("1,0>=1;0,1<=0")};
    b.phi = validate_complex(2, {all[3], all[4], all[5]});
    b.pi = validate_complex(2, all);
    b.sigma = recession_fan(b.phi);
    b.cls = "gamma:1";
  } else if (name == "square-zonotopal") {
    b.phi = validate_complex(2, {half("1,0>=-1;1,0<=1;0,1>=-1;0,1<=1")});
    b.sigma = zero_fan(2);
    b.cls = "zonotopal";
  } else {
    throw Error("unknown example \"" + name + "\"");
  }
  return b;
}

}  // namespace lfc
