// Runs every acceptance criterion and prints one PASS/FAIL line for each.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "chain_oracle.hpp"
#include "lfc/completion.hpp"
#include "lfc/io.hpp"
#include "lfc/lazy_complex.hpp"
#include "lfc/toric.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"

using namespace lfc;

namespace {

// pinned limits, seconds
constexpr double kQuadrantsLimit = 5;
constexpr double kStripsLimit = 10;
constexpr double kPolytopalCaseLimit = 30;
constexpr double kFanCaseLimit = 10;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::set<std::string> keys_of(const std::vector<MaterializedCell>& cells) {
  std::set<std::string> out;
  for (const auto& c : cells) out.insert(c.geometry.key());
  return out;
}

void require_window(Outcome& o, const SubdivisionSeed& seed, const Polyhedron& w, const std::string& label) {
  auto rep = validate_window(seed, w);
  if (!rep.ok()) o.fail(label + ": " + rep.failure()->name + " " + rep.failure()->witness);
}

Polyhedron random_box(std::mt19937& rng) {
  std::uniform_int_distribution<int> u(-4, 2), len(1, 3);
  int x = u(rng), y = u(rng);
  return make_box({x, y}, {x + len(rng), y + len(rng)});
}

Outcome quadrants_example() {
  Outcome o;
  auto t0 = Clock::now();
  auto ex = bundled_example("one");
  auto seed = complete_locally_finite(ex.phi, ex.sigma, ClassSpec::parse(ex.cls));
  auto w = make_box({-3, -3}, {3, 3});
  auto rep = validate_window(seed, w);
  if (rep.checks.size() != 6 || !rep.ok()) o.fail("window check failed");
  auto got = keys_of(cells_in_window(seed, w));
  auto small = oracle::chain_cells_in(seed, w, 5), large = oracle::chain_cells_in(seed, w, 10);
  if (small != large) o.fail("oracle not stable between chain bounds 5 and 10");
  if (got != large) o.fail("cell set differs from the chain oracle");
  double s = since(t0);
  if (s >= kQuadrantsLimit) o.fail("runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(got.size()) + " cells equal the oracle, " + std::to_string(s) + " s";
  return o;
}

Outcome strips_example() {
  Outcome o;
  auto t0 = Clock::now();
  auto ex = bundled_example("three");
  auto seed = build_seed(*ex.pi, ex.phi, ex.sigma, ClassSpec::parse(ex.cls));
  for (const auto& w : {make_box({-3, -3}, {3, 3}), make_box({0, 0}, {4, 4})}) {
    require_window(o, seed, w, w.describe());
    auto got = keys_of(cells_in_window(seed, w));
    if (got != oracle::chain_cells_in(seed, w, 8)) o.fail("cell set differs from the chain oracle on " + w.describe());
  }
  std::set<std::string> recs, sigma;
  for (const auto& c : cells_in_window(seed, make_box({-4, -4}, {4, 4}))) recs.insert(recession_cone(c.geometry).key());
  for (const auto& s : ex.sigma.cells()) sigma.insert(s.key());
  if (recs != sigma) o.fail("recession cones on the radius-4 window differ from the fan");
  auto computed = complete_locally_finite(ex.phi, ex.sigma, ClassSpec::parse(ex.cls));
  require_window(o, computed, make_box({-3, -3}, {3, 3}), "computed completion");
  double s = since(t0);
  if (s >= kStripsLimit) o.fail("runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail = "both windows valid, recession cones equal the fan, " + std::to_string(s) + " s";
  return o;
}

Outcome gamma_rational_suite() {
  Outcome o;
  std::mt19937 rng(1001);
  const auto cls = ClassSpec::parse("gamma:1/2");
  int windows = 0;
  for (int i = 0; i < 50 && o.pass; ++i) {
    Complex phi = gen::random_rational_complex(rng, 6, Scalar(1, 2), 4);
    try {
      auto seed = complete_locally_finite(phi, complete_fan(recession_fan(phi)), cls);
      for (int k = 0; k < 3; ++k, ++windows) require_window(o, seed, random_box(rng), "case " + std::to_string(i));
    } catch (const Error& e) {
      o.fail("case " + std::to_string(i) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = "50 complexes, " + std::to_string(windows) + " windows, zero failures";
  return o;
}

Outcome polytopal_suite() {
  Outcome o;
  std::mt19937 rng(2002);
  double worst = 0;
  for (int i = 0; i < 50 && o.pass; ++i) {
    Complex phi = gen::random_polytopal_complex(rng, 6, 1, 3);
    auto t0 = Clock::now();
    try {
      auto seed = polytopal_completion(phi);
      for (int k = 0; k < 3; ++k) {
        auto w = random_box(rng);
        require_window(o, seed, w, "case " + std::to_string(i));
        for (const auto& c : cells_in_window(seed, w))
          if (!c.geometry.is_bounded()) o.fail("unbounded cell " + c.geometry.describe());
      }
      for (const auto& c : phi.maximal)
        if (!seed.index_of(c)) o.fail("original cell lost: " + c.describe());
    } catch (const Error& e) {
      o.fail("case " + std::to_string(i) + ": " + e.what());
    }
    worst = std::max(worst, since(t0));
  }
  if (worst >= kPolytopalCaseLimit) o.fail("slowest case " + std::to_string(worst) + " s");
  if (o.pass) o.detail = "50 complexes, slowest case " + std::to_string(worst) + " s";
  return o;
}

Outcome zonotopal_suite() {
  Outcome o;
  auto box = [](int x0, int x1, int y0, int y1) {
    return Polyhedron::from_vertices(2, {{x0, y0}, {x1, y0}, {x0, y1}, {x1, y1}});
  };
  std::vector<std::pair<std::string, Complex>> inputs = {
      {"square", validate_complex(2, {box(-1, 1, -1, 1)})},
      {"two squares", validate_complex(2, {box(0, 1, 0, 1), box(1, 2, 0, 1)})},
      {"L of three squares", validate_complex(2, {box(0, 1, 0, 1), box(1, 2, 0, 1), box(0, 1, 1, 2)})}};
  int cells = 0;
  for (const auto& [name, phi] : inputs) {
    try {
      auto seed = zonotopal_completion(phi);
      for (const auto& w : {make_box({-4, -4}, {4, 4}), make_box({1, -2}, {5, 3})}) {
        require_window(o, seed, w, name);
        for (const auto& c : cells_in_window(seed, w)) {
          ++cells;
          if (!c.geometry.is_bounded() || !is_zonotopal(c.geometry)) o.fail(name + ": not a zonotope " + c.geometry.describe());
        }
      }
    } catch (const Error& e) {
      o.fail(name + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(cells) + " window cells, all zonotopes";
  return o;
}

Polyhedron random_unbounded(std::mt19937& rng, std::size_t d) {
  for (;;) {
    std::vector<Vec> verts, rays;
    for (std::size_t k = 0; k < d; ++k) verts.push_back(oracle::random_vec(rng, d, -3, 3));
    std::uniform_int_distribution<int> nr(1, static_cast<int>(d));
    int n = nr(rng);
    for (int k = 0; k < n; ++k) rays.push_back(gen::random_ray(rng, d, 2));
    auto p = Polyhedron::from_vertices(d, verts, rays);
    if (p.is_pointed() && !p.is_bounded()) return p;
  }
}

Outcome decomposition_suite() {
  Outcome o;
  std::mt19937 rng(3003);
  std::uniform_int_distribution<int> coef(0, 3);
  int n = 0;
  for (; n < 1000 && o.pass; ++n) {
    const std::size_t d = n % 2 ? 3 : 2;
    auto p = random_unbounded(rng, d);
    auto rec = recession_cone(p);
    Vec v = ray_generator(relint_ray(rec, ClassSpec{}));
    Vec w = p.relint_point();
    for (const auto& x : p.vrep().vertices) w = add(w, scale(sub(x, p.vrep().vertices[0]), Scalar(coef(rng), 5)));
    for (const auto& r : p.vrep().rays) w = add(w, scale(r, coef(rng)));
    if (!p.contains(w)) w = p.relint_point();
    auto dec = decompose_by_ray(p, v, w);
    if (add(dec.b, dec.r) != w || dec.r != scale(v, dec.t) || sgn(dec.t) < 0) {
      o.fail("b + r != w at " + to_string(w));
      break;
    }
    if (recession_cone(p.carrier_face(dec.b)).dim() >= rec.dim()) o.fail("b is not on the boundary part");
    for (const auto& f : p.faces()) {
      if (recession_cone(f.polyhedron).dim() >= rec.dim()) continue;
      // every t with w - t v in F
      LinearSystem sys(1);
      for (const auto& r : f.polyhedron.hrep().inequalities)
        sys.ge({-dot(r.normal, v)}, r.offset - dot(r.normal, w));
      for (const auto& r : f.polyhedron.hrep().equalities) sys.eq({-dot(r.normal, v)}, r.offset - dot(r.normal, w));
      for (const Scalar& dir : {Scalar(1), Scalar(-1)}) {
        auto lp = lp_minimize(sys, {dir});
        if (lp.status == LpResult::Status::kInfeasible) break;
        if (!lp.optimal() || lp.witness[0] != dec.t) o.fail("alternative decomposition through " + f.polyhedron.describe());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " instances, decomposition unique";
  return o;
}

Outcome fan_suite() {
  Outcome o;
  std::mt19937 rng(4004);
  double worst = 0;
  for (int i = 0; i < 300 && o.pass; ++i) {
    const std::size_t d = i < 200 ? 2 : 3;
    Fan f = gen::random_fan(rng, d, d == 2 ? 6 : 8);
    auto t0 = Clock::now();
    try {
      Fan c = complete_fan(f);
      validate_fan(d, c.maximal);
      if (!c.is_complete()) o.fail("open facet remains");
      for (const auto& m : f.maximal)
        if (!c.has_cell(m)) o.fail("input cone lost: " + m.describe());
    } catch (const Error& e) {
      o.fail(std::string("case ") + std::to_string(i) + ": " + e.what());
    }
    if (d == 3) worst = std::max(worst, since(t0));
  }
  if (worst >= kFanCaseLimit) o.fail("slowest 3-d case " + std::to_string(worst) + " s");
  if (o.pass) o.detail = "200 planar + 100 spatial fans, slowest 3-d case " + std::to_string(worst) + " s";
  return o;
}

Outcome toric_suite() {
  Outcome o;
  std::mt19937 rng(5005);
  int checked = 0;
  for (int i = 0; i < 200 && o.pass; ++i) {
    const std::size_t d = i % 2 ? 3 : 2;
    ToricSpace t(complete_fan(gen::random_fan(rng, d, 4)));
    const auto& cones = t.strata();
    std::uniform_int_distribution<std::size_t> pick(0, cones.size() - 1);
    const Polyhedron& rec = cones[pick(rng)];
    std::vector<Vec> verts;
    for (std::size_t k = 0; k < d; ++k) verts.push_back(oracle::random_vec(rng, d, -3, 3));
    auto p = Polyhedron::from_vertices(d, verts, rec.vrep().rays);
    try {
      for (const auto& piece : closure_in_toric(p, t)) {
        Matrix m = t.quotient(piece.tau).matrix();
        if (recession_cone(piece.image) != affine_image(recession_cone(p), m, zeros(m.size())))
          o.fail("rec of the image differs from the image of rec for " + piece.tau.describe());
        for (const auto& f : p.faces()) {
          if (!is_face(piece.tau, recession_cone(f.polyhedron))) continue;
          auto img = face_image_in_quotient(f.polyhedron, p, piece.tau);
          if (!is_face(img.polyhedron, piece.image)) o.fail("face image is not a face: " + f.polyhedron.describe());
          ++checked;
        }
      }
    } catch (const Error& e) {
      o.fail(e.what());
    }
  }
  if (o.pass) o.detail = "200 pairs, " + std::to_string(checked) + " face images checked";
  return o;
}

Outcome fault_suite() {
  Outcome o;
  auto one = bundled_example("one");
  auto three = bundled_example("three");
  std::vector<SubdivisionSeed> bases = {
      build_seed(*one.pi, one.phi, one.sigma, ClassSpec::parse("gamma:1")),
      build_seed(*three.pi, three.phi, three.sigma, ClassSpec::parse("gamma:1"))};
  const auto window = make_box({-3, -3}, {3, 3});
  std::mt19937 rng(6006);
  int injected = 0, caught = 0;
  auto record = [&](const WindowReport& rep, const std::string& what) {
    ++injected;
    if (!rep.ok() && !rep.failure()->witness.empty()) ++caught;
    else o.fail("missed fault: " + what);
  };
  const std::vector<Scalar> steps = {Scalar(1, 3), Scalar(1, 2), Scalar(2, 3), Scalar(3, 2), Scalar(5, 4)};
  for (int i = 0; i < 10; ++i) {
    auto seed = bases[i % 2];
    auto& rc = seed.ray_choices[i % seed.ray_choices.size()];
    rc.gamma = steps[i % steps.size()];
    seed.compile();
    record(validate_window(seed, window), "step " + to_string(rc.gamma));
  }
  for (int i = 0; i < 10; ++i) {
    auto seed = bases[i % 2];
    auto& rc = seed.ray_choices[i % seed.ray_choices.size()];
    // directions outside the recession cone; an edge of the cone can still
    // give a valid subdivision, so it does not count as a fault
    std::vector<Vec> wrong;
    for (const Vec& shift : std::vector<Vec>{{-3, 0}, {3, 0}, {0, -3}, {-3, -3}})
      if (!rc.cone.contains(add(rc.v, shift))) wrong.push_back(add(rc.v, shift));
    wrong.push_back(neg(rc.v));
    rc.v = wrong[static_cast<std::size_t>(i) % wrong.size()];
    seed.compile();
    record(validate_window(seed, window), "ray " + to_string(rc.v));
  }
  for (int i = 0; i < 10; ++i) {
    const auto& seed = bases[i % 2];
    if (i < 5) {
      auto cells = cells_in_window(seed, window);
      std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
      auto victim = cells.begin() + static_cast<long>(pick(rng));
      std::string what = "dropped " + victim->geometry.describe();
      cells.erase(victim);
      record(validate_cells(seed, window, cells), what);
    } else {
      auto mutated = seed;
      for (auto& info : mutated.pi_cells)
        if (!info.pieces.empty()) {
          info.pieces.erase(info.pieces.begin() + (i % static_cast<int>(info.pieces.size())));
          break;
        }
      record(validate_window(mutated, window), "dropped boundary piece");
    }
  }
  if (o.pass) o.detail = std::to_string(caught) + "/" + std::to_string(injected) + " faults caught with witnesses";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"quadrant example end to end", quadrants_example},
      {"strip example end to end", strips_example},
      {"gamma-rational completions", gamma_rational_suite},
      {"polytopal completions", polytopal_suite},
      {"zonotopal completions", zonotopal_suite},
      {"ray decomposition uniqueness", decomposition_suite},
      {"fan completion contract", fan_suite},
      {"toric closure formula", toric_suite},
      {"fault detection", fault_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
