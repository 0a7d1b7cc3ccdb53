#include "lfc/completion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "lfc/lazy_complex.hpp"

namespace lfc {

NotZonotopal::NotZonotopal(Polyhedron c, Polyhedron f)
    : PreconditionViolation("cell " + c.describe() + " is not zonotopal: 2-face " + f.describe() +
                            " is not centrally symmetric"),
      cell(std::move(c)),
      face(std::move(f)) {}

namespace {

Vec primitive_vec(const Vec& v) { return to_vec(primitive(v)); }

// ---------------------------------------------------------------------------
// plane

Scalar cross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

int half_of(const Vec& a) { return (sgn(a[1]) > 0 || (sgn(a[1]) == 0 && sgn(a[0]) > 0)) ? 0 : 1; }

bool angle_less(const Vec& a, const Vec& b) {
  if (half_of(a) != half_of(b)) return half_of(a) < half_of(b);
  return sgn(cross(a, b)) > 0;
}

bool same_direction(const Vec& a, const Vec& b) { return sgn(cross(a, b)) == 0 && sgn(dot(a, b)) > 0; }

// c lies in the open counterclockwise arc from a to b
bool strictly_inside(const Vec& a, const Vec& b, const Vec& c) {
  if (same_direction(a, b)) return !same_direction(c, a);
  int ab = sgn(cross(a, b));
  if (ab > 0) return sgn(cross(a, c)) > 0 && sgn(cross(c, b)) > 0;
  if (ab == 0) return sgn(cross(a, c)) > 0;
  return !(sgn(cross(b, c)) >= 0 && sgn(cross(c, a)) >= 0);
}

Fan complete_fan_line(const Fan& d) {
  std::vector<Polyhedron> cones = d.maximal;
  cones.push_back(Polyhedron::cone(1, {{1}}));
  cones.push_back(Polyhedron::cone(1, {{-1}}));
  return validate_fan(1, cones);
}

Fan complete_fan_plane(const Fan& d) {
  std::vector<Vec> rays;
  for (const auto& c : d.cells())
    if (c.dim() == 1) rays.push_back(ray_generator(c));
  auto covered = [&](const Vec& a, const Vec& b) {
    return sgn(cross(a, b)) > 0 && d.has_cell(Polyhedron::cone(2, {a, b}));
  };
  const std::vector<Vec> fillers = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (;;) {
    std::sort(rays.begin(), rays.end(), angle_less);
    if (rays.empty()) {
      rays.push_back(fillers[0]);
      continue;
    }
    bool inserted = false;
    for (std::size_t i = 0; i < rays.size() && !inserted; ++i) {
      const Vec& a = rays[i];
      const Vec& b = rays[(i + 1) % rays.size()];
      if (rays.size() > 1 && (covered(a, b) || sgn(cross(a, b)) > 0)) continue;
      std::vector<Vec> options = fillers;
      options.push_back(primitive_vec(add(a, b)));
      for (const auto& c : options)
        if (!is_zero(c) && strictly_inside(a, b, c)) {
          rays.push_back(c);
          inserted = true;
          break;
        }
      if (!inserted) throw CompletionNotFound("no filler ray for a reflex gap");
    }
    if (!inserted) break;
  }
  std::vector<Polyhedron> cones = d.maximal;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Vec& a = rays[i];
    const Vec& b = rays[(i + 1) % rays.size()];
    if (!covered(a, b)) cones.push_back(Polyhedron::cone(2, {a, b}));
  }
  return validate_fan(2, cones);
}

// ---------------------------------------------------------------------------
// advancing front of pyramids

double angle_between(const Vec& a, const Vec& b) {
  double ab = 0, aa = 0, bb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double x = a[i].get_d(), y = b[i].get_d();
    ab += x * y;
    aa += x * x;
    bb += y * y;
  }
  double c = ab / std::sqrt(aa * bb);
  return std::acos(std::max(-1.0, std::min(1.0, c)));
}

struct FrontOptions {
  // fresh candidate rays for extending a base cone; the outward normal is
  // empty when lifting a lower-dimensional cone
  std::function<std::vector<Vec>(const Polyhedron&, const std::optional<Vec>&, int level)> fresh;
  std::function<bool(const Vec&)> allowed;
  int levels = 1;
  bool existing_first = true;
};

class FrontBuilder {
 public:
  FrontBuilder(std::size_t d, std::vector<Polyhedron> cones, FrontOptions opt)
      : d_(d), cones_(std::move(cones)), opt_(std::move(opt)) {
    for (const auto& c : cones_)
      for (const auto& r : c.vrep().rays) add_ray(r);
  }

  std::vector<Polyhedron> run() {
    for (std::size_t i = 0; i < cones_.size(); ++i)
      while (cones_[i].dim() < d_) cones_[i] = lift(i);
    for (std::size_t steps = 0;; ++steps) {
      if (steps > 20000) throw CompletionNotFound("advancing front did not terminate");
      auto fronts = open_facets();
      if (fronts.empty()) return cones_;
      if (!extend_any(fronts)) throw CompletionNotFound("no valid pyramid over any open facet");
    }
  }

 private:
  struct Front {
    Polyhedron facet;
    Vec outward;
  };

  void add_ray(const Vec& r) {
    Vec p = primitive_vec(r);
    if (ray_keys_.insert(to_string(p)).second) rays_.push_back(p);
  }

  bool valid(const Polyhedron& k) const {
    for (const auto& m : cones_)
      if (intersection_defect(k, m)) return false;
    return true;
  }

  std::vector<Vec> ranked(const Polyhedron& base, const std::optional<Vec>& outward, int level) const {
    const auto& gens = base.vrep().rays;
    auto ok = [&](const Vec& c) {
      if (!opt_.allowed(c)) return false;
      if (outward) return sgn(dot(*outward, c)) > 0;
      Matrix m = gens;
      m.push_back(c);
      return rank(m) == gens.size() + 1;
    };
    auto score = [&](const Vec& c) {
      double s = 0;
      for (const auto& g : gens) s = std::max(s, angle_between(g, c));
      if (gens.empty()) s = angle_between(c, Vec(c.size(), 1));
      return s;
    };
    std::vector<std::pair<double, Vec>> existing, fresh;
    for (const auto& r : rays_)
      if (ok(r)) existing.emplace_back(score(r), r);
    std::set<std::string> seen = ray_keys_;
    for (const auto& c : opt_.fresh(base, outward, level)) {
      if (is_zero(c)) continue;
      Vec p = primitive_vec(c);
      if (!seen.insert(to_string(p)).second || !ok(p)) continue;
      fresh.emplace_back(score(p), p);
    }
    auto by_score = [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return x.second < y.second;
    };
    if (!opt_.existing_first) {
      existing.insert(existing.end(), fresh.begin(), fresh.end());
      fresh.clear();
    }
    std::sort(existing.begin(), existing.end(), by_score);
    std::sort(fresh.begin(), fresh.end(), by_score);
    std::vector<Vec> out;
    for (auto& e : existing) out.push_back(std::move(e.second));
    for (auto& e : fresh) out.push_back(std::move(e.second));
    return out;
  }

  Polyhedron pyramid(const Polyhedron& base, const Vec& c) const {
    auto gens = base.vrep().rays;
    gens.push_back(c);
    return Polyhedron::cone(d_, gens);
  }

  Polyhedron lift(std::size_t i) {
    const Polyhedron base = cones_[i];
    for (int level = 0; level < opt_.levels; ++level)
      for (const auto& c : ranked(base, std::nullopt, level)) {
        Polyhedron k = pyramid(base, c);
        if (k.dim() != base.dim() + 1 || !is_face(base, k)) continue;
        cones_[i] = k;
        bool ok = true;
        for (std::size_t j = 0; j < cones_.size() && ok; ++j)
          if (j != i && intersection_defect(k, cones_[j])) ok = false;
        cones_[i] = base;
        if (!ok) continue;
        add_ray(c);
        return k;
      }
    throw CompletionNotFound("cannot extend cone " + base.describe());
  }

  std::vector<Front> open_facets() const {
    std::map<std::string, std::pair<Front, int>> count;
    for (const auto& m : cones_)
      for (const auto& f : m.facets()) {
        auto it = count.find(f.polyhedron.key());
        if (it != count.end()) {
          ++it->second.second;
          continue;
        }
        Vec n = f.polyhedron.hrep().equalities.at(0).normal;
        for (const auto& r : m.vrep().rays)
          if (sgn(dot(n, r)) != 0) {
            if (sgn(dot(n, r)) > 0) n = neg(n);
            break;
          }
        count.emplace(f.polyhedron.key(), std::make_pair(Front{f.polyhedron, n}, 1));
      }
    std::vector<Front> out;
    for (auto& [k, e] : count)
      if (e.second == 1) out.push_back(std::move(e.first));
    return out;
  }

  bool extend_any(const std::vector<Front>& fronts) {
    for (int level = 0; level < opt_.levels; ++level)
      for (const auto& f : fronts)
        for (const auto& c : ranked(f.facet, f.outward, level)) {
          Polyhedron k = pyramid(f.facet, c);
          if (!valid(k)) continue;
          cones_.push_back(k);
          add_ray(c);
          return true;
        }
    return false;
  }

  std::size_t d_;
  std::vector<Polyhedron> cones_;
  FrontOptions opt_;
  std::vector<Vec> rays_;
  std::set<std::string> ray_keys_;
};

void box_vectors(std::size_t d, int radius, std::vector<Vec>& out) {
  Vec v(d, -radius);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < d && v[i] == radius) v[i++] = -radius;
    if (i == d) break;
    v[i] += 1;
  }
}

std::vector<Polyhedron> run_front(std::size_t d, const std::vector<Polyhedron>& cones, FrontOptions opt) {
  try {
    return FrontBuilder(d, cones, opt).run();
  } catch (const CompletionNotFound&) {
    opt.existing_first = !opt.existing_first;
    return FrontBuilder(d, cones, opt).run();
  }
}

}  // namespace

Fan complete_fan(const Fan& d) {
  const std::size_t n = d.ambient_dim;
  if (!d.is_fan()) throw PreconditionViolation("complete_fan: input is not a fan");
  if (n == 0) return zero_fan(0);
  if (n == 1) return complete_fan_line(d);
  if (n == 2) return complete_fan_plane(d);
  if (d.is_complete()) return d;
  FrontOptions opt;
  opt.levels = 3;
  opt.allowed = [](const Vec&) { return true; };
  opt.fresh = [n](const Polyhedron& base, const std::optional<Vec>& outward, int level) {
    std::vector<Vec> out;
    box_vectors(n, level + 1, out);
    if (outward) out.push_back(*outward);
    Vec sum = zeros(n);
    for (const auto& r : base.vrep().rays) sum = add(sum, r);
    if (outward) out.push_back(add(sum, *outward));
    return out;
  };
  Fan out = validate_fan(n, run_front(n, d.maximal, opt));
  if (!out.is_complete()) throw CompletionNotFound("advancing front left an open facet");
  return out;
}

namespace {

Vec lift(const Vec& v, const Scalar& t) {
  Vec out = v;
  out.push_back(t);
  return out;
}

// grid points step·ℤᵈ in the bounding box of the vertices of Φ and the origin,
// widened by two steps
std::vector<Vec> lattice_candidates(const Complex& phi, const Scalar& step) {
  const std::size_t d = phi.ambient_dim;
  Vec lo = zeros(d), hi = zeros(d);
  for (const auto& c : phi.maximal)
    for (const auto& v : c.vrep().vertices)
      for (std::size_t i = 0; i < d; ++i) {
        if (v[i] < lo[i]) lo[i] = v[i];
        if (v[i] > hi[i]) hi[i] = v[i];
      }
  std::vector<long> from(d), to(d);
  for (std::size_t i = 0; i < d; ++i) {
    Scalar a = lo[i] / step, b = hi[i] / step;
    mpz_class f, c;
    mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    from[i] = f.get_si() - 2;
    to[i] = c.get_si() + 2;
  }
  std::vector<Vec> out;
  std::vector<long> k = from;
  for (;;) {
    Vec x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = step * k[i];
    out.push_back(lift(x, 1));
    std::size_t i = 0;
    while (i < d && k[i] == to[i]) k[i] = from[i], ++i;
    if (i == d) break;
    ++k[i];
  }
  return out;
}

}  // namespace

Complex complete_complex_finite(const Complex& phi, const Fan& sigma, const ClassSpec& cls) {
  const std::size_t d = phi.ambient_dim;
  if (sigma.ambient_dim != d) throw DimensionMismatch("complete_complex_finite: dimension mismatch");
  for (const auto& c : phi.maximal)
    if (!sigma.has_cell(recession_cone(c)))
      throw RecessionNotInSigma("recession cone of " + c.describe() + " is not in the fan");
  for (const auto& c : phi.cells())
    if (auto why = class_violation(c, cls)) throw ClassViolation(c, *why);
  if (phi.is_complete()) {
    std::vector<Polyhedron> cones = sigma.maximal;
    for (const auto& c : phi.cells()) cones.push_back(recession_cone(c));
    validate_fan(d, cones);
    return phi;
  }
  Fan full = complete_fan(sigma);
  Fan delta = cone_over_complex(phi, full);
  std::vector<Polyhedron> cones = delta.maximal;
  const Vec down = lift(zeros(d), -1);
  for (const auto& s : full.maximal) {
    std::vector<Vec> rays;
    for (const auto& r : s.vrep().rays) rays.push_back(lift(r, 0));
    rays.push_back(down);
    cones.push_back(Polyhedron::cone(d + 1, rays));
  }
  cones = validate_fan(d + 1, cones).maximal;
  std::set<std::string> floor;
  for (const auto& c : cones)
    for (const auto& r : c.vrep().rays)
      if (sgn(r[d]) == 0) floor.insert(to_string(r));
  const std::vector<Vec> grid = lattice_candidates(phi, cls.ladder_step());
  FrontOptions opt;
  opt.allowed = [&](const Vec& c) { return sgn(c[d]) > 0 || (sgn(c[d]) == 0 && floor.count(to_string(c))); };
  opt.fresh = [&](const Polyhedron&, const std::optional<Vec>&, int) { return grid; };
  auto built = run_front(d + 1, cones, opt);
  std::vector<Polyhedron> upper;
  for (const auto& c : built)
    if (std::none_of(c.vrep().rays.begin(), c.vrep().rays.end(), [&](const Vec& r) { return sgn(r[d]) < 0; }))
      upper.push_back(c);
  Fan upper_fan;
  upper_fan.ambient_dim = d + 1;
  upper_fan.maximal = upper;
  Complex pi = height_slice(upper_fan, 1);
  if (!pi.is_complete()) throw CompletionNotFound("height-one slice is not complete");
  for (const auto& c : phi.maximal)
    if (!pi.has_cell(c)) throw CompletionNotFound("completion lost the cell " + c.describe());
  for (const auto& c : pi.cells())
    if (auto why = class_violation(c, cls)) throw ClassViolation(c, *why);
  return pi;
}

Complex star_shaped_extension(const Complex& phi, const Vec& w) {
  const std::size_t d = phi.ambient_dim;
  auto cert = is_star_shaped_around(phi, w);
  if (!cert.star_shaped) throw NotStarShaped("not star-shaped around " + to_string(w) + ": " + cert.violated);
  std::map<std::string, Polyhedron> boundary;
  for (const auto& f : cert.boundary_facets)
    for (const auto& g : f.faces()) boundary.emplace(g.polyhedron.key(), g.polyhedron);
  std::vector<Polyhedron> cells = phi.maximal;
  for (const auto& [k, f] : boundary) {
    std::vector<Vec> verts;
    for (const auto& v : f.vrep().vertices) verts.push_back(sub(v, w));
    Polyhedron u = Polyhedron::from_vertices(d, verts, verts);
    cells.push_back(translate(u, w));
  }
  Complex out = validate_complex(d, cells);
  if (!out.is_complete()) throw CompletionNotFound("star-shaped extension is not complete");
  return out;
}

SubdivisionSeed complete_locally_finite(const Complex& phi, const Fan& sigma, const ClassSpec& cls) {
  Complex pi = complete_complex_finite(phi, sigma, cls);
  Fan rec = recession_fan(pi);
  for (const auto& s : sigma.maximal)
    if (!rec.has_cell(s)) throw CompletionNotFound("recession fan of the completion misses " + s.describe());
  return build_seed(pi, phi, sigma, cls);
}

namespace {

Vec centroid(const std::vector<Vec>& pts) {
  Vec c = zeros(pts.at(0).size());
  for (const auto& p : pts) c = add(c, p);
  return scale(c, Scalar(1, static_cast<long>(pts.size())));
}

// Φ ⊕ unit cube in a coordinate complement of aff |Φ|
Complex thicken(const Complex& phi) {
  const std::size_t d = phi.ambient_dim;
  const Vec origin = phi.maximal.at(0).vrep().vertices.at(0);
  Matrix span;
  for (const auto& c : phi.maximal)
    for (const auto& v : c.vrep().vertices) span.push_back(sub(v, origin));
  auto pivots = rref(span);
  std::vector<Vec> cube = {zeros(d)};
  for (std::size_t j = 0; j < d; ++j) {
    if (std::count(pivots.begin(), pivots.end(), j)) continue;
    std::vector<Vec> next = cube;
    for (const auto& v : cube) next.push_back(add(v, unit(d, j)));
    cube = std::move(next);
  }
  Polyhedron q = Polyhedron::from_vertices(d, cube);
  std::vector<Polyhedron> cells;
  for (const auto& c : phi.maximal) cells.push_back(minkowski_sum(c, q));
  return validate_complex(d, cells);
}

}  // namespace

SubdivisionSeed zonotopal_completion(const Complex& phi, const std::optional<Vec>& center) {
  const std::size_t d = phi.ambient_dim;
  for (const auto& c : phi.maximal) {
    if (!c.is_bounded()) throw PreconditionViolation("zonotopal_completion: cell " + c.describe() + " is unbounded");
    if (auto f = asymmetric_two_face(c)) throw NotZonotopal(c, *f);
  }
  Complex work = phi.is_pure_full_dimensional() ? phi : thicken(phi);
  std::vector<Vec> tries;
  if (center) tries.push_back(*center);
  else {
    std::vector<Vec> all;
    for (const auto& c : work.maximal) {
      tries.push_back(centroid(c.vrep().vertices));
      for (const auto& v : c.vrep().vertices) all.push_back(v);
    }
    tries.push_back(centroid(all));
  }
  for (const auto& w : tries) {
    if (!is_star_shaped_around(work, w).star_shaped) continue;
    Complex pi = star_shaped_extension(work, w);
    return build_seed(pi, phi, zero_fan(d), ClassSpec{ClassSpec::Kind::kZonotopal, 1});
  }
  throw NoCenterFound("no star center among " + std::to_string(tries.size()) + " candidates");
}

SubdivisionSeed polytopal_completion(const Complex& phi) {
  for (const auto& c : phi.maximal)
    if (!c.is_bounded()) throw PreconditionViolation("polytopal_completion: cell " + c.describe() + " is unbounded");
  return complete_locally_finite(phi, zero_fan(phi.ambient_dim), ClassSpec{});
}

CompletionReport report_complex(const Complex& input, const Complex& output) {
  CompletionReport r;
  r.preserved = std::all_of(input.maximal.begin(), input.maximal.end(),
                            [&](const Polyhedron& c) { return output.has_cell(c); });
  r.transcript.push_back(std::string("input cells preserved: ") + (r.preserved ? "yes" : "no"));
  r.transcript.push_back(std::string("facet-matching certificate: ") + (output.is_complete() ? "complete" : "open"));
  r.transcript.push_back("maximal cells: " + std::to_string(output.maximal.size()));
  r.complex = output;
  return r;
}

CompletionReport report_seed(const Complex& input, const SubdivisionSeed& seed, const Polyhedron& window) {
  CompletionReport r;
  r.preserved = std::all_of(input.maximal.begin(), input.maximal.end(),
                            [&](const Polyhedron& c) { return seed.index_of(c).has_value(); });
  r.transcript.push_back(std::string("input cells preserved: ") + (r.preserved ? "yes" : "no"));
  auto rep = validate_window(seed, window);
  for (const auto& c : rep.checks)
    r.transcript.push_back(c.name + ": " + (c.passed ? "pass" : "FAIL " + c.witness));
  r.seed = seed;
  return r;
}

}  // namespace lfc
