#include "lfc/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lfc {

FaceClosureViolation::FaceClosureViolation(Polyhedron c, Polyhedron m)
    : Error("face closure violation: face " + m.describe() + " of cell " + c.describe() + " is missing"),
      cell(std::move(c)),
      missing(std::move(m)) {}

BadIntersection::BadIntersection(Polyhedron a, Polyhedron b, Vec w)
    : Error("cells " + a.describe() + " and " + b.describe() + " do not meet in a common face (witness " +
            to_string(w) + ")"),
      first(std::move(a)),
      second(std::move(b)),
      witness(std::move(w)) {}

NotAFan::NotAFan(Polyhedron a, Polyhedron b)
    : Error("not a fan: cones " + a.describe() + " and " + b.describe()), first(std::move(a)), second(std::move(b)) {}

namespace {

bool by_dim_then_key(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.key() < b.key();
}

Matrix drop_last(std::size_t d) {
  Matrix m;
  for (std::size_t i = 0; i < d; ++i) m.push_back(unit(d + 1, i));
  return m;
}

}  // namespace

std::vector<Polyhedron> Complex::cells() const {
  std::map<std::string, Polyhedron> all;
  for (const auto& m : maximal)
    for (const auto& f : m.faces()) all.emplace(f.polyhedron.key(), f.polyhedron);
  std::vector<Polyhedron> out;
  for (auto& [k, p] : all) out.push_back(p);
  std::sort(out.begin(), out.end(), by_dim_then_key);
  return out;
}

bool Complex::has_cell(const Polyhedron& p) const {
  for (const auto& m : maximal) {
    if (m == p) return true;
    if (m.dim() > p.dim() && m.bbox().overlaps(p.bbox()) && is_face(p, m)) return true;
  }
  return false;
}

bool Complex::is_pure_full_dimensional() const {
  return !maximal.empty() &&
         std::all_of(maximal.begin(), maximal.end(), [&](const Polyhedron& p) { return p.dim() == ambient_dim; });
}

bool Complex::is_complete() const {
  if (!is_pure_full_dimensional()) return false;
  std::map<std::string, int> count;
  for (const auto& m : maximal)
    for (const auto& f : m.facets()) ++count[f.polyhedron.key()];
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

bool Complex::is_fan() const {
  return std::all_of(maximal.begin(), maximal.end(),
                     [](const Polyhedron& p) { return p.is_cone() && p.is_pointed(); });
}

bool Complex::operator==(const Complex& o) const {
  if (ambient_dim != o.ambient_dim || maximal.size() != o.maximal.size()) return false;
  for (std::size_t i = 0; i < maximal.size(); ++i)
    if (maximal[i] != o.maximal[i]) return false;
  return true;
}

std::optional<Vec> intersection_defect(const Polyhedron& p, const Polyhedron& q) {
  if (!meets(p, q)) return std::nullopt;
  auto x = intersect(p, q);
  if (!x) return std::nullopt;
  if (is_face(*x, p) && is_face(*x, q)) return std::nullopt;
  return x->relint_point();
}

Complex validate_complex(std::size_t ambient_dim, const std::vector<Polyhedron>& cells, FaceMode mode) {
  std::map<std::string, Polyhedron> unique;
  for (const auto& c : cells) {
    if (c.ambient_dim() != ambient_dim) throw DimensionMismatch("validate_complex: cell has wrong dimension");
    unique.emplace(c.key(), c);
  }
  std::set<std::string> proper_faces;
  for (const auto& [k, c] : unique) {
    for (const auto& f : c.faces()) {
      if (f.polyhedron.dim() == c.dim()) continue;
      proper_faces.insert(f.polyhedron.key());
      if (mode == FaceMode::kStrict && !unique.count(f.polyhedron.key()))
        throw FaceClosureViolation(c, f.polyhedron);
    }
  }
  Complex out;
  out.ambient_dim = ambient_dim;
  for (const auto& [k, c] : unique)
    if (!proper_faces.count(k)) out.maximal.push_back(c);
  for (std::size_t i = 0; i < out.maximal.size(); ++i)
    for (std::size_t j = i + 1; j < out.maximal.size(); ++j)
      if (auto w = intersection_defect(out.maximal[i], out.maximal[j]))
        throw BadIntersection(out.maximal[i], out.maximal[j], *w);
  return out;
}

Fan validate_fan(std::size_t ambient_dim, const std::vector<Polyhedron>& cones) {
  for (const auto& c : cones)
    if (!c.is_cone() || !c.is_pointed()) throw NotAFan(c, c);
  try {
    return validate_complex(ambient_dim, cones);
  } catch (const BadIntersection& e) {
    throw NotAFan(e.first, e.second);
  }
}

Fan zero_fan(std::size_t ambient_dim) {
  Fan f;
  f.ambient_dim = ambient_dim;
  f.maximal.push_back(Polyhedron::point(zeros(ambient_dim)));
  return f;
}

Fan recession_fan(const Complex& c) {
  std::vector<Polyhedron> cones;
  for (const auto& p : c.cells()) cones.push_back(recession_cone(p));
  return validate_fan(c.ambient_dim, cones);
}

Polyhedron cone_over(const Polyhedron& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<Vec> rays, lin;
  auto lift = [](Vec x, int t) {
    x.push_back(t);
    return x;
  };
  for (const auto& v : p.vrep().vertices) rays.push_back(lift(v, 1));
  for (const auto& r : p.vrep().rays) rays.push_back(lift(r, 0));
  for (const auto& l : p.vrep().lineality) lin.push_back(lift(l, 0));
  return Polyhedron::from_vertices(d + 1, {zeros(d + 1)}, rays, lin);
}

Fan cone_over_complex(const Complex& c, const Fan& sigma) {
  const std::size_t d = c.ambient_dim;
  std::vector<Polyhedron> cones;
  for (const auto& p : c.maximal) {
    if (!sigma.has_cell(recession_cone(p)))
      throw PreconditionViolation("cone_over_complex: recession cone of " + p.describe() + " is not in the fan");
    cones.push_back(cone_over(p));
  }
  for (const auto& s : sigma.maximal) {
    std::vector<Vec> rays;
    for (auto r : s.vrep().rays) {
      r.push_back(0);
      rays.push_back(std::move(r));
    }
    cones.push_back(Polyhedron::cone(d + 1, rays));
  }
  return validate_fan(d + 1, cones);
}

Complex height_slice(const Fan& f, int height) {
  if (f.ambient_dim == 0) throw DimensionMismatch("height_slice: fan must live in dimension >= 1");
  const std::size_t d = f.ambient_dim - 1;
  std::vector<Polyhedron> slices;
  for (const auto& s : f.maximal) {
    for (const auto& r : s.vrep().rays)
      if (sgn(r[d]) < 0) throw PreconditionViolation("height_slice: fan leaves the upper half-space");
    if (!s.vrep().lineality.empty()) throw PreconditionViolation("height_slice: cone is not pointed");
    LinearSystem sys = s.hrep();
    sys.eq(unit(d + 1, d), height);
    Generators g = dual_description(sys);
    if (g.empty()) continue;
    slices.push_back(affine_image(Polyhedron::from_generators(g), drop_last(d), zeros(d)));
  }
  return validate_complex(d, slices);
}

CoverageResult covers(const std::vector<Polyhedron>& cells, const Polyhedron& box) {
  const std::size_t d = box.ambient_dim();
  CoverageResult res;
  std::map<std::string, std::pair<Polyhedron, int>> facets;
  bool any = false;
  for (const auto& c : cells) {
    if (c.dim() != d) continue;
    if (!any) {
      auto x = intersect(c, box);
      if (x && x->dim() == d) any = true;
    }
    for (const auto& f : c.facets()) {
      auto it = facets.find(f.polyhedron.key());
      if (it == facets.end()) facets.emplace(f.polyhedron.key(), std::make_pair(f.polyhedron, 1));
      else ++it->second.second;
    }
  }
  if (!any) {
    res.detail = "no full-dimensional cell meets the interior of the window";
    return res;
  }
  for (const auto& [k, entry] : facets) {
    if (entry.second == 2) continue;
    const Polyhedron& f = entry.first;
    auto x = intersect(f, box);
    if (!x || x->dim() + 1 != d) continue;
    if (!box.tight_set(x->relint_point()).empty()) continue;
    res.open_facet = f;
    res.detail = "facet " + f.describe() + " lies in " + std::to_string(entry.second) +
                 " full-dimensional cell(s); uncovered near " + to_string(x->relint_point());
    return res;
  }
  res.covered = true;
  return res;
}

StarShapedResult is_star_shaped_around(const Complex& c, const Vec& w) {
  StarShapedResult res;
  const std::size_t d = c.ambient_dim;
  if (!c.is_pure_full_dimensional()) {
    res.violated = "(i) support is not a full-dimensional ball";
    return res;
  }
  std::map<std::string, std::pair<Polyhedron, int>> facets;
  for (const auto& m : c.maximal) {
    if (!m.is_bounded()) {
      res.violated = "(i) complex is not polytopal";
      return res;
    }
    for (const auto& f : m.facets()) {
      auto it = facets.find(f.polyhedron.key());
      if (it == facets.end()) facets.emplace(f.polyhedron.key(), std::make_pair(f.polyhedron, 1));
      else ++it->second.second;
    }
  }
  for (const auto& [k, e] : facets)
    if (e.second == 1) res.boundary_facets.push_back(e.first);
  bool inside = std::any_of(c.maximal.begin(), c.maximal.end(), [&](const Polyhedron& m) { return m.contains(w); });
  if (!inside) {
    res.violated = "(i) center is not in the support";
    return res;
  }
  for (const auto& f : res.boundary_facets) {
    if (f.contains(w)) {
      res.violated = "(i) center lies on the boundary";
      return res;
    }
    LinearSystem hull(d);
    hull.equalities = f.hrep().equalities;
    if (hull.satisfied_by(w)) {
      res.violated = "(ii) center lies in the affine hull of a boundary facet";
      return res;
    }
  }
  std::vector<Polyhedron> cones;
  for (const auto& f : res.boundary_facets) {
    std::vector<Vec> rays;
    for (const auto& v : f.vrep().vertices) rays.push_back(sub(v, w));
    cones.push_back(Polyhedron::cone(d, rays));
  }
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      auto x = intersect(cones[i], cones[j]);
      if (x && x->dim() == d) {
        res.violated = "(iii) cones over boundary facets overlap";
        return res;
      }
    }
  std::map<std::string, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (const auto& f : cones[i].facets()) owners[f.polyhedron.key()].push_back(i);
  for (const auto& [k, o] : owners) {
    if (o.size() != 2) {
      res.violated = "(iv) a facet of a boundary cone is unmatched";
      return res;
    }
    res.matching.emplace_back(o[0], o[1]);
  }
  res.star_shaped = true;
  return res;
}

}  // namespace lfc
