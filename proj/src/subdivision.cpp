#include "lfc/subdivision.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lfc {

RayDecomposition decompose_by_ray(const Polyhedron& p, const Vec& v, const Vec& w) {
  if (!p.is_pointed()) throw PreconditionViolation("decompose_by_ray: polyhedron is not pointed");
  if (p.is_bounded()) throw PreconditionViolation("decompose_by_ray: polyhedron is bounded");
  if (!p.contains(w)) throw PreconditionViolation("decompose_by_ray: point " + to_string(w) + " not in polyhedron");
  if (!recession_cone(p).in_relint(v))
    throw PreconditionViolation("decompose_by_ray: ray does not meet the relative interior of the recession cone");
  // t0 = min{t : w + t v ∈ P}; only rows with ⟨a, v⟩ > 0 bound t from below
  std::optional<Scalar> t0;
  for (const auto& r : p.hrep().inequalities) {
    Scalar av = dot(r.normal, v);
    if (sgn(av) <= 0) continue;
    Scalar t = (r.offset - dot(r.normal, w)) / av;
    if (!t0 || t > *t0) t0 = t;
  }
  if (!t0) throw PreconditionViolation("decompose_by_ray: ray direction is a lineality direction");
  RayDecomposition d;
  d.t = -*t0;
  d.r = scale(v, d.t);
  d.b = sub(w, d.r);
  return d;
}

RayDecomposition decompose_by_ray(const Polyhedron& p, const Polyhedron& rho, const Vec& w) {
  return decompose_by_ray(p, ray_generator(rho), w);
}

std::vector<Polyhedron> boundary_faces(const Polyhedron& p) {
  const std::size_t rec_dim = recession_cone(p).dim();
  std::vector<Polyhedron> b;
  for (const auto& f : p.faces())
    if (recession_cone(f.polyhedron).dim() < rec_dim) b.push_back(f.polyhedron);
  std::vector<Polyhedron> out;
  for (const auto& f : b) {
    bool maximal = std::none_of(b.begin(), b.end(), [&](const Polyhedron& g) {
      return g.dim() > f.dim() && g.contains(f);
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

MinkowskiSubdivision::MinkowskiSubdivision(Polyhedron p, RayLadder ladder, Complex boundary)
    : p_(std::move(p)), ladder_(std::move(ladder)), boundary_(std::move(boundary)) {}

Polyhedron MinkowskiSubdivision::cell(const Polyhedron& q, long ladder_index) const {
  if (!boundary_.has_cell(q)) throw PreconditionViolation("cell: not a cell of the boundary complex");
  return minkowski_sum(q, ladder_.cell(ladder_index));
}

MinkowskiSubdivision subdivide_polyhedron(const Polyhedron& p, const Polyhedron& rho, const RayLadder& ladder,
                                          const Complex& boundary) {
  auto faces = boundary_faces(p);
  for (const auto& q : boundary.maximal) {
    bool inside = std::any_of(faces.begin(), faces.end(), [&](const Polyhedron& f) { return f.contains(q); });
    if (!inside) throw SupportMismatch("boundary cell " + q.describe() + " is not contained in B");
  }
  for (const auto& f : faces) {
    std::map<std::string, std::pair<Polyhedron, int>> facets;
    int pieces = 0;
    for (const auto& q : boundary.maximal) {
      if (q.dim() != f.dim() || !f.contains(q)) continue;
      ++pieces;
      for (const auto& g : q.facets()) {
        auto it = facets.find(g.polyhedron.key());
        if (it == facets.end()) facets.emplace(g.polyhedron.key(), std::make_pair(g.polyhedron, 1));
        else ++it->second.second;
      }
    }
    if (pieces == 0) throw SupportMismatch("face " + f.describe() + " of B is not covered");
    for (const auto& [k, e] : facets) {
      if (e.second == 2) continue;
      if (f.tight_set(e.first.relint_point()).empty())
        throw SupportMismatch("face " + f.describe() + " of B is not covered near " + e.first.describe());
    }
  }
  (void)rho;
  return MinkowskiSubdivision(p, ladder, boundary);
}

std::optional<std::size_t> SubdivisionSeed::index_of(const Polyhedron& cell) const {
  auto it = pi_index.find(cell.key());
  if (it == pi_index.end()) return std::nullopt;
  return it->second;
}

bool SubdivisionSeed::in_sigma(const Polyhedron& cone) const {
  return std::binary_search(sigma_cones.begin(), sigma_cones.end(), cone);
}

const RayChoice* SubdivisionSeed::ray_for(const Polyhedron& cone) const {
  for (const auto& r : ray_choices)
    if (r.cone == cone) return &r;
  return nullptr;
}

void SubdivisionSeed::compile() {
  pi_cells.clear();
  pi_index.clear();
  sigma_cones = sigma.cells();
  std::sort(sigma_cones.begin(), sigma_cones.end());
  phi_cells = phi.cells();
  for (const auto& c : pi.cells()) {
    PiCellInfo info{c, recession_cone(c), false, std::nullopt, {}};
    info.in_sigma = in_sigma(info.rec);
    pi_index.emplace(c.key(), pi_cells.size());
    pi_cells.push_back(std::move(info));
  }
  for (auto& info : pi_cells) {
    if (info.in_sigma) continue;
    for (std::size_t i = 0; i < ray_choices.size(); ++i)
      if (ray_choices[i].cone == info.rec) info.ray = i;
    if (!info.ray) continue;
    const Vec& v = ray_choices[*info.ray].v;
    const std::size_t d = info.cell.ambient_dim();
    for (const auto& f : boundary_faces(info.cell)) {
      Matrix dirs;
      Matrix eqs;
      for (const auto& r : f.hrep().equalities) eqs.push_back(r.normal);
      dirs = eqs.empty() ? Matrix{} : nullspace(eqs, d);
      if (eqs.empty())
        for (std::size_t k = 0; k < d; ++k) dirs.push_back(unit(d, k));
      Matrix m = dirs;
      m.push_back(v);
      Vec rhs = zeros(m.size());
      rhs.back() = 1;
      auto ell = solve(m, rhs);
      if (!ell) continue;  // ray parallel to the face: no valid transport
      auto idx = index_of(f);
      if (!idx) continue;
      BoundaryPiece piece{*idx, minkowski_sum(f, Polyhedron::cone(d, {v})), *ell,
                          dot(*ell, f.vrep().vertices[0])};
      info.pieces.push_back(std::move(piece));
    }
  }
}

SubdivisionSeed build_seed(const Complex& pi, const Complex& phi, const Fan& sigma, const ClassSpec& cls,
                           const std::vector<RayChoice>& overrides) {
  const std::size_t d = pi.ambient_dim;
  if (phi.ambient_dim != d || sigma.ambient_dim != d) throw DimensionMismatch("build_seed: dimension mismatch");
  for (const auto& c : phi.maximal)
    if (!pi.has_cell(c)) throw NotSubcomplex("cell " + c.describe() + " of Phi is not a cell of Pi");
  for (const auto& c : phi.maximal)
    if (!sigma.has_cell(recession_cone(c)))
      throw RecessionNotInSigma("recession cone of Phi cell " + c.describe() + " is not in Sigma");
  auto pi_cells = pi.cells();
  std::vector<Polyhedron> cones = sigma.maximal;
  for (const auto& c : pi_cells) cones.push_back(recession_cone(c));
  SubdivisionSeed seed;
  try {
    seed.sigma_prime = validate_fan(d, cones);
  } catch (const NotAFan& e) {
    throw SigmaPrimeNotFan(std::string("Sigma together with the recession cones of Pi is not a fan: ") + e.what());
  }
  for (const auto& c : pi_cells)
    if (auto why = class_violation(c, cls)) throw ClassViolation(c, *why);
  seed.pi = pi;
  seed.phi = phi;
  seed.sigma = sigma;
  seed.cls = cls;
  auto sigma_cells = sigma.cells();
  std::set<Polyhedron> needed;
  for (const auto& c : pi_cells) {
    auto rec = recession_cone(c);
    if (std::find(sigma_cells.begin(), sigma_cells.end(), rec) == sigma_cells.end()) needed.insert(rec);
  }
  for (const auto& cone : needed) {
    RayChoice choice{cone, ray_generator(relint_ray(cone, cls)), cls.ladder_step()};
    for (const auto& o : overrides)
      if (o.cone == cone) {
        if (!cone.in_relint(o.v)) throw PreconditionViolation("ray override is not in the relative interior");
        if (sgn(o.gamma) <= 0) throw PreconditionViolation("ray override step must be positive");
        choice = o;
      }
    seed.ray_choices.push_back(std::move(choice));
  }
  seed.compile();
  return seed;
}

std::string CellId::to_string() const {
  std::ostringstream os;
  os << base;
  for (const auto& l : chain) os << '.' << l.parent << ':' << l.index;
  return os.str();
}

CellId CellId::parse(const std::string& text) {
  CellId id;
  std::istringstream is(text);
  auto fail = [&] { return Error("invalid cell id \"" + text + "\""); };
  if (!(is >> id.base)) throw fail();
  char dot;
  while (is >> dot) {
    CellLink l;
    char colon;
    if (dot != '.' || !(is >> l.parent >> colon >> l.index) || colon != ':' || l.index <= 0) throw fail();
    id.chain.push_back(l);
  }
  return id;
}

Polyhedron materialize(const SubdivisionSeed& seed, const CellId& id) {
  if (id.base >= seed.pi_cells.size()) throw PreconditionViolation("materialize: base index out of range");
  Polyhedron p = seed.pi_cells[id.base].cell;
  for (const auto& l : id.chain) {
    if (l.parent >= seed.pi_cells.size() || !seed.pi_cells[l.parent].ray)
      throw PreconditionViolation("materialize: chain parent has no ray");
    const RayChoice& rc = seed.ray_choices[*seed.pi_cells[l.parent].ray];
    p = minkowski_sum(p, RayLadder{rc.v, rc.gamma}.cell(l.index));
  }
  return p;
}

}  // namespace lfc
