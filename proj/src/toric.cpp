#include "lfc/toric.hpp"

#include <algorithm>

namespace lfc {

ToricSpace::ToricSpace(Fan fan) : fan_(std::move(fan)) {
  cones_ = fan_.cells();
  for (const auto& c : cones_) maps_.push_back(quotient_map(c));
}

std::optional<std::size_t> ToricSpace::stratum_index(const Polyhedron& tau) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i] == tau) return i;
  return std::nullopt;
}

const QuotientMap& ToricSpace::quotient(const Polyhedron& tau) const {
  auto i = stratum_index(tau);
  if (!i) throw StratumNotInFan("cone " + tau.describe() + " is not in the fan");
  return maps_[*i];
}

namespace {

void require_compatible(const Polyhedron& rec, const ToricSpace& t) {
  std::vector<Polyhedron> cones = t.fan().maximal;
  cones.push_back(rec);
  try {
    validate_fan(t.fan().ambient_dim, cones);
  } catch (const NotAFan& e) {
    throw CompatibilityError(std::string("fan together with the faces of rec P is not a fan: ") + e.what());
  }
}

}  // namespace

std::vector<ClosurePiece> closure_in_toric(const Polyhedron& p, const ToricSpace& t) {
  Polyhedron rec = recession_cone(p);
  require_compatible(rec, t);
  std::vector<ClosurePiece> out;
  for (std::size_t i = 0; i < t.strata().size(); ++i) {
    const Polyhedron& tau = t.strata()[i];
    if (!is_face(tau, rec)) continue;
    Matrix m = t.quotient(i).matrix();
    out.push_back({tau, affine_image(p, m, zeros(m.size()))});
  }
  return out;
}

ExtendedPoint extended_add(const Vec& v, const ExtendedPoint& x, const ToricSpace& t) {
  const QuotientMap& q = t.quotient(x.stratum);
  if (x.coords.size() != q.dim()) throw DimensionMismatch("extended_add: coordinates do not match the stratum");
  return {x.stratum, add(x.coords, q.apply(v))};
}

RayDecomposition StratumTable::decompose(const Vec& xbar) const { return decompose_by_ray(image, ray, xbar); }

std::vector<StratumTable> boundary_decomposition_data(const Polyhedron& p, const ToricSpace& t,
                                                      const Polyhedron& rho) {
  if (!p.is_pointed()) throw PreconditionViolation("boundary_decomposition_data: P is not pointed");
  if (p.is_bounded()) throw PreconditionViolation("boundary_decomposition_data: P is bounded");
  Polyhedron rec = recession_cone(p);
  Vec v = ray_generator(rho);
  if (!rec.in_relint(v))
    throw PreconditionViolation("boundary_decomposition_data: ray misses the relative interior of rec P");
  if (t.stratum_index(rec)) throw PreconditionViolation("boundary_decomposition_data: rec P lies in the fan");
  require_compatible(rec, t);
  std::vector<Polyhedron> bfaces;
  for (const auto& f : p.faces())
    if (recession_cone(f.polyhedron).dim() < rec.dim()) bfaces.push_back(f.polyhedron);
  std::vector<StratumTable> out;
  for (std::size_t i = 0; i < t.strata().size(); ++i) {
    const Polyhedron& tau = t.strata()[i];
    if (!is_face(tau, rec) || tau == rec) continue;
    const QuotientMap& q = t.quotient(i);
    Matrix m = q.matrix();
    StratumTable table{tau, q, affine_image(p, m, zeros(m.size())), q.apply(v), {}};
    for (const auto& f : bfaces)
      if (is_face(tau, recession_cone(f))) table.boundary.push_back(affine_image(f, m, zeros(m.size())));
    out.push_back(std::move(table));
  }
  return out;
}

}  // namespace lfc
