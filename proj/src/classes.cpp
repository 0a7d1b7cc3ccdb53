#include "lfc/classes.hpp"

#include <algorithm>
#include <set>

namespace lfc {

ClassViolation::ClassViolation(Polyhedron c, std::string r)
    : Error("class violation: " + c.describe() + ": " + r), cell(std::move(c)), reason(std::move(r)) {}

ClassSpec ClassSpec::parse(const std::string& text) {
  ClassSpec c;
  auto with_step = [&](const std::string& prefix, Kind kind) {
    if (text.rfind(prefix, 0) != 0) return false;
    c.kind = kind;
    c.g = parse_scalar(text.substr(prefix.size()), false);
    if (sgn(c.g) <= 0) throw Error("class step must be positive: " + text);
    return true;
  };
  if (text == "all") c.kind = Kind::kAll;
  else if (text == "q") c.kind = Kind::kQDefinable;
  else if (text == "zonotopal") c.kind = Kind::kZonotopal;
  else if (!with_step("gamma-vertices:", Kind::kGammaRationalVertices) && !with_step("gamma:", Kind::kGammaRational))
    throw Error("unknown class \"" + text + "\"");
  return c;
}

std::string ClassSpec::to_string() const {
  switch (kind) {
    case Kind::kAll: return "all";
    case Kind::kQDefinable: return "q";
    case Kind::kZonotopal: return "zonotopal";
    case Kind::kGammaRational: return "gamma:" + lfc::to_string(g);
    case Kind::kGammaRationalVertices: return "gamma-vertices:" + lfc::to_string(g);
  }
  return "all";
}

Scalar ClassSpec::ladder_step() const {
  return kind == Kind::kGammaRational || kind == Kind::kGammaRationalVertices ? g : Scalar(1);
}

namespace {

constexpr int kSearchBound = 4;

bool in_group(const Scalar& x, const Scalar& g) {
  Scalar q = x / g;
  return q.get_den() == 1;
}

bool is_primitive_integer(const Vec& n) {
  Integer g = 0;
  for (const auto& x : n) {
    if (x.get_den() != 1) return false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  return g == 1;
}

// Calls f on every integer combination of the basis with coefficients in
// [-bound, bound], skipping the zero combination when skip_zero is set.
template <class F>
bool any_combination(const std::vector<Vec>& basis, std::size_t d, bool skip_zero, F&& f) {
  std::vector<int> c(basis.size(), -kSearchBound);
  for (;;) {
    bool zero = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    if (!(zero && skip_zero)) {
      Vec m = zeros(d);
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (c[i]) m = add(m, scale(basis[i], c[i]));
      if (f(m)) return true;
    }
    std::size_t i = 0;
    while (i < c.size() && c[i] == kSearchBound) c[i++] = -kSearchBound;
    if (i == c.size()) return false;
    ++c[i];
  }
}

std::optional<std::string> gamma_violation(const Polyhedron& p, const Scalar& g) {
  const auto& h = p.hrep();
  const std::size_t d = h.dim;
  if (h.equalities.empty()) {
    for (const auto& r : h.inequalities)
      if (!in_group(r.offset, g)) return "facet offset " + to_string(r.offset) + " not in the group";
    return std::nullopt;
  }
  // lattice of integer normals that are constant on the affine hull
  Matrix e;
  for (const auto& r : h.equalities) e.push_back(r.normal);
  Matrix null = nullspace(e, d);
  std::vector<Vec> lattice;
  for (const auto& v : integer_kernel(null, d)) lattice.push_back(to_vec(v));
  const Vec& x0 = p.vrep().vertices[0];
  Matrix found;
  any_combination(lattice, d, true, [&](const Vec& n) {
    if (is_primitive_integer(n) && in_group(dot(n, x0), g)) {
      found.push_back(n);
      if (rank(found) == lattice.size()) return true;
    }
    return false;
  });
  if (rank(found) < lattice.size()) return "affine hull has no primitive integral description with offsets in the group";
  for (const auto& r : h.inequalities) {
    bool ok = false;
    for (int s = 1; s <= kSearchBound && !ok; ++s) {
      ok = any_combination(lattice, d, false, [&](const Vec& m) {
        Vec n = add(scale(r.normal, s), m);
        return is_primitive_integer(n) && in_group(r.offset * s + dot(m, x0), g);
      });
    }
    if (!ok) return "facet with normal " + to_string(r.normal) + " has no primitive integral normal with offset in the group";
  }
  return std::nullopt;
}

}  // namespace

std::optional<Polyhedron> asymmetric_two_face(const Polyhedron& p) {
  for (const auto& f : p.faces()) {
    const Polyhedron& q = f.polyhedron;
    if (q.dim() != 2 || !q.is_bounded()) continue;
    const auto& vs = q.vrep().vertices;
    Vec c = zeros(q.ambient_dim());
    for (const auto& v : vs) c = add(c, v);
    c = scale(c, Scalar(1) / Scalar(static_cast<long>(vs.size())));
    std::set<Vec> set(vs.begin(), vs.end());
    for (const auto& v : vs)
      if (!set.count(sub(scale(c, 2), v))) return q;
  }
  return std::nullopt;
}

bool is_zonotopal(const Polyhedron& p) { return !asymmetric_two_face(p).has_value(); }

std::optional<std::string> class_violation(const Polyhedron& p, const ClassSpec& c) {
  switch (c.kind) {
    case ClassSpec::Kind::kAll:
    case ClassSpec::Kind::kQDefinable:
      return std::nullopt;
    case ClassSpec::Kind::kZonotopal:
      if (auto f = asymmetric_two_face(p)) return "bounded 2-face " + f->describe() + " is not centrally symmetric";
      return std::nullopt;
    case ClassSpec::Kind::kGammaRationalVertices:
      for (const auto& v : p.vrep().vertices)
        for (const auto& x : v)
          if (!in_group(x, c.g)) return "vertex " + to_string(v) + " not in the group lattice";
      [[fallthrough]];
    case ClassSpec::Kind::kGammaRational:
      return gamma_violation(p, c.g);
  }
  return std::nullopt;
}

bool class_membership(const Polyhedron& p, const ClassSpec& c) { return !class_violation(p, c).has_value(); }

Polyhedron relint_ray(const Polyhedron& sigma, const ClassSpec&) {
  if (!sigma.is_cone()) throw PreconditionViolation("relint_ray: not a cone");
  if (!sigma.is_pointed()) throw PreconditionViolation("relint_ray: cone is not pointed");
  if (sigma.vrep().rays.empty()) throw PreconditionViolation("relint_ray: cone is {0}");
  Vec s = zeros(sigma.ambient_dim());
  for (const auto& r : sigma.vrep().rays) s = add(s, r);
  return Polyhedron::cone(sigma.ambient_dim(), {to_vec(primitive(s))});
}

Vec ray_generator(const Polyhedron& ray) {
  if (!ray.is_cone() || ray.vrep().rays.size() != 1 || !ray.vrep().lineality.empty())
    throw PreconditionViolation("ray_generator: not a ray");
  return ray.vrep().rays[0];
}

Polyhedron RayLadder::cell(long index) const {
  if (index < 0) throw PreconditionViolation("ladder index must be non-negative");
  Vec a = offset(index);
  if (index % 2 == 0) return Polyhedron::point(a);
  return Polyhedron::from_vertices(v.size(), {a, add(a, scale(v, gamma))});
}

Vec RayLadder::offset(long index) const { return scale(v, gamma * Scalar(index / 2)); }

long RayLadder::index_of(const Scalar& t) const {
  if (sgn(t) < 0) throw PreconditionViolation("ladder parameter must be non-negative");
  Scalar q = t / gamma;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  long k = fl.get_si();
  return q.get_den() == 1 ? 2 * k : 2 * k + 1;
}

RayLadder ray_subdivision(const Polyhedron& rho, const ClassSpec& c) { return {ray_generator(rho), c.ladder_step()}; }

}  // namespace lfc
