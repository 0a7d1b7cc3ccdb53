#include "lfc/lazy_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lfc {

Polyhedron make_box(const Vec& lo, const Vec& hi) {
  if (lo.size() != hi.size()) throw DimensionMismatch("make_box: bounds differ in length");
  LinearSystem sys(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    sys.ge(unit(lo.size(), i), lo[i]);
    sys.le(unit(lo.size(), i), hi[i]);
  }
  return Polyhedron::from_system(sys);
}

namespace {

Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Scalar(f);
}

Scalar ceil_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Scalar(c);
}

bool by_dim_then_key(const MaterializedCell& a, const MaterializedCell& b) {
  if (a.geometry.dim() != b.geometry.dim()) return a.geometry.dim() < b.geometry.dim();
  return a.geometry.key() < b.geometry.key();
}

using CellMap = std::map<std::string, MaterializedCell>;

void keep(CellMap& out, MaterializedCell c) {
  auto it = out.find(c.geometry.key());
  if (it == out.end()) out.emplace(c.geometry.key(), std::move(c));
  else if (c.id < it->second.id) it->second = std::move(c);
}

class Enumerator {
 public:
  Enumerator(const SubdivisionSeed& seed, std::optional<Polyhedron> tau, std::size_t budget)
      : seed_(seed), tau_(std::move(tau)), budget_(budget) {}

  CellMap run(std::size_t p, const Polyhedron& window) {
    CellMap out;
    const PiCellInfo& info = seed_.pi_cells[p];
    if (!admissible(info.rec)) return out;
    if (info.in_sigma) {
      for (const auto& f : info.cell.faces()) {
        spend();
        if (!admissible(recession_cone(f.polyhedron)) || !meets(f.polyhedron, window)) continue;
        keep(out, {CellId{*seed_.index_of(f.polyhedron), {}}, f.polyhedron});
      }
      return out;
    }
    if (!info.ray) throw PreconditionViolation("no ray chosen for recession cone " + info.rec.describe());
    const RayChoice& rc = seed_.ray_choices[*info.ray];
    const RayLadder ladder{rc.v, rc.gamma};
    const std::size_t d = seed_.ambient_dim();
    for (const auto& piece : info.pieces) {
      if (!admissible(seed_.pi_cells[piece.face].rec)) continue;
      auto x = intersect(piece.region, window);
      if (!x) continue;
      auto psi = [&](const Vec& y) -> Scalar { return dot(piece.ell, y) - piece.ell_offset; };
      for (const auto& r : x->vrep().rays)
        if (sgn(dot(piece.ell, r)) != 0) throw BudgetExceeded("window is unbounded along the ray");
      if (!x->vrep().lineality.empty()) throw BudgetExceeded("window is unbounded along the ray");
      Scalar tmin = psi(x->vrep().vertices[0]), tmax = tmin;
      for (const auto& y : x->vrep().vertices) {
        Scalar t = psi(y);
        if (t < tmin) tmin = t;
        if (t > tmax) tmax = t;
      }
      if (sgn(tmax) < 0) continue;
      if (sgn(tmin) < 0) tmin = 0;
      Matrix m;
      for (std::size_t i = 0; i < d; ++i) {
        Vec row = unit(d, i);
        for (std::size_t j = 0; j < d; ++j) row[j] -= rc.v[i] * piece.ell[j];
        m.push_back(std::move(row));
      }
      Polyhedron projected = affine_image(*x, m, scale(rc.v, piece.ell_offset));
      CellMap inner = run(piece.face, projected);
      long kmin = std::max<long>(0, ceil_div(tmin, rc.gamma).get_num().get_si() - 1);
      long kmax = floor_div(tmax, rc.gamma).get_num().get_si();
      for (long k = kmin; k <= kmax; ++k) {
        const Scalar lo = rc.gamma * k;
        for (long j : {2 * k, 2 * k + 1}) {
          bool hit = j % 2 == 0 ? (lo >= tmin && lo <= tmax) : (lo + rc.gamma >= tmin && lo <= tmax);
          if (!hit) continue;
          for (const auto& [key, c] : inner) {
            spend();
            if (j == 0) {
              if (meets(c.geometry, window)) keep(out, c);
              continue;
            }
            Polyhedron g = minkowski_sum(c.geometry, ladder.cell(j));
            if (!meets(g, window)) continue;
            CellId id = c.id;
            id.chain.push_back({*seed_.index_of(info.cell.carrier_face(g.relint_point())), j});
            keep(out, {std::move(id), std::move(g)});
          }
        }
      }
    }
    return out;
  }

 private:
  bool admissible(const Polyhedron& rec) const { return !tau_ || is_face(*tau_, rec); }
  void spend() {
    if (++spent_ > budget_) throw BudgetExceeded("enumeration budget of " + std::to_string(budget_) + " exceeded");
  }

  const SubdivisionSeed& seed_;
  std::optional<Polyhedron> tau_;
  std::size_t budget_;
  std::size_t spent_ = 0;
};

std::vector<MaterializedCell> enumerate(const SubdivisionSeed& seed, const Polyhedron& window,
                                        std::optional<Polyhedron> tau, std::size_t budget) {
  if (window.ambient_dim() != seed.ambient_dim()) throw DimensionMismatch("window dimension does not match");
  Enumerator e(seed, std::move(tau), budget);
  CellMap all;
  for (const auto& m : seed.pi.maximal) {
    if (!meets(m, window)) continue;
    for (auto& [k, c] : e.run(*seed.index_of(m), window)) keep(all, std::move(c));
  }
  std::vector<MaterializedCell> out;
  for (auto& [k, c] : all) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), by_dim_then_key);
  return out;
}

CellId locate_in(const SubdivisionSeed& seed, std::size_t p, const Vec& x) {
  const PiCellInfo& info = seed.pi_cells[p];
  if (info.in_sigma) return CellId{*seed.index_of(info.cell.carrier_face(x)), {}};
  if (!info.ray) throw PreconditionViolation("no ray chosen for recession cone " + info.rec.describe());
  const RayChoice& rc = seed.ray_choices[*info.ray];
  auto dec = decompose_by_ray(info.cell, rc.v, x);
  CellId id = locate_in(seed, *seed.index_of(info.cell.carrier_face(dec.b)), dec.b);
  long j = RayLadder{rc.v, rc.gamma}.index_of(dec.t);
  if (j != 0) id.chain.push_back({p, j});
  return id;
}

}  // namespace

std::vector<MaterializedCell> cells_in_window(const SubdivisionSeed& seed, const Polyhedron& window) {
  return enumerate(seed, window, std::nullopt, static_cast<std::size_t>(-1));
}

MaterializedCell locate_point(const SubdivisionSeed& seed, const Vec& x) {
  if (x.size() != seed.ambient_dim()) throw DimensionMismatch("locate_point: wrong dimension");
  for (const auto& m : seed.pi.maximal) {
    if (!m.contains(x)) continue;
    std::size_t p = *seed.index_of(m.carrier_face(x));
    CellId id = locate_in(seed, p, x);
    Polyhedron g = materialize(seed, id);
    // a cell reached through another parent may carry the same geometry
    for (const auto& c : cells_in_window(seed, Polyhedron::point(x)))
      if (c.geometry == g && c.id < id) id = c.id;
    return {id, g};
  }
  throw NotInSupport("point " + to_string(x) + " is not in the support");
}

bool WindowReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const WindowCheck& c) { return c.passed; });
}

const WindowCheck* WindowReport::failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

WindowReport validate_cells(const SubdivisionSeed& seed, const Polyhedron& window,
                            const std::vector<MaterializedCell>& cells) {
  WindowReport rep;
  rep.cell_count = cells.size();
  std::map<std::string, const MaterializedCell*> by_key;
  for (const auto& c : cells) by_key.emplace(c.geometry.key(), &c);
  auto label = [](const MaterializedCell& c) { return c.id.to_string() + " " + c.geometry.describe(); };

  WindowCheck pairwise{"pairwise", true, ""};
  std::set<std::string> proper;
  for (const auto& c : cells)
    for (const auto& f : c.geometry.faces())
      if (f.polyhedron.dim() < c.geometry.dim()) proper.insert(f.polyhedron.key());
  std::vector<const MaterializedCell*> tops;
  for (const auto& c : cells)
    if (!proper.count(c.geometry.key())) tops.push_back(&c);
  for (std::size_t i = 0; i < tops.size() && pairwise.passed; ++i)
    for (std::size_t j = i + 1; j < tops.size(); ++j) {
      if (!tops[i]->geometry.bbox().overlaps(tops[j]->geometry.bbox())) continue;
      if (auto w = intersection_defect(tops[i]->geometry, tops[j]->geometry)) {
        pairwise = {"pairwise", false, label(*tops[i]) + " and " + label(*tops[j]) + " meet badly at " + to_string(*w)};
        break;
      }
    }
  rep.checks.push_back(pairwise);

  WindowCheck closure{"closure", true, ""};
  for (const auto& c : cells) {
    for (const auto& f : c.geometry.faces())
      if (!by_key.count(f.polyhedron.key()) && meets(f.polyhedron, window)) {
        closure = {"closure", false, "face " + f.polyhedron.describe() + " of " + label(c) + " is missing"};
        break;
      }
    if (!closure.passed) break;
  }
  rep.checks.push_back(closure);

  std::vector<Polyhedron> geoms;
  for (const auto& c : cells) geoms.push_back(c.geometry);
  auto cov = covers(geoms, window);
  rep.checks.push_back({"coverage", cov.covered, cov.detail});

  WindowCheck recession{"recession", true, ""};
  for (const auto& c : cells) {
    auto rec = recession_cone(c.geometry);
    if (!seed.in_sigma(rec)) {
      recession = {"recession", false, "recession cone " + rec.describe() + " of " + label(c) + " is not in the fan"};
      break;
    }
  }
  rep.checks.push_back(recession);

  WindowCheck preserved{"preservation", true, ""};
  for (const auto& f : seed.phi_cells)
    if (!by_key.count(f.key()) && meets(f, window)) {
      preserved = {"preservation", false, "original cell " + f.describe() + " is missing"};
      break;
    }
  rep.checks.push_back(preserved);

  WindowCheck cls{"class", true, ""};
  for (const auto& c : cells)
    if (auto why = class_violation(c.geometry, seed.cls)) {
      cls = {"class", false, label(c) + ": " + *why};
      break;
    }
  rep.checks.push_back(cls);
  return rep;
}

WindowReport validate_window(const SubdivisionSeed& seed, const Polyhedron& window) {
  try {
    return validate_cells(seed, window, cells_in_window(seed, window));
  } catch (const Error& e) {
    WindowReport rep;
    rep.checks.push_back({"enumeration", false, e.what()});
    return rep;
  }
}

std::vector<MaterializedCell> boundary_certificate(const SubdivisionSeed& seed, const ExtendedPoint& x,
                                                   std::size_t budget) {
  if (!seed.in_sigma(x.stratum)) throw StratumNotInFan("cone " + x.stratum.describe() + " is not in the fan");
  QuotientMap q = quotient_map(x.stratum);
  if (x.coords.size() != q.dim()) throw DimensionMismatch("boundary_certificate: coordinates do not match stratum");
  LinearSystem sys(seed.ambient_dim());
  for (std::size_t i = 0; i < q.dim(); ++i) sys.eq(to_vec(q.basis[i]), x.coords[i]);
  Polyhedron cylinder = Polyhedron::from_system(sys);
  return enumerate(seed, cylinder, x.stratum, budget);
}

}  // namespace lfc
