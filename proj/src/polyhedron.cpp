#include "lfc/polyhedron.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace lfc {

namespace {

using Mask = std::vector<bool>;

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_row(std::ostringstream& os, const Row& r) {
  for (std::size_t i = 0; i < r.normal.size(); ++i) {
    if (i) os << ',';
    os << to_string(r.normal[i]);
  }
  os << ':' << to_string(r.offset) << ';';
}

bool homogeneous_ok(const LinearSystem& h, const Vec& r, bool line) {
  for (const auto& row : h.inequalities) {
    int s = sgn(dot(row.normal, r));
    if (s < 0 || (line && s != 0)) return false;
  }
  for (const auto& row : h.equalities)
    if (sgn(dot(row.normal, r)) != 0) return false;
  return true;
}

std::optional<Polyhedron> try_from_system(const LinearSystem& sys) {
  try {
    return Polyhedron::from_system(sys);
  } catch (const EmptyPolyhedron&) {
    return std::nullopt;
  }
}

}  // namespace

bool Box::overlaps(const Box& o) const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] && o.lo[i] && *hi[i] < *o.lo[i]) return false;
    if (o.hi[i] && lo[i] && *o.hi[i] < *lo[i]) return false;
  }
  return true;
}

bool Box::contains(const Vec& x) const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] && x[i] < *lo[i]) return false;
    if (hi[i] && x[i] > *hi[i]) return false;
  }
  return true;
}

struct Polyhedron::Impl {
  LinearSystem h;
  Generators v;
  std::string key;
  std::string hash;
  Box box;
  std::vector<Mask> vertex_tight;
  std::vector<Mask> ray_tight;
  mutable std::once_flag faces_once;
  mutable std::vector<Face> faces;
};

Polyhedron Polyhedron::make(LinearSystem h, Generators v) {
  auto impl = std::make_shared<Impl>();
  const std::size_t d = h.dim;
  std::ostringstream os;
  os << "d=" << d << "|E:";
  for (const auto& r : h.equalities) write_row(os, r);
  os << "|I:";
  for (const auto& r : h.inequalities) write_row(os, r);
  impl->key = os.str();
  impl->hash = fnv1a_hex(impl->key);
  impl->box.lo.resize(d);
  impl->box.hi.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    bool lo_inf = false, hi_inf = false;
    for (const auto& r : v.rays) {
      if (sgn(r[i]) < 0) lo_inf = true;
      if (sgn(r[i]) > 0) hi_inf = true;
    }
    for (const auto& l : v.lineality)
      if (sgn(l[i]) != 0) lo_inf = hi_inf = true;
    Scalar lo = v.vertices[0][i], hi = lo;
    for (const auto& x : v.vertices) {
      if (x[i] < lo) lo = x[i];
      if (x[i] > hi) hi = x[i];
    }
    if (!lo_inf) impl->box.lo[i] = lo;
    if (!hi_inf) impl->box.hi[i] = hi;
  }
  const std::size_t m = h.inequalities.size();
  for (const auto& x : v.vertices) {
    Mask t(m);
    for (std::size_t k = 0; k < m; ++k) t[k] = dot(h.inequalities[k].normal, x) == h.inequalities[k].offset;
    impl->vertex_tight.push_back(std::move(t));
  }
  for (const auto& r : v.rays) {
    Mask t(m);
    for (std::size_t k = 0; k < m; ++k) t[k] = sgn(dot(h.inequalities[k].normal, r)) == 0;
    impl->ray_tight.push_back(std::move(t));
  }
  impl->h = std::move(h);
  impl->v = std::move(v);
  return Polyhedron(std::move(impl));
}

Polyhedron Polyhedron::from_system(const LinearSystem& sys) {
  Generators g = dual_description(sys);
  if (g.empty()) throw EmptyPolyhedron();
  LinearSystem h = primal_description(g);
  return make(std::move(h), std::move(g));
}

Polyhedron Polyhedron::from_generators(const Generators& gens) {
  if (gens.empty()) throw EmptyPolyhedron();
  LinearSystem h = primal_description(gens);
  Generators g = dual_description(h);
  return make(std::move(h), std::move(g));
}

Polyhedron Polyhedron::from_vertices(std::size_t dim, const std::vector<Vec>& vertices, const std::vector<Vec>& rays,
                                     const std::vector<Vec>& lineality) {
  Generators g;
  g.dim = dim;
  g.vertices = vertices;
  g.rays = rays;
  g.lineality = lineality;
  for (const auto* list : {&g.vertices, &g.rays, &g.lineality})
    for (const auto& x : *list)
      if (x.size() != dim) throw DimensionMismatch("generator has wrong dimension");
  return from_generators(g);
}

Polyhedron Polyhedron::point(const Vec& x) { return from_vertices(x.size(), {x}); }

Polyhedron Polyhedron::cone(std::size_t dim, const std::vector<Vec>& rays) {
  return from_vertices(dim, {zeros(dim)}, rays);
}

Polyhedron Polyhedron::whole_space(std::size_t dim) { return from_system(LinearSystem(dim)); }

std::size_t Polyhedron::ambient_dim() const { return impl_->h.dim; }
std::size_t Polyhedron::dim() const { return impl_->h.dim - impl_->h.equalities.size(); }
const LinearSystem& Polyhedron::hrep() const { return impl_->h; }
const Generators& Polyhedron::vrep() const { return impl_->v; }

bool Polyhedron::contains(const Vec& x) const {
  if (x.size() != ambient_dim()) throw DimensionMismatch("contains: dimension mismatch");
  return impl_->box.contains(x) && impl_->h.satisfied_by(x);
}

bool Polyhedron::contains(const Polyhedron& o) const {
  if (o.ambient_dim() != ambient_dim()) throw DimensionMismatch("contains: dimension mismatch");
  for (const auto& x : o.vrep().vertices)
    if (!contains(x)) return false;
  for (const auto& r : o.vrep().rays)
    if (!homogeneous_ok(impl_->h, r, false)) return false;
  for (const auto& l : o.vrep().lineality)
    if (!homogeneous_ok(impl_->h, l, true)) return false;
  return true;
}

bool Polyhedron::is_bounded() const { return impl_->v.rays.empty() && impl_->v.lineality.empty(); }

bool Polyhedron::is_cone() const { return impl_->v.vertices.size() == 1 && is_zero(impl_->v.vertices[0]); }

bool Polyhedron::is_pointed() const { return impl_->v.lineality.empty(); }

std::vector<std::size_t> Polyhedron::tight_set(const Vec& x) const {
  std::vector<std::size_t> t;
  const auto& ineqs = impl_->h.inequalities;
  for (std::size_t k = 0; k < ineqs.size(); ++k)
    if (dot(ineqs[k].normal, x) == ineqs[k].offset) t.push_back(k);
  return t;
}

Vec Polyhedron::relint_point() const {
  const auto& v = impl_->v;
  Vec c = zeros(ambient_dim());
  for (const auto& x : v.vertices) c = add(c, x);
  c = scale(c, Scalar(1) / Scalar(static_cast<long>(v.vertices.size())));
  for (const auto& r : v.rays) c = add(c, r);
  return c;
}

bool Polyhedron::in_relint(const Vec& x) const { return contains(x) && tight_set(x).empty(); }

const Box& Polyhedron::bbox() const { return impl_->box; }

const std::vector<Face>& Polyhedron::faces() const {
  std::call_once(impl_->faces_once, [this] {
    const auto& v = impl_->v;
    const std::size_t m = impl_->h.inequalities.size();
    const std::size_t nv = v.vertices.size(), nr = v.rays.size();
    // a face is identified by its generator set: vertices first, then rays
    auto gen_tight = [&](std::size_t g) -> const Mask& {
      return g < nv ? impl_->vertex_tight[g] : impl_->ray_tight[g - nv];
    };
    std::set<Mask> seen;
    std::deque<Mask> queue;
    Mask all(nv + nr, true);
    seen.insert(all);
    queue.push_back(all);
    std::vector<Face> out;
    while (!queue.empty()) {
      Mask gens = std::move(queue.front());
      queue.pop_front();
      Mask closure(m, true);
      for (std::size_t g = 0; g < nv + nr; ++g)
        if (gens[g])
          for (std::size_t k = 0; k < m; ++k)
            if (!gen_tight(g)[k]) closure[k] = false;
      Generators fg;
      fg.dim = ambient_dim();
      fg.lineality = v.lineality;
      for (std::size_t g = 0; g < nv; ++g)
        if (gens[g]) fg.vertices.push_back(v.vertices[g]);
      for (std::size_t g = 0; g < nr; ++g)
        if (gens[nv + g]) fg.rays.push_back(v.rays[g]);
      Face f{from_generators(fg), {}};
      for (std::size_t k = 0; k < m; ++k)
        if (closure[k]) f.tight_set.push_back(k);
      out.push_back(std::move(f));
      for (std::size_t k = 0; k < m; ++k) {
        if (closure[k]) continue;
        Mask sub(nv + nr, false);
        bool has_vertex = false;
        for (std::size_t g = 0; g < nv + nr; ++g) {
          if (gens[g] && gen_tight(g)[k]) {
            sub[g] = true;
            if (g < nv) has_vertex = true;
          }
        }
        if (has_vertex && seen.insert(sub).second) queue.push_back(std::move(sub));
      }
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
      if (a.polyhedron.dim() != b.polyhedron.dim()) return a.polyhedron.dim() < b.polyhedron.dim();
      return a.polyhedron.key() < b.polyhedron.key();
    });
    impl_->faces = std::move(out);
  });
  return impl_->faces;
}

std::vector<Face> Polyhedron::facets() const {
  std::vector<Face> out;
  for (const auto& f : faces())
    if (f.polyhedron.dim() + 1 == dim()) out.push_back(f);
  return out;
}

std::optional<Polyhedron> Polyhedron::face_from_tight(const std::vector<std::size_t>& tight) const {
  const auto& v = impl_->v;
  Generators fg;
  fg.dim = ambient_dim();
  fg.lineality = v.lineality;
  auto ok = [&](const Mask& t) {
    return std::all_of(tight.begin(), tight.end(), [&](std::size_t k) { return static_cast<bool>(t[k]); });
  };
  for (std::size_t g = 0; g < v.vertices.size(); ++g)
    if (ok(impl_->vertex_tight[g])) fg.vertices.push_back(v.vertices[g]);
  if (fg.vertices.empty()) return std::nullopt;
  for (std::size_t g = 0; g < v.rays.size(); ++g)
    if (ok(impl_->ray_tight[g])) fg.rays.push_back(v.rays[g]);
  if (fg.vertices.size() == v.vertices.size() && fg.rays.size() == v.rays.size()) return *this;
  return from_generators(fg);
}

Polyhedron Polyhedron::carrier_face(const Vec& x) const {
  if (!contains(x)) throw PreconditionViolation("carrier_face: point not in polyhedron");
  return *face_from_tight(tight_set(x));
}

const std::string& Polyhedron::key() const { return impl_->key; }
const std::string& Polyhedron::hash() const { return impl_->hash; }

std::string Polyhedron::describe() const {
  std::ostringstream os;
  os << "conv{";
  for (std::size_t i = 0; i < impl_->v.vertices.size(); ++i) os << (i ? " " : "") << to_string(impl_->v.vertices[i]);
  os << "}";
  if (!impl_->v.rays.empty()) {
    os << " + cone{";
    for (std::size_t i = 0; i < impl_->v.rays.size(); ++i) os << (i ? " " : "") << to_string(impl_->v.rays[i]);
    os << "}";
  }
  if (!impl_->v.lineality.empty()) {
    os << " + span{";
    for (std::size_t i = 0; i < impl_->v.lineality.size(); ++i)
      os << (i ? " " : "") << to_string(impl_->v.lineality[i]);
    os << "}";
  }
  return os.str();
}

bool Polyhedron::operator==(const Polyhedron& o) const { return impl_ == o.impl_ || key() == o.key(); }

// ---------------------------------------------------------------------------

Polyhedron recession_cone(const Polyhedron& p) {
  LinearSystem s = p.hrep();
  for (auto& r : s.inequalities) r.offset = 0;
  for (auto& r : s.equalities) r.offset = 0;
  return Polyhedron::from_system(s);
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("minkowski_sum: dimension mismatch");
  Generators g;
  g.dim = p.ambient_dim();
  for (const auto& a : p.vrep().vertices)
    for (const auto& b : q.vrep().vertices) g.vertices.push_back(add(a, b));
  g.rays = p.vrep().rays;
  g.rays.insert(g.rays.end(), q.vrep().rays.begin(), q.vrep().rays.end());
  g.lineality = p.vrep().lineality;
  g.lineality.insert(g.lineality.end(), q.vrep().lineality.begin(), q.vrep().lineality.end());
  return Polyhedron::from_generators(g);
}

std::optional<Polyhedron> intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("intersect: dimension mismatch");
  if (!p.bbox().overlaps(q.bbox())) return std::nullopt;
  LinearSystem s = p.hrep();
  s.append(q.hrep());
  return try_from_system(s);
}

bool meets(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("meets: dimension mismatch");
  if (!p.bbox().overlaps(q.bbox())) return false;
  for (const auto& x : p.vrep().vertices)
    if (q.contains(x)) return true;
  for (const auto& x : q.vrep().vertices)
    if (p.contains(x)) return true;
  LinearSystem s = p.hrep();
  s.append(q.hrep());
  return lp_feasible(s);
}

bool is_face(const Polyhedron& f, const Polyhedron& p) {
  if (f.ambient_dim() != p.ambient_dim()) return false;
  if (!p.contains(f)) return false;
  auto tight = p.tight_set(f.relint_point());
  auto g = p.face_from_tight(tight);
  return g && *g == f;
}

bool is_pointed(const Polyhedron& p) { return p.is_pointed(); }

Polyhedron translate(const Polyhedron& p, const Vec& shift) {
  Generators g = p.vrep();
  for (auto& x : g.vertices) x = add(x, shift);
  return Polyhedron::from_generators(g);
}

Polyhedron affine_image(const Polyhedron& p, const Matrix& m, const Vec& c) {
  const std::size_t k = m.size();
  auto apply = [&](const Vec& x, bool linear) {
    Vec y(k);
    for (std::size_t i = 0; i < k; ++i) y[i] = dot(m[i], x) + (linear ? Scalar(0) : c[i]);
    return y;
  };
  Generators g;
  g.dim = k;
  for (const auto& x : p.vrep().vertices) g.vertices.push_back(apply(x, false));
  for (const auto& r : p.vrep().rays) {
    Vec y = apply(r, true);
    if (!is_zero(y)) g.rays.push_back(std::move(y));
  }
  for (const auto& l : p.vrep().lineality) {
    Vec y = apply(l, true);
    if (!is_zero(y)) g.lineality.push_back(std::move(y));
  }
  return Polyhedron::from_generators(g);
}

std::optional<Polyhedron> affine_preimage(const Polyhedron& p, const Matrix& m, const Vec& c, std::size_t cols) {
  LinearSystem s(cols);
  auto pull = [&](const Row& r) {
    Vec n = zeros(cols);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (sgn(r.normal[i]) != 0) n = add(n, scale(m[i], r.normal[i]));
    return Row{n, r.offset - dot(r.normal, c)};
  };
  for (const auto& r : p.hrep().inequalities) s.inequalities.push_back(pull(r));
  for (const auto& r : p.hrep().equalities) s.equalities.push_back(pull(r));
  return try_from_system(s);
}

Polyhedron product(const Polyhedron& p, const Polyhedron& q) {
  const std::size_t a = p.ambient_dim(), b = q.ambient_dim();
  LinearSystem s(a + b);
  auto lift = [&](const Row& r, std::size_t at) {
    Vec n = zeros(a + b);
    for (std::size_t i = 0; i < r.normal.size(); ++i) n[at + i] = r.normal[i];
    return Row{n, r.offset};
  };
  for (const auto& r : p.hrep().inequalities) s.inequalities.push_back(lift(r, 0));
  for (const auto& r : p.hrep().equalities) s.equalities.push_back(lift(r, 0));
  for (const auto& r : q.hrep().inequalities) s.inequalities.push_back(lift(r, a));
  for (const auto& r : q.hrep().equalities) s.equalities.push_back(lift(r, a));
  return Polyhedron::from_system(s);
}

Vec QuotientMap::apply(const Vec& x) const {
  Vec y(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) y[j] = dot(to_vec(basis[j]), x);
  return y;
}

Matrix QuotientMap::matrix() const {
  Matrix m;
  for (const auto& b : basis) m.push_back(to_vec(b));
  return m;
}

QuotientMap quotient_map(const Polyhedron& tau) {
  Matrix span;
  for (const auto& r : tau.vrep().rays) span.push_back(r);
  for (const auto& l : tau.vrep().lineality) span.push_back(l);
  for (const auto& x : tau.vrep().vertices)
    if (!is_zero(x)) span.push_back(x);
  QuotientMap q;
  q.ambient_dim = tau.ambient_dim();
  q.basis = integer_kernel(span, tau.ambient_dim());
  return q;
}

Projection project_mod_span(const Polyhedron& p, const Polyhedron& tau) {
  if (!tau.is_cone()) throw PreconditionViolation("project_mod_span: tau must be a cone");
  QuotientMap q = quotient_map(tau);
  Matrix m = q.matrix();
  return {affine_image(p, m, zeros(m.size())), std::move(q)};
}

Face face_image_in_quotient(const Polyhedron& f, const Polyhedron& p, const Polyhedron& tau) {
  if (!is_face(tau, recession_cone(f)))
    throw PreconditionViolation("face_image_in_quotient: tau is not a face of rec F");
  if (!is_face(f, p)) throw PreconditionViolation("face_image_in_quotient: F is not a face of P");
  Projection proj = project_mod_span(p, tau);
  Matrix m = proj.map.matrix();
  Polyhedron img = affine_image(f, m, zeros(m.size()));
  return {img, proj.image.tight_set(img.relint_point())};
}

}  // namespace lfc
