// Immutable polyhedron values with canonical H- and V-representations.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lfc/exact.hpp"

namespace lfc {

class Polyhedron;

struct Face;

/// Axis-aligned bounding box; a missing bound means unbounded in that direction.
struct Box {
  std::vector<std::optional<Scalar>> lo, hi;
  bool overlaps(const Box& other) const;
  bool contains(const Vec& x) const;
};

class Polyhedron {
 public:
  /// Throws EmptyPolyhedron if the system has no solution.
  static Polyhedron from_system(const LinearSystem& sys);
  static Polyhedron from_generators(const Generators& gens);
  static Polyhedron from_vertices(std::size_t dim, const std::vector<Vec>& vertices,
                                  const std::vector<Vec>& rays = {},
                                  const std::vector<Vec>& lineality = {});
  static Polyhedron point(const Vec& x);
  static Polyhedron cone(std::size_t dim, const std::vector<Vec>& rays);
  static Polyhedron whole_space(std::size_t dim);

  std::size_t ambient_dim() const;
  /// Dimension of the affine hull.
  std::size_t dim() const;
  const LinearSystem& hrep() const;
  const Generators& vrep() const;

  bool contains(const Vec& x) const;
  bool contains(const Polyhedron& other) const;
  bool is_bounded() const;
  bool is_cone() const;  // contains 0 and 0 lies in every supporting hyperplane
  bool is_pointed() const;

  /// Inequality indices of hrep() tight at x.
  std::vector<std::size_t> tight_set(const Vec& x) const;
  /// Vertex centroid plus the sum of rays; lies in the relative interior.
  Vec relint_point() const;
  /// True iff x lies in the relative interior.
  bool in_relint(const Vec& x) const;
  const Box& bbox() const;

  /// All nonempty faces including the polyhedron itself, ordered by dimension
  /// then key. Computed once on first use.
  const std::vector<Face>& faces() const;
  std::vector<Face> facets() const;
  /// The face on which the given inequalities are tight.
  std::optional<Polyhedron> face_from_tight(const std::vector<std::size_t>& tight) const;
  /// Smallest face containing x (x must lie in the polyhedron).
  Polyhedron carrier_face(const Vec& x) const;

  /// Canonical text of the irredundant H-representation.
  const std::string& key() const;
  /// 16 hex digit content hash of key().
  const std::string& hash() const;
  std::string describe() const;

  bool operator==(const Polyhedron& o) const;
  bool operator!=(const Polyhedron& o) const { return !(*this == o); }
  bool operator<(const Polyhedron& o) const { return key() < o.key(); }

 private:
  struct Impl;
  explicit Polyhedron(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static Polyhedron make(LinearSystem h, Generators v);
  std::shared_ptr<const Impl> impl_;
};

struct Face {
  Polyhedron polyhedron;
  std::vector<std::size_t> tight_set;
};

Polyhedron recession_cone(const Polyhedron& p);
Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);
std::optional<Polyhedron> intersect(const Polyhedron& p, const Polyhedron& q);
bool meets(const Polyhedron& p, const Polyhedron& q);
/// True iff f is a (nonempty) face of p.
bool is_face(const Polyhedron& f, const Polyhedron& p);
bool is_pointed(const Polyhedron& p);
Polyhedron translate(const Polyhedron& p, const Vec& shift);
/// Image {M x + c : x ∈ p}; M given by rows.
Polyhedron affine_image(const Polyhedron& p, const Matrix& m, const Vec& c);
/// Preimage {x : M x + c ∈ p}; M given by rows, x of dimension cols.
std::optional<Polyhedron> affine_preimage(const Polyhedron& p, const Matrix& m, const Vec& c, std::size_t cols);
/// p × q in the product space.
Polyhedron product(const Polyhedron& p, const Polyhedron& q);

/// Coordinates of W / span(tau): x ↦ (⟨q_j, x⟩)_j where q_j is the row Hermite
/// basis of the lattice span(tau)^⊥ ∩ ℤᵈ.
struct QuotientMap {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> basis;
  std::size_t dim() const { return basis.size(); }
  Vec apply(const Vec& x) const;
  Matrix matrix() const;
};

QuotientMap quotient_map(const Polyhedron& tau);

struct Projection {
  Polyhedron image;
  QuotientMap map;
};

Projection project_mod_span(const Polyhedron& p, const Polyhedron& tau);

/// Image of a face f of p in the quotient by span(tau), with the tight set
/// exhibiting it as a face of the image of p. Requires tau to be a face of
/// rec f.
Face face_image_in_quotient(const Polyhedron& f, const Polyhedron& p, const Polyhedron& tau);

}  // namespace lfc
