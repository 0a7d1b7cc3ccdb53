// Ray decomposition, Minkowski subdivision of a single polyhedron, and the
// finite seed describing an infinite locally finite subdivision.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfc/classes.hpp"
#include "lfc/complex.hpp"

namespace lfc {

class NotSubcomplex : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};
class RecessionNotInSigma : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};
class SigmaPrimeNotFan : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};
class SupportMismatch : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

struct RayDecomposition {
  Vec b;  // on the boundary part B of P
  Vec r;  // on the ray
  Scalar t;  // r = t·v
};

/// w = b + r with b on a face of P whose recession cone is a proper face of
/// rec P and r on the ray through v. Requires v in the relative interior of
/// rec P and w ∈ P.
RayDecomposition decompose_by_ray(const Polyhedron& p, const Vec& v, const Vec& w);
RayDecomposition decompose_by_ray(const Polyhedron& p, const Polyhedron& rho, const Vec& w);

/// Faces of P whose recession cone is a proper face of rec P, maximal under
/// inclusion.
std::vector<Polyhedron> boundary_faces(const Polyhedron& p);

/// {Q + R : Q ∈ boundary, R ∈ ladder}.
class MinkowskiSubdivision {
 public:
  MinkowskiSubdivision(Polyhedron p, RayLadder ladder, Complex boundary);
  const Complex& boundary() const { return boundary_; }
  const RayLadder& ladder() const { return ladder_; }
  Polyhedron cell(const Polyhedron& q, long ladder_index) const;

 private:
  Polyhedron p_;
  RayLadder ladder_;
  Complex boundary_;
};

/// Checks that the boundary complex has support exactly B.
MinkowskiSubdivision subdivide_polyhedron(const Polyhedron& p, const Polyhedron& rho, const RayLadder& ladder,
                                          const Complex& boundary);

struct RayChoice {
  Polyhedron cone;
  Vec v;  // primitive generator in the relative interior of cone
  Scalar gamma;
};

/// Piece of the boundary of a Π-cell P: a face F together with the affine
/// functional psi(x) = ⟨ell, x⟩ - ell_offset measuring the ray parameter on
/// F + ρ.
struct BoundaryPiece {
  std::size_t face;  // index into SubdivisionSeed::pi_cells
  Polyhedron region;  // F + ρ
  Vec ell;
  Scalar ell_offset;
};

struct PiCellInfo {
  Polyhedron cell;
  Polyhedron rec;
  bool in_sigma = false;
  std::optional<std::size_t> ray;  // index into ray_choices
  std::vector<BoundaryPiece> pieces;
};

struct SubdivisionSeed {
  Complex pi;
  Complex phi;
  Fan sigma;
  Fan sigma_prime;
  std::vector<RayChoice> ray_choices;  // sorted by cone key
  ClassSpec cls;

  // compiled lookup data
  std::vector<PiCellInfo> pi_cells;  // every cell of Π, ordered by dimension then key
  std::map<std::string, std::size_t> pi_index;
  std::vector<Polyhedron> phi_cells;
  std::vector<Polyhedron> sigma_cones;

  std::size_t ambient_dim() const { return pi.ambient_dim; }
  std::optional<std::size_t> index_of(const Polyhedron& pi_cell) const;
  bool in_sigma(const Polyhedron& cone) const;
  const RayChoice* ray_for(const Polyhedron& cone) const;
  /// Rebuilds the lookup data from pi, phi, sigma, ray_choices and cls.
  void compile();
};

/// Validates the inputs, picks the canonical ray for each cone of Σ′ ∖ Σ and
/// compiles. Overrides replace ray choices by cone key.
SubdivisionSeed build_seed(const Complex& pi, const Complex& phi, const Fan& sigma, const ClassSpec& cls,
                           const std::vector<RayChoice>& overrides = {});

/// Address of a cell: base Π-cell plus translates by ladder cells of the rays
/// of successively larger cones.
struct CellLink {
  std::size_t parent;  // Π-cell index carrying the cell
  long index;  // ladder index, never 0
  bool operator==(const CellLink& o) const { return parent == o.parent && index == o.index; }
  bool operator<(const CellLink& o) const {
    return parent != o.parent ? parent < o.parent : index < o.index;
  }
};

struct CellId {
  std::size_t base = 0;
  std::vector<CellLink> chain;
  bool operator==(const CellId& o) const { return base == o.base && chain == o.chain; }
  bool operator<(const CellId& o) const {
    return base != o.base ? base < o.base : chain < o.chain;
  }
  std::string to_string() const;
  static CellId parse(const std::string& text);
};

/// Geometry of a cell id.
Polyhedron materialize(const SubdivisionSeed& seed, const CellId& id);

}  // namespace lfc
