// Finite polyhedral complexes and fans.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfc/polyhedron.hpp"

namespace lfc {

class FaceClosureViolation : public Error {
 public:
  FaceClosureViolation(Polyhedron cell, Polyhedron missing);
  Polyhedron cell, missing;
};

class BadIntersection : public Error {
 public:
  BadIntersection(Polyhedron first, Polyhedron second, Vec witness);
  Polyhedron first, second;
  Vec witness;
};

class NotAFan : public Error {
 public:
  NotAFan(Polyhedron first, Polyhedron second);
  Polyhedron first, second;
};

/// Complex stored by its maximal cells; faces are derived on demand.
struct Complex {
  std::size_t ambient_dim = 0;
  std::vector<Polyhedron> maximal;  // sorted by key

  /// Every cell (face closure), ordered by dimension then key.
  std::vector<Polyhedron> cells() const;
  bool has_cell(const Polyhedron& p) const;
  bool is_pure_full_dimensional() const;
  /// Facet-matching certificate: pure of full dimension and every facet of a
  /// maximal cell lies in exactly two maximal cells.
  bool is_complete() const;
  bool is_fan() const;
  bool operator==(const Complex& o) const;
};

using Fan = Complex;

enum class FaceMode {
  kClose,   // missing faces are added
  kStrict,  // every face of a listed cell must be listed
};

/// Checks the complex axioms and returns the complex by maximal cells.
Complex validate_complex(std::size_t ambient_dim, const std::vector<Polyhedron>& cells,
                         FaceMode mode = FaceMode::kClose);
/// Cells must additionally be pointed cones; throws NotAFan otherwise.
Fan validate_fan(std::size_t ambient_dim, const std::vector<Polyhedron>& cones);
Fan zero_fan(std::size_t ambient_dim);

/// Witness point if p ∩ q is nonempty and not a common face.
std::optional<Vec> intersection_defect(const Polyhedron& p, const Polyhedron& q);

Fan recession_fan(const Complex& c);
/// Cone over each cell at height 1 together with sigma × {0}.
Fan cone_over_complex(const Complex& c, const Fan& sigma);
Polyhedron cone_over(const Polyhedron& p);
/// Slice of a fan in W × ℝ≥0 at t = 1 (complex) or t = 0 (fan), last
/// coordinate dropped.
Complex height_slice(const Fan& f, int height);

/// True iff the full-dimensional cells cover the box: every facet of a
/// full-dimensional cell whose relative interior meets int(box) lies in
/// exactly two full-dimensional cells, and at least one cell meets int(box).
/// Cells must pairwise intersect in common faces.
struct CoverageResult {
  bool covered = false;
  std::optional<Polyhedron> open_facet;  // a facet with one side uncovered
  std::string detail;
};
CoverageResult covers(const std::vector<Polyhedron>& cells, const Polyhedron& box);

struct StarShapedResult {
  bool star_shaped = false;
  std::string violated;  // which of the four checks failed
  std::vector<Polyhedron> boundary_facets;
  /// pairs of boundary-facet indices whose cones share a facet
  std::vector<std::pair<std::size_t, std::size_t>> matching;
};

StarShapedResult is_star_shaped_around(const Complex& c, const Vec& w);

}  // namespace lfc
