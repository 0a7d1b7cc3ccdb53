// Fan completion, finite completion through the cone space, star-shaped
// extension and the locally finite completion pipelines.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfc/subdivision.hpp"

namespace lfc {

class CompletionNotFound : public Error {
 public:
  using Error::Error;
};

class NotStarShaped : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class NotZonotopal : public PreconditionViolation {
 public:
  NotZonotopal(Polyhedron cell, Polyhedron face);
  Polyhedron cell, face;
};

class NoCenterFound : public Error {
 public:
  using Error::Error;
};

/// Complete fan containing every cone of D. Exact angular gap filling in the
/// plane, an advancing front of pyramids over open facets in higher
/// dimension.
Fan complete_fan(const Fan& d);

/// Finite complete complex containing Φ whose recession cones together with Σ
/// form a fan. New vertices are taken from the lattice (class step)·ℤᵈ.
Complex complete_complex_finite(const Complex& phi, const Fan& sigma, const ClassSpec& cls);

/// Φ together with ℝ≥1·(F − w) + w for every cell F on the boundary of |Φ|.
Complex star_shaped_extension(const Complex& phi, const Vec& w);

SubdivisionSeed complete_locally_finite(const Complex& phi, const Fan& sigma, const ClassSpec& cls);

/// Locally finite completion by bounded zonotopes. The center is searched
/// for when not given.
SubdivisionSeed zonotopal_completion(const Complex& phi, const std::optional<Vec>& center = std::nullopt);

/// Locally finite completion by polytopes.
SubdivisionSeed polytopal_completion(const Complex& phi);

struct CompletionReport {
  bool preserved = false;  // every input cell appears verbatim
  std::optional<Complex> complex;
  std::optional<SubdivisionSeed> seed;
  std::vector<std::string> transcript;
};

CompletionReport report_complex(const Complex& input, const Complex& output);
/// Preservation checked on the Π-cells of the seed; validity on the window.
CompletionReport report_seed(const Complex& input, const SubdivisionSeed& seed, const Polyhedron& window);

}  // namespace lfc
