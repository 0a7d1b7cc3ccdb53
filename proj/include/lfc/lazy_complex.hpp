// Window queries on the infinite subdivision described by a seed.
#pragma once

#include <string>
#include <vector>

#include "lfc/subdivision.hpp"
#include "lfc/toric.hpp"

namespace lfc {

class NotInSupport : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct MaterializedCell {
  CellId id;
  Polyhedron geometry;
};

/// Axis-aligned box [lo_i, hi_i].
Polyhedron make_box(const Vec& lo, const Vec& hi);

/// Every cell of the subdivision meeting the window, each once, ordered by
/// dimension then geometry key.
std::vector<MaterializedCell> cells_in_window(const SubdivisionSeed& seed, const Polyhedron& window);

/// Smallest cell containing x in its relative interior.
MaterializedCell locate_point(const SubdivisionSeed& seed, const Vec& x);

struct WindowCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct WindowReport {
  std::size_t cell_count = 0;
  std::vector<WindowCheck> checks;  // pairwise, closure, coverage, recession, preservation, class
  bool ok() const;
  const WindowCheck* failure() const;
};

WindowReport validate_window(const SubdivisionSeed& seed, const Polyhedron& window);
/// Same checks on an explicit cell list (used for tampered outputs).
WindowReport validate_cells(const SubdivisionSeed& seed, const Polyhedron& window,
                            const std::vector<MaterializedCell>& cells);

/// Cells C with τ ≤ rec C whose closure in the τ-stratum contains the point,
/// i.e. those meeting the preimage cylinder of x̄ under W → W / span τ.
std::vector<MaterializedCell> boundary_certificate(const SubdivisionSeed& seed, const ExtendedPoint& x,
                                                   std::size_t budget = 100000);

}  // namespace lfc
