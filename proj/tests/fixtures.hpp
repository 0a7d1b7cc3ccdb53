// Small geometric fixtures shared by tests.
#pragma once

#include "lfc/complex.hpp"

namespace fx {

using namespace lfc;

inline Polyhedron box2(Scalar x0, Scalar x1, Scalar y0, Scalar y1) {
  return Polyhedron::from_vertices(2, {{x0, y0}, {x1, y0}, {x0, y1}, {x1, y1}});
}

inline Polyhedron quadrant(int sx, int sy) { return Polyhedron::cone(2, {{sx, 0}, {0, sy}}); }

inline std::vector<Polyhedron> four_quadrants() {
  return {quadrant(1, 1), quadrant(-1, 1), quadrant(-1, -1), quadrant(1, -1)};
}

inline Complex complex_of(std::size_t d, const std::vector<Polyhedron>& cells) { return validate_complex(d, cells); }

}  // namespace fx
