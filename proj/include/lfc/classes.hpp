// Classes of polyhedra closed under Minkowski sums, with interior rays and
// ray ladders.
#pragma once

#include <optional>
#include <string>

#include "lfc/polyhedron.hpp"

namespace lfc {

class ClassViolation : public Error {
 public:
  ClassViolation(Polyhedron cell, std::string reason);
  Polyhedron cell;
  std::string reason;
};

struct ClassSpec {
  enum class Kind { kAll, kQDefinable, kGammaRational, kGammaRationalVertices, kZonotopal };
  Kind kind = Kind::kAll;
  Scalar g = 1;  // generator of Γ = g·ℤ for the gamma kinds

  /// "all", "q", "zonotopal", "gamma:<g>", "gamma-vertices:<g>".
  static ClassSpec parse(const std::string& text);
  std::string to_string() const;
  /// Step of the ray ladder: g for the gamma kinds, 1 otherwise.
  Scalar ladder_step() const;
  bool operator==(const ClassSpec& o) const { return kind == o.kind && g == o.g; }
};

/// Reason the polyhedron is not in the class, or nullopt if it is.
std::optional<std::string> class_violation(const Polyhedron& p, const ClassSpec& c);
bool class_membership(const Polyhedron& p, const ClassSpec& c);

/// True iff every bounded 2-face is centrally symmetric.
bool is_zonotopal(const Polyhedron& p);
/// Offending bounded 2-face, if any.
std::optional<Polyhedron> asymmetric_two_face(const Polyhedron& p);

/// Ray through the sum of the primitive generators of the extreme rays.
Polyhedron relint_ray(const Polyhedron& sigma, const ClassSpec& c);
/// Primitive integer generator of a ray (one-dimensional pointed cone).
Vec ray_generator(const Polyhedron& ray);

/// Locally finite subdivision of a ray: index 2k is the point k·γ·v, index
/// 2k+1 the segment [k·γ·v, (k+1)·γ·v].
struct RayLadder {
  Vec v;
  Scalar gamma;

  Polyhedron cell(long index) const;
  /// Translation of a cell's lowest point, k·γ·v for index 2k or 2k+1.
  Vec offset(long index) const;
  /// Index of the smallest cell containing t·v (t ≥ 0).
  long index_of(const Scalar& t) const;
};

RayLadder ray_subdivision(const Polyhedron& rho, const ClassSpec& c);

}  // namespace lfc
