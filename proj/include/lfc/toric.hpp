// Stratified model of the partial compactification W(Σ): one quotient
// W / span(τ) per cone τ of the fan.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lfc/complex.hpp"
#include "lfc/subdivision.hpp"

namespace lfc {

class CompatibilityError : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class StratumNotInFan : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class ToricSpace {
 public:
  explicit ToricSpace(Fan fan);
  const Fan& fan() const { return fan_; }
  /// Every cone of the fan, ordered by dimension then key.
  const std::vector<Polyhedron>& strata() const { return cones_; }
  std::optional<std::size_t> stratum_index(const Polyhedron& tau) const;
  const QuotientMap& quotient(std::size_t stratum) const { return maps_[stratum]; }
  const QuotientMap& quotient(const Polyhedron& tau) const;

 private:
  Fan fan_;
  std::vector<Polyhedron> cones_;
  std::vector<QuotientMap> maps_;
};

struct ExtendedPoint {
  Polyhedron stratum;
  Vec coords;
  bool operator==(const ExtendedPoint& o) const { return stratum == o.stratum && coords == o.coords; }
};

struct ClosurePiece {
  Polyhedron tau;
  Polyhedron image;  // π_τ(P)
};

/// Stratumwise closure of P: (τ, π_τ(P)) for every cone τ of the fan that is
/// a face of rec P. Requires Σ ∪ faces(rec P) to be a fan.
std::vector<ClosurePiece> closure_in_toric(const Polyhedron& p, const ToricSpace& t);

ExtendedPoint extended_add(const Vec& v, const ExtendedPoint& x, const ToricSpace& t);

/// Data for decomposing points of the closure of P in one stratum τ.
struct StratumTable {
  Polyhedron tau;
  QuotientMap map;
  Polyhedron image;  // π_τ(P)
  Vec ray;  // π_τ(v)
  std::vector<Polyhedron> boundary;  // π_τ(F) for boundary faces F with τ ≤ rec F
  /// Splits a quotient point of π_τ(P) into a boundary part and a ray part.
  RayDecomposition decompose(const Vec& xbar) const;
};

std::vector<StratumTable> boundary_decomposition_data(const Polyhedron& p, const ToricSpace& t,
                                                      const Polyhedron& rho);

}  // namespace lfc
