// Exact rational scalars, vectors, linear systems, linear programming and the
// conversion between H- and V-representations of polyhedra.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfc {

using Scalar = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Scalar>;
using IntVec = std::vector<Integer>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyPolyhedron : public Error {
 public:
  EmptyPolyhedron() : Error("polyhedron is empty") {}
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Vector helpers

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Scalar dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);

/// Scales a nonzero rational vector by a positive factor to the unique
/// primitive integer vector in the same direction.
IntVec primitive(const Vec& a);
Vec to_vec(const IntVec& a);
IntVec to_intvec(const Vec& a);  // requires integral entries

std::string to_string(const Scalar& s);
std::string to_string(const Vec& v);
Scalar parse_scalar(const std::string& text, bool strict = true);

// ---------------------------------------------------------------------------
// Linear systems

struct Row {
  Vec normal;
  Scalar offset;
};

/// ⟨normal, w⟩ ≥ offset for every inequality, = offset for every equality.
struct LinearSystem {
  std::size_t dim = 0;
  std::vector<Row> inequalities;
  std::vector<Row> equalities;

  LinearSystem() = default;
  explicit LinearSystem(std::size_t d) : dim(d) {}

  LinearSystem& ge(Vec normal, Scalar offset);
  LinearSystem& le(Vec normal, Scalar offset);
  LinearSystem& eq(Vec normal, Scalar offset);
  LinearSystem& append(const LinearSystem& other);

  void check() const;  // throws DimensionMismatch
  bool satisfied_by(const Vec& w) const;
};

// ---------------------------------------------------------------------------
// Linear programming

struct LpResult {
  enum class Status { kOptimal, kUnbounded, kInfeasible };
  Status status = Status::kInfeasible;
  Scalar value;
  Vec witness;

  bool optimal() const { return status == Status::kOptimal; }
};

bool lp_feasible(const LinearSystem& sys);
LpResult lp_minimize(const LinearSystem& sys, const Vec& objective);
/// Some point satisfying the system, if any.
std::optional<Vec> lp_point(const LinearSystem& sys);

// ---------------------------------------------------------------------------
// Double description

/// Minimal V-representation: conv(vertices) + cone(rays) + span(lineality).
/// Rays and lineality generators are primitive integer vectors; rays and
/// vertices are reduced modulo the lineality space (orthogonal complement), so
/// the representation is canonical for the point set.
struct Generators {
  std::size_t dim = 0;
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
  std::vector<Vec> lineality;

  bool empty() const { return vertices.empty(); }
};

Generators dual_description(const LinearSystem& sys);

/// Irredundant H-representation of conv(vertices) + cone(rays) +
/// span(lineality). Equalities come in reduced row echelon order, inequalities
/// are reduced modulo the equalities and scaled to primitive integer normals.
LinearSystem primal_description(const Generators& gens);

/// Canonical (sorted, reduced) V-representation of the same data.
void canonicalize(Generators& gens);

// ---------------------------------------------------------------------------
// Linear algebra

using Matrix = std::vector<Vec>;

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m, std::size_t cols);
/// Integer basis (row Hermite normal form) of the lattice {x ∈ ℤⁿ : m x = 0}.
std::vector<IntVec> integer_kernel(const Matrix& m, std::size_t cols);
/// Solves m x = rhs; any solution or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

}  // namespace lfc
