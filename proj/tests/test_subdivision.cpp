#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "lfc/subdivision.hpp"
#include "oracles.hpp"

using namespace lfc;
using fx::quadrant;

namespace {

Polyhedron diagonal() { return Polyhedron::cone(2, {{1, 1}}); }

SubdivisionSeed quadrant_seed() {
  Complex pi = fx::complex_of(2, fx::four_quadrants());
  Complex phi = fx::complex_of(2, {quadrant(-1, 1), quadrant(-1, -1), quadrant(1, -1)});
  return build_seed(pi, phi, recession_fan(phi), ClassSpec::parse("gamma:1"));
}

}  // namespace

TEST(Decompose, QuadrantExamples) {
  auto q = quadrant(1, 1);
  auto d = decompose_by_ray(q, diagonal(), {3, 1});
  EXPECT_EQ(d.b, (Vec{2, 0}));
  EXPECT_EQ(d.r, (Vec{1, 1}));
  EXPECT_EQ(d.t, 1);
  d = decompose_by_ray(q, diagonal(), {0, 0});
  EXPECT_EQ(d.b, (Vec{0, 0}));
  EXPECT_EQ(d.t, 0);
  d = decompose_by_ray(q, diagonal(), {2, 2});
  EXPECT_EQ(d.b, (Vec{0, 0}));
  EXPECT_EQ(d.r, (Vec{2, 2}));
}

TEST(Decompose, Preconditions) {
  auto q = quadrant(1, 1);
  EXPECT_THROW(decompose_by_ray(q, Vec{1, 0}, Vec{1, 1}), PreconditionViolation);
  EXPECT_THROW(decompose_by_ray(q, Vec{1, 1}, Vec{-1, 1}), PreconditionViolation);
  EXPECT_THROW(decompose_by_ray(fx::box2(0, 1, 0, 1), Vec{1, 1}, Vec{0, 0}), PreconditionViolation);
  EXPECT_THROW(decompose_by_ray(Polyhedron::from_vertices(2, {{0, 0}}, {}, {{1, 0}}), Vec{1, 0}, Vec{0, 0}),
               PreconditionViolation);
}

TEST(Decompose, MatchesLinearProgram) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coin(-3, 3);
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    std::vector<Vec> verts;
    for (int k = 0; k < 3; ++k) verts.push_back(oracle::random_vec(rng, 2, -3, 3));
    std::vector<Vec> rays = {{1, coin(rng)}, {coin(rng), 1}};
    auto p = Polyhedron::from_vertices(2, verts, rays);
    if (!p.is_pointed()) continue;
    auto rec = recession_cone(p);
    Vec v = ray_generator(relint_ray(rec, ClassSpec{}));
    Vec w = add(p.relint_point(), oracle::random_vec(rng, 2, 0, 2));
    if (!p.contains(w)) continue;
    auto d = decompose_by_ray(p, v, w);
    // t is the largest s with w - s v ∈ P
    LinearSystem sys(1);
    for (const auto& r : p.hrep().inequalities) sys.ge({-dot(r.normal, v)}, r.offset - dot(r.normal, w));
    for (const auto& r : p.hrep().equalities) sys.eq({-dot(r.normal, v)}, r.offset - dot(r.normal, w));
    auto lp = lp_minimize(sys, {-1});
    ASSERT_TRUE(lp.optimal());
    EXPECT_EQ(d.t, -lp.value);
    EXPECT_EQ(add(d.b, d.r), w);
    EXPECT_LT(recession_cone(p.carrier_face(d.b)).dim(), rec.dim());
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(BoundaryFaces, QuadrantAndStrip) {
  auto b = boundary_faces(quadrant(1, 1));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_TRUE(std::count(b.begin(), b.end(), Polyhedron::cone(2, {{1, 0}})));
  EXPECT_TRUE(std::count(b.begin(), b.end(), Polyhedron::cone(2, {{0, 1}})));
  auto strip = Polyhedron::from_vertices(2, {{0, 0}, {1, 0}}, {{0, 1}});
  b = boundary_faces(strip);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], Polyhedron::from_vertices(2, {{0, 0}, {1, 0}}));
}

TEST(MinkowskiSubdivisionTest, StaircaseParallelogram) {
  auto seg = Polyhedron::from_vertices(2, {{1, 0}, {2, 0}});
  Complex boundary = fx::complex_of(2, {seg});
  MinkowskiSubdivision s(quadrant(1, 1), RayLadder{{1, 1}, 1}, boundary);
  EXPECT_EQ(s.cell(seg, 1), Polyhedron::from_vertices(2, {{1, 0}, {2, 0}, {2, 1}, {3, 1}}));
  EXPECT_EQ(s.cell(seg, 2), Polyhedron::from_vertices(2, {{2, 1}, {3, 1}}));
  EXPECT_THROW(s.cell(Polyhedron::point({5, 5}), 0), PreconditionViolation);
}

TEST(MinkowskiSubdivisionTest, SupportCheck) {
  auto strip = Polyhedron::from_vertices(2, {{0, 0}, {2, 0}}, {{0, 1}});
  auto up = Polyhedron::cone(2, {{0, 1}});
  RayLadder l{{0, 1}, 1};
  auto half = [](int a, int b) { return Polyhedron::from_vertices(2, {{a, 0}, {b, 0}}); };
  EXPECT_NO_THROW(subdivide_polyhedron(strip, up, l, fx::complex_of(2, {half(0, 1), half(1, 2)})));
  EXPECT_THROW(subdivide_polyhedron(strip, up, l, fx::complex_of(2, {half(0, 1)})), SupportMismatch);
  EXPECT_THROW(subdivide_polyhedron(strip, up, l, fx::complex_of(2, {half(0, 3)})), SupportMismatch);
}

TEST(Seed, QuadrantExample) {
  auto seed = quadrant_seed();
  ASSERT_EQ(seed.ray_choices.size(), 1u);
  EXPECT_EQ(seed.ray_choices[0].cone, quadrant(1, 1));
  EXPECT_EQ(seed.ray_choices[0].v, (Vec{1, 1}));
  EXPECT_EQ(seed.ray_choices[0].gamma, 1);
  EXPECT_EQ(seed.pi_cells.size(), 9u);
  auto idx = seed.index_of(quadrant(1, 1));
  ASSERT_TRUE(idx);
  const auto& info = seed.pi_cells[*idx];
  EXPECT_FALSE(info.in_sigma);
  ASSERT_EQ(info.pieces.size(), 2u);
  for (const auto& piece : info.pieces) {
    EXPECT_EQ(dot(piece.ell, {1, 1}), 1);
    const auto& f = seed.pi_cells[piece.face].cell;
    for (const auto& x : f.vrep().vertices) EXPECT_EQ(dot(piece.ell, x), piece.ell_offset);
    for (const auto& r : f.vrep().rays) EXPECT_EQ(dot(piece.ell, r), 0);
  }
  EXPECT_EQ(seed.sigma_prime, fx::complex_of(2, fx::four_quadrants()));
}

TEST(Seed, RejectsBadInput) {
  Complex pi = fx::complex_of(2, fx::four_quadrants());
  Complex phi = fx::complex_of(2, {quadrant(-1, 1)});
  auto cls = ClassSpec::parse("gamma:1");
  Complex stray = fx::complex_of(2, {fx::box2(5, 6, 5, 6)});
  EXPECT_THROW(build_seed(pi, stray, zero_fan(2), cls), NotSubcomplex);
  EXPECT_THROW(build_seed(pi, phi, zero_fan(2), cls), RecessionNotInSigma);
  Fan skew = validate_fan(2, {Polyhedron::cone(2, {{1, 0}, {1, 1}}), quadrant(-1, 1)});
  EXPECT_THROW(build_seed(pi, phi, skew, cls), SigmaPrimeNotFan);
  Complex third = fx::complex_of(2, {Polyhedron::from_vertices(2, {{Scalar(1, 3), 0}}, {{1, 0}, {0, 1}})});
  EXPECT_THROW(build_seed(third, fx::complex_of(2, {}), zero_fan(2), cls), ClassViolation);
}

TEST(Seed, Deterministic) {
  auto a = quadrant_seed();
  auto b = quadrant_seed();
  ASSERT_EQ(a.pi_cells.size(), b.pi_cells.size());
  for (std::size_t i = 0; i < a.pi_cells.size(); ++i) EXPECT_EQ(a.pi_cells[i].cell, b.pi_cells[i].cell);
}

TEST(CellIdTest, RoundTripAndMaterialize) {
  auto seed = quadrant_seed();
  std::size_t p1 = *seed.index_of(quadrant(1, 1));
  std::size_t xray = *seed.index_of(Polyhedron::cone(2, {{1, 0}}));
  CellId id{xray, {{p1, 3}}};
  EXPECT_EQ(CellId::parse(id.to_string()), id);
  EXPECT_EQ(materialize(seed, id), Polyhedron::from_vertices(2, {{1, 1}, {2, 2}}, {{1, 0}}));
  EXPECT_THROW(CellId::parse("3.1:0"), Error);
  EXPECT_THROW(CellId::parse("x"), Error);
  EXPECT_THROW(materialize(seed, CellId{xray, {{xray, 1}}}), PreconditionViolation);
}
