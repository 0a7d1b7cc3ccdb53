#include <gtest/gtest.h>

#include <random>

#include "lfc/completion.hpp"
#include "lfc/lazy_complex.hpp"
#include "worked_examples.hpp"
#include "random_inputs.hpp"

using namespace lfc;
using fx::quadrant;

namespace {

void expect_window_ok(const SubdivisionSeed& seed, const Polyhedron& window) {
  auto rep = validate_window(seed, window);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
}

Complex faces_of_square() { return fx::complex_of(2, {fx::box2(-1, 1, -1, 1)}); }

}  // namespace

TEST(CompleteFan, RayToQuadrants) {
  Fan d = validate_fan(2, {Polyhedron::cone(2, {{1, 0}})});
  EXPECT_EQ(complete_fan(d), fx::complex_of(2, fx::four_quadrants()));
  EXPECT_EQ(complete_fan(zero_fan(2)), fx::complex_of(2, fx::four_quadrants()));
}

TEST(CompleteFan, CompleteInputUnchanged) {
  Fan q = validate_fan(2, fx::four_quadrants());
  EXPECT_EQ(complete_fan(q), q);
  Fan line = validate_fan(1, {Polyhedron::cone(1, {{1}}), Polyhedron::cone(1, {{-1}})});
  EXPECT_EQ(complete_fan(line), line);
}

TEST(CompleteFan, LineAndOctant) {
  EXPECT_TRUE(complete_fan(zero_fan(1)).is_complete());
  Fan octant = validate_fan(3, {Polyhedron::cone(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
  Fan c = complete_fan(octant);
  EXPECT_TRUE(c.is_complete());
  EXPECT_TRUE(c.has_cell(octant.maximal[0]));
}

TEST(CompleteFan, RandomPlaneAndSpace) {
  std::mt19937 rng(21);
  for (int i = 0; i < 40; ++i) {
    std::size_t d = i % 2 ? 3 : 2;
    Fan f = gen::random_fan(rng, d, 6);
    Fan c = complete_fan(f);
    EXPECT_TRUE(c.is_complete());
    for (const auto& m : f.maximal) EXPECT_TRUE(c.has_cell(m)) << m.describe();
    EXPECT_NO_THROW(validate_fan(d, c.maximal));
  }
}

TEST(CompleteFan, Deterministic) {
  std::mt19937 rng(8);
  Fan f = gen::random_fan(rng, 3, 5);
  EXPECT_EQ(complete_fan(f), complete_fan(f));
}

TEST(CompleteComplex, QuadrantsGiveFourQuadrants) {
  auto phi = fx::quadrants_phi();
  auto pi = complete_complex_finite(phi, recession_fan(phi), ClassSpec::parse("gamma:1"));
  EXPECT_EQ(pi, fx::quadrants_pi());
}

TEST(CompleteComplex, CompleteInputUnchanged) {
  auto pi = fx::quadrants_pi();
  EXPECT_EQ(complete_complex_finite(pi, recession_fan(pi), ClassSpec{}), pi);
}

TEST(CompleteComplex, SquareWithQuadrantFan) {
  auto phi = fx::complex_of(2, {fx::box2(0, 1, 0, 1)});
  Fan sigma = validate_fan(2, fx::four_quadrants());
  auto pi = complete_complex_finite(phi, sigma, ClassSpec{});
  EXPECT_TRUE(pi.is_complete());
  EXPECT_TRUE(pi.has_cell(phi.maximal[0]));
  auto rec = recession_fan(pi);
  for (const auto& s : sigma.maximal) EXPECT_TRUE(rec.has_cell(s));
}

TEST(CompleteComplex, RecessionOutsideFan) {
  auto phi = fx::complex_of(2, {quadrant(1, 1)});
  EXPECT_THROW(complete_complex_finite(phi, zero_fan(2), ClassSpec{}), RecessionNotInSigma);
}

TEST(StarExtension, Square) {
  auto ext = star_shaped_extension(faces_of_square(), {0, 0});
  EXPECT_EQ(ext.maximal.size(), 5u);
  LinearSystem right(2);
  right.ge({1, 0}, 1).ge({1, -1}, 0).ge({1, 1}, 0);
  EXPECT_TRUE(ext.has_cell(Polyhedron::from_system(right)));
  EXPECT_TRUE(ext.has_cell(Polyhedron::from_vertices(2, {{1, 1}}, {{1, 1}})));
  EXPECT_TRUE(covers(ext.maximal, make_box({-5, -5}, {5, 5})).covered);
  EXPECT_THROW(star_shaped_extension(faces_of_square(), {1, 0}), NotStarShaped);
}

TEST(LocallyFinite, QuadrantsAndStrips) {
  auto seed = complete_locally_finite(fx::quadrants_phi(), recession_fan(fx::quadrants_phi()),
                                      ClassSpec::parse("gamma:1"));
  expect_window_ok(seed, make_box({-3, -3}, {3, 3}));
  auto strips = complete_locally_finite(fx::strips_phi(), recession_fan(fx::strips_phi()), ClassSpec::parse("gamma:1"));
  expect_window_ok(strips, make_box({-3, -3}, {3, 3}));
}

TEST(Polytopal, TriangleAndSegment) {
  auto tri = fx::complex_of(2, {Polyhedron::from_vertices(2, {{0, 0}, {2, 0}, {0, 1}})});
  auto seed = polytopal_completion(tri);
  auto window = make_box({-3, -3}, {3, 3});
  expect_window_ok(seed, window);
  for (const auto& c : cells_in_window(seed, window)) EXPECT_TRUE(c.geometry.is_bounded());
  auto seg = fx::complex_of(1, {Polyhedron::from_vertices(1, {{0}, {1}})});
  auto line = polytopal_completion(seg);
  expect_window_ok(line, make_box({-4}, {4}));
  EXPECT_THROW(polytopal_completion(fx::complex_of(2, {quadrant(1, 1)})), PreconditionViolation);
}

TEST(Zonotopal, SquareRectangleAndPoint) {
  auto window = make_box({-4, -4}, {4, 4});
  auto two = fx::complex_of(2, {fx::box2(0, 1, 0, 1), fx::box2(1, 2, 0, 1)});
  auto pt = fx::complex_of(2, {Polyhedron::point({0, 0})});
  for (const auto& phi : {faces_of_square(), two, pt}) {
    auto seed = zonotopal_completion(phi);
    expect_window_ok(seed, window);
    for (const auto& c : cells_in_window(seed, window)) {
      EXPECT_TRUE(c.geometry.is_bounded());
      EXPECT_TRUE(is_zonotopal(c.geometry));
    }
  }
}

TEST(Zonotopal, NonConvexLShape) {
  auto l_shape = fx::complex_of(2, {fx::box2(0, 1, 0, 1), fx::box2(1, 2, 0, 1), fx::box2(0, 1, 1, 2)});
  auto seed = zonotopal_completion(l_shape);
  auto window = make_box({-3, -3}, {4, 4});
  expect_window_ok(seed, window);
  for (const auto& c : cells_in_window(seed, window)) EXPECT_TRUE(is_zonotopal(c.geometry));
}

TEST(Zonotopal, Rejections) {
  auto tri = fx::complex_of(2, {Polyhedron::from_vertices(2, {{0, 0}, {1, 0}, {0, 1}})});
  EXPECT_THROW(zonotopal_completion(tri), NotZonotopal);
  auto l_shape = fx::complex_of(2, {fx::box2(0, 1, 0, 1), fx::box2(1, 2, 0, 1), fx::box2(0, 1, 1, 2)});
  EXPECT_THROW(zonotopal_completion(l_shape, Vec{Scalar(3, 2), Scalar(3, 2)}), NoCenterFound);
}

TEST(Report, Preservation) {
  auto phi = fx::quadrants_phi();
  auto r = report_complex(phi, fx::quadrants_pi());
  EXPECT_TRUE(r.preserved);
  auto bad = report_complex(fx::quadrants_pi(), phi);
  EXPECT_FALSE(bad.preserved);
}
