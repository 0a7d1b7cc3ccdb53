#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chain_oracle.hpp"
#include "lfc/lazy_complex.hpp"
#include "worked_examples.hpp"

using namespace lfc;

namespace {

std::set<std::string> keys_of(const std::vector<MaterializedCell>& cells) {
  std::set<std::string> out;
  for (const auto& c : cells) out.insert(c.geometry.key());
  return out;
}

Polyhedron square(int r) { return make_box({-r, -r}, {r, r}); }

void expect_matches_oracle(const SubdivisionSeed& seed, const Polyhedron& window) {
  auto got = keys_of(cells_in_window(seed, window));
  auto small = oracle::chain_cells_in(seed, window, 5);
  auto large = oracle::chain_cells_in(seed, window, 10);
  EXPECT_EQ(small, large);
  EXPECT_EQ(got, large);
}

}  // namespace

TEST(Window, QuadrantsValidateAndMatchOracle) {
  auto seed = fx::seed_for(fx::quadrants_pi(), fx::quadrants_phi());
  auto rep = validate_window(seed, square(3));
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
  EXPECT_EQ(rep.checks.size(), 6u);
  expect_matches_oracle(seed, square(3));
}

TEST(Window, StripsValidateAndMatchOracle) {
  auto seed = fx::seed_for(fx::strips_pi(), fx::strips_phi());
  for (const auto& w : {square(3), make_box({0, 0}, {4, 4})}) {
    auto rep = validate_window(seed, w);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
    expect_matches_oracle(seed, w);
  }
  std::set<std::string> recs;
  for (const auto& c : cells_in_window(seed, square(4))) recs.insert(recession_cone(c.geometry).key());
  std::set<std::string> sigma;
  for (const auto& s : seed.sigma.cells()) sigma.insert(s.key());
  EXPECT_EQ(recs, sigma);
}

TEST(Window, MonotoneInWindow) {
  auto seed = fx::seed_for(fx::strips_pi(), fx::strips_phi());
  auto inner = cells_in_window(seed, make_box({0, 0}, {2, 2}));
  auto outer = keys_of(cells_in_window(seed, square(3)));
  for (const auto& c : inner) EXPECT_TRUE(outer.count(c.geometry.key())) << c.geometry.describe();
}

TEST(Window, IdsMaterializeToGeometry) {
  auto seed = fx::seed_for(fx::strips_pi(), fx::strips_phi());
  for (const auto& c : cells_in_window(seed, square(2))) {
    EXPECT_EQ(materialize(seed, c.id), c.geometry) << c.id.to_string();
    EXPECT_EQ(CellId::parse(c.id.to_string()), c.id);
  }
}

TEST(Locate, QuadrantPoint) {
  auto seed = fx::seed_for(fx::quadrants_pi(), fx::quadrants_phi());
  auto c = locate_point(seed, {3, 1});
  EXPECT_EQ(c.geometry, Polyhedron::from_vertices(2, {{1, 1}}, {{1, 0}}));
  EXPECT_EQ(locate_point(seed, {-2, 5}).geometry, fx::quadrant(-1, 1));
}

TEST(Locate, AgreesWithWindow) {
  auto seed = fx::seed_for(fx::strips_pi(), fx::strips_phi());
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-12, 12);
  for (int i = 0; i < 40; ++i) {
    Vec x{Scalar(num(rng), 4), Scalar(num(rng), 4)};
    auto c = locate_point(seed, x);
    EXPECT_TRUE(c.geometry.in_relint(x)) << to_string(x);
    bool found = false;
    for (const auto& w : cells_in_window(seed, Polyhedron::point(x)))
      if (w.id == c.id && w.geometry == c.geometry) found = true;
    EXPECT_TRUE(found) << to_string(x);
  }
}

TEST(Locate, OutsideSupport) {
  auto phi = fx::quadrants_phi();
  auto seed = build_seed(phi, phi, recession_fan(phi), ClassSpec::parse("gamma:1"));
  EXPECT_THROW(locate_point(seed, {1, 1}), NotInSupport);
}

TEST(BoundaryCertificate, HorizontalStratum) {
  auto seed = fx::seed_for(fx::quadrants_pi(), fx::quadrants_phi());
  auto tau = Polyhedron::cone(2, {{1, 0}});
  Vec xbar = quotient_map(tau).apply({0, 2});
  auto cells = boundary_certificate(seed, {tau, xbar});
  std::set<std::string> want = {Polyhedron::from_vertices(2, {{2, 2}}, {{1, 0}}).key(),
                                Polyhedron::from_vertices(2, {{1, 1}, {2, 2}}, {{1, 0}}).key(),
                                Polyhedron::from_vertices(2, {{2, 2}, {3, 3}}, {{1, 0}}).key()};
  EXPECT_EQ(keys_of(cells), want);
  for (const auto& c : cells) EXPECT_TRUE(is_face(tau, recession_cone(c.geometry)));
  auto below = boundary_certificate(seed, {tau, quotient_map(tau).apply({0, -1})});
  EXPECT_EQ(keys_of(below), std::set<std::string>{fx::quadrant(1, -1).key()});
}

TEST(BoundaryCertificate, Errors) {
  auto seed = fx::seed_for(fx::quadrants_pi(), fx::quadrants_phi());
  auto tau = Polyhedron::cone(2, {{1, 0}});
  EXPECT_THROW(boundary_certificate(seed, {fx::quadrant(1, 1), {}}), StratumNotInFan);
  EXPECT_THROW(boundary_certificate(seed, {tau, {1}}, 1), BudgetExceeded);
}

TEST(Faults, WrongStep) {
  auto seed = fx::seed_for(fx::quadrants_pi(), fx::quadrants_phi());
  seed.ray_choices[0].gamma = Scalar(1, 3);
  seed.compile();
  auto rep = validate_window(seed, square(3));
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.failure()->name, "class");
  EXPECT_FALSE(rep.failure()->witness.empty());
}

TEST(Faults, WrongRay) {
  auto seed = fx::seed_for(fx::quadrants_pi(), fx::quadrants_phi());
  seed.ray_choices[0].v = {1, 0};
  seed.compile();
  auto rep = validate_window(seed, square(3));
  ASSERT_FALSE(rep.ok());
  EXPECT_FALSE(rep.failure()->witness.empty());
}

TEST(Faults, DroppedCell) {
  auto seed = fx::seed_for(fx::quadrants_pi(), fx::quadrants_phi());
  auto cells = cells_in_window(seed, square(3));
  auto it = std::find_if(cells.begin(), cells.end(), [](const MaterializedCell& c) { return c.geometry.dim() == 2; });
  cells.erase(it);
  auto rep = validate_cells(seed, square(3), cells);
  ASSERT_FALSE(rep.ok());
  EXPECT_FALSE(rep.failure()->witness.empty());
}
