#include <gtest/gtest.h>

#include <set>

#include "nilharm/io.hpp"
#include "nilharm/verifier.hpp"

using namespace nilharm;
using namespace nilharm::verify;

namespace {

const GroupSchema Z = GroupSchema::lattice(1);
const GroupSchema H = GroupSchema::heisenberg(1);

Polynomial P(const GroupSchema& s, const char* text) { return io::parse_polynomial(s, text); }

}  // namespace

TEST(HarmonicOnBall, Examples) {
  const auto mu4 = Measure::simple_walk(H);
  const auto z = check_harmonic_on_ball(H, mu4, P(H, "z"), 5);
  EXPECT_TRUE(z.pass);
  EXPECT_EQ(z.points_checked, ball(H, standard_generators(H), 5).size());

  const auto sq = check_harmonic_on_ball(Z, Measure::simple_walk(Z), P(Z, "x1^2"), 3);
  EXPECT_FALSE(sq.pass);
  ASSERT_TRUE(sq.witness.has_value());
  EXPECT_EQ(*sq.witness, GroupElement({0}));
  EXPECT_EQ(sq.value, 0);
  EXPECT_EQ(sq.mean, 1);

  EXPECT_TRUE(check_harmonic_on_ball(H, mu4, Polynomial::constant(H, 4), 5).pass);
  EXPECT_FALSE(check_harmonic_on_ball(H, mu4, P(H, "x^2 + y^2"), 2).pass);
}

TEST(SampleTuples, ExhaustiveWhenSmall) {
  const auto t = sample_tuples(3, 2, 100);
  ASSERT_EQ(t.size(), 9u);
  EXPECT_EQ(t.front(), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(t[1], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(t.back(), (std::vector<std::size_t>{2, 2}));
}

TEST(SampleTuples, DeterministicWhenCapped) {
  const auto a = sample_tuples(25, 4, 2000);
  const auto b = sample_tuples(25, 4, 2000);
  EXPECT_EQ(a.size(), 2000u);
  EXPECT_EQ(a, b);
  for (const auto& t : a) {
    ASSERT_EQ(t.size(), 4u);
    for (auto i : t) EXPECT_LT(i, 25u);
  }
  EXPECT_GT(std::set(a.begin(), a.end()).size(), 1900u);
}

TEST(IteratedDifference, MatchesHandExpansion) {
  const auto f = P(H, "z");
  const std::vector<GroupElement> us{{1, 0, 0}};
  const GroupElement x{2, 5, 1};
  // ∂_{e_x} z at x = y(x)
  EXPECT_EQ(iterated_left_difference(H, f, us, x), 5);
  // ∂^{e_y} z at x = x(x)
  EXPECT_EQ(iterated_right_difference(H, f, std::vector<GroupElement>{{0, 1, 0}}, x), 2);
  const std::vector<GroupElement> two{{1, 0, 0}, {0, 1, 0}};
  // ∂_{e_y} z = 0 but ∂_{e_x} z = y, so the left order matters
  EXPECT_EQ(iterated_left_difference(H, f, two, x), 0);
  const std::vector<GroupElement> swapped{{0, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(iterated_left_difference(H, f, swapped, x), 1);
  EXPECT_EQ(iterated_right_difference(H, f, two, x), 1);
  const std::vector<GroupElement> none;
  EXPECT_EQ(iterated_left_difference(H, f, none, x), 1);
}

TEST(DerivativeVanishing, Examples) {
  const auto gens = standard_generators(H);
  EXPECT_TRUE(check_derivative_vanishing(H, P(H, "x*y"), 2, gens).pass);
  const auto fail = check_derivative_vanishing(H, P(H, "z"), 1, gens);
  EXPECT_FALSE(fail.pass);
  ASSERT_TRUE(fail.witness_tuple.has_value());
  EXPECT_EQ(fail.witness_tuple->size(), 2u);
  EXPECT_NE(fail.witness_value, 0);
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(check_derivative_vanishing(H, Polynomial(H), k, gens).pass);
}

// Every monomial passes at its weighted degree; each degree class has a
// monomial that fails one degree lower.
TEST(DerivativeVanishing, DegreeAgreement) {
  for (const auto& s : {Z, GroupSchema::lattice(2), H, GroupSchema::unitriangular(3)}) {
    const auto gens = standard_generators(s);
    VanishingOptions opts;
    opts.budget = 400;
    std::map<int, bool> class_fails;
    for (const auto& m : pk_basis(s, 3)) {
      const auto f = Polynomial::monomial(s, m);
      const int deg = weighted_degree(s, m);
      EXPECT_TRUE(check_derivative_vanishing(s, f, deg, gens, opts).pass) << s.name() << io::format_polynomial(f);
      if (deg >= 1) class_fails[deg] = class_fails[deg] || !check_derivative_vanishing(s, f, deg - 1, gens, opts).pass;
    }
    for (const auto& [deg, failed] : class_fails) EXPECT_TRUE(failed) << s.name() << " degree " << deg;
  }
}

TEST(LeftRight, Examples) {
  const auto z2 = GroupSchema::lattice(2);
  const auto a = check_left_right_agreement(z2, P(z2, "x1^2 - x2^2"), 2, standard_generators(z2), 2);
  EXPECT_TRUE(a.left.pass);
  EXPECT_TRUE(a.right.pass);
  const auto gens = standard_generators(H);
  const auto b = check_left_right_agreement(H, P(H, "z"), 2, gens, 2);
  EXPECT_TRUE(b.left.pass && b.right.pass);
  const auto c = check_left_right_agreement(H, P(H, "z"), 1, gens, 2);
  EXPECT_FALSE(c.left.pass);
  EXPECT_FALSE(c.right.pass);
  EXPECT_TRUE(c.agree());
}

TEST(LeftRight, AgreeOnBasis) {
  const auto gens = standard_generators(H);
  for (const auto& m : pk_basis(H, 4)) {
    const auto f = Polynomial::monomial(H, m);
    for (int k = 0; k <= 4; ++k) {
      EXPECT_TRUE(check_left_right_agreement(H, f, k, gens, 1, 300).agree()) << io::format_polynomial(f) << " " << k;
    }
  }
}

TEST(GrowthProfile, Examples) {
  const auto x = growth_profile(Z, P(Z, "x1"), standard_generators(Z), 6);
  ASSERT_EQ(x.rows.size(), 7u);
  for (const auto& row : x.rows) {
    EXPECT_EQ(row.sphere_max, row.radius);
    EXPECT_EQ(row.ball_max, row.radius);
    if (row.radius > 0) EXPECT_EQ(*row.ratio, 1);
  }
  EXPECT_EQ(x.max_ratio, 1);

  const auto z = growth_profile(H, P(H, "z"), standard_generators(H), 8);
  EXPECT_LE(z.max_ratio, 1);
  EXPECT_GT(z.max_ratio, 0);

  const auto c = growth_profile(H, Polynomial::constant(H, -3), standard_generators(H), 3);
  for (const auto& row : c.rows) EXPECT_EQ(row.ball_max, 3);
}
