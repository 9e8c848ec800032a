#include <gtest/gtest.h>

#include <random>

#include "graded/set_core.hpp"
#include "oracles.hpp"

using namespace graded;

namespace {

const Universe kTemps{0.0, 50.0};

FuzzySet temperature() {
  return FuzzySet(kTemps, MembershipCurve({{22, TruthDegree{0}, TruthDegree{0}}, {30, TruthDegree{1}, TruthDegree{1}}}));
}

FuzzySet hot_crisp() { return embed_crisp(IntervalSet(kTemps, {{30, 50, true, true}})); }

void expect_valid(const MembershipCurve& c) {
  const auto& ks = c.breakpoints();
  ASSERT_FALSE(ks.empty());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    EXPECT_GE(ks[i].left.value(), 0.0);
    EXPECT_LE(ks[i].left.value(), 1.0);
    EXPECT_GE(ks[i].right.value(), 0.0);
    EXPECT_LE(ks[i].right.value(), 1.0);
    if (i > 0) {
      EXPECT_LT(ks[i - 1].x, ks[i].x);
    }
  }
}

}  // namespace

TEST(TruthDegree, ClampsWithinToleranceRejectsBeyond) {
  EXPECT_EQ(TruthDegree{1.0 + 5e-13}.value(), 1.0);
  EXPECT_EQ(TruthDegree{-5e-13}.value(), 0.0);
  EXPECT_THROW(TruthDegree{1.001}, DomainError);
  EXPECT_THROW(TruthDegree{-0.1}, DomainError);
  EXPECT_THROW(TruthDegree{std::nan("")}, DomainError);
}

TEST(Universe, RejectsEmptyOrInfinite) {
  EXPECT_THROW(Universe(1, 1), DomainError);
  EXPECT_THROW(Universe(2, 1), DomainError);
  EXPECT_THROW(Universe(0, INFINITY), DomainError);
}

TEST(MembershipCurve, RejectsUnorderedBreakpoints) {
  EXPECT_THROW(MembershipCurve({{1, TruthDegree{0}, TruthDegree{0}}, {1, TruthDegree{1}, TruthDegree{1}}}), DomainError);
  EXPECT_THROW(MembershipCurve({{2, TruthDegree{0}, TruthDegree{0}}, {1, TruthDegree{1}, TruthDegree{1}}}), DomainError);
  EXPECT_THROW(MembershipCurve(std::vector<Breakpoint>{}), DomainError);
}

TEST(MembershipCurve, DropsCollinearKnots) {
  const MembershipCurve c({{0, TruthDegree{0}, TruthDegree{0}},
                           {1, TruthDegree{0.25}, TruthDegree{0.25}},
                           {4, TruthDegree{1}, TruthDegree{1}},
                           {5, TruthDegree{1}, TruthDegree{1}}});
  ASSERT_EQ(c.breakpoints().size(), 2u);
  EXPECT_EQ(c.breakpoints()[0].x, 0);
  EXPECT_EQ(c.breakpoints()[1].x, 4);
}

TEST(FuzzySet, BreakpointsMustLieInUniverse) {
  EXPECT_THROW(FuzzySet(kTemps, MembershipCurve({{60, TruthDegree{0}, TruthDegree{1}}})), DomainError);
}

TEST(MfEval, TemperatureFormula) {
  const FuzzySet t = temperature();
  EXPECT_EQ(mf_eval(t, 30).value(), 1.0);
  EXPECT_EQ(mf_eval(t, 10).value(), 0.0);
  EXPECT_NEAR(mf_eval(t, 26).value(), 0.5, 1e-12);
  EXPECT_THROW(mf_eval(t, 50.5), DomainError);
  EXPECT_THROW(mf_eval(t, -1), DomainError);
}

TEST(MfEval, RightContinuousAtJump) {
  const FuzzySet c = hot_crisp();
  EXPECT_EQ(mf_eval(c, 30).value(), 1.0);
  EXPECT_EQ(mf_eval(c, 29.999999).value(), 0.0);
  EXPECT_EQ(c.curve().left_limit(30).value(), 0.0);
}

TEST(Characteristic, DiscreteSet) {
  const CrispSet six = DiscreteSet({6});
  EXPECT_EQ(characteristic(six, 6).value(), 1.0);
  EXPECT_EQ(characteristic(six, 5).value(), 0.0);
  EXPECT_THROW(characteristic(six, 6.0), DomainError);
  EXPECT_THROW(DiscreteSet({1, 2, 1}), DomainError);
}

TEST(Characteristic, IntervalSet) {
  const CrispSet hot = IntervalSet(kTemps, {{30, 50, true, true}});
  EXPECT_EQ(characteristic(hot, 29.9).value(), 0.0);
  EXPECT_EQ(characteristic(hot, 30.0).value(), 1.0);
  EXPECT_EQ(characteristic(hot, 40).value(), 1.0);  // integers read as reals
  const CrispSet open = IntervalSet(kTemps, {{5, 7, false, false}});
  EXPECT_EQ(characteristic(open, 5.0).value(), 0.0);
  EXPECT_EQ(characteristic(open, 6.0).value(), 1.0);
  EXPECT_EQ(characteristic(open, 7.0).value(), 0.0);
}

TEST(IntervalSet, RejectsOverlapAndOutOfUniverse) {
  EXPECT_THROW(IntervalSet(kTemps, {{0, 10}, {10, 20}}), DomainError);
  EXPECT_THROW(IntervalSet(kTemps, {{0, 10}, {5, 20}}), DomainError);
  EXPECT_THROW(IntervalSet(kTemps, {{40, 60}}), DomainError);
  EXPECT_NO_THROW(IntervalSet(kTemps, {{0, 10, true, false}, {10, 20}}));
}

TEST(EmbedCrisp, Examples) {
  const FuzzySet hot = hot_crisp();
  ASSERT_EQ(hot.curve().breakpoints().size(), 1u);
  EXPECT_EQ(hot.curve().breakpoints()[0].x, 30);
  EXPECT_EQ(mf_eval(hot, 40).value(), 1.0);

  const FuzzySet empty = embed_crisp(IntervalSet(kTemps, {}));
  EXPECT_EQ(empty, FuzzySet::constant(kTemps, TruthDegree::zero()));

  const FuzzySet full = embed_crisp(IntervalSet(kTemps, {{0, 50}}));
  EXPECT_EQ(full, FuzzySet::constant(kTemps, TruthDegree::one()));

  // touching intervals merge
  const FuzzySet merged = embed_crisp(IntervalSet(kTemps, {{10, 20, true, false}, {20, 30}}));
  EXPECT_EQ(merged, embed_crisp(IntervalSet(kTemps, {{10, 30}})));

  EXPECT_THROW(embed_crisp(DiscreteSet({6})), UnsupportedVariant);
}

TEST(EmbedCrisp, AgreesWithCharacteristicAwayFromEndpoints) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(0.0, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    const IntervalSet s = oracle::random_interval_set(rng, 0.0, 50.0);
    const FuzzySet f = embed_crisp(s);
    expect_valid(f.curve());
    for (int i = 0; i < 200; ++i) {
      const double x = ux(rng);
      bool endpoint = false;
      for (const auto& iv : s.intervals()) endpoint = endpoint || x == iv.lo || x == iv.hi;
      if (endpoint) continue;
      ASSERT_EQ(mf_eval(f, x).value(), characteristic(CrispSet(s), x).value()) << "x=" << x;
    }
  }
}

TEST(PointwiseMinMax, TemperatureAgainstComplement) {
  const FuzzySet t = temperature();
  const FuzzySet m = pointwise_min(t, complement(t, NegationFamily{0.0}));
  EXPECT_NEAR(mf_eval(m, 26).value(), 0.5, 1e-12);
  // frozen from oracle::grid_extremum over 10^5 samples of min(T, 1-T): 0.5 at x=26
  const auto grid = oracle::grid_extremum(
      [](double x) { return std::min(oracle::temperature(x), 1.0 - oracle::temperature(x)); }, 0, 50, 100000, true);
  EXPECT_NEAR(grid.value, 0.5, 1e-12);
  EXPECT_NEAR(grid.x, 26.0, 1e-12);
}

TEST(PointwiseMinMax, IdempotenceAndIdentity) {
  const FuzzySet t = temperature();
  EXPECT_EQ(pointwise_min(t, t), t);
  EXPECT_EQ(pointwise_max(t, t), t);
  EXPECT_EQ(pointwise_max(t, FuzzySet::constant(kTemps, TruthDegree::zero())), t);
  EXPECT_EQ(pointwise_min(t, FuzzySet::constant(kTemps, TruthDegree::one())), t);
}

TEST(PointwiseMinMax, RejectsMismatchedUniverses) {
  const FuzzySet a = FuzzySet::constant(Universe{0, 1}, TruthDegree{0.5});
  const FuzzySet b = FuzzySet::constant(Universe{0, 2}, TruthDegree{0.5});
  EXPECT_THROW(pointwise_min(a, b), DomainError);
  EXPECT_THROW(pointwise_max(a, b), DomainError);
}

TEST(PointwiseMinMax, MatchesPointwiseOracleAtRandomPoints) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.0, 10.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const FuzzySet a = oracle::random_set(rng, 0, 10);
    const FuzzySet b = oracle::random_set(rng, 0, 10);
    const FuzzySet lo = pointwise_min(a, b);
    const FuzzySet hi = pointwise_max(a, b);
    expect_valid(lo.curve());
    expect_valid(hi.curve());
    const auto ka = oracle::knots_of(a), kb = oracle::knots_of(b);
    for (int i = 0; i < 100; ++i) {
      const double x = ux(rng);
      const double va = oracle::eval(ka, x), vb = oracle::eval(kb, x);
      worst = std::max(worst, std::abs(mf_eval(lo, x).value() - std::min(va, vb)));
      worst = std::max(worst, std::abs(mf_eval(hi, x).value() - std::max(va, vb)));
    }
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(PointwiseMinMax, AlgebraicLaws) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const FuzzySet a = oracle::random_set(rng, 0, 10);
    const FuzzySet b = oracle::random_set(rng, 0, 10);
    const FuzzySet c = oracle::random_set(rng, 0, 10);
    EXPECT_TRUE(equivalent(pointwise_min(a, b).curve(), pointwise_min(b, a).curve()));
    EXPECT_TRUE(equivalent(pointwise_max(a, b).curve(), pointwise_max(b, a).curve()));
    EXPECT_TRUE(equivalent(pointwise_min(a, a).curve(), a.curve()));
    EXPECT_TRUE(equivalent(pointwise_max(a, a).curve(), a.curve()));
    EXPECT_TRUE(equivalent(pointwise_min(pointwise_min(a, b), c).curve(), pointwise_min(a, pointwise_min(b, c)).curve(), 1e-9));
    EXPECT_TRUE(equivalent(pointwise_max(pointwise_max(a, b), c).curve(), pointwise_max(a, pointwise_max(b, c)).curve(), 1e-9));
  }
}

TEST(Complement, Examples) {
  const FuzzySet t = temperature();
  EXPECT_NEAR(mf_eval(complement(t, NegationFamily{0}), 26).value(), 0.5, 1e-12);

  const FuzzySet not_hot = complement(hot_crisp(), NegationFamily{0});
  EXPECT_EQ(not_hot, embed_crisp(IntervalSet(kTemps, {{0, 30, true, false}})));

  const FuzzySet half = FuzzySet::constant(kTemps, TruthDegree{0.5});
  const FuzzySet c = complement(half, NegationFamily{1});
  ASSERT_EQ(c.curve().breakpoints().size(), 1u);
  EXPECT_NEAR(mf_eval(c, 17).value(), 1.0 / 3.0, 1e-15);

  EXPECT_THROW(complement(t, NegationFamily{0}, 0.0), DomainError);
}

TEST(Complement, ClassicalIsAnInvolution) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const FuzzySet a = oracle::random_set(rng, -5, 5);
    const FuzzySet back = complement(complement(a, NegationFamily{0}), NegationFamily{0});
    EXPECT_TRUE(equivalent(back.curve(), a.curve()));
    expect_valid(back.curve());
  }
}

TEST(Complement, NonClassicalWithinToleranceOfRationalImage) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> ul(-0.9, 20.0);
  for (int trial = 0; trial < 20; ++trial) {
    const FuzzySet a = oracle::random_set(rng, 0, 10);
    const double lambda = ul(rng);
    const FuzzySet c = complement(a, NegationFamily{lambda}, 1e-9);
    expect_valid(c.curve());
    const auto ka = oracle::knots_of(a);
    double worst = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double x = 10.0 * i / 20000;
      worst = std::max(worst, std::abs(mf_eval(c, x).value() - oracle::sugeno(lambda, oracle::eval(ka, x))));
    }
    EXPECT_LE(worst, 1e-7) << "lambda=" << lambda;
  }
}

TEST(HeightFloor, Examples) {
  const auto h = height(temperature());
  EXPECT_EQ(h.value.value(), 1.0);
  EXPECT_EQ(h.x, 30.0);
  const auto f = floor(FuzzySet::constant(kTemps, TruthDegree{0.5}));
  EXPECT_EQ(f.value.value(), 0.5);
  EXPECT_EQ(f.x, 0.0);
  const auto z = height(FuzzySet::constant(kTemps, TruthDegree::zero()));
  EXPECT_EQ(z.value.value(), 0.0);
  EXPECT_EQ(z.x, 0.0);
  const auto lo = floor(temperature());
  EXPECT_EQ(lo.value.value(), 0.0);
  EXPECT_EQ(lo.x, 0.0);
}

TEST(HeightFloor, MatchesDenseGrid) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const FuzzySet a = oracle::random_set(rng, 0, 10);
    const auto ka = oracle::knots_of(a);
    const auto f = [&](double x) { return oracle::eval(ka, x); };
    // grid never sees the far side of a jump; the exact extremum may only be better
    EXPECT_GE(height(a).value.value() + 1e-12, oracle::grid_extremum(f, 0, 10, 20000, true).value);
    EXPECT_LE(floor(a).value.value() - 1e-12, oracle::grid_extremum(f, 0, 10, 20000, false).value);
  }
}
