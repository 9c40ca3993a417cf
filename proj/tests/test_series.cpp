#include <gtest/gtest.h>

#include "support.hpp"

using namespace gvtest;

namespace {

FMatrix fm(int p, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (const auto& x : r) row.push_back(S(x));
    out.push_back(row);
  }
  return FMatrix(p, out);
}

}  // namespace

TEST(ValidateF, Examples) {
  EXPECT_TRUE(validate_F(fm(2, {{"1", "1"}})).empty());
  auto v = validate_F(fm(2, {{"1", "0"}}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, FViolation::Kind::Closure);
  EXPECT_TRUE(validate_F(fm(3, {{"0", "0", "0"}, {"0", "0", "0"}})).empty());
  EXPECT_TRUE(validate_F(fm(3, {{"2", "2", "1/4"}, {"4", "1/2", "1/2"}})).empty());
  auto broken = validate_F(fm(3, {{"1", "2", "1"}, {"1", "1", "1"}}));
  EXPECT_FALSE(broken.empty());
  for (const auto& b : broken) EXPECT_EQ(b.kind, FViolation::Kind::Compatibility);
}

TEST(ValidateF, ShapeErrors) {
  EXPECT_THROW(fm(3, {{"1", "1", "1"}}), Error);
  EXPECT_THROW(fm(2, {{"1", "1", "1"}}), Error);
}

TEST(Series, ActionExamples) {
  SeriesModule M(S("1/3"), S("1/2"), fm(2, {{"1", "1"}}));
  SeriesTerm t = series_act(M, Gen::L(1), {0, 0});
  EXPECT_EQ(t.coeff, S("-5/6"));
  EXPECT_EQ(t.target, (BasisIndex{1, 0}));
  SeriesTerm u = series_act(M, Gen::I(2, 1), {0, 1});
  EXPECT_EQ(u.coeff, Scalar(1));
  EXPECT_EQ(u.target, (BasisIndex{3, 0}));
  EXPECT_TRUE(series_act(M, GapVirasoro(2).C(1), {4, 1}).coeff.is_zero());
  SeriesModule Z(S("1/3"), S("1/2"), fm(2, {{"0", "0"}}));
  try {
    (void)series_act(Z, Gen::L(1), {0, 1});
    FAIL() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Index);
  }
}

TEST(Series, InvalidFIsRejected) {
  EXPECT_THROW(SeriesModule(S("0"), S("0"), fm(2, {{"1", "0"}})), Error);
}

TEST(Series, AxiomsOnValidSamples) {
  EXPECT_TRUE(series_axiom_check(SeriesModule(S("1/3"), S("1/2"), fm(2, {{"1", "1"}})), 6).pass);
  EXPECT_TRUE(series_axiom_check(SeriesModule(S("2/7"), S("1/3+i"), fm(3, {{"1", "1", "1"}, {"1", "1", "1"}})), 5).pass);
  EXPECT_TRUE(series_axiom_check(SeriesModule(S("-1"), S("5"), fm(3, {{"2", "2", "1/4"}, {"4", "1/2", "1/2"}})), 5).pass);
  EXPECT_TRUE(series_axiom_check(SeriesModule(S("5"), S("1"), fm(2, {{"0", "0"}})), 6).pass);
}

TEST(Series, AxiomsFailForInvalidF) {
  auto M = SeriesModule::unchecked(S("1/3"), S("1/2"), fm(3, {{"1", "2", "1"}, {"1", "1", "1"}}));
  AxiomCheck ac = series_axiom_check(M, 4);
  EXPECT_FALSE(ac.pass);
  ASSERT_TRUE(ac.witness.has_value());
  EXPECT_EQ(ac.witness->x.kind, GenKind::I);
  EXPECT_EQ(ac.witness->y.kind, GenKind::I);
}

TEST(Series, PredicateExamples) {
  SeriesPredicates a = series_predicates(SeriesModule(S("1/3"), S("1/2"), fm(2, {{"1", "1"}})), {Scalar(1)});
  EXPECT_TRUE(a.unitary);
  EXPECT_FALSE(a.reducible);
  EXPECT_EQ(a.contravariance_self_test, std::optional<bool>(true));

  SeriesPredicates b = series_predicates(SeriesModule(S("5"), S("1"), fm(2, {{"0", "0"}})), {Scalar(1)});
  EXPECT_TRUE(b.single_column);
  EXPECT_TRUE(b.reducible);
  EXPECT_FALSE(b.unitary);

  SeriesPredicates c = series_predicates(SeriesModule(S("0"), S("1/2+i"), fm(2, {{"1", "1"}})), {Scalar(1)});
  EXPECT_TRUE(c.unitary);
  EXPECT_FALSE(c.a_nonzero);
  EXPECT_FALSE(c.unitary_with_nonzero_a);
}

TEST(Series, PredicateClauseFailures) {
  const std::vector<Scalar> one{Scalar(1)};
  EXPECT_FALSE(series_predicates(SeriesModule(S("1/3+i"), S("1/2"), fm(2, {{"1", "1"}})), one).a_real);
  EXPECT_FALSE(series_predicates(SeriesModule(S("1/3"), S("1/3"), fm(2, {{"1", "1"}})), one).b_on_half_line);
  SeriesPredicates f = series_predicates(SeriesModule(S("1/3"), S("1/2"), fm(2, {{"2", "1"}})), one);
  EXPECT_FALSE(f.f_condition);
  EXPECT_FALSE(f.unitary);
  // the cocycle sample is valid but fails the F clause for beta = 1
  SeriesPredicates g = series_predicates(
      SeriesModule(S("1/3"), S("1/2"), fm(3, {{"2", "2", "1/4"}, {"4", "1/2", "1/2"}})), ones(3));
  EXPECT_FALSE(g.f_condition);
  EXPECT_FALSE(g.f_failures.empty());
  EXPECT_THROW(series_predicates(SeriesModule(S("1/3"), S("1/2"), fm(2, {{"1", "1"}})), {Scalar(2)}), Error);
}

TEST(Series, ComplexFSatisfyingTheCondition) {
  // p = 2, beta_1 = i: the condition reads i F_{1,1} = conj(F_{1,0})
  // and i F_{1,0} = conj(F_{1,1})
  const std::vector<Scalar> beta{S("i")};
  SeriesModule M(S("2/5"), S("1/2-3*i"), fm(2, {{"1+i", "1-i"}}));
  EXPECT_TRUE(validate_F(M.F()).empty());
  SeriesPredicates pr = series_predicates(M, beta);
  // i(1-i) = 1+i and conj(1+i) = 1-i, so the condition fails; the rotated
  // F = (1, -i) satisfies it
  EXPECT_FALSE(pr.f_condition);
  SeriesModule N(S("2/5"), S("1/2-3*i"), fm(2, {{"1", "-i"}}));
  SeriesPredicates pn = series_predicates(N, beta);
  EXPECT_TRUE(pn.f_condition);
  EXPECT_TRUE(pn.unitary);
  EXPECT_EQ(pn.contravariance_self_test, std::optional<bool>(true));
  EXPECT_TRUE(series_axiom_check(N, 5).pass);
}

TEST(Series, ContravarianceFailsOffTheHalfLine) {
  SeriesModule M(S("1/3"), S("1/3"), fm(2, {{"1", "1"}}));
  EXPECT_FALSE(series_contravariance_check(M, AntiInvolution::standard(2), 3, 3));
  SeriesModule N(S("1/3"), S("1/2"), fm(2, {{"1", "1"}}));
  EXPECT_TRUE(series_contravariance_check(N, AntiInvolution::standard(2), 4, 4));
}

TEST(Series, VirasoroColumnRestriction) {
  // with F = 0 the I's act by zero and V(a, b) is a plain Virasoro module
  SeriesModule M(S("1/4"), S("2/3"), fm(3, {{"0", "0", "0"}, {"0", "0", "0"}}));
  EXPECT_EQ(M.columns(), (std::vector<int>{0}));
  for (long k = -3; k <= 3; ++k) {
    for (int m = -3; m <= 3; ++m) {
      SeriesTerm t = M.act(Gen::L(m), {k, 0});
      EXPECT_EQ(t.coeff, -(S("1/4") + Scalar(k) + S("2/3") * Scalar(m)));
      EXPECT_TRUE(M.act(Gen::I(m, 1), {k, 0}).coeff.is_zero());
    }
  }
}
