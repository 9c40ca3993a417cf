#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace gvtest;

TEST(Heisenberg, Examples) {
  HeisenbergReport a = heisenberg_condition(hw(2, "0", {"2", "1"}), {Scalar(1)});
  EXPECT_TRUE(a.real_nonzero);
  EXPECT_TRUE(a.positive);
  HeisenbergReport b = heisenberg_condition(hw(2, "0", {"2", "-1"}), {Scalar(1)});
  EXPECT_TRUE(b.real_nonzero);
  EXPECT_FALSE(b.positive);
  HeisenbergReport c = heisenberg_condition(hw(2, "0", {"2", "1"}), {S("i")});
  EXPECT_FALSE(c.real_nonzero);
  EXPECT_FALSE(c.positive);
  EXPECT_THROW(heisenberg_condition(hw(2, "0", {"2", "1"}), {Scalar(2)}), Error);
}

TEST(Heisenberg, OnlyIndicesInJ) {
  HeisenbergReport r = heisenberg_condition(hw(4, "0", {"1", "0", "3"}), {Scalar(1), Scalar(1), Scalar(1)});
  ASSERT_EQ(r.clauses.size(), 1u);
  EXPECT_EQ(r.clauses[0].i, 2);
  EXPECT_TRUE(r.positive);
}

TEST(DiscreteSeries, PureVirasoro) {
  auto pts = discrete_series(2, {}, 3);
  std::set<std::string> hs;
  for (const auto& pt : pts) {
    EXPECT_EQ(pt.c0, S("1/2"));
    hs.insert(pt.l0.to_string());
  }
  EXPECT_EQ(hs, (std::set<std::string>{"0", "1/16", "1/2"}));
  auto m2 = discrete_series(2, {}, 2);
  ASSERT_EQ(m2.size(), 1u);
  EXPECT_EQ(m2[0].c0, Scalar(0));
  EXPECT_EQ(m2[0].l0, Scalar(0));
  EXPECT_THROW(discrete_series(2, {}, 1), Error);
}

TEST(DiscreteSeries, ShiftedPoints) {
  std::set<std::string> hs;
  for (const auto& pt : discrete_series(2, {1}, 3)) {
    EXPECT_EQ(pt.c0, S("3/2"));
    hs.insert(pt.l0.to_string());
  }
  EXPECT_EQ(hs, (std::set<std::string>{"1/16", "1/8", "9/16"}));
}

TEST(DiscreteSeries, KacTableCount) {
  // independent count: m(m-1)/2 distinct weights at c = 1 - 6/(m(m+1))
  for (int m = 2; m <= 9; ++m) {
    std::set<std::string> hs;
    for (const auto& pt : discrete_series(2, {}, m)) hs.insert(pt.l0.to_string());
    EXPECT_EQ(static_cast<int>(hs.size()), m * (m - 1) / 2) << "m=" << m;
  }
}

TEST(VirasoroClause, ContinuumAndDiscrete) {
  EXPECT_TRUE(virasoro_unitary(Rational(1), Rational(0)));
  EXPECT_TRUE(virasoro_unitary(Rational(3), Rational(1, 7)));
  EXPECT_FALSE(virasoro_unitary(Rational(3), Rational(-1, 7)));
  EXPECT_TRUE(virasoro_unitary(Rational(1, 2), Rational(1, 16)));
  EXPECT_FALSE(virasoro_unitary(Rational(1, 2), Rational(1, 4)));
  EXPECT_TRUE(virasoro_unitary(Rational(7, 10), Rational(3, 80)));
  EXPECT_FALSE(virasoro_unitary(Rational(-1), Rational(1)));
}

TEST(HighestWeightUnitary, Examples) {
  UnitarityVerdict boundary = highest_weight_unitary(hw(2, "1/16", {"2", "1"}), {Scalar(1)});
  EXPECT_TRUE(boundary.closed_form);
  EXPECT_TRUE(boundary.virasoro.continuum);
  UnitarityVerdict disc = highest_weight_unitary(hw(2, "1/16", {"3/2", "1"}), {Scalar(1)});
  EXPECT_TRUE(disc.closed_form);
  ASSERT_TRUE(disc.virasoro.discrete.has_value());
  EXPECT_EQ(disc.virasoro.discrete->m, 3);
  EXPECT_EQ(disc.virasoro.discrete->r, 0);
  EXPECT_EQ(disc.virasoro.discrete->s, 1);
  UnitarityVerdict off = highest_weight_unitary(hw(2, "5/16", {"3/2", "1"}), {Scalar(1)});
  EXPECT_FALSE(off.closed_form);
  UnitarityVerdict neg = highest_weight_unitary(hw(2, "1", {"3", "-1"}), {Scalar(1)});
  EXPECT_FALSE(neg.closed_form);
  EXPECT_TRUE(neg.closed_form_literal);
  EXPECT_TRUE(neg.variant_discrepancy);
}

TEST(Oracle, Examples) {
  OracleReport interior = unitarity_oracle(hw(2, "1", {"3", "1"}), {Scalar(1)}, 8);
  EXPECT_TRUE(interior.psd);
  for (const auto& lvl : interior.levels) EXPECT_EQ(lvl.verdict->kind, Definiteness::PositiveDefinite);

  OracleReport disc = unitarity_oracle(hw(2, "1/16", {"3/2", "1"}), {Scalar(1)}, 8);
  EXPECT_TRUE(disc.psd);
  bool kernel = false;
  for (const auto& lvl : disc.levels) kernel = kernel || lvl.verdict->kernel_dim > 0;
  EXPECT_TRUE(kernel);

  OracleReport neg = unitarity_oracle(hw(2, "1", {"3", "-1"}), {Scalar(1)}, 1);
  EXPECT_FALSE(neg.psd);
  EXPECT_EQ(neg.first_failure, std::optional<int>(1));
  EXPECT_EQ(neg.levels.back().verdict->kind, Definiteness::NegativeContaining);

  OracleReport probe = unitarity_oracle(hw(2, "5/16", {"3/2", "1"}), {Scalar(1)}, 8);
  EXPECT_FALSE(probe.psd);
}

TEST(Oracle, NonHermitianCountsAsFailure) {
  // beta_1 phi(C_1) = i is not real, so the level-1 entry is not Hermitian
  OracleReport r = unitarity_oracle(hw(2, "1", {"3", "1"}), {S("i")}, 2);
  EXPECT_FALSE(r.psd);
  EXPECT_FALSE(r.levels.back().hermitian);
}

TEST(Oracle, AgreesWithClosedFormOnSamples) {
  struct Pt {
    int p;
    const char* l0;
    std::vector<std::string> c;
  };
  const std::vector<Pt> pts = {
      {2, "1", {"3", "1"}},        {2, "1/16", {"2", "1"}},     {2, "0", {"2", "1"}},
      {2, "1/8", {"3/2", "1"}},    {2, "9/16", {"3/2", "1"}},   {2, "1/4", {"3/2", "1"}},
      {2, "1/16", {"1", "1"}},     {2, "3", {"2", "-2"}},       {3, "1", {"3", "2"}},
      {3, "1/9", {"2", "1"}},      {3, "0", {"2", "1"}},        {2, "1", {"3/2", "1"}},
  };
  for (const auto& pt : pts) {
    HighestWeight w = hw(pt.p, pt.l0, pt.c);
    UnitarityVerdict v = highest_weight_unitary(w, ones(pt.p), 6);
    ASSERT_TRUE(v.agreement.has_value());
    EXPECT_TRUE(*v.agreement) << "p=" << pt.p << " L0=" << pt.l0 << " C0=" << pt.c[0];
  }
}

TEST(Oracle, EmptyJMatchesVirasoroCriterion) {
  // J empty: the module is a Virasoro Verma module in disguise
  for (const char* c : {"1/2", "1", "7/10", "2"}) {
    for (long k = -2; k <= 10; ++k) {
      HighestWeight w(2, Scalar(Q(k, 16)), {S(c), Scalar(0)});
      UnitarityVerdict v = highest_weight_unitary(w, {Scalar(1)}, 6);
      EXPECT_EQ(v.closed_form, virasoro_unitary(S(c).re(), Q(k, 16)));
    }
  }
}

TEST(Dualize, Examples) {
  const auto w = hw(3, "2/3", {"5", "1"});
  LowestWeightData d = lowest_weight_dualize(w, {S("2*i"), S("1/2*i")});
  EXPECT_EQ(d.beta, (std::vector<Scalar>{S("1/2*i"), S("2*i")}));
  EXPECT_EQ(d.weight.L0(), S("-2/3"));
  EXPECT_EQ(d.weight.C(0), S("-5"));
  LowestWeightData back = lowest_weight_dualize(d.weight, d.beta);
  EXPECT_EQ(back.weight, w);
  EXPECT_EQ(back.beta, (std::vector<Scalar>{S("2*i"), S("1/2*i")}));
  LowestWeightData p2 = lowest_weight_dualize(hw(2, "1", {"1", "1"}), {S("-1")});
  EXPECT_EQ(p2.beta, (std::vector<Scalar>{S("-1")}));
}

TEST(Classify, Buckets) {
  SeriesModule M(S("1/3"), S("1/2"), FMatrix(2, {{Scalar(1), Scalar(1)}}));
  Classification a = classify(SeriesDescriptor{M, {Scalar(1)}});
  EXPECT_EQ(a.bucket, std::optional<int>(1));

  Classification b = classify(HighestDescriptor{hw(2, "1/16", {"3/2", "1"}), {Scalar(1)}});
  EXPECT_EQ(b.bucket, std::optional<int>(2));

  Classification c = classify(LowestDescriptor{hw(2, "-1/16", {"-3/2", "-1"}), {Scalar(1)}});
  EXPECT_EQ(c.bucket, std::optional<int>(3));

  Classification n = classify(HighestDescriptor{hw(2, "1/4", {"3/2", "1"}), {Scalar(1)}}, 6);
  EXPECT_FALSE(n.bucket.has_value());
  EXPECT_EQ(n.failing, (std::vector<std::string>{"continuum-or-discrete-series"}));
  ASSERT_TRUE(n.highest.has_value());
  EXPECT_EQ(n.highest->agreement, std::optional<bool>(true));

  Classification h = classify(HighestDescriptor{hw(2, "1", {"3", "-1"}), {Scalar(1)}});
  EXPECT_EQ(h.failing, (std::vector<std::string>{"heisenberg-positivity"}));
  EXPECT_TRUE(h.variant_discrepancy);

  SeriesModule bad(S("1/3"), S("1/3"), FMatrix(2, {{Scalar(1), Scalar(1)}}));
  Classification s = classify(SeriesDescriptor{bad, {Scalar(1)}});
  EXPECT_FALSE(s.bucket.has_value());
  EXPECT_EQ(s.failing, (std::vector<std::string>{"series-b-half-line"}));
}

TEST(Classify, LowestWeightVerdictMatchesDual) {
  // the lowest weight -phi with beta' is unitary exactly when phi with beta is
  Sampler rng(61);
  for (int t = 0; t < 10; ++t) {
    const int p = t % 2 == 0 ? 2 : 3;
    auto beta = ones(p);
    std::vector<Scalar> c{Scalar(Rational(rng.integer(0, 8), 2))};
    for (int j = 1; j <= p / 2; ++j) c.push_back(Scalar(rng.integer(-2, 3)));
    HighestWeight w(p, Scalar(Rational(rng.integer(-2, 12), 16)), c);
    LowestWeightData lw = lowest_weight_dualize(w, beta);
    Classification hi = classify(HighestDescriptor{w, beta});
    Classification lo = classify(LowestDescriptor{lw.weight, lw.beta});
    EXPECT_EQ(hi.bucket.has_value(), lo.bucket.has_value());
    EXPECT_EQ(hi.failing, lo.failing);
  }
}

TEST(TensorModel, FormFactorises) {
  for (int d = 0; d <= 4; ++d) {
    TensorGramCheck tc = tensor_gram_check(hw(2, "1", {"3", "2"}), {Scalar(1)}, d);
    EXPECT_TRUE(tc.pass) << "d=" << d;
  }
  TensorGramCheck t3 = tensor_gram_check(hw(3, "1/2", {"4", "1"}), ones(3), 3);
  EXPECT_TRUE(t3.pass);
  EXPECT_THROW(tensor_gram_check(hw(4, "1", {"3", "1", "0"}), ones(4), 2), Error);
}
