#include <cmath>
#include <vector>

#include "ivqrof/hamacher.hpp"
#include "ivqrof/heronian.hpp"
#include "ivqrof/oracle.hpp"
#include "ivqrof/random_cases.hpp"
#include "test_support.hpp"

namespace {

using namespace ivqrof;
using ivqrof::testing::Near;

AggParams params(double q, double phi, double x, double y) { return AggParams{q, phi, x, y}; }

// First expert, first alternative, all five criteria.
const std::vector<IVqROFN> kFirstRow{{0.35, 0.45, 0.5, 0.65},
                                     {0.8, 0.85, 0.15, 0.2},
                                     {0.6, 0.7, 0.3, 0.4},
                                     {0.7, 0.8, 0.2, 0.3},
                                     {0.65, 0.7, 0.35, 0.4}};

// The three experts' opinions on the first alternative under the first criterion.
const std::vector<IVqROFN> kFirstCell{{0.35, 0.45, 0.5, 0.65},
                                      {0.4, 0.45, 0.5, 0.6},
                                      {0.4, 0.5, 0.5, 0.6}};
const WeightVector kExpertWeights({0.330, 0.334, 0.336});

TEST(HeronianReal, Idempotent) {
  const std::vector<double> v(4, 0.37);
  for (auto [x, y] : {std::pair{1.0, 1.0}, {3.0, 0.0}, {0.5, 2.0}}) {
    EXPECT_NEAR(hm_real(v, x, y), 0.37, 1e-15);
  }
}

TEST(HeronianReal, TwoValues) {
  const std::vector<double> v{1, 2};
  EXPECT_NEAR(hm_real(v, 1, 1), std::sqrt(7.0 / 3.0), 1e-15);
}

TEST(HeronianReal, SingleValue) {
  const std::vector<double> v{0.8};
  EXPECT_NEAR(hm_real(v, 2, 3), 0.8, 1e-15);
}

TEST(HeronianReal, Errors) {
  EXPECT_ERROR_CODE(hm_real(std::vector<double>{}, 1, 1), ErrorCode::EmptyInput);
  EXPECT_ERROR_CODE(hm_real(std::vector<double>{1.0}, 0, 0), ErrorCode::BothExponentsZero);
}

TEST(Hmm, SwappingTwoInputsWithEqualExponents) {
  const std::vector<IVqROFN> ab{kFirstRow[0], kFirstRow[1]};
  const std::vector<IVqROFN> ba{kFirstRow[1], kFirstRow[0]};
  const AggParams p = params(3, 3, 2, 2);
  EXPECT_TRUE(Near(hmm(ab, p), hmm(ba, p), 1e-12));
}

TEST(Hmm, MatchesProbabilisticFormulaAtPhiOne) {
  const std::vector<IVqROFN> v{{0.6, 0.7, 0.3, 0.4}, {0.5, 0.6, 0.5, 0.6}};
  const IVqROFN closed = hmm(v, params(2, 1, 1, 1));
  EXPECT_TRUE(Near(closed, hmm_phi1(v, 2, 1, 1), 1e-9));
  EXPECT_TRUE(Near(closed,
                   {0.54910787228617797, 0.64909266079322436, 0.42064617318876912,
                    0.51794314049479151},
                   1e-12));
}

TEST(Hmm, FirstRowMatchesFrozenOracleValue) {
  const AggParams p = params(3, 3, 3, 3);
  const IVqROFN frozen{0.57967640252025743, 0.6344824598498725, 0.43557135456884954,
                       0.57264040250511572};
  EXPECT_TRUE(Near(hmm(kFirstRow, p), frozen, 1e-12));
  EXPECT_TRUE(Near(fold_eval({Operator::Hmm, kFirstRow, std::nullopt, p}), frozen, 1e-12));
}

TEST(Hmm, ResultIsValid) {
  EXPECT_TRUE(is_valid(hmm(kFirstRow, params(3, 3, 3, 3)), 3));
}

TEST(Hmm, Errors) {
  EXPECT_ERROR_CODE(hmm(std::vector<IVqROFN>{}, params(3, 3, 1, 1)), ErrorCode::EmptyInput);
  EXPECT_ERROR_CODE(hmm(kFirstRow, params(3, 3, 0, 0)), ErrorCode::BothExponentsZero);
  EXPECT_ERROR_CODE(hmm(kFirstRow, params(3, -1, 1, 1)), ErrorCode::NonPositivePhi);
  EXPECT_ERROR_CODE(hmm(kFirstRow, params(1, 3, 1, 1)), ErrorCode::RungConstraintViolation);
}

TEST(Hmm, ExchangingExponentsReversesTheInputs) {
  CaseGenerator gen(13);
  for (int k = 0; k < 300; ++k) {
    FuzzCase c = draw_case(gen);
    std::vector<IVqROFN> reversed(c.values.rbegin(), c.values.rend());
    AggParams swapped = c.params;
    std::swap(swapped.x, swapped.y);
    ASSERT_TRUE(Near(hmm(c.values, c.params), hmm(reversed, swapped), 1e-12));
  }
}

TEST(HmmPhi1, SingleInputIsIdentity) {
  const std::vector<IVqROFN> v{{0.6, 0.7, 0.3, 0.4}};
  EXPECT_TRUE(Near(hmm_phi1(v, 3, 1, 0), v[0], 1e-15));
}

TEST(HmmPhi1, SymmetricInInputOrder) {
  const std::vector<IVqROFN> v{kFirstRow[2], kFirstRow[3], kFirstRow[4]};
  const std::vector<IVqROFN> w{kFirstRow[4], kFirstRow[2], kFirstRow[3]};
  EXPECT_TRUE(Near(hmm_phi1(v, 3, 2, 2), hmm_phi1(w, 3, 2, 2), 1e-12));
}

TEST(HmmPhi1, TwoInputsAgainstAlgebraicFold) {
  const std::vector<IVqROFN> v{{0.6, 0.7, 0.3, 0.4}, {0.5, 0.6, 0.5, 0.6}};
  for (auto [x, y] : {std::pair{1.0, 1.0}, {2.0, 3.0}, {1.0, 0.0}}) {
    const FoldSpec spec{Operator::Hmm, v, std::nullopt, params(2, 1, x, y)};
    EXPECT_TRUE(Near(hmm_phi1(v, 2, x, y), fold_eval_algebraic(spec), 1e-12));
  }
}

TEST(Hhmwa, FirstCellMatchesFrozenOracleValue) {
  const AggParams p = params(3, 3, 3, 3);
  const IVqROFN frozen{0.80555173278253989, 0.8415359450762584, 0.34309345351719533,
                       0.42451130375877605};
  EXPECT_TRUE(Near(hhmwa(kFirstCell, kExpertWeights, p), frozen, 1e-12));
}

TEST(Hhmwa, PrintedFirstCellIsNotValidAtRungThree) {
  // The published aggregate for this cell is ([0.79, 0.83], [0.96, 0.96]).
  const IVqROFN printed{0.79, 0.83, 0.96, 0.96};
  EXPECT_FALSE(is_valid(printed, 3));
  const IVqROFN ours = hhmwa(kFirstCell, kExpertWeights, params(3, 3, 3, 3));
  EXPECT_LT(std::abs(ours.mu_lo - printed.mu_lo), 0.02);
  EXPECT_LT(std::abs(ours.mu_hi - printed.mu_hi), 0.02);
  EXPECT_GT(std::abs(ours.nu_lo - printed.nu_lo), 0.5);
}

TEST(Hhmwa, SingleInputFold) {
  const AggParams p = params(3, 3, 2, 1);
  const IVqROFN a{0.6, 0.7, 0.3, 0.4};
  const IVqROFN by_hand =
      h_scalar_mul(1.0 / 3.0, h_sum(h_scalar_mul(2, a, p), h_scalar_mul(1, a, p), p), p);
  EXPECT_TRUE(Near(hhmwa(std::vector<IVqROFN>{a}, WeightVector({1.0}), p), by_hand, 1e-12));
}

TEST(Hhmwa, JointPermutationWithEqualExponents) {
  const AggParams p = params(3, 3, 3, 3);
  const std::vector<IVqROFN> permuted{kFirstCell[2], kFirstCell[0], kFirstCell[1]};
  const WeightVector w({0.336, 0.330, 0.334});
  EXPECT_TRUE(Near(hhmwa(kFirstCell, kExpertWeights, p), hhmwa(permuted, w, p), 1e-12));
}

TEST(Hhmwa, Errors) {
  const AggParams p = params(3, 3, 3, 3);
  EXPECT_ERROR_CODE(hhmwa(kFirstCell, WeightVector({0.5, 0.5}), p),
                    ErrorCode::WeightDimensionMismatch);
  EXPECT_ERROR_CODE(WeightVector({0.5, 0.5, 0.5}), ErrorCode::WeightSumViolation);
}

TEST(Hhmga, TwoInputsMatchFrozenOracleValue) {
  const std::vector<IVqROFN> v{kFirstRow[0], kFirstRow[1]};
  const AggParams p = params(3, 3, 3, 3);
  const WeightVector w = WeightVector::uniform(2);
  const IVqROFN frozen{0.88225824537020048, 0.90428419597812759, 0.25228749678913426,
                       0.33304901038029627};
  EXPECT_TRUE(Near(hhmga(v, w, p), frozen, 1e-12));
  EXPECT_TRUE(Near(fold_eval({Operator::HhmgaDual, v, w, p}), frozen, 1e-12));
}

TEST(Hhmga, JointPermutationInBothModesWithEqualExponents) {
  const AggParams p = params(2, 0.5, 1, 1);
  const std::vector<IVqROFN> permuted{kFirstCell[1], kFirstCell[2], kFirstCell[0]};
  const WeightVector w({0.334, 0.336, 0.330});
  for (auto mode : {GeometricMode::Dual, GeometricMode::Literal}) {
    EXPECT_TRUE(Near(hhmga(kFirstCell, kExpertWeights, p, mode), hhmga(permuted, w, p, mode),
                     1e-12));
  }
}

TEST(Hhmga, RoleSwapDualityForOneInput) {
  CaseGenerator gen(31);
  for (int k = 0; k < 200; ++k) {
    FuzzCase c = draw_case(gen);
    const IVqROFN a = c.values.front();
    const std::vector<IVqROFN> one{a};
    const std::vector<IVqROFN> one_swapped{a.swapped()};
    const WeightVector w({1.0});
    ASSERT_TRUE(Near(hhmga(one_swapped, w, c.params), hhmwa(one, w, c.params).swapped(), 1e-12));
  }
}

TEST(Hhmga, RoleSwapDualityDoesNotExtendToWeightedInputs) {
  const std::vector<IVqROFN> v{kFirstRow[0], kFirstRow[1]};
  const std::vector<IVqROFN> s{kFirstRow[0].swapped(), kFirstRow[1].swapped()};
  const WeightVector w({0.3, 0.7});
  const AggParams p = params(3, 3, 3, 3);
  const IVqROFN lhs = hhmga(s, w, p);
  const IVqROFN rhs = hhmwa(v, w, p).swapped();
  EXPECT_GT(std::abs(lhs.mu_hi - rhs.mu_hi), 1e-3);
}

TEST(Hhmga, LiteralModeCollapsesTowardTheProductIdentity) {
  const IVqROFN lit = hhmga(kFirstRow, WeightVector::uniform(5), params(3, 3, 3, 3),
                            GeometricMode::Literal);
  EXPECT_TRUE(Near(lit, IVqROFN::product_identity(), 1e-6));
}

TEST(Hhmga, LiteralModeKeepsDigitsTheWideFoldLoses) {
  const std::vector<IVqROFN> v{
      {0.81763175306658176, 0.95880991277878747, 0.052589372055688921, 0.18322869121762253},
      {0.63523732188256288, 0.99893100189355222, 0.054323512633248291, 0.084526733893105221},
      {0.74761312335355101, 0.88158876842473888, 0.52943467114714737, 0.62576147320801045}};
  const WeightVector w({0.2421601235951221, 0.12330993955577693, 0.63452993684910108});
  const AggParams p = params(3, 3, 3, 3);
  // Reference computed with 80 significant digits.
  const IVqROFN reference{0.99987287843983203403, 0.9999994742160070739, 0.00050715534915480330907,
                          0.0028637277202446107213};
  const IVqROFN closed = hhmga(v, w, p, GeometricMode::Literal);
  EXPECT_TRUE(Near(closed, reference, 1e-12));
  EXPECT_TRUE(is_valid(closed, 3));
  const IVqROFN folded = fold_eval({Operator::HhmgaLiteral, v, w, p});
  EXPECT_EQ(folded.mu_hi, 1.0);
  EXPECT_FALSE(is_valid(folded, 3));
}

TEST(HmmSpecial, SameAsExplicitExponents) {
  const AggParams p = params(3, 3, 7, 7);
  EXPECT_EQ(hmm_special_xy(kFirstRow, p, SpecialCase::X1Y0), hmm(kFirstRow, params(3, 3, 1, 0)));
  EXPECT_EQ(hmm_special_xy(kFirstRow, p, SpecialCase::X0Y1), hmm(kFirstRow, params(3, 3, 0, 1)));
}

TEST(HmmSpecial, SingleInputIsIdentity) {
  const std::vector<IVqROFN> v{kFirstRow[2]};
  EXPECT_TRUE(Near(hmm_special_xy(v, params(3, 2, 1, 1), SpecialCase::X1Y0), v[0], 1e-15));
}

TEST(HmmSpecial, TwoCasesAreMirrorImagesNotEqual) {
  const AggParams p = params(3, 3, 1, 1);
  const IVqROFN first = hmm_special_xy(kFirstRow, p, SpecialCase::X1Y0);
  const IVqROFN second = hmm_special_xy(kFirstRow, p, SpecialCase::X0Y1);
  EXPECT_FALSE(Near(first, second, 1e-6));
  const std::vector<IVqROFN> reversed(kFirstRow.rbegin(), kFirstRow.rend());
  EXPECT_TRUE(Near(first, hmm_special_xy(reversed, p, SpecialCase::X0Y1), 1e-12));
}

TEST(ClosedFormTrace, HelperAndAccumulatorOrdering) {
  const AggParams p = params(3, 3, 3, 3);
  const auto w = kExpertWeights.entries();
  for (Operator op : {Operator::Hmm, Operator::Hhmwa, Operator::HhmgaDual}) {
    const auto trace = trace_closed_form(
        op, kFirstCell, op == Operator::Hmm ? std::span<const double>{} : w, p);
    ASSERT_EQ(trace.helpers.size(), 6u);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i; j < 3; ++j, ++k) {
        const HelperTerms& h = trace.helpers[k];
        EXPECT_EQ(h.i, i);
        EXPECT_EQ(h.j, j);
        EXPECT_GE(h.V_lo, h.W_lo);
        EXPECT_GE(h.V_hi, h.W_hi);
        EXPECT_GE(h.N_lo, h.M_lo);
        EXPECT_GE(h.N_hi, h.M_hi);
        EXPECT_GE(h.VW_gap_lo, 0.0);
        EXPECT_GE(h.NM_gap_hi, 0.0);
      }
    }
    EXPECT_GE(trace.acc.a_lo, trace.acc.b_lo);
    EXPECT_GE(trace.acc.a_hi, trace.acc.b_hi);
    EXPECT_GE(trace.acc.c_lo, trace.acc.d_lo);
    EXPECT_GE(trace.acc.c_hi, trace.acc.d_hi);
  }
}

TEST(ClosedFormTrace, ResultIsTheOperatorValue) {
  const AggParams p = params(2, 0.5, 2, 3);
  EXPECT_EQ(trace_closed_form(Operator::Hmm, kFirstRow, {}, p).result, hmm(kFirstRow, p));
  EXPECT_ERROR_CODE(trace_closed_form(Operator::Hhmwa, kFirstRow, {}, p),
                    ErrorCode::WeightDimensionMismatch);
}

}  // namespace
