// Copyright 2026 The qutrit-ks Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.hpp"
#include "qutrit_ks/contextuality.hpp"
#include "qutrit_ks/nmr.hpp"
#include "qutrit_ks/readout.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace qutrit_ks;

namespace {

const WitnessSet &standard() {
    static const WitnessSet w = standard_witness_set();
    return w;
}

oracle::Mat to_oracle(const ComplexMatrix3 &m) {
    oracle::Mat r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r[i][j] = m(i, j);
        }
    }
    return r;
}

QutritState diagonal_state(double p, double q) {
    return QutritState::from_deviation(DeviationMatrix::diagonal(p, q, -p - q));
}

/// Random point of the diagonal simplex, as a deviation (p, q, r).
std::array<double, 3> random_diagonal(std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    const double a = e(rng), b = e(rng), c = e(rng);
    const double s = a + b + c;
    return {a / s - 1.0 / 3, b / s - 1.0 / 3, c / s - 1.0 / 3};
}

} // namespace

TEST(Spectrum, DiagonalStateHasNoLines) {
    const SpectrumReading s = spectrum(diagonal_state(0.2, -0.1));
    EXPECT_EQ(s.ln1, Complex{});
    EXPECT_EQ(s.ln2, Complex{});
}

TEST(Spectrum, SigmaX) {
    const SpectrumReading s = spectrum(nmr::prepare(nmr::PreparedState::kSigmaX, {}));
    EXPECT_NEAR(s.ln1.real(), kSqrt2 / 3, 1e-12);
    EXPECT_NEAR(s.ln2.real(), kSqrt2 / 3, 1e-12);
    EXPECT_NEAR(s.ln1.imag(), 0.0, 1e-12);
    EXPECT_NEAR(s.ln2.imag(), 0.0, 1e-12);
}

TEST(Spectrum, MatchesGellMannExpectations) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const QutritState st = random_state(seed);
        const oracle::Mat rho = to_oracle(st.rho());
        const SpectrumReading s = spectrum(st);
        EXPECT_NEAR(s.ln1.real(), oracle::expect(rho, oracle::lambda(1)), 1e-12);
        EXPECT_NEAR(s.ln1.imag(), -oracle::expect(rho, oracle::lambda(2)), 1e-12);
        EXPECT_NEAR(s.ln2.real(), oracle::expect(rho, oracle::lambda(6)), 1e-12);
        EXPECT_NEAR(s.ln2.imag(), -oracle::expect(rho, oracle::lambda(7)), 1e-12);
    }
}

TEST(Spectrum, Linearity) {
    const QutritState a = random_state(1);
    const QutritState b = random_state(2);
    const double w = 0.37;
    const QutritState mix(w * a.rho() + (1 - w) * b.rho());
    const SpectrumReading sa = spectrum(a), sb = spectrum(b), sm = spectrum(mix);
    EXPECT_NEAR(std::abs(sm.ln1 - (w * sa.ln1 + (1 - w) * sb.ln1)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(sm.ln2 - (w * sa.ln2 + (1 - w) * sb.ln2)), 0.0, 1e-14);
}

TEST(Protocol, Pps1) {
    const ExpectationSet e = run_protocol(nmr::prepare(nmr::PreparedState::kPPS1, {}));
    EXPECT_NEAR(e.l1, 0.0, 1e-12);
    EXPECT_NEAR(e.l3, 0.5, 1e-12);
    EXPECT_NEAR(e.l4, 0.0, 1e-12);
    EXPECT_NEAR(e.l6, 0.0, 1e-12);
    EXPECT_NEAR(e.l8, 1.0 / (2.0 * kSqrt3), 1e-12);
    EXPECT_NEAR(witness_from_protocol(e), -2.0, 1e-12);
}

TEST(Protocol, Pps3) {
    const ExpectationSet e = run_protocol(nmr::prepare(nmr::PreparedState::kPPS3, {}));
    EXPECT_NEAR(e.l3, 0.0, 1e-12);
    EXPECT_NEAR(e.l8, 1.0 / kSqrt3, 1e-12);
    EXPECT_NEAR(witness_from_protocol(e), -1.0, 1e-12);
}

TEST(Protocol, SigmaX) {
    const ExpectationSet e = run_protocol(nmr::prepare(nmr::PreparedState::kSigmaX, {}));
    EXPECT_NEAR(witness_from_protocol(e), 2.0 * kSqrt2 - 4.0 / 3.0, 1e-12);
    EXPECT_NEAR(witness_from_protocol(e), 1.4951, 5e-5);
}

TEST(Protocol, MixedStateGivesZeros) {
    const ExpectationSet e = run_protocol(QutritState::maximally_mixed());
    for (double v : {e.l1, e.l3, e.l4, e.l6, e.l8}) {
        EXPECT_NEAR(v, 0.0, 1e-15);
    }
}

TEST(Protocol, AgreesWithDirectTracesOnRandomStates) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const QutritState st = random_state(seed);
        const oracle::Mat rho = to_oracle(st.rho());
        const ExpectationSet e = run_protocol(st);
        ASSERT_NEAR(e.l1, oracle::expect(rho, oracle::lambda(1)), 1e-10) << seed;
        ASSERT_NEAR(e.l3, oracle::expect(rho, oracle::lambda(3)), 1e-10) << seed;
        ASSERT_NEAR(e.l4, oracle::expect(rho, oracle::lambda(4)), 1e-10) << seed;
        ASSERT_NEAR(e.l6, oracle::expect(rho, oracle::lambda(6)), 1e-10) << seed;
        ASSERT_NEAR(e.l8, oracle::expect(rho, oracle::lambda(8)), 1e-10) << seed;
        ASSERT_NEAR(witness_from_protocol(e), evaluate_witness(st, standard()), 1e-9) << seed;
    }
}

TEST(Protocol, ExpectationSetBounds) {
    ExpectationSet e;
    e.l4 = 2.5;
    EXPECT_THROW(e.validate(), ConsistencyError);
}

TEST(SingleShot, MixedStateInvariant) {
    const QutritState t = single_shot_transform(QutritState::maximally_mixed());
    EXPECT_LT((t.rho() - ComplexMatrix3::Identity() / 3.0).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(single_shot_score(QutritState::maximally_mixed()), 0.0, 1e-15);
}

TEST(SingleShot, CoherenceClosedForm) {
    for (auto [p, q] : {std::pair{0.2, 0.1}, {-0.1, 0.3}, {0.33, 0.0}}) {
        const double r = -p - q;
        const ComplexMatrix3 m = single_shot_transform(DeviationMatrix::diagonal(p, q, r));
        EXPECT_NEAR(m(0, 1).real(), (q + r - 2 * p) / 4, 1e-14);
        EXPECT_NEAR(m(0, 1).imag(), 0.0, 1e-14);
    }
}

TEST(SingleShot, TransformAgreesWithOracle) {
    const oracle::Mat u = oracle::mul(oracle::expm_i(oracle::lambda(2), kPi / 4),
                                      oracle::expm_i(oracle::lambda(6), kPi / 4));
    const ComplexMatrix3 lib = single_shot_unitary();
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            EXPECT_NEAR(std::abs(lib(r, c) - u[r][c]), 0.0, 1e-12);
        }
    }
}

TEST(SingleShot, ThermalLine) {
    const QutritState t = single_shot_transform(nmr::thermal_state({}));
    EXPECT_NEAR(spectrum(t).ln1.real(), -0.5, 1e-12);
    EXPECT_NEAR(single_shot_score(nmr::thermal_state({})), -2.0, 1e-12);
}

TEST(SingleShot, IdentityOnRandomDiagonalStates) {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 1000; ++k) {
        const auto d = random_diagonal(rng);
        const QutritState st = QutritState::from_deviation(DeviationMatrix::diagonal(d[0], d[1], d[2]));
        const double s = single_shot_score(st);
        const double rhs = -3.0 * expectation(st, gell_mann(3)) - kSqrt3 * expectation(st, gell_mann(8));
        ASSERT_NEAR(s, rhs, 1e-10);
        ASSERT_NEAR(s, -6.0 * d[0], 1e-10);
        ASSERT_NEAR(s, evaluate_witness(st, standard()), 1e-10);
    }
}

TEST(SingleShot, RejectsNonDiagonal) {
    const QutritState sx = nmr::prepare(nmr::PreparedState::kSigmaX, {});
    EXPECT_THROW(single_shot_score(sx), ValidationError);
    EXPECT_THROW(single_shot_score(sx.deviation()), ValidationError);
}

TEST(SingleShot, WarnsOnNonDiagonalTransform) {
    std::ostringstream warn;
    single_shot_transform(random_state(4), &warn);
    EXPECT_NE(warn.str().find("warning"), std::string::npos);
    std::ostringstream quiet;
    single_shot_transform(nmr::thermal_state({}), &quiet);
    EXPECT_TRUE(quiet.str().empty());
}

TEST(SingleShot, PrintedColumns) {
    EXPECT_NEAR(single_shot_score(DeviationMatrix::diagonal(0.14, 0.12, -0.26)), -0.85, 0.02);
    EXPECT_NEAR(single_shot_score(DeviationMatrix::diagonal(0.33, 0.0, -0.33)), -2.0, 0.03);
}

TEST(Table1, ColumnsWithinRounding) {
    const auto rows = table1_reproduction();
    ASSERT_EQ(rows.size(), 5u);
    const double expected_columns[] = {-1.98, -2.00, -0.84, -0.66, -1.20};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_NEAR(rows[i].score_from_columns, expected_columns[i], 1e-12) << i;
        EXPECT_LE(rows[i].delta_columns(), 0.03 + 1e-12) << i;
    }
}

TEST(Table1, ConventionsPerRow) {
    const auto rows = table1_reproduction();
    EXPECT_NEAR(rows[0].score_scaled, -2.0, 1e-12);
    EXPECT_NEAR(rows[1].score_scaled, -2.0, 1e-12);
    EXPECT_NEAR(rows[2].score_unscaled, -0.84562, 1e-5);
    EXPECT_NEAR(rows[3].score_unscaled, -0.67848, 1e-5);
    EXPECT_NEAR(rows[4].score_unscaled, -1.22818, 1e-5);
    for (int i : {0, 1}) {
        EXPECT_EQ(rows[i].matched_convention(), nmr::DiagonalConvention::kScaled);
        EXPECT_LE(rows[i].delta_scaled(), 0.01);
    }
    for (int i : {2, 3, 4}) {
        EXPECT_EQ(rows[i].matched_convention(), nmr::DiagonalConvention::kUnscaled);
        EXPECT_LE(rows[i].delta_unscaled(), 0.01);
    }
}

TEST(Table1, ScaledFormulaMatchesSequence) {
    for (const auto &row : table1_reproduction()) {
        const QutritState s = nmr::prepare_diagonal(degrees_to_radians(row.entry.theta_p_deg),
                                                    degrees_to_radians(row.entry.theta_q_deg), {});
        EXPECT_NEAR(single_shot_score(s), row.score_scaled, 1e-12);
        EXPECT_NEAR(row.score_unscaled, 3.0 * row.score_scaled, 1e-12);
    }
}
