#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "medical_fixture.hpp"
#include "qzn/madm.hpp"

using namespace qzn;

namespace {

constexpr double kTol = 1e-12;
constexpr double kDegrees = 180.0 / std::numbers::pi;

ZMatrix sample_matrix() {
    return build_zmatrix(fixture::kSamples, fixture::kSampleLabels,
                         fixture::kAttributeNames);
}

ZMatrix reference_matrix() {
    return build_zmatrix(fixture::kReferences, fixture::kReferenceLabels,
                         fixture::kAttributeNames);
}

// Overlap of two combined states by the four-term product formula, the
// analytic twin of the circuit construction.
double combined_overlap(double a1, double b1, double a2, double b2) {
    return std::sqrt(a1 * b1 * a2 * b2) +
           std::sqrt(a1 * (1 - b1) * a2 * (1 - b2)) +
           std::sqrt((1 - a1) * b1 * (1 - a2) * b2) +
           std::sqrt((1 - a1) * (1 - b1) * (1 - a2) * (1 - b2));
}

double row_fidelity_oracle(const std::vector<std::pair<double, double>>& s,
                           const std::vector<std::pair<double, double>>& r) {
    double f = 1.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const double overlap = combined_overlap(s[j].first, s[j].second,
                                                r[j].first, r[j].second);
        f *= overlap * overlap;
    }
    return f;
}

} // namespace

TEST_CASE("build_zmatrix sets labels and defaults") {
    const ZMatrix m = sample_matrix();
    CHECK(m.row_count() == 3);
    CHECK(m.column_count() == 4);
    CHECK(m.row_labels[1] == "Bob");
    CHECK(m.column_labels[3] == "chest pain");
    CHECK(m.rows[0][0].restriction.value() == 0.35);
    CHECK(m.rows[0][0].reliability.value() == 0.77);

    const ZMatrix defaulted =
        build_zmatrix({{{0.1, 0.2}, {0.3, 0.4}}}, {"only"});
    CHECK(defaulted.column_labels ==
          std::vector<std::string>{"attr1", "attr2"});
}

TEST_CASE("build_zmatrix names the offending cell") {
    CHECK_THROWS_AS(build_zmatrix({}, {}), ValidationError);
    CHECK_THROWS_AS(build_zmatrix({{{0.1, 0.2}}}, {"a", "b"}),
                    ValidationError);
    CHECK_THROWS_AS(
        build_zmatrix({{{0.1, 0.2}, {0.3, 0.4}}, {{0.5, 0.6}}}, {"a", "b"}),
        ValidationError);
    CHECK_THROWS_WITH_AS(build_zmatrix({{{0.1, 1.2}}}, {"a"}),
                         doctest::Contains("row 1, column 1, component b"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(build_zmatrix({{{0.1, 0.2}}, {{-0.3, 0.4}}},
                                       {"a", "b"}),
                         doctest::Contains("row 2, column 1, component a"),
                         ValidationError);
}

TEST_CASE("rotation angles match the three-decimal display table") {
    const AngleMatrix s = rotation_angles(sample_matrix());
    const AngleMatrix r = rotation_angles(reference_matrix());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(std::abs(s.rows[i][j].a * kDegrees -
                           fixture::kSampleAnglesA[i][j]) <= 0.001);
            CHECK(std::abs(s.rows[i][j].b * kDegrees -
                           fixture::kSampleAnglesB[i][j]) <= 0.001);
        }
    }
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = 0; y < 4; ++y) {
            CHECK(std::abs(r.rows[x][y].a * kDegrees -
                           fixture::kReferenceAnglesA[x][y]) <= 0.001);
            CHECK(std::abs(r.rows[x][y].b * kDegrees -
                           fixture::kReferenceAnglesB[x][y]) <= 0.001);
        }
    }
}

TEST_CASE("encode_row rebuilds the membership degrees") {
    const ZMatrix m = sample_matrix();
    const AngleMatrix angles = rotation_angles(m);
    const std::vector<Qzn> row = encode_row(angles.rows[0]);
    REQUIRE(row.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(row[j].a.arity() == 1);
        CHECK(std::abs(prob_zero(row[j].a) -
                       m.rows[0][j].restriction.value()) <= kTol);
        CHECK(std::abs(prob_zero(row[j].b) -
                       m.rows[0][j].reliability.value()) <= kTol);
    }
}

TEST_CASE("combine_row fuses each attribute into a three-qubit state") {
    const AngleMatrix angles = rotation_angles(sample_matrix());
    const std::vector<Qzn> row = encode_row(angles.rows[0]);
    const std::vector<StateVector> combined = combine_row(row);
    REQUIRE(combined.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(combined[j].num_qubits() == 3);
        const auto [mu_a, mu_b] = fixture::kSamples[0][j];
        CHECK(std::abs(measure_prob(combined[j], 2, 0) - mu_a * mu_b) <=
              kTol);
    }
}

TEST_CASE("fidelity_coefficient reproduces the analytic products") {
    const AngleMatrix s_angles = rotation_angles(sample_matrix());
    const AngleMatrix r_angles = rotation_angles(reference_matrix());
    const auto alice = combine_row(encode_row(s_angles.rows[0]));
    const auto charlie = combine_row(encode_row(s_angles.rows[2]));
    const auto viral = combine_row(encode_row(r_angles.rows[1]));

    const double f12 =
        fidelity_coefficient(alice, viral, FidelityMode::exact());
    const double f32 =
        fidelity_coefficient(charlie, viral, FidelityMode::exact());
    CHECK(std::abs(f12 - 0.2759052057894843) <= kTol);
    CHECK(std::abs(f32 - 0.8055553019547234) <= kTol);
    CHECK(std::abs(f12 - row_fidelity_oracle(fixture::kSamples[0],
                                             fixture::kReferences[1])) <=
          kTol);

    // The swap-test ancilla would read |0> with probability (1 + F)/2.
    CHECK(std::abs((0.5 + 0.5 * f12) - 0.6379526028947421) <= kTol);

    CHECK(std::abs(fidelity_coefficient(alice, viral,
                                        FidelityMode::factorized()) -
                   f12) <= kTol);
}

TEST_CASE("circuit-exact coefficient agrees on a short row") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<std::pair<double, double>>> s_raw(1);
        std::vector<std::vector<std::pair<double, double>>> r_raw(1);
        for (int j = 0; j < 2; ++j) {
            s_raw[0].push_back({uni(rng), uni(rng)});
            r_raw[0].push_back({uni(rng), uni(rng)});
        }
        const ZMatrix s = build_zmatrix(s_raw, {"s"});
        const ZMatrix r = build_zmatrix(r_raw, {"r"});
        const auto s_row = combine_row(encode_row(
            rotation_angles(s).rows[0]));
        const auto r_row = combine_row(encode_row(
            rotation_angles(r).rows[0]));
        const double exact =
            fidelity_coefficient(s_row, r_row, FidelityMode::exact());
        const double circuit = fidelity_coefficient(
            s_row, r_row, FidelityMode::circuit_exact());
        CHECK(std::abs(exact - circuit) <= kTol);
    }
}

TEST_CASE("sampled fills use one derived seed per cell") {
    const ZMatrix szm = sample_matrix();
    const ZMatrix rzm = reference_matrix();
    const FidelityMode mode = FidelityMode::circuit_sampled(20000, 5);
    const FidelityMatrix filled = build_qfm(szm, rzm, mode);
    const FidelityMatrix again = build_qfm(szm, rzm, mode);
    REQUIRE(filled.values.size() == 3);
    REQUIRE(filled.values[0].size() == 4);
    CHECK(filled.mode.kind == FidelityMode::Kind::CircuitSampled);

    const AngleMatrix s_angles = rotation_angles(szm);
    const AngleMatrix r_angles = rotation_angles(rzm);
    std::vector<std::vector<StateVector>> s_rows;
    std::vector<std::vector<StateVector>> r_rows;
    for (const auto& row : s_angles.rows) {
        s_rows.push_back(combine_row(encode_row(row)));
    }
    for (const auto& row : r_angles.rows) {
        r_rows.push_back(combine_row(encode_row(row)));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t x = 0; x < 4; ++x) {
            CHECK(filled.values[i][x] == again.values[i][x]);
            // Each cell behaves as if sampled alone with its derived seed.
            FidelityMode cell = mode;
            cell.seed = derive_seed(mode.seed, i, x);
            const double lone =
                fidelity_coefficient(s_rows[i], r_rows[x], cell);
            CHECK(filled.values[i][x] == lone);
        }
    }
}

TEST_CASE("exact QFM lands inside the display band and decides correctly") {
    const FidelityMatrix qfm =
        build_qfm(sample_matrix(), reference_matrix(),
                  FidelityMode::exact());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t x = 0; x < 4; ++x) {
            CHECK(std::abs(qfm.values[i][x] -
                           fixture::kQfmDisplay[i][x]) <= 0.03);
        }
    }
    const DecisionReport report = decide(qfm, fixture::kReferenceLabels);
    REQUIRE(report.decisions.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(report.decisions[i].reference_index == fixture::kQznWinners[i]);
        CHECK(report.decisions[i].reference_label ==
              fixture::kReferenceLabels[fixture::kQznWinners[i]]);
        CHECK_FALSE(report.decisions[i].tie);
    }
    CHECK(report.decisions[0].score == qfm.values[0][3]);
}

TEST_CASE("an entity is a perfect match for itself") {
    const FidelityMatrix self =
        build_qfm(sample_matrix(), sample_matrix(), FidelityMode::exact());
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(self.values[i][i] - 1.0) <= kTol);
    }
}

TEST_CASE("decide breaks ties toward the lowest index and flags them") {
    FidelityMatrix m;
    m.values = {{0.5, 0.5, 0.2}, {0.1, 0.3, 0.9}};
    const std::vector<std::string> labels = {"first", "second", "third"};
    const DecisionReport report = decide(m, labels);
    CHECK(report.decisions[0].reference_index == 0);
    CHECK(report.decisions[0].tie);
    CHECK(report.decisions[1].reference_index == 2);
    CHECK_FALSE(report.decisions[1].tie);

    // Scores closer than the tolerance count as tied too.
    const std::vector<std::string> two = {"a", "b"};
    FidelityMatrix near;
    near.values = {{0.5, 0.5 - 1e-10}};
    CHECK(decide(near, two).decisions[0].tie);
    FidelityMatrix apart;
    apart.values = {{0.5, 0.5 - 1e-6}};
    CHECK_FALSE(decide(apart, two).decisions[0].tie);
}

TEST_CASE("decide_rows skips undefined cells") {
    const std::vector<std::string> labels = {"a", "b", "c"};
    const std::vector<std::vector<std::optional<double>>> scores = {
        {std::nullopt, 0.4, 0.6},
        {0.2, std::nullopt, std::nullopt},
    };
    const DecisionReport report = decide_rows(scores, labels);
    CHECK(report.decisions[0].reference_index == 2);
    CHECK(report.decisions[1].reference_index == 0);
    CHECK(report.decisions[0].scores[0] == std::nullopt);

    CHECK_THROWS_AS(
        decide_rows({{std::nullopt, std::nullopt, std::nullopt}}, labels),
        UndefinedCorrelationError);
    // Shape mismatch between a row and the label list is a caller error.
    CHECK_THROWS_AS(decide_rows({{std::nullopt, std::nullopt}}, labels),
                    std::invalid_argument);
    CHECK_THROWS_AS(decide_rows({}, labels), std::invalid_argument);
}

TEST_CASE("reference permutation permutes columns but not verdicts") {
    const ZMatrix szm = sample_matrix();
    const ZMatrix rzm = reference_matrix();
    // Rotate the reference list by one.
    fixture::Grid rotated_raw;
    std::vector<std::string> rotated_labels;
    for (std::size_t x = 0; x < 4; ++x) {
        rotated_raw.push_back(fixture::kReferences[(x + 1) % 4]);
        rotated_labels.push_back(fixture::kReferenceLabels[(x + 1) % 4]);
    }
    const ZMatrix rotated =
        build_zmatrix(rotated_raw, rotated_labels, fixture::kAttributeNames);

    const FidelityMatrix base = build_qfm(szm, rzm, FidelityMode::exact());
    const FidelityMatrix moved =
        build_qfm(szm, rotated, FidelityMode::exact());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t x = 0; x < 4; ++x) {
            CHECK(std::abs(moved.values[i][x] -
                           base.values[i][(x + 1) % 4]) <= kTol);
        }
    }
    const DecisionReport before = decide(base, fixture::kReferenceLabels);
    const DecisionReport after = decide(moved, rotated_labels);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(before.decisions[i].reference_label ==
              after.decisions[i].reference_label);
    }
}

TEST_CASE("attribute order does not change exact scores") {
    fixture::Grid s_swapped = fixture::kSamples;
    fixture::Grid r_swapped = fixture::kReferences;
    for (auto& row : s_swapped) std::swap(row[0], row[3]);
    for (auto& row : r_swapped) std::swap(row[0], row[3]);
    const FidelityMatrix base =
        build_qfm(sample_matrix(), reference_matrix(),
                  FidelityMode::exact());
    const FidelityMatrix swapped = build_qfm(
        build_zmatrix(s_swapped, fixture::kSampleLabels),
        build_zmatrix(r_swapped, fixture::kReferenceLabels),
        FidelityMode::exact());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t x = 0; x < 4; ++x) {
            CHECK(std::abs(base.values[i][x] - swapped.values[i][x]) <=
                  kTol);
        }
    }
}
