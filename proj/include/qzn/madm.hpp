#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qzn/fidelity.hpp"
#include "qzn/fuzzy.hpp"
#include "qzn/qzn.hpp"

namespace qzn {

/// Two scores within this distance of the row maximum count as tied.
inline constexpr double kTieTolerance = 1e-9;

/// Rectangular grid of Z-numbers: one row per entity (sample or
/// reference), one column per attribute.
struct ZMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;
    std::vector<std::vector<ZNumber>> rows;

    std::size_t row_count() const noexcept { return rows.size(); }
    std::size_t column_count() const noexcept {
        return rows.empty() ? 0 : rows.front().size();
    }
};

/// Validates shape and membership ranges; errors name the offending cell.
/// Column labels may be empty, in which case "attr1".."attrK" are used.
ZMatrix build_zmatrix(
    const std::vector<std::vector<std::pair<double, double>>>& raw,
    std::vector<std::string> row_labels,
    std::vector<std::string> column_labels = {});

/// Rotation angles (radians) of one entry's two components.
struct AnglePair {
    double a;
    double b;
};

struct AngleMatrix {
    std::vector<std::vector<AnglePair>> rows;
};

/// 2*arccos(sqrt(mu)) per component, elementwise.
AngleMatrix rotation_angles(const ZMatrix& m);

/// One QZN per attribute, each built by RotY on |0>.
std::vector<Qzn> encode_row(std::span<const AnglePair> row_angles);

/// Per-attribute combined states of an encoded row.
std::vector<StateVector> combine_row(std::span<const Qzn> qzns);

/// Fidelity between two entities given as per-attribute state lists.
/// Exact and Factorized modes multiply per-attribute overlaps;
/// CircuitExact materializes both tensor registers and swap-tests them
/// (for K attributes of w-qubit states that is 1+2wK qubits, so keep K
/// small); CircuitSampled Bernoulli-samples the ancilla.
double fidelity_coefficient(std::span<const StateVector> sample_row,
                            std::span<const StateVector> reference_row,
                            const FidelityMode& mode,
                            std::size_t capacity = kDefaultCapacity);

/// Score grid plus the mode that produced it. In sampled mode cell (i,x)
/// uses derive_seed(mode.seed, i, x), making the fill order irrelevant.
struct FidelityMatrix {
    std::vector<std::vector<double>> values;
    FidelityMode mode;
};

/// Generic fill: one fidelity_coefficient per (sample row, reference row).
FidelityMatrix fill_fidelity_matrix(
    const std::vector<std::vector<StateVector>>& sample_rows,
    const std::vector<std::vector<StateVector>>& reference_rows,
    const FidelityMode& mode, std::size_t capacity = kDefaultCapacity);

/// Full pipeline from Z-matrices to the M x N quantum fidelity matrix.
FidelityMatrix build_qfm(const ZMatrix& szm, const ZMatrix& rzm,
                         const FidelityMode& mode,
                         std::size_t capacity = kDefaultCapacity);

/// Row verdict: best reference by score, with the full row kept for
/// reporting. Cells without a defined score (e.g. undefined correlations)
/// are empty and excluded from the argmax.
struct Decision {
    std::size_t sample_index = 0;
    std::size_t reference_index = 0;
    std::string reference_label;
    double score = 0.0;
    std::vector<std::optional<double>> scores;
    bool tie = false;
};

struct DecisionReport {
    std::vector<Decision> decisions;
};

/// Per-row argmax with lowest-index tie-breaking; the tie flag is set when
/// two or more entries lie within kTieTolerance of the maximum.
DecisionReport decide(const FidelityMatrix& qfm,
                      std::span<const std::string> reference_labels);

/// Same, over rows that may contain undefined cells. A row with no defined
/// cell has no argmax and raises UndefinedCorrelationError.
DecisionReport decide_rows(
    const std::vector<std::vector<std::optional<double>>>& scores,
    std::span<const std::string> reference_labels);

} // namespace qzn
