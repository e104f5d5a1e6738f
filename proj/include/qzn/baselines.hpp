#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qzn/madm.hpp"

namespace qzn {

/// Elementwise muA*muB grid: the classical collapse of a Z-matrix.
struct CombinedZMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::vector<double>> rows;
};

CombinedZMatrix combine_classical(const ZMatrix& m);

/// Pearson correlation, population moments (the n vs n-1 factor cancels in
/// the ratio). Throws UndefinedCorrelationError when either vector is
/// constant; the statistic does not define a value there and coercing to 0
/// would fabricate a similarity.
double pearson(std::span<const double> u, std::span<const double> v);

/// Correlation grid; cells where the coefficient is undefined stay empty.
struct PearsonMatrix {
    std::vector<std::vector<std::optional<double>>> values;
};

struct ZnResult {
    PearsonMatrix matrix;
    DecisionReport report;
};

/// Classical comparison path: combined memberships, pairwise Pearson
/// correlation, per-row argmax. Reliability enters only through the
/// muA*muB products.
ZnResult zn_pipeline(const ZMatrix& szm, const ZMatrix& rzm);

struct QfsResult {
    FidelityMatrix matrix;
    DecisionReport report;
};

/// Reliability-blind quantum path: each attribute becomes the single-qubit
/// state sqrt(muA)|0> + sqrt(1-muA)|1> (the reliability column is unused),
/// scored by the same factorized fidelity as the main pipeline.
QfsResult qfs_pipeline(const ZMatrix& szm, const ZMatrix& rzm,
                       const FidelityMode& mode,
                       std::size_t capacity = kDefaultCapacity);

} // namespace qzn
