#include "qzn/madm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qzn {

namespace {

std::string cell_name(std::size_t row, std::size_t col, const char* component) {
    return "row " + std::to_string(row + 1) + ", column " +
           std::to_string(col + 1) + ", component " + component;
}

} // namespace

ZMatrix build_zmatrix(
    const std::vector<std::vector<std::pair<double, double>>>& raw,
    std::vector<std::string> row_labels,
    std::vector<std::string> column_labels) {
    if (raw.empty() || raw.front().empty()) {
        throw ValidationError("matrix needs at least one row and one column");
    }
    const std::size_t k = raw.front().size();
    if (row_labels.size() != raw.size()) {
        throw ValidationError(std::to_string(row_labels.size()) +
                              " row labels for " + std::to_string(raw.size()) +
                              " rows");
    }
    if (column_labels.empty()) {
        for (std::size_t j = 0; j < k; ++j) {
            column_labels.push_back("attr" + std::to_string(j + 1));
        }
    } else if (column_labels.size() != k) {
        throw ValidationError(std::to_string(column_labels.size()) +
                              " column labels for " + std::to_string(k) +
                              " columns");
    }
    ZMatrix m;
    m.row_labels = std::move(row_labels);
    m.column_labels = std::move(column_labels);
    m.rows.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != k) {
            throw ValidationError("ragged matrix: row " +
                                  std::to_string(i + 1) + " has " +
                                  std::to_string(raw[i].size()) +
                                  " entries, expected " + std::to_string(k));
        }
        std::vector<ZNumber> row;
        row.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            try {
                Membership a(raw[i][j].first);
                try {
                    Membership b(raw[i][j].second);
                    row.push_back(ZNumber{a, b});
                } catch (const std::domain_error& e) {
                    throw ValidationError(cell_name(i, j, "b") + ": " +
                                          e.what());
                }
            } catch (const ValidationError&) {
                throw;
            } catch (const std::domain_error& e) {
                throw ValidationError(cell_name(i, j, "a") + ": " + e.what());
            }
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

AngleMatrix rotation_angles(const ZMatrix& m) {
    AngleMatrix angles;
    angles.rows.reserve(m.row_count());
    for (const auto& row : m.rows) {
        std::vector<AnglePair> out;
        out.reserve(row.size());
        for (const ZNumber& z : row) {
            out.push_back(AnglePair{rotation_angle(z.restriction),
                                    rotation_angle(z.reliability)});
        }
        angles.rows.push_back(std::move(out));
    }
    return angles;
}

std::vector<Qzn> encode_row(std::span<const AnglePair> row_angles) {
    std::vector<Qzn> out;
    out.reserve(row_angles.size());
    for (const AnglePair& p : row_angles) {
        out.push_back(from_angles(p.a, p.b));
    }
    return out;
}

std::vector<StateVector> combine_row(std::span<const Qzn> qzns) {
    std::vector<StateVector> out;
    out.reserve(qzns.size());
    for (const Qzn& z : qzns) {
        out.push_back(combine(z).combined.state);
    }
    return out;
}

double fidelity_coefficient(std::span<const StateVector> sample_row,
                            std::span<const StateVector> reference_row,
                            const FidelityMode& mode, std::size_t capacity) {
    if (sample_row.size() != reference_row.size()) {
        throw std::invalid_argument("fidelity between rows of " +
                                    std::to_string(sample_row.size()) +
                                    " and " +
                                    std::to_string(reference_row.size()) +
                                    " attributes");
    }
    switch (mode.kind) {
    case FidelityMode::Kind::Exact:
    case FidelityMode::Kind::Factorized:
        return fidelity_factorized(sample_row, reference_row);
    case FidelityMode::Kind::CircuitExact: {
        if (sample_row.empty()) {
            throw std::invalid_argument("circuit mode needs at least one "
                                        "attribute");
        }
        StateVector s = sample_row[0];
        StateVector r = reference_row[0];
        for (std::size_t j = 1; j < sample_row.size(); ++j) {
            s = tensor(s, sample_row[j], capacity);
            r = tensor(r, reference_row[j], capacity);
        }
        return swap_test(s, r, mode, capacity).fidelity;
    }
    case FidelityMode::Kind::CircuitSampled:
        return sample_swap_statistics(
                   fidelity_factorized(sample_row, reference_row),
                   mode.shots, mode.seed)
            .fidelity;
    }
    throw std::logic_error("unhandled fidelity mode");
}

FidelityMatrix fill_fidelity_matrix(
    const std::vector<std::vector<StateVector>>& sample_rows,
    const std::vector<std::vector<StateVector>>& reference_rows,
    const FidelityMode& mode, std::size_t capacity) {
    FidelityMatrix out;
    out.mode = mode;
    out.values.reserve(sample_rows.size());
    for (std::size_t i = 0; i < sample_rows.size(); ++i) {
        std::vector<double> row;
        row.reserve(reference_rows.size());
        for (std::size_t x = 0; x < reference_rows.size(); ++x) {
            FidelityMode cell_mode = mode;
            if (mode.sampled()) {
                cell_mode.seed = derive_seed(mode.seed, i, x);
            }
            row.push_back(fidelity_coefficient(sample_rows[i],
                                               reference_rows[x], cell_mode,
                                               capacity));
        }
        out.values.push_back(std::move(row));
    }
    return out;
}

FidelityMatrix build_qfm(const ZMatrix& szm, const ZMatrix& rzm,
                         const FidelityMode& mode, std::size_t capacity) {
    if (szm.column_count() != rzm.column_count()) {
        throw std::invalid_argument("sample matrix has " +
                                    std::to_string(szm.column_count()) +
                                    " attributes, reference matrix " +
                                    std::to_string(rzm.column_count()));
    }
    const AngleMatrix sample_angles = rotation_angles(szm);
    const AngleMatrix reference_angles = rotation_angles(rzm);
    std::vector<std::vector<StateVector>> sample_rows;
    sample_rows.reserve(sample_angles.rows.size());
    for (const auto& row : sample_angles.rows) {
        sample_rows.push_back(combine_row(encode_row(row)));
    }
    std::vector<std::vector<StateVector>> reference_rows;
    reference_rows.reserve(reference_angles.rows.size());
    for (const auto& row : reference_angles.rows) {
        reference_rows.push_back(combine_row(encode_row(row)));
    }
    return fill_fidelity_matrix(sample_rows, reference_rows, mode, capacity);
}

DecisionReport decide(const FidelityMatrix& qfm,
                      std::span<const std::string> reference_labels) {
    std::vector<std::vector<std::optional<double>>> rows;
    rows.reserve(qfm.values.size());
    for (const auto& row : qfm.values) {
        rows.emplace_back(row.begin(), row.end());
    }
    return decide_rows(rows, reference_labels);
}

DecisionReport decide_rows(
    const std::vector<std::vector<std::optional<double>>>& scores,
    std::span<const std::string> reference_labels) {
    if (scores.empty()) {
        throw std::invalid_argument("decision needs at least one sample row");
    }
    DecisionReport report;
    report.decisions.reserve(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const auto& row = scores[i];
        if (row.size() != reference_labels.size()) {
            throw std::invalid_argument(
                "row " + std::to_string(i + 1) + " has " +
                std::to_string(row.size()) + " scores for " +
                std::to_string(reference_labels.size()) + " references");
        }
        std::optional<std::size_t> best;
        for (std::size_t x = 0; x < row.size(); ++x) {
            if (!row[x]) continue;
            if (!best || *row[x] > *row[*best]) best = x;
        }
        if (!best) {
            throw UndefinedCorrelationError("sample row " +
                                            std::to_string(i + 1) +
                                            " has no defined score");
        }
        std::size_t ties = 0;
        for (const auto& v : row) {
            if (v && *row[*best] - *v <= kTieTolerance) ++ties;
        }
        report.decisions.push_back(Decision{i, *best,
                                            reference_labels[*best],
                                            *row[*best], row, ties >= 2});
    }
    return report;
}

} // namespace qzn
