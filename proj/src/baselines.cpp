#include "qzn/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qzn {

namespace {

std::vector<std::vector<StateVector>> restriction_rows(const ZMatrix& m) {
    std::vector<std::vector<StateVector>> rows;
    rows.reserve(m.row_count());
    for (const auto& row : m.rows) {
        std::vector<StateVector> states;
        states.reserve(row.size());
        for (const ZNumber& z : row) {
            states.push_back(apply(StateVector::basis(1, 0),
                                   Gate::rot_y(rotation_angle(z.restriction)),
                                   {0}));
        }
        rows.push_back(std::move(states));
    }
    return rows;
}

} // namespace

CombinedZMatrix combine_classical(const ZMatrix& m) {
    CombinedZMatrix out;
    out.row_labels = m.row_labels;
    out.rows.reserve(m.row_count());
    for (const auto& row : m.rows) {
        std::vector<double> combined;
        combined.reserve(row.size());
        for (const ZNumber& z : row) {
            combined.push_back(z.restriction.value() * z.reliability.value());
        }
        out.rows.push_back(std::move(combined));
    }
    return out;
}

double pearson(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("correlation of vectors with " +
                                    std::to_string(u.size()) + " and " +
                                    std::to_string(v.size()) + " entries");
    }
    if (u.size() < 2) {
        throw std::invalid_argument("correlation needs at least two entries");
    }
    const double n = static_cast<double>(u.size());
    double mu = 0.0, mv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        mu += u[i];
        mv += v[i];
    }
    mu /= n;
    mv /= n;
    double cov = 0.0, var_u = 0.0, var_v = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double du = u[i] - mu;
        const double dv = v[i] - mv;
        cov += du * dv;
        var_u += du * du;
        var_v += dv * dv;
    }
    if (var_u == 0.0 || var_v == 0.0) {
        throw UndefinedCorrelationError(
            "correlation against a constant vector is undefined");
    }
    double r = cov / std::sqrt(var_u * var_v);
    // Rounding guard: |r| may exceed 1 by a few ulp for collinear inputs.
    if (r > 1.0) r = 1.0;
    if (r < -1.0) r = -1.0;
    return r;
}

ZnResult zn_pipeline(const ZMatrix& szm, const ZMatrix& rzm) {
    if (szm.column_count() != rzm.column_count()) {
        throw std::invalid_argument("sample matrix has " +
                                    std::to_string(szm.column_count()) +
                                    " attributes, reference matrix " +
                                    std::to_string(rzm.column_count()));
    }
    const CombinedZMatrix s = combine_classical(szm);
    const CombinedZMatrix r = combine_classical(rzm);
    ZnResult out;
    out.matrix.values.reserve(s.rows.size());
    for (const auto& srow : s.rows) {
        std::vector<std::optional<double>> row;
        row.reserve(r.rows.size());
        for (const auto& rrow : r.rows) {
            try {
                row.emplace_back(pearson(srow, rrow));
            } catch (const UndefinedCorrelationError&) {
                row.emplace_back(std::nullopt);
            }
        }
        out.matrix.values.push_back(std::move(row));
    }
    out.report = decide_rows(out.matrix.values, rzm.row_labels);
    return out;
}

QfsResult qfs_pipeline(const ZMatrix& szm, const ZMatrix& rzm,
                       const FidelityMode& mode, std::size_t capacity) {
    if (szm.column_count() != rzm.column_count()) {
        throw std::invalid_argument("sample matrix has " +
                                    std::to_string(szm.column_count()) +
                                    " attributes, reference matrix " +
                                    std::to_string(rzm.column_count()));
    }
    QfsResult out;
    out.matrix = fill_fidelity_matrix(restriction_rows(szm),
                                      restriction_rows(rzm), mode, capacity);
    out.report = decide(out.matrix, rzm.row_labels);
    return out;
}

} // namespace qzn
