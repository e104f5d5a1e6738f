#include "qzn/cost_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qzn/errors.hpp"

namespace qzn {

namespace {

void validate(const CostParams& p) {
    if (p.m_samples == 0 || p.n_references == 0 || p.k_attributes == 0) {
        throw ValidationError("cost model needs M, N, K >= 1");
    }
    if (!(p.epsilon > 0.0 && p.epsilon <= 1.0)) {
        throw ValidationError("error tolerance must be in (0, 1]");
    }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw std::overflow_error("cost exceeds 64-bit unit budget");
    }
    return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a) {
        throw std::overflow_error("cost exceeds 64-bit unit budget");
    }
    return a + b;
}

std::uint64_t repetitions(double epsilon) {
    return static_cast<std::uint64_t>(std::ceil(1.0 / epsilon));
}

CostBreakdown finish(std::uint64_t angle, std::uint64_t fidelity,
                     std::uint64_t argmax) {
    return CostBreakdown{angle, fidelity, argmax,
                         checked_add(checked_add(angle, fidelity), argmax)};
}

} // namespace

CostBreakdown quantum_cost(const CostParams& p) {
    validate(p);
    const std::uint64_t angle = checked_mul(
        checked_mul(2, checked_add(p.m_samples, p.n_references)),
        p.k_attributes);
    const std::uint64_t pairs = checked_mul(p.m_samples, p.n_references);
    const std::uint64_t fidelity =
        checked_mul(checked_mul(6, repetitions(p.epsilon)), pairs);
    return finish(angle, fidelity, pairs);
}

CostBreakdown classical_cost(const CostParams& p) {
    validate(p);
    const std::uint64_t angle = checked_mul(
        checked_mul(2, checked_add(p.m_samples, p.n_references)),
        p.k_attributes);
    const std::uint64_t pairs = checked_mul(p.m_samples, p.n_references);
    const std::uint64_t similarity = checked_mul(pairs, p.k_attributes);
    return finish(angle, similarity, pairs);
}

std::vector<CostPoint> crossover_series(const CostParams& base,
                                        std::uint64_t k_min,
                                        std::uint64_t k_max) {
    if (k_min == 0 || k_min > k_max) {
        throw ValidationError("need 1 <= k_min <= k_max");
    }
    std::vector<CostPoint> series;
    series.reserve(k_max - k_min + 1);
    CostParams p = base;
    for (std::uint64_t k = k_min; k <= k_max; ++k) {
        p.k_attributes = k;
        series.push_back(
            CostPoint{k, quantum_cost(p).total, classical_cost(p).total});
    }
    return series;
}

std::uint64_t crossover_k(const CostParams& p) {
    validate(p);
    return checked_mul(6, repetitions(p.epsilon));
}

std::string cost_csv(std::span<const CostPoint> series) {
    std::string out = "k,quantum,classical\n";
    for (const CostPoint& pt : series) {
        out += std::to_string(pt.k);
        out += ',';
        out += std::to_string(pt.quantum_total);
        out += ',';
        out += std::to_string(pt.classical_total);
        out += '\n';
    }
    return out;
}

} // namespace qzn
