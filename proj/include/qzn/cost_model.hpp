#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qzn {

/// Problem size for the abstract unit-cost accounting: M samples, N
/// references, K attributes, and the fidelity-estimation error tolerance
/// epsilon (the swap test is repeated ceil(1/epsilon) times per pair).
struct CostParams {
    std::uint64_t m_samples = 1;
    std::uint64_t n_references = 1;
    std::uint64_t k_attributes = 1;
    double epsilon = 1.0;
};

/// Unit-cost totals. angle_cost covers state preparation (two rotations
/// per entry), fidelity_cost the pairwise scoring, argmax_cost the final
/// row scans; total is their sum.
struct CostBreakdown {
    std::uint64_t angle_cost = 0;
    std::uint64_t fidelity_cost = 0;
    std::uint64_t argmax_cost = 0;
    std::uint64_t total = 0;
};

/// Quantum pipeline: 2(M+N)K rotations, one 6-gate swap-test run repeated
/// ceil(1/eps) times for each of the M*N pairs, M*N argmax scans.
CostBreakdown quantum_cost(const CostParams& p);

/// Classical counterpart: same preparation and argmax shape, but each pair
/// costs K similarity operations.
CostBreakdown classical_cost(const CostParams& p);

struct CostPoint {
    std::uint64_t k = 0;
    std::uint64_t quantum_total = 0;
    std::uint64_t classical_total = 0;
};

/// Both totals for every K in [k_min, k_max], other parameters fixed.
std::vector<CostPoint> crossover_series(const CostParams& base,
                                        std::uint64_t k_min,
                                        std::uint64_t k_max);

/// Break-even attribute count 6*ceil(1/eps): classical_total exceeds
/// quantum_total exactly when K exceeds this value. The factor 6 is the
/// per-run swap-test gate count.
std::uint64_t crossover_k(const CostParams& p);

/// "k,quantum,classical" CSV with one row per point.
std::string cost_csv(std::span<const CostPoint> series);

} // namespace qzn
