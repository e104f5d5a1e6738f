#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "qzn/state_vector.hpp"

namespace qzn {

/// Evaluation strategy for fidelity queries.
///
/// Exact computes |<psi|phi>|^2 from the amplitudes. Factorized multiplies
/// per-attribute overlaps instead of materializing tensor registers (same
/// number, bounded memory). CircuitExact simulates the full swap-test
/// circuit and reads the ancilla analytically. CircuitSampled draws
/// Bernoulli shots of the ancilla, which is statistically identical to
/// trajectory-simulating the circuit without the exponential register.
struct FidelityMode {
    enum class Kind { Exact, Factorized, CircuitExact, CircuitSampled };

    Kind kind = Kind::Exact;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    static FidelityMode exact() { return {Kind::Exact, 0, 0}; }
    static FidelityMode factorized() { return {Kind::Factorized, 0, 0}; }
    static FidelityMode circuit_exact() { return {Kind::CircuitExact, 0, 0}; }
    static FidelityMode circuit_sampled(std::uint64_t shots,
                                        std::uint64_t seed);

    bool sampled() const noexcept { return kind == Kind::CircuitSampled; }
};

/// Ancilla statistics of one swap test. In exact modes shots_used and seed
/// are empty and p_zero is the analytic probability; in sampled mode p_zero
/// is the empirical |0> frequency. Always fidelity = 2*p_zero - 1.
struct SwapTestResult {
    double p_zero = 0.0;
    double fidelity = 0.0;
    std::optional<std::uint64_t> shots_used;
    std::optional<std::uint64_t> seed;
};

/// |<psi|phi>|^2 for pure states of equal width.
double fidelity_pure(const StateVector& psi, const StateVector& phi);

/// Swap-test layout for two n-qubit states: ancilla on wire 0, H, one
/// CSWAP per qubit pair (ancilla controlled), H. Width 1 + 2n.
Circuit swap_test_circuit(std::size_t state_qubits);

/// Runs (or analytically evaluates) the swap test between two states.
/// Circuit modes build the 1+2n register and must fit within capacity.
/// Factorized mode behaves like Exact here: two opaque states carry no
/// factor structure to exploit.
SwapTestResult swap_test(const StateVector& psi, const StateVector& phi,
                         const FidelityMode& mode,
                         std::size_t capacity = kDefaultCapacity);

/// Product over j of |<a_j|b_j>|^2. Equals fidelity_pure of the tensor
/// products while touching only the factors.
double fidelity_factorized(std::span<const StateVector> parts_a,
                           std::span<const StateVector> parts_b);

/// Bernoulli-samples the ancilla of a swap test whose exact fidelity is
/// known, returning the empirical statistics for the given shot count and
/// seed. Standard error of p_zero is sqrt(p(1-p)/shots).
SwapTestResult sample_swap_statistics(double exact_fidelity,
                                      std::uint64_t shots,
                                      std::uint64_t seed);

/// Stable per-cell seed for matrix fills: mixes the base seed with the
/// (row, column) position through splitmix64 avalanche rounds, so a fill
/// is deterministic no matter the traversal or parallelism.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t row,
                          std::uint64_t column);

} // namespace qzn
