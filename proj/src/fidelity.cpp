#include "qzn/fidelity.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qzn {

namespace {

// splitmix64 finalizer: a full-avalanche 64-bit mix.
std::uint64_t avalanche(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform in [0,1) from the top 53 bits, so sampled sequences do not depend
// on the standard library's distribution internals.
double uniform53(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Exact-mode fidelities live in [0,1] by definition; the circuit path can
// land a few ulp outside through rounding.
double clamp_unit(double f) {
    if (f < 0.0 && f > -1e-12) return 0.0;
    if (f > 1.0 && f < 1.0 + 1e-12) return 1.0;
    return f;
}

} // namespace

FidelityMode FidelityMode::circuit_sampled(std::uint64_t shots,
                                           std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sampled mode needs at least one shot");
    }
    return {Kind::CircuitSampled, shots, seed};
}

double fidelity_pure(const StateVector& psi, const StateVector& phi) {
    return clamp_unit(std::norm(inner_product(psi, phi)));
}

Circuit swap_test_circuit(std::size_t state_qubits) {
    if (state_qubits == 0) {
        throw std::invalid_argument("swap test needs at least one qubit");
    }
    Circuit c(1 + 2 * state_qubits);
    c.add(Gate::hadamard(), {0});
    for (std::size_t i = 0; i < state_qubits; ++i) {
        c.add(Gate::cswap(), {0, 1 + i, 1 + state_qubits + i});
    }
    c.add(Gate::hadamard(), {0});
    return c;
}

SwapTestResult swap_test(const StateVector& psi, const StateVector& phi,
                         const FidelityMode& mode, std::size_t capacity) {
    if (psi.num_qubits() != phi.num_qubits()) {
        throw std::invalid_argument("swap test between " +
                                    std::to_string(psi.num_qubits()) +
                                    " and " +
                                    std::to_string(phi.num_qubits()) +
                                    "-qubit states");
    }
    switch (mode.kind) {
    case FidelityMode::Kind::Exact:
    case FidelityMode::Kind::Factorized: {
        const double f = fidelity_pure(psi, phi);
        return SwapTestResult{0.5 + 0.5 * f, f, std::nullopt, std::nullopt};
    }
    case FidelityMode::Kind::CircuitExact: {
        const std::size_t n = psi.num_qubits();
        if (1 + 2 * n > capacity) {
            throw CapacityError("swap-test register of " +
                                std::to_string(1 + 2 * n) +
                                " qubits exceeds the " +
                                std::to_string(capacity) +
                                "-qubit capacity");
        }
        StateVector reg =
            tensor(tensor(StateVector::basis(1, 0), psi, capacity), phi,
                   capacity);
        reg = run(reg, swap_test_circuit(n));
        const double p = measure_prob(reg, 0, 0);
        const double f = clamp_unit(2.0 * p - 1.0);
        return SwapTestResult{p, f, std::nullopt, std::nullopt};
    }
    case FidelityMode::Kind::CircuitSampled:
        return sample_swap_statistics(fidelity_pure(psi, phi), mode.shots,
                                      mode.seed);
    }
    throw std::logic_error("unhandled fidelity mode");
}

double fidelity_factorized(std::span<const StateVector> parts_a,
                           std::span<const StateVector> parts_b) {
    if (parts_a.size() != parts_b.size()) {
        throw std::invalid_argument("factorized fidelity needs equal-length "
                                    "part lists, got " +
                                    std::to_string(parts_a.size()) + " and " +
                                    std::to_string(parts_b.size()));
    }
    double f = 1.0;
    for (std::size_t j = 0; j < parts_a.size(); ++j) {
        f *= std::norm(inner_product(parts_a[j], parts_b[j]));
    }
    return clamp_unit(f);
}

SwapTestResult sample_swap_statistics(double exact_fidelity,
                                      std::uint64_t shots,
                                      std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sampled mode needs at least one shot");
    }
    const double p = 0.5 + 0.5 * exact_fidelity;
    std::mt19937_64 eng(seed);
    std::uint64_t zeros = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        if (uniform53(eng) < p) ++zeros;
    }
    const double p_hat =
        static_cast<double>(zeros) / static_cast<double>(shots);
    return SwapTestResult{p_hat, 2.0 * p_hat - 1.0, shots, seed};
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t row,
                          std::uint64_t column) {
    // Avalanche between the xors so nearby cells cannot collide through
    // carry/xor cancellation.
    std::uint64_t h = avalanche(base_seed + 0x9e3779b97f4a7c15ull);
    h = avalanche(h ^ (row + 0x9e3779b97f4a7c15ull));
    h = avalanche(h ^ (column + 0x632be59bd9b4e019ull));
    return h;
}

} // namespace qzn
