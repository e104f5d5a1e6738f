#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qzn/errors.hpp"

namespace qzn {

using Amplitude = std::complex<double>;

/// Largest register the dense simulator will allocate by default:
/// 2^26 amplitudes (one GiB of complex doubles).
inline constexpr std::size_t kDefaultCapacity = 26;

/// Allowed drift of the squared norm from 1, checked on construction and
/// after every gate application.
inline constexpr double kNormTolerance = 1e-9;

/// Dense n-qubit register.
///
/// Qubit 0 is the leftmost symbol of the ket, i.e. the most significant bit
/// of an amplitude index. The basis label of amplitudes()[i] is therefore i
/// written as an n-bit binary string: for three qubits, index 6 is |110>.
class StateVector {
public:
    /// Takes ownership of the amplitude array. Throws std::invalid_argument
    /// if the size is not 2^n_qubits or the squared norm is off by more
    /// than kNormTolerance.
    StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes);

    /// Computational basis state |index> on n_qubits wires.
    static StateVector basis(std::size_t n_qubits, std::uint64_t index);

    /// Single qubit zero_amp|0> + one_amp|1>, normalization checked.
    static StateVector qubit(Amplitude zero_amp, Amplitude one_amp);

    std::size_t num_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }

    const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }
    Amplitude amplitude(std::uint64_t index) const;

    /// Index bit carrying the given qubit (qubit 0 maps to the top bit).
    std::uint64_t qubit_mask(std::size_t qubit) const;

    double norm_squared() const noexcept;

private:
    friend struct StateVectorAccess;
    std::size_t n_qubits_;
    std::vector<Amplitude> amps_;
};

/// Unitary gate tag plus the rotation angle when one applies.
class Gate {
public:
    enum class Kind { Hadamard, PauliX, RotY, Ccnot, Cswap };

    static Gate hadamard() { return Gate(Kind::Hadamard, 0.0); }
    static Gate pauli_x() { return Gate(Kind::PauliX, 0.0); }
    /// Real rotation about Y: |0> goes to cos(theta/2)|0> + sin(theta/2)|1>.
    static Gate rot_y(double theta);
    /// Doubly controlled NOT; targets are (control, control, target).
    static Gate ccnot() { return Gate(Kind::Ccnot, 0.0); }
    /// Controlled swap; targets are (control, wire, wire).
    static Gate cswap() { return Gate(Kind::Cswap, 0.0); }

    Kind kind() const noexcept { return kind_; }
    double theta() const noexcept { return theta_; }
    std::size_t arity() const noexcept;
    std::string name() const;

private:
    Gate(Kind kind, double theta) : kind_(kind), theta_(theta) {}
    Kind kind_;
    double theta_;
};

/// Gate list over a fixed-width register. add() validates target count,
/// range and distinctness up front so a circuit can always be run.
class Circuit {
public:
    struct Op {
        Gate gate;
        std::vector<std::size_t> targets;
    };

    explicit Circuit(std::size_t n_qubits);

    Circuit& add(const Gate& gate, std::vector<std::size_t> targets);

    std::size_t num_qubits() const noexcept { return n_qubits_; }
    const std::vector<Op>& ops() const noexcept { return ops_; }

private:
    std::size_t n_qubits_;
    std::vector<Op> ops_;
};

/// Kronecker product; the left operand supplies the high-order qubits.
/// Throws CapacityError if the result would exceed capacity qubits.
StateVector tensor(const StateVector& a, const StateVector& b,
                   std::size_t capacity = kDefaultCapacity);

/// Applies one gate and returns the new state. Norm is re-checked after
/// the kernel to catch a corrupted gate early.
StateVector apply(const StateVector& state, const Gate& gate,
                  std::span<const std::size_t> targets);

inline StateVector apply(const StateVector& state, const Gate& gate,
                         std::initializer_list<std::size_t> targets) {
    return apply(state, gate,
                 std::span<const std::size_t>(targets.begin(), targets.size()));
}

/// Runs every op in order on a single working copy of the input.
StateVector run(const StateVector& state, const Circuit& circuit);

/// Probability of reading `outcome` (0 or 1) on one qubit.
double measure_prob(const StateVector& state, std::size_t qubit, int outcome);

/// Post-measurement state after observing `outcome` on one qubit, i.e. the
/// projected state renormalized. Throws DegenerateMeasurementError when the
/// outcome has zero probability.
StateVector collapse(const StateVector& state, std::size_t qubit, int outcome);

/// <a|b>. Both states must have the same width.
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// Debug listing, one line per non-negligible amplitude in index order:
/// "<bits> <re> <im>" with 17 significant digits so values round-trip.
std::string dump(const StateVector& state);

} // namespace qzn
