#include "qzn/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace qzn {

struct StateVectorAccess {
    static std::vector<Amplitude>& amps(StateVector& s) { return s.amps_; }
};

namespace {

// Probabilities below this are rounding dust from orthogonal constructions,
// not outcomes one can condition on.
constexpr double kDegenerateFloor = 1e-15;

// Amplitudes below this magnitude are suppressed from debug dumps.
constexpr double kDumpFloor = 1e-12;

double sum_norm_squared(const std::vector<Amplitude>& amps) {
    double s = 0.0;
    for (const Amplitude& a : amps) s += std::norm(a);
    return s;
}

void require_unit(const std::vector<Amplitude>& amps, const char* context) {
    const double ns = sum_norm_squared(amps);
    if (std::abs(ns - 1.0) > kNormTolerance) {
        throw std::invalid_argument(std::string(context) +
                                    ": squared norm is " + std::to_string(ns));
    }
}

void apply_1q(std::vector<Amplitude>& a, std::uint64_t mask,
              Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11) {
    const std::uint64_t dim = a.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const Amplitude lo = a[i];
        const Amplitude hi = a[i | mask];
        a[i] = m00 * lo + m01 * hi;
        a[i | mask] = m10 * lo + m11 * hi;
    }
}

void apply_ccnot(std::vector<Amplitude>& a, std::uint64_t c1, std::uint64_t c2,
                 std::uint64_t t) {
    const std::uint64_t dim = a.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & c1) && (i & c2) && !(i & t)) std::swap(a[i], a[i | t]);
    }
}

void apply_cswap(std::vector<Amplitude>& a, std::uint64_t c, std::uint64_t m1,
                 std::uint64_t m2) {
    const std::uint64_t dim = a.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & c) && (i & m1) && !(i & m2)) std::swap(a[i], a[i ^ m1 ^ m2]);
    }
}

void validate_targets(std::size_t n_qubits, const Gate& gate,
                      std::span<const std::size_t> targets) {
    if (targets.size() != gate.arity()) {
        throw std::invalid_argument(gate.name() + " takes " +
                                    std::to_string(gate.arity()) +
                                    " target(s), got " +
                                    std::to_string(targets.size()));
    }
    for (std::size_t t : targets) {
        if (t >= n_qubits) {
            throw std::out_of_range("gate target " + std::to_string(t) +
                                    " on a " + std::to_string(n_qubits) +
                                    "-qubit register");
        }
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw std::invalid_argument(gate.name() +
                                            " targets must be distinct");
            }
        }
    }
}

void apply_in_place(std::size_t n_qubits, std::vector<Amplitude>& amps,
                    const Gate& gate, std::span<const std::size_t> targets) {
    validate_targets(n_qubits, gate, targets);
    const auto mask = [n_qubits](std::size_t q) {
        return std::uint64_t{1} << (n_qubits - 1 - q);
    };
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    switch (gate.kind()) {
    case Gate::Kind::Hadamard:
        apply_1q(amps, mask(targets[0]), kInvSqrt2, kInvSqrt2, kInvSqrt2,
                 -kInvSqrt2);
        break;
    case Gate::Kind::PauliX:
        apply_1q(amps, mask(targets[0]), 0.0, 1.0, 1.0, 0.0);
        break;
    case Gate::Kind::RotY: {
        const double c = std::cos(gate.theta() / 2.0);
        const double s = std::sin(gate.theta() / 2.0);
        apply_1q(amps, mask(targets[0]), c, -s, s, c);
        break;
    }
    case Gate::Kind::Ccnot:
        apply_ccnot(amps, mask(targets[0]), mask(targets[1]),
                    mask(targets[2]));
        break;
    case Gate::Kind::Cswap:
        apply_cswap(amps, mask(targets[0]), mask(targets[1]),
                    mask(targets[2]));
        break;
    }
    const double ns = sum_norm_squared(amps);
    if (std::abs(ns - 1.0) > kNormTolerance) {
        throw std::logic_error(gate.name() +
                               " broke normalization: squared norm " +
                               std::to_string(ns));
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits_ == 0) {
        throw std::invalid_argument("register needs at least one qubit");
    }
    if (n_qubits_ >= 64 || amps_.size() != (std::uint64_t{1} << n_qubits_)) {
        throw std::invalid_argument("amplitude count " +
                                    std::to_string(amps_.size()) +
                                    " does not match " +
                                    std::to_string(n_qubits_) + " qubits");
    }
    require_unit(amps_, "state construction");
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
    if (n_qubits == 0 || n_qubits >= 64) {
        throw std::invalid_argument("basis state needs 1..63 qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) +
                                " on a " + std::to_string(n_qubits) +
                                "-qubit register");
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::qubit(Amplitude zero_amp, Amplitude one_amp) {
    return StateVector(1, {zero_amp, one_amp});
}

Amplitude StateVector::amplitude(std::uint64_t index) const {
    if (index >= amps_.size()) {
        throw std::out_of_range("amplitude index " + std::to_string(index));
    }
    return amps_[index];
}

std::uint64_t StateVector::qubit_mask(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " on a " +
                                std::to_string(n_qubits_) +
                                "-qubit register");
    }
    return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
}

double StateVector::norm_squared() const noexcept {
    return sum_norm_squared(amps_);
}

Gate Gate::rot_y(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    return Gate(Kind::RotY, theta);
}

std::size_t Gate::arity() const noexcept {
    return (kind_ == Kind::Ccnot || kind_ == Kind::Cswap) ? 3 : 1;
}

std::string Gate::name() const {
    switch (kind_) {
    case Kind::Hadamard: return "H";
    case Kind::PauliX: return "X";
    case Kind::RotY: return "RY";
    case Kind::Ccnot: return "CCNOT";
    case Kind::Cswap: return "CSWAP";
    }
    return "?";
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

Circuit& Circuit::add(const Gate& gate, std::vector<std::size_t> targets) {
    validate_targets(n_qubits_, gate, targets);
    ops_.push_back(Op{gate, std::move(targets)});
    return *this;
}

StateVector tensor(const StateVector& a, const StateVector& b,
                   std::size_t capacity) {
    const std::size_t n = a.num_qubits() + b.num_qubits();
    if (n > capacity) {
        throw CapacityError("tensor product of " +
                            std::to_string(a.num_qubits()) + " and " +
                            std::to_string(b.num_qubits()) +
                            " qubits exceeds the " + std::to_string(capacity) +
                            "-qubit capacity");
    }
    std::vector<Amplitude> out(std::uint64_t{1} << n);
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::uint64_t i = 0; i < av.size(); ++i) {
        const std::uint64_t base = i << b.num_qubits();
        for (std::uint64_t j = 0; j < bv.size(); ++j) {
            out[base | j] = av[i] * bv[j];
        }
    }
    return StateVector(n, std::move(out));
}

StateVector apply(const StateVector& state, const Gate& gate,
                  std::span<const std::size_t> targets) {
    StateVector out = state;
    apply_in_place(out.num_qubits(), StateVectorAccess::amps(out), gate,
                   targets);
    return out;
}

StateVector run(const StateVector& state, const Circuit& circuit) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("circuit width " +
                                    std::to_string(circuit.num_qubits()) +
                                    " does not match register width " +
                                    std::to_string(state.num_qubits()));
    }
    StateVector out = state;
    for (const Circuit::Op& op : circuit.ops()) {
        apply_in_place(out.num_qubits(), StateVectorAccess::amps(out),
                       op.gate, op.targets);
    }
    return out;
}

double measure_prob(const StateVector& state, std::size_t qubit, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("measurement outcome must be 0 or 1");
    }
    const std::uint64_t mask = state.qubit_mask(qubit);
    const auto& amps = state.amplitudes();
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const bool one = (i & mask) != 0;
        if (one == (outcome == 1)) p += std::norm(amps[i]);
    }
    return p;
}

StateVector collapse(const StateVector& state, std::size_t qubit, int outcome) {
    const double p = measure_prob(state, qubit, outcome);
    if (p < kDegenerateFloor) {
        throw DegenerateMeasurementError(
            "outcome " + std::to_string(outcome) + " on qubit " +
            std::to_string(qubit) + " has probability " + std::to_string(p));
    }
    const std::uint64_t mask = state.qubit_mask(qubit);
    const double scale = 1.0 / std::sqrt(p);
    std::vector<Amplitude> amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const bool one = (i & mask) != 0;
        if (one == (outcome == 1)) {
            amps[i] *= scale;
        } else {
            amps[i] = 0.0;
        }
    }
    return StateVector(state.num_qubits(), std::move(amps));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of " +
                                    std::to_string(a.num_qubits()) + " and " +
                                    std::to_string(b.num_qubits()) +
                                    "-qubit states");
    }
    Amplitude s{0.0, 0.0};
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::uint64_t i = 0; i < av.size(); ++i) {
        s += std::conj(av[i]) * bv[i];
    }
    return s;
}

std::string dump(const StateVector& state) {
    std::string out;
    const std::size_t n = state.num_qubits();
    const auto& amps = state.amplitudes();
    std::string bits(n, '0');
    char buf[96];
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) <= kDumpFloor) continue;
        for (std::size_t q = 0; q < n; ++q) {
            bits[q] = (i >> (n - 1 - q)) & 1 ? '1' : '0';
        }
        std::snprintf(buf, sizeof buf, " %.17g %.17g\n", amps[i].real(),
                      amps[i].imag());
        out += bits;
        out += buf;
    }
    return out;
}

} // namespace qzn
