#include "qzn/qzn.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qzn {

namespace {

struct LabelMerge {
    std::optional<std::string> label;
    bool conflict;
};

LabelMerge merge_labels(const Qzn& z1, const Qzn& z2) {
    LabelMerge m{z1.element_label ? z1.element_label : z2.element_label,
                 z1.label_conflict || z2.label_conflict};
    if (z1.element_label && z2.element_label &&
        *z1.element_label != *z2.element_label) {
        m.conflict = true;
    }
    return m;
}

void require_fresh(const Qzn& z, const char* op) {
    if (z.a.arity() != 1 || z.b.arity() != 1) {
        throw std::invalid_argument(std::string(op) +
                                    " is defined on one-qubit QZNs only");
    }
}

Qmf rotate_from_zero(double theta) {
    return Qmf{apply(StateVector::basis(1, 0), Gate::rot_y(theta), {0}), 0};
}

// Shared gate sequence of intersection and combination:
// CCNOT((X (x) X (x) I) |m1>|m2>|1>).
Qmf intersection_circuit(const Qmf& m1, const Qmf& m2) {
    StateVector reg =
        tensor(tensor(m1.state, m2.state), StateVector::basis(1, 1));
    Circuit c(3);
    c.add(Gate::pauli_x(), {0})
        .add(Gate::pauli_x(), {1})
        .add(Gate::ccnot(), {0, 1, 2});
    return Qmf{run(reg, c), 2};
}

Qmf union_circuit(const Qmf& m1, const Qmf& m2) {
    StateVector reg =
        tensor(tensor(m1.state, m2.state), StateVector::basis(1, 0));
    Circuit c(3);
    c.add(Gate::ccnot(), {0, 1, 2});
    return Qmf{run(reg, c), 2};
}

} // namespace

Qmf make_qmf(StateVector state, std::size_t designated_qubit) {
    if (designated_qubit >= state.num_qubits()) {
        throw std::out_of_range("designated qubit " +
                                std::to_string(designated_qubit) + " on a " +
                                std::to_string(state.num_qubits()) +
                                "-qubit QMF");
    }
    return Qmf{std::move(state), designated_qubit};
}

double rotation_angle(Membership mu) {
    double s = std::sqrt(mu.value());
    // sqrt is exact at 1 but guard against sub-1e-15 excursions anyway;
    // acos would reject them.
    if (s > 1.0) s = 1.0;
    return 2.0 * std::acos(s);
}

Qzn from_z(const ZNumber& z, std::optional<std::string> element_label) {
    return from_angles(rotation_angle(z.restriction),
                       rotation_angle(z.reliability),
                       std::move(element_label));
}

Qzn from_angles(double theta_a, double theta_b,
                std::optional<std::string> element_label) {
    return Qzn{rotate_from_zero(theta_a), rotate_from_zero(theta_b),
               std::move(element_label), false};
}

Qzn make_qzn(Amplitude a_zero, Amplitude a_one, Amplitude b_zero,
             Amplitude b_one, std::optional<std::string> element_label) {
    return Qzn{Qmf{StateVector::qubit(a_zero, a_one), 0},
               Qmf{StateVector::qubit(b_zero, b_one), 0},
               std::move(element_label), false};
}

double prob_zero(const Qmf& m) {
    return measure_prob(m.state, m.designated_qubit, 0);
}

bool includes(const Qzn& z1, const Qzn& z2) {
    if (z1.a.arity() != z2.a.arity() || z1.b.arity() != z2.b.arity()) {
        throw std::invalid_argument(
            "inclusion compares QZNs of matching arities");
    }
    return prob_zero(z1.a) <= prob_zero(z2.a) + kProbTolerance &&
           prob_zero(z1.b) <= prob_zero(z2.b) + kProbTolerance;
}

bool equals(const Qzn& z1, const Qzn& z2) {
    return includes(z1, z2) && includes(z2, z1);
}

Qzn complement(const Qzn& z) {
    require_fresh(z, "complement");
    return Qzn{Qmf{apply(z.a.state, Gate::pauli_x(), {0}), 0},
               Qmf{apply(z.b.state, Gate::pauli_x(), {0}), 0},
               z.element_label, z.label_conflict};
}

Qzn intersect(const Qzn& z1, const Qzn& z2) {
    require_fresh(z1, "intersection");
    require_fresh(z2, "intersection");
    LabelMerge m = merge_labels(z1, z2);
    return Qzn{intersection_circuit(z1.a, z2.a),
               intersection_circuit(z1.b, z2.b), std::move(m.label),
               m.conflict};
}

Qzn unite(const Qzn& z1, const Qzn& z2) {
    require_fresh(z1, "union");
    require_fresh(z2, "union");
    LabelMerge m = merge_labels(z1, z2);
    return Qzn{union_circuit(z1.a, z2.a), union_circuit(z1.b, z2.b),
               std::move(m.label), m.conflict};
}

CQzn combine(const Qzn& z) {
    require_fresh(z, "combination");
    return CQzn{intersection_circuit(z.a, z.b), z.element_label,
                z.label_conflict};
}

namespace closed_form {

StateVector intersection(Amplitude a1_zero, Amplitude a1_one,
                         Amplitude a2_zero, Amplitude a2_one) {
    std::vector<Amplitude> amps(8, Amplitude{0.0, 0.0});
    amps[0b110] = a1_zero * a2_zero;
    amps[0b101] = a1_zero * a2_one;
    amps[0b011] = a1_one * a2_zero;
    amps[0b001] = a1_one * a2_one;
    return StateVector(3, std::move(amps));
}

StateVector unification(Amplitude a1_zero, Amplitude a1_one,
                        Amplitude a2_zero, Amplitude a2_one) {
    std::vector<Amplitude> amps(8, Amplitude{0.0, 0.0});
    amps[0b000] = a1_zero * a2_zero;
    amps[0b010] = a1_zero * a2_one;
    amps[0b100] = a1_one * a2_zero;
    amps[0b111] = a1_one * a2_one;
    return StateVector(3, std::move(amps));
}

StateVector combination(Amplitude a_zero, Amplitude a_one, Amplitude b_zero,
                        Amplitude b_one) {
    return intersection(a_zero, a_one, b_zero, b_one);
}

} // namespace closed_form

std::string format_amplitude(const Amplitude& a) {
    const double r = std::abs(a);
    char buf[64];
    if (r < 1e-12) {
        return "0.0000";
    }
    double phase = std::arg(a) / std::numbers::pi;
    if (std::abs(phase) < 1e-12 || std::abs(phase - 2.0) < 1e-12) {
        std::snprintf(buf, sizeof buf, "%.4f", r);
        return buf;
    }
    if (phase < 0.0) phase += 2.0;
    std::snprintf(buf, sizeof buf, "%.4f·e^{i%.4fπ}", r, phase);
    return buf;
}

namespace {

std::string format_qmf(const Qmf& m) {
    if (m.arity() == 1) {
        return format_amplitude(m.state.amplitude(0)) + "|0>+" +
               format_amplitude(m.state.amplitude(1)) + "|1>";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "p(|0>)=%.4f on qubit %zu of %zu",
                  prob_zero(m), m.designated_qubit, m.arity());
    return buf;
}

} // namespace

std::string to_string(const Qzn& z) {
    return "<" + format_qmf(z.a) + ", " + format_qmf(z.b) + ">";
}

} // namespace qzn
