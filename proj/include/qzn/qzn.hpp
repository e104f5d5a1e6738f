#pragma once

#include <optional>
#include <string>

#include "qzn/fuzzy.hpp"
#include "qzn/state_vector.hpp"

namespace qzn {

/// Absolute slack for probability comparisons in includes/equals, absorbing
/// the floating-point noise of arccos/cos round-trips.
inline constexpr double kProbTolerance = 1e-12;

/// Quantum membership function: a register whose designated wire carries the
/// classical membership degree as the probability of reading |0>. Fresh
/// QMFs are one qubit wide; intersection, union and combination produce
/// three-qubit QMFs whose designated wire is qubit 2.
struct Qmf {
    StateVector state;
    std::size_t designated_qubit = 0;

    std::size_t arity() const noexcept { return state.num_qubits(); }
};

/// Validated constructor for externally built QMFs.
Qmf make_qmf(StateVector state, std::size_t designated_qubit);

/// Quantum Z-number: QMF a restricts the variable, QMF b grades how
/// reliable that restriction is. The optional element label identifies
/// which universe element the pair speaks about; operations carry it
/// through and set label_conflict instead of erroring when two operands
/// disagree.
struct Qzn {
    Qmf a;
    Qmf b;
    std::optional<std::string> element_label;
    bool label_conflict = false;
};

/// Combined (collapsed) view of a QZN: one three-qubit QMF carrying
/// restriction and reliability jointly.
struct CQzn {
    Qmf combined;
    std::optional<std::string> element_label;
    bool label_conflict = false;
};

/// Angle that rotates |0> onto sqrt(mu)|0> + sqrt(1-mu)|1>, i.e.
/// 2*arccos(sqrt(mu)), in radians.
double rotation_angle(Membership mu);

/// Encodes a classical Z-number by running RotY on |0> for each component.
Qzn from_z(const ZNumber& z,
           std::optional<std::string> element_label = std::nullopt);

/// Same encoding from precomputed rotation angles.
Qzn from_angles(double theta_a, double theta_b,
                std::optional<std::string> element_label = std::nullopt);

/// QZN with explicit single-qubit amplitudes (phases allowed).
Qzn make_qzn(Amplitude a_zero, Amplitude a_one, Amplitude b_zero,
             Amplitude b_one,
             std::optional<std::string> element_label = std::nullopt);

/// Probability of the designated wire reading |0>: the classical degree
/// this QMF degenerates to. Phases never affect it.
double prob_zero(const Qmf& m);

/// z1 is included in z2 when both components' |0>-probabilities are no
/// larger, compared with kProbTolerance slack. Requires matching arities.
bool includes(const Qzn& z1, const Qzn& z2);

/// Inclusion in both directions.
bool equals(const Qzn& z1, const Qzn& z2);

/// Pauli-X on both QMFs. Defined on fresh (one-qubit) QZNs only.
Qzn complement(const Qzn& z);

/// CCNOT((X (x) X (x) I)|psi1>|psi2>|1>) per component. The designated
/// wire of each three-qubit result reads |0> with probability x*y.
Qzn intersect(const Qzn& z1, const Qzn& z2);

/// CCNOT(|psi1>|psi2>|0>) per component. The designated wire reads |0>
/// with probability x + y - x*y. (Named unite: union is a keyword.)
Qzn unite(const Qzn& z1, const Qzn& z2);

/// Intersection circuit applied to a QZN's own two components, fusing them
/// into one three-qubit state whose designated wire reads |0> with
/// probability muA*muB.
CQzn combine(const Qzn& z);

/// Direct amplitude formulas for the three circuit products, used as an
/// independent cross-check of the gate path. Arguments are the |0>/|1>
/// amplitudes of the inputs.
namespace closed_form {

StateVector intersection(Amplitude a1_zero, Amplitude a1_one,
                         Amplitude a2_zero, Amplitude a2_one);

StateVector unification(Amplitude a1_zero, Amplitude a1_one,
                        Amplitude a2_zero, Amplitude a2_one);

StateVector combination(Amplitude a_zero, Amplitude a_one, Amplitude b_zero,
                        Amplitude b_one);

} // namespace closed_form

/// Amplitude in display form: plain "r" when the phase vanishes, otherwise
/// "r·e^{i t π}" with t in [0, 2).
std::string format_amplitude(const Amplitude& a);

/// "<a0|0>+a1|1>, b0|0>+b1|1>" for fresh QZNs; wider QMFs are shown by
/// their designated-wire probability.
std::string to_string(const Qzn& z);

} // namespace qzn
