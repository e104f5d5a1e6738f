#include "qzn/worked_examples.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include "qzn/fuzzy.hpp"
#include "qzn/qzn.hpp"

namespace qzn {

namespace {

constexpr double kTol = 1e-12;

// sqrt(p) * e^{i * phase_pi * pi}
Amplitude amp(double p, double phase_pi) {
    return std::polar(std::sqrt(p), phase_pi * std::numbers::pi);
}

std::string fixed(double v, int places = 4) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

struct BlockBuilder {
    ExampleCheck block;

    explicit BlockBuilder(std::string name) { block.name = std::move(name); }

    void line(std::string text) { block.lines.push_back(std::move(text)); }

    void check_close(const std::string& what, double got, double expected) {
        const bool ok = std::abs(got - expected) <= kTol;
        block.lines.push_back(what + " = " + fixed(got) + " (expected " +
                              fixed(expected) + ")" + (ok ? "" : "  << off"));
        if (!ok) block.passed = false;
    }

    void check_flag(const std::string& what, bool got, bool expected) {
        const bool ok = got == expected;
        block.lines.push_back(what + ": " + (got ? "yes" : "no") +
                              (ok ? "" : "  << wrong verdict"));
        if (!ok) block.passed = false;
    }
};

ExampleCheck inclusion_example() {
    BlockBuilder b("inclusion");
    const Qzn z1 = make_qzn(amp(0.3, 0.7), amp(0.7, 1.5), amp(0.6, 0.9),
                            amp(0.4, 0.3));
    const Qzn z2 = make_qzn(amp(0.4, 0.6), amp(0.6, 0.2), amp(0.7, 0.5),
                            amp(0.3, 0.4));
    b.line("Z1 = " + to_string(z1));
    b.line("Z2 = " + to_string(z2));
    b.check_close("p(|0>) of A1", prob_zero(z1.a), 0.3);
    b.check_close("p(|0>) of A2", prob_zero(z2.a), 0.4);
    b.check_close("p(|0>) of B1", prob_zero(z1.b), 0.6);
    b.check_close("p(|0>) of B2", prob_zero(z2.b), 0.7);
    b.check_flag("Z1 included in Z2", includes(z1, z2), true);
    b.check_flag("Z2 included in Z1", includes(z2, z1), false);
    return b.block;
}

ExampleCheck equality_example() {
    BlockBuilder b("equality");
    const Qzn z1 = make_qzn(amp(0.3, 0.7), amp(0.7, 1.5), amp(0.6, 0.9),
                            amp(0.4, 0.3));
    const Qzn z2 = make_qzn(amp(0.3, 0.6), amp(0.7, 0.2), amp(0.6, 0.5),
                            amp(0.4, 0.4));
    b.line("Z1 = " + to_string(z1));
    b.line("Z2 = " + to_string(z2));
    b.check_close("p(|0>) of A1", prob_zero(z1.a), 0.3);
    b.check_close("p(|0>) of A2", prob_zero(z2.a), 0.3);
    b.check_close("p(|0>) of B1", prob_zero(z1.b), 0.6);
    b.check_close("p(|0>) of B2", prob_zero(z2.b), 0.6);
    b.check_flag("Z1 equals Z2 (phases differ)", equals(z1, z2), true);
    return b.block;
}

ExampleCheck complement_example() {
    BlockBuilder b("complement");
    const Qzn z = from_z(ZNumber{Membership(0.3), Membership(0.6)});
    const Qzn c = complement(z);
    b.line("Z = " + to_string(z));
    b.line("complement(Z) = " + to_string(c));
    b.check_close("p(|0>) of complemented A", prob_zero(c.a), 0.7);
    b.check_close("p(|0>) of complemented B", prob_zero(c.b), 0.4);
    b.check_flag("double complement restores Z", equals(complement(c), z),
                 true);
    return b.block;
}

ExampleCheck intersection_example() {
    BlockBuilder b("intersection");
    const Qzn z1 = from_z(ZNumber{Membership(0.35), Membership(0.77)});
    const Qzn z2 = from_z(ZNumber{Membership(0.41), Membership(0.83)});
    b.line("Z1 = " + to_string(z1));
    b.line("Z2 = " + to_string(z2));
    const Qzn both = intersect(z1, z2);
    b.check_close("p(|0>) of A component", prob_zero(both.a), 0.35 * 0.41);
    b.check_close("p(|0>) of B component", prob_zero(both.b), 0.77 * 0.83);
    b.check_close(
        "t-norm of restrictions",
        t_norm(Membership(0.35), Membership(0.41)).value(), 0.35 * 0.41);
    return b.block;
}

ExampleCheck union_example() {
    BlockBuilder b("union");
    const Qzn z1 = from_z(ZNumber{Membership(0.35), Membership(0.77)});
    const Qzn z2 = from_z(ZNumber{Membership(0.41), Membership(0.83)});
    b.line("Z1 = " + to_string(z1));
    b.line("Z2 = " + to_string(z2));
    const Qzn either = unite(z1, z2);
    const double ea = 0.35 + 0.41 - 0.35 * 0.41;
    const double eb = 0.77 + 0.83 - 0.77 * 0.83;
    b.check_close("p(|0>) of A component", prob_zero(either.a), ea);
    b.check_close("p(|0>) of B component", prob_zero(either.b), eb);
    b.check_close("t-conorm of restrictions",
                  t_conorm(Membership(0.35), Membership(0.41)).value(), ea);
    return b.block;
}

ExampleCheck conversion_example() {
    BlockBuilder b("conversion");
    const ZNumber z{Membership(0.5), Membership(0.75)};
    const double theta_a = rotation_angle(z.restriction);
    const double theta_b = rotation_angle(z.reliability);
    const Qzn q = from_z(z);
    b.line("Z = <0.5, 0.75>");
    b.line("Z^Q = " + to_string(q));
    b.check_close("theta_a (degrees)", theta_a * 180.0 / std::numbers::pi,
                  90.0);
    b.check_close("theta_b (degrees)", theta_b * 180.0 / std::numbers::pi,
                  60.0);
    b.check_close("theta_a (radians)", theta_a, std::numbers::pi / 2.0);
    b.check_close("theta_b (radians)", theta_b, std::numbers::pi / 3.0);
    b.check_close("|0> amplitude of A", q.a.state.amplitude(0).real(),
                  std::sqrt(0.5));
    b.check_close("|0> amplitude of B", q.b.state.amplitude(0).real(),
                  std::sqrt(0.75));
    return b.block;
}

ExampleCheck combination_example() {
    BlockBuilder b("combination");
    const Qzn z = from_z(ZNumber{Membership(0.5), Membership(0.75)});
    const CQzn c = combine(z);
    b.line("Z = <0.5, 0.75>");
    b.check_close("p(|0>) of combined state", prob_zero(c.combined),
                  0.5 * 0.75);
    b.check_close("p(|1>) of combined state",
                  measure_prob(c.combined.state, c.combined.designated_qubit,
                               1),
                  1.0 - 0.5 * 0.75);
    return b.block;
}

} // namespace

std::vector<ExampleCheck> run_worked_examples() {
    return {inclusion_example(),   equality_example(),
            complement_example(),  intersection_example(),
            union_example(),       conversion_example(),
            combination_example()};
}

std::string render_worked_examples(std::span<const ExampleCheck> checks) {
    std::string out;
    for (const ExampleCheck& c : checks) {
        out += "== " + c.name + " ==\n";
        for (const std::string& line : c.lines) {
            out += "  " + line + "\n";
        }
        out += c.passed ? "  result: PASS\n\n" : "  result: FAIL\n\n";
    }
    return out;
}

bool all_examples_pass(std::span<const ExampleCheck> checks) {
    for (const ExampleCheck& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

} // namespace qzn
