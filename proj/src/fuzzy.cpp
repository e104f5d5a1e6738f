#include "qzn/fuzzy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qzn {

Membership::Membership(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::domain_error("membership degree " + std::to_string(value) +
                                " is outside [0, 1]");
    }
}

Membership complement(Membership x) {
    return Membership(1.0 - x.value());
}

Membership t_norm(Membership x, Membership y) {
    return Membership(x.value() * y.value());
}

Membership t_conorm(Membership x, Membership y) {
    double v = x.value() + y.value() - x.value() * y.value();
    // The algebraic value is in [0, 1]; rounding can push the float a hair
    // past 1 when both inputs are close to 1.
    if (v > 1.0) v = 1.0;
    return Membership(v);
}

StateVector qfs_state(const MembershipProfile& profile, std::size_t capacity) {
    if (profile.empty()) {
        throw std::invalid_argument("fuzzy set needs at least one element");
    }
    if (profile.size() > capacity) {
        throw CapacityError("fuzzy set with " +
                            std::to_string(profile.size()) +
                            " elements exceeds the " +
                            std::to_string(capacity) + "-qubit capacity");
    }
    std::vector<Amplitude> amps{Amplitude{1.0, 0.0}};
    for (const Membership& f : profile) {
        const double a1 = std::sqrt(f.value());
        const double a0 = std::sqrt(1.0 - f.value());
        std::vector<Amplitude> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * a0;
            next[2 * i + 1] = amps[i] * a1;
        }
        amps.swap(next);
    }
    return StateVector(profile.size(), std::move(amps));
}

} // namespace qzn
