#pragma once

#include <vector>

#include "qzn/state_vector.hpp"

namespace qzn {

/// Degree of membership, confined to [0, 1]. Out-of-range values are
/// rejected rather than clamped so bad input data surfaces at the boundary
/// instead of skewing results downstream.
class Membership {
public:
    explicit Membership(double value);
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// A fuzzy restriction paired with the reliability of that restriction.
struct ZNumber {
    Membership restriction;
    Membership reliability;
};

/// 1 - x.
Membership complement(Membership x);

/// Product t-norm x*y.
Membership t_norm(Membership x, Membership y);

/// Probabilistic sum x + y - x*y.
Membership t_conorm(Membership x, Membership y);

/// Discrete fuzzy set as one membership degree per element.
using MembershipProfile = std::vector<Membership>;

/// Product-state encoding of a fuzzy set: element j contributes
/// sqrt(1 - f_j)|0> + sqrt(f_j)|1> on its own wire, element 0 on the
/// leftmost wire.
StateVector qfs_state(const MembershipProfile& profile,
                      std::size_t capacity = kDefaultCapacity);

} // namespace qzn
