#pragma once

#include <optional>

#include "mtq/family.hpp"
#include "mtq/projective.hpp"

namespace mtq {

// Four distinct points of RP^1 with their cyclic order (ascending, infinity
// last).
struct CircleConfig {
    std::array<PPoint1, 4> points; // as given
    std::array<int, 4> cyclic;     // indices into points, in cyclic order

    static CircleConfig from_points(const std::array<PPoint1, 4>& pts);
    PPoint1 at_cyclic(int k) const {
        return points[static_cast<size_t>(cyclic[static_cast<size_t>(k % 4)])];
    }
};

// Canonical PSL(2,R)-invariant: the minimum over the four cyclic-rotation
// labelings of the cross-ratio values in (1, inf); lands in (1, 2].
Rational canonical_invariant(const CircleConfig& config);

struct EquivalenceWitness {
    bool equivalent = false;
    std::optional<Mobius> witness; // positive determinant, maps c1 onto c2
};

EquivalenceWitness are_equivalent(const CircleConfig& c1, const CircleConfig& c2);

// Invariant of the branch configuration {-1, 0, a, inf}; equals
// min(1 + a, (1 + a)/a).
Rational family_modulus(const FamilyParams& params);

} // namespace mtq
