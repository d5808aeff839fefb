#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mtq/family.hpp"

namespace mtq {

// Constructive sampler: pick a rational double root lambda0 and a value
// zeta0 = Q(lambda0, 1), then solve for a and the remaining Q coefficients.
// Every output passes check_star with a rational lambda0 in the requested
// interval.
FamilyParams sample_star_family(uint64_t seed,
                                DoubleRootInterval interval = DoubleRootInterval::AboveA);

// A star-passing family with the same a as the input but different Q.
// Requires a rational double root.
FamilyParams resample_q(const FamilyParams& params, uint64_t seed);

// Two star-passing families with the same a but different Q.
std::pair<FamilyParams, FamilyParams> sample_pair_sharing_a(uint64_t seed);

// Rational affine points (u, w) with w^2 = u (u + 1)(u - a), generated by the
// chord-tangent law from (lambda0, Q(lambda0, 1)) and the 2-torsion points.
// Requires a rational lambda0.
struct CurvePoint {
    Rational u, w;
};
std::vector<CurvePoint> rational_curve_points(const FamilyParams& params, int count);

// Rational points of the quartic surface: y = (u, 1, y2, (-Q(u,1) +- w)/y2)
// for curve points (u, w) and random nonzero y2, plus fiber points over the
// branch set and over u = infinity.
std::vector<PPoint3> sample_surface_points(const FamilyParams& params, int count, uint64_t seed);

struct ScreenResult {
    long long checked = 0;
    std::vector<PPoint3> offending; // samples with vanishing gradient away from
                                    // the three singular points
    bool clean() const { return offending.empty(); }
};

// Serial reference and OpenMP kernel evaluate the same exact gradients; the
// results must coincide.
ScreenResult singular_screen_serial(const FamilyParams& params,
                                    const std::vector<PPoint3>& samples);
ScreenResult singular_screen_parallel(const FamilyParams& params,
                                      const std::vector<PPoint3>& samples);

ScreenResult singular_screen(const FamilyParams& params, int count, uint64_t seed,
                             bool parallel = true);

} // namespace mtq
