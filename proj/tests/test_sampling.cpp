#include <doctest.h>

#include "mtq/sampling.hpp"

using namespace mtq;

TEST_CASE("sampled families satisfy the double-root condition in both intervals") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        const FamilyParams hi = sample_star_family(seed, DoubleRootInterval::AboveA);
        const StarVerdict vh = check_star(hi);
        REQUIRE(vh.holds);
        CHECK(*vh.interval == DoubleRootInterval::AboveA);
        CHECK(hi.a > 0);

        const FamilyParams lo = sample_star_family(seed, DoubleRootInterval::NegUnit);
        const StarVerdict vl = check_star(lo);
        REQUIRE(vl.holds);
        CHECK(*vl.interval == DoubleRootInterval::NegUnit);
        CHECK(lo.a > 0);
    }
    // determinism
    const FamilyParams a = sample_star_family(9);
    const FamilyParams b = sample_star_family(9);
    CHECK(a.a == b.a);
    CHECK(a.q == b.q);
}

TEST_CASE("resampling keeps a and the double root") {
    const FamilyParams base = sample_star_family(4);
    const FamilyParams other = resample_q(base, 5);
    CHECK(other.a == base.a);
    CHECK(other.q != base.q);
    CHECK(check_star(other).holds);
}

TEST_CASE("generated curve points satisfy w^2 = u(u+1)(u-a)") {
    const FamilyParams f = sample_star_family(6);
    const auto pts = rational_curve_points(f, 12);
    CHECK(pts.size() == 12);
    for (const auto& p : pts) {
        CHECK(p.w != 0);
        CHECK(p.w * p.w == f.p_dehom().eval(p.u));
    }
}

TEST_CASE("serial and parallel singular screens agree and come up clean") {
    const FamilyParams f = sample_star_family(7);
    const auto samples = sample_surface_points(f, 600, 8);
    const ScreenResult ser = singular_screen_serial(f, samples);
    const ScreenResult par = singular_screen_parallel(f, samples);
    CHECK(ser.checked == 600);
    CHECK(par.checked == 600);
    CHECK(ser.clean());
    CHECK(par.clean());
    CHECK(ser.offending == par.offending);
}
