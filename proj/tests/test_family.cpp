#include <doctest.h>

#include <random>

#include "mtq/cone.hpp"
#include "mtq/sampling.hpp"

using namespace mtq;

namespace {
const FamilyParams witness{Rational(6), {Rational(0), Rational(53, 12), Rational(-70, 3)}};
}

TEST_CASE("double-root condition on the witness family") {
    const StarVerdict v = check_star(witness);
    REQUIRE(v.holds);
    CHECK(v.lambda0->is_rational());
    CHECK(v.lambda0->rational_value() == 8);
    CHECK(*v.interval == DoubleRootInterval::AboveA);
}

TEST_CASE("double-root condition fails for squarefree R") {
    // a=1, Q=0: R = -u(u+1)(u-1) has only simple roots
    const StarVerdict v = check_star(FamilyParams{Rational(1), {0, 0, 0}});
    CHECK(!v.holds);
    CHECK_THROWS_AS(check_star(FamilyParams{Rational(-1), {0, 0, 0}}), InvalidFamily);
}

TEST_CASE("verdict agrees with a gcd-based double-root oracle") {
    auto oracle_has_real_double_root = [](const FamilyParams& f) {
        // gcd(R, R') collects repeated factors; any real root of it (or a
        // repeated root at infinity) is a repeated real projective root of R.
        const BinaryForm r = f.r_form();
        const PolyQ g = poly_gcd(r.p, r.p.derivative());
        if (r.deg - r.p.degree() >= 2) return true;
        return !isolate_real_roots_squarefree(squarefree_part(g)).empty() && g.degree() >= 1;
    };
    const FamilyParams f1{Rational(1), {Rational(1), Rational(1), Rational(1)}};
    CHECK(check_star(f1).holds == oracle_has_real_double_root(f1));
    CHECK(check_star(witness).holds == oracle_has_real_double_root(witness));
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<int> pos(1, 6);
    for (int i = 0; i < 25; ++i) {
        const FamilyParams f{Rational(pos(rng)),
                             {Rational(small(rng)), Rational(small(rng)), Rational(small(rng))}};
        const StarVerdict v = check_star(f);
        if (v.holds) CHECK(oracle_has_real_double_root(f));
        if (!oracle_has_real_double_root(f)) CHECK(!v.holds);
    }
}

TEST_CASE("gradient vanishes exactly at the three singular points") {
    auto is_zero4 = [](const std::array<Rational, 4>& g) {
        return g[0] == 0 && g[1] == 0 && g[2] == 0 && g[3] == 0;
    };
    CHECK(is_zero4(surface_gradient(witness, PPoint3(0, 0, 0, 1))));
    CHECK(is_zero4(surface_gradient(witness, PPoint3(0, 0, 1, 0))));
    CHECK(is_zero4(surface_gradient(witness, PPoint3(8, 1, 0, 0))));
    CHECK(!is_zero4(surface_gradient(witness, PPoint3(0, 1, 1, Rational(70, 3)))));

    const SingularPoints sp = singular_points(witness);
    CHECK(sp.certified);
    CHECK(sp.p_infinity == PPoint3(0, 0, 0, 1));
    CHECK(sp.p_bar_infinity == PPoint3(0, 0, 1, 0));
    CHECK(sp.lambda0 == Rational(8));
}

TEST_CASE("normalization: identity on the witness, fixes NegUnit families") {
    const auto [same, rec] = normalize_family(witness);
    CHECK(rec.identity);
    CHECK(same.a == witness.a);
    CHECK(same.q == witness.q);

    const FamilyParams low = sample_star_family(42, DoubleRootInterval::NegUnit);
    REQUIRE(*check_star(low).interval == DoubleRootInterval::NegUnit);
    const auto [high, rec2] = normalize_family(low);
    CHECK(!rec2.identity);
    const StarVerdict v = check_star(high);
    REQUIRE(v.holds);
    CHECK(*v.interval == DoubleRootInterval::AboveA);
    // j-invariant of the branch curve is preserved
    CHECK(family_j_invariant(high) == family_j_invariant(low));
    // idempotent
    const auto [again, rec3] = normalize_family(high);
    CHECK(rec3.identity);
    CHECK(again.q == high.q);
}

TEST_CASE("quotient map and its indeterminacy locus") {
    const ConePoint q = quotient_map_psi(PPoint3(1, 1, 1, 1));
    CHECK(q.z == std::array<Rational, 4>{1, 1, 1, 1});
    REQUIRE(q.has_chart);
    CHECK(q.u == 1);
    CHECK(q.zeta == 1);

    CHECK_THROWS_AS(quotient_map_psi(PPoint3(0, 0, 0, 1)), Indeterminate);
    CHECK_THROWS_AS(quotient_map_psi(PPoint3(0, 0, 1, 0)), Indeterminate);

    // psi is constant on scaling orbits
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> small(-9, 9);
    for (const int t : {2, 3, 5}) {
        for (int i = 0; i < 20; ++i) {
            PPoint3 p;
            try {
                p = PPoint3(small(rng), small(rng), small(rng), small(rng));
            } catch (const Error&) {
                continue;
            }
            if (p.y[0] == 0 && p.y[1] == 0) continue;
            const Transform4 act = Transform4::cstar_action(t);
            const ConePoint a = quotient_map_psi(p);
            const ConePoint b = quotient_map_psi(act(p));
            CHECK(a.z == b.z);
        }
    }
}

TEST_CASE("real structures intertwine through the quotient") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> small(-9, 9);
    int done = 0;
    while (done < 100) {
        PPoint3 p;
        try {
            p = PPoint3(small(rng), small(rng), small(rng), small(rng));
        } catch (const Error&) {
            continue;
        }
        if (p.y[0] == 0 && p.y[1] == 0) continue;
        const ConePoint lhs = cone_real_structure(quotient_map_psi(p));
        const ConePoint rhs = quotient_map_psi(sigma_CP3(p));
        CHECK(lhs.z == rhs.z);
        ++done;
    }
    // the chart fixes real points; the node is fixed
    const ConePoint chart = quotient_map_psi(PPoint3(1, 2, 3, 24));
    const ConePoint back = cone_real_structure(chart);
    CHECK(back.u == chart.u);
    CHECK(back.zeta == chart.zeta);
}

TEST_CASE("sampled points lie on the surface") {
    const auto pts = sample_surface_points(witness, 64, 0);
    CHECK(pts.size() == 64);
    for (const auto& p : pts) CHECK(surface_value(witness, p) == 0);
}
