#include <doctest.h>

#include <random>

#include "mtq/conic.hpp"
#include "mtq/sampling.hpp"

using namespace mtq;

namespace {
const FamilyParams witness{Rational(6), {Rational(0), Rational(53, 12), Rational(-70, 3)}};

PolyQ P(std::initializer_list<Rational> ascending) {
    return PolyQ(std::vector<Rational>(ascending));
}

PlaneConicQ random_conic(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-6, 6);
    std::uniform_int_distribution<int> nz(1, 6);
    for (;;) {
        const std::array<Rational, 4> plane = {Rational(small(rng)), Rational(small(rng)),
                                               Rational(nz(rng)), Rational(nz(rng))};
        std::array<PolyQ, 3> x;
        for (auto& p : x)
            p = P({Rational(small(rng)), Rational(small(rng)), Rational(small(rng))});
        try {
            PlaneConicQ c = make_plane_conic(plane, x);
            if (c.matrix_rank == 3 && !is_symmetric_conic(c)) return c;
        } catch (const Error&) {
        }
    }
}
}

TEST_CASE("scaling-orbit closures are conics inside the surface") {
    // orbit through a surface point p: s -> (y0 s, y1 s, y2 s^2, y3)
    const auto pts = sample_surface_points(witness, 8, 3);
    int used = 0;
    for (const auto& p : pts) {
        if (p.y[0] == 0 || p.y[1] == 0 || p.y[2] == 0 || p.y[3] == 0) continue;
        const std::array<Rational, 4> plane = {p.y[1], -p.y[0], 0, 0};
        // pivot is coordinate 1; plane coordinates are (y0, y2, y3)
        const std::array<PolyQ, 3> x = {P({0, p.y[0]}), P({0, 0, p.y[2]}), P({p.y[3]})};
        const PlaneConicQ orbit = make_plane_conic(plane, x);
        const BinaryForm rho = restrict_surface_to_conic(witness, orbit);
        CHECK(rho.is_zero());
        CHECK_THROWS_AS(is_touching(witness, orbit), ConicInsideSurface);
        if (++used == 2) break;
    }
    CHECK(used == 2);
}

TEST_CASE("random conics restrict to squarefree octics and are not touching") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 5; ++i) {
        const PlaneConicQ c = random_conic(rng);
        const BinaryForm rho = restrict_surface_to_conic(witness, c);
        REQUIRE(!rho.is_zero());
        CHECK(rho.deg == 8);
        // generically squarefree, hence not a perfect square
        CHECK(poly_gcd(rho.p, rho.p.derivative()).degree() == 0);
        const TouchingVerdict tv = is_touching(witness, c);
        CHECK(!tv.touching);
    }
}

TEST_CASE("reflection involution") {
    const std::array<Rational, 4> plane = {1, 0, 1, -1}; // y0 + y2 - y3 = 0
    const ReflectionQ iota = reflection_involution(plane);
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> small(-9, 9);
    int done = 0;
    while (done < 100) {
        // a rational point of the plane: free (y0, y1, y2), y3 = y0 + y2
        const Rational y0 = small(rng), y1 = small(rng), y2 = small(rng);
        PPoint3 p;
        try {
            p = PPoint3(y0, y1, y2, y0 + y2);
        } catch (const Error&) {
            continue;
        }
        const PPoint3 q = reflect(iota, p);
        // iota preserves the plane and is an involution
        CHECK(q.y[0] + q.y[2] - q.y[3] == 0);
        CHECK(reflect(iota, q) == p);
        // psi o iota = psi away from the indeterminacy points
        if (!(p.y[0] == 0 && p.y[1] == 0)) {
            CHECK(quotient_map_psi(q).z == quotient_map_psi(p).z);
        }
        ++done;
    }
    CHECK_THROWS_AS(reflection_involution(std::array<Rational, 4>{1, 1, 0, 1}),
                    OrbitTangentPlane);
}

TEST_CASE("symmetric conics are detected and rejected by the image map") {
    // plane y0 + y1 + y2 + y3 = 0; parametrization with iota(y(s)) = y(-s)
    const std::array<Rational, 4> plane = {1, 1, 1, 1};
    const PolyQ y0 = P({1, 0, 1});       // even
    const PolyQ y2 = P({1, 2, 3});
    const PolyQ y2m = P({1, -2, 3});     // y2(-s)
    const PolyQ y3 = y2m;                // gamma/delta = 1
    const PolyQ y1 = -(y0 + y2 + y3);
    const PlaneConicQ sym = make_plane_conic(plane, {y0, y1, y2});
    CHECK(is_symmetric_conic(sym));
    CHECK_THROWS_AS(conic_image_on_cone(sym), SymmetricConic);

    std::mt19937_64 rng(43);
    CHECK(!is_symmetric_conic(random_conic(rng)));
}

TEST_CASE("images of random conics are nodal anticanonical curves") {
    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 5) {
        const PlaneConicQ c = random_conic(rng);
        ConeCurve img;
        try {
            img = conic_image_on_cone(c);
        } catch (const InvalidConic&) {
            continue; // conic meets the line y0 = y1 = 0
        }
        CHECK(img.anticanonical());
        CHECK(img.shape_ok());
        const auto nodes = detect_nodes(img);
        REQUIRE(nodes.size() == 1);
        CHECK(nodes[0].type == NodeType::Node);

        // cross-check: the node is the common image of C cap iota(C) off the
        // fixed line
        const PlaneConicF cf = to_float(c);
        const auto pair = conic_self_intersection_params(cf);
        for (const auto& s : pair) {
            const auto num = cf.param[0].eval_as<std::complex<double>>(s);
            const auto den = cf.param[1].eval_as<std::complex<double>>(s);
            CHECK(std::abs(num / den - nodes[0].u) < 1e-8);
        }
        ++done;
    }
}

TEST_CASE("the branch curve itself is smooth") {
    CHECK(detect_nodes(branch_curve(witness)).empty());
}

TEST_CASE("contact of a shifted branch curve is transverse somewhere") {
    const ConeCurve b = branch_curve(witness);
    CHECK_THROWS_AS(contact_with_branch(b, witness), CurvesCoincide);
    // zeta -> zeta + 1: coefficients (b + 2, c + b + 1)
    const ConeCurve shifted{Rational(1), b.b + P({2}), b.c + b.b + P({1})};
    const ContactReport r = contact_with_branch(shifted, witness);
    CHECK(r.total == 8);
    CHECK(!r.all_even);
}

TEST_CASE("touching pipeline on the witness family") {
    const std::array<double, 4> plane = {0.3, -0.7, 1.1, -0.9};
    const PlaneConicF conic = find_touching_conic(witness, plane, 1);
    const TouchingVerdict tv = is_touching(witness, conic);
    CHECK(tv.touching);
    CHECK(tv.defect < 1e-10);

    // a 1e-3 perturbation destroys the touching property
    PlaneConicF bent = conic;
    bent.param[2].c[1] += 1e-3;
    const TouchingVerdict tb = is_touching(witness, bent);
    CHECK(!tb.touching);

    // for a = 6 two of the tangencies land far out on the base line, where the
    // root-pair splitting is amplified by the square of the coordinate, so the
    // contact profile is clustered with a radius matching that distortion
    const ConeCurveF img = conic_image_on_cone(conic);
    const ContactReport contact = contact_with_branch(img, witness, 5e-2);
    CHECK(contact.all_even);
    CHECK(contact.total == 8);
    int doubles = 0;
    for (const auto& p : contact.points)
        if (p.multiplicity == 2) ++doubles;
    CHECK(doubles == 4);

    const LiftResult lift = lift_minitwistor_line(witness, conic);
    CHECK(lift.verdict == LiftVerdict::SplitsNodal);

    CHECK_THROWS_AS(lift_minitwistor_line(witness, bent), NotTouching);
}
