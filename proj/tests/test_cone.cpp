#include <doctest.h>

#include "mtq/cone.hpp"
#include "mtq/sampling.hpp"

using namespace mtq;

namespace {
const FamilyParams witness{Rational(6), {Rational(0), Rational(53, 12), Rational(-70, 3)}};

PolyQ P(std::initializer_list<Rational> ascending) {
    return PolyQ(std::vector<Rational>(ascending));
}
}

TEST_CASE("branch curve coefficients") {
    const ConeCurve b = branch_curve(witness);
    const PolyQ q = witness.q_dehom(); // 53u/12 - 70/3
    CHECK(b.A == 1);
    CHECK(b.b == q * Rational(2));
    CHECK(b.c == q * q - witness.p_dehom());
    CHECK(b.anticanonical());
    CHECK(b.shape_ok());

    // Q = 0 under the force flag: zeta^2 - u(u+1)(u-a)
    const FamilyParams flat{Rational(2), {0, 0, 0}};
    CHECK_THROWS_AS(branch_curve(flat), StarFails);
    const ConeCurve forced = branch_curve(flat, true);
    CHECK(forced.b.is_zero());
    CHECK(forced.c == -flat.p_dehom());
}

TEST_CASE("branch points over the line") {
    auto finite = [](const RealRoot& r) { return std::get<AlgebraicReal>(r.where); };
    const auto r6 = branch_points_over_line(branch_curve(witness));
    REQUIRE(r6.size() == 4);
    CHECK(finite(r6[0]) == Rational(-1));
    CHECK(finite(r6[1]) == Rational(0));
    CHECK(finite(r6[2]) == Rational(6));
    CHECK(is_infinity(r6[3].where));
    for (const auto& r : r6) CHECK(r.multiplicity == 1);

    // the branch set depends only on a: forced curve for a = 2 gives {-1,0,2,inf}
    const FamilyParams a2{Rational(2), {0, 0, 0}};
    const auto r2 = branch_points_over_line(branch_curve(a2, true));
    REQUIRE(r2.size() == 4);
    CHECK(finite(r2[0]) == Rational(-1));
    CHECK(finite(r2[1]) == Rational(0));
    CHECK(finite(r2[2]) == Rational(2));
    CHECK(is_infinity(r2[3].where));

    // zeta^2 - u^2: repeated root flagged non-simple
    const ConeCurve degenerate{Rational(1), PolyQ(), P({0, 0, -1})};
    const auto rd = branch_points_over_line(degenerate);
    bool found = false;
    for (const auto& r : rd)
        if (!is_infinity(r.where) && std::get<AlgebraicReal>(r.where) == Rational(0)) {
            found = true;
            CHECK(r.multiplicity == 2);
        }
    CHECK(found);

    CHECK_THROWS_AS(branch_points_over_line(ConeCurve{Rational(0), P({1}), P({1})}),
                    NotDoubleCover);
}

TEST_CASE("elliptic invariants and the j closed form") {
    const auto harmonic = elliptic_invariants({PPoint1::finite(-1), PPoint1::finite(0),
                                               PPoint1::finite(1), PPoint1::infinity()});
    CHECK(harmonic.j == 1728);

    const auto six = elliptic_invariants({PPoint1::finite(-1), PPoint1::finite(0),
                                          PPoint1::finite(6), PPoint1::infinity()});
    CHECK(six.j == Rational(5088448, 441));
    CHECK(j_from_lambda(six.lambda) == six.j);

    // Mobius image of the branch set has the same j
    const Mobius t(3, 1, 1, 2);
    const auto moved = elliptic_invariants(
        {t(PPoint1::finite(-1)), t(PPoint1::finite(0)), t(PPoint1::finite(6)),
         t(PPoint1::infinity())});
    CHECK(moved.j == six.j);

    CHECK(family_j_invariant(witness) == Rational(5088448, 441));
    CHECK(j_closed_form(Rational(6)) == Rational(5088448, 441));
    CHECK(j_closed_form(Rational(1)) == 1728);
    // symmetry under a -> 1/a
    CHECK(j_closed_form(Rational(3, 7)) == j_closed_form(Rational(7, 3)));
}

TEST_CASE("reducible fibers") {
    const auto f = reducible_fibers(witness);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == PPoint1::finite(-1));
    CHECK(f[1] == PPoint1::finite(0));
    CHECK(f[2] == PPoint1::finite(6));
    CHECK(f[3] == PPoint1::infinity());
}

TEST_CASE("Q-shift isomorphism") {
    const QShift same = q_shift_isomorphism(witness, witness);
    CHECK(same.verified);
    CHECK(same.d == std::array<Rational, 3>{0, 0, 0});

    FamilyParams shifted = witness;
    shifted.q[2] += 1; // Q' = Q + y1^2
    const QShift d = q_shift_isomorphism(witness, shifted);
    CHECK(d.verified);
    CHECK(d.d == std::array<Rational, 3>{-1, 0, 0});

    FamilyParams other = witness;
    other.a = 5;
    CHECK_THROWS_AS(q_shift_isomorphism(witness, other), MismatchedA);

    const auto [p1, p2] = sample_pair_sharing_a(123);
    const QShift qs = q_shift_isomorphism(p1, p2);
    CHECK(qs.verified);
    const PolyQ diff = p1.q_dehom() - p2.q_dehom();
    CHECK(qs.d[0] == diff.coeff(0));
    CHECK(qs.d[1] == diff.coeff(1));
    CHECK(qs.d[2] == diff.coeff(2));
}

TEST_CASE("real locus classification and sampling") {
    CHECK(real_locus_classify(witness, PPoint1::finite(Rational(-1, 2))) ==
          RealLocusComponent::T2Sphere);
    CHECK(real_locus_classify(witness, PPoint1::finite(7)) == RealLocusComponent::T4Sphere);
    CHECK(real_locus_classify(witness, PPoint1::infinity()) == RealLocusComponent::T4Sphere);
    CHECK(real_locus_classify(witness, PPoint1::finite(3)) == RealLocusComponent::Empty);
    // endpoints belong to the closed components
    CHECK(real_locus_classify(witness, PPoint1::finite(-1)) == RealLocusComponent::T2Sphere);
    CHECK(real_locus_classify(witness, PPoint1::finite(0)) == RealLocusComponent::T2Sphere);
    CHECK(real_locus_classify(witness, PPoint1::finite(6)) == RealLocusComponent::T4Sphere);

    const auto samples = sample_real_locus(witness, 10, 1);
    bool end_m1 = false, end_0 = false, end_a = false, end_inf = false;
    const ConeCurve curve = branch_curve(witness);
    for (const auto& s : samples) {
        if (s.u == PPoint1::finite(-1)) end_m1 = true;
        if (s.u == PPoint1::finite(0)) end_0 = true;
        if (s.u == PPoint1::finite(6)) end_a = true;
        if (s.u.is_infinity()) end_inf = true;
        if (s.u.is_infinity()) continue;
        // the sample satisfies w^2 = u(u+1)(u-a): equivalently the shifted
        // branch-curve equation at zeta = w - Q(u)
        const double u = to_double(s.u.value());
        const double p = witness.p_dehom().eval_as<double>(u);
        CHECK(std::abs(s.zeta * s.zeta - p) < 1e-12 * (1 + std::abs(p)));
    }
    CHECK(end_m1);
    CHECK(end_0);
    CHECK(end_a);
    CHECK(end_inf);
}
