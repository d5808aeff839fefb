#include <doctest.h>

#include "mtq/moduli.hpp"
#include "mtq/sampling.hpp"

using namespace mtq;

namespace {
PPoint1 fin(int n, int d = 1) { return PPoint1::finite(Rational(n, d)); }

CircleConfig cfg(const PPoint1& a, const PPoint1& b, const PPoint1& c, const PPoint1& d) {
    return CircleConfig::from_points({a, b, c, d});
}
}

TEST_CASE("canonical invariant values") {
    CHECK(canonical_invariant(cfg(fin(-1), fin(0), fin(1), PPoint1::infinity())) == 2);
    CHECK(canonical_invariant(cfg(fin(-1), fin(0), fin(6), PPoint1::infinity())) ==
          Rational(7, 6));
    CHECK(canonical_invariant(cfg(fin(-1), fin(0), fin(2), PPoint1::infinity())) ==
          Rational(3, 2));
    CHECK(canonical_invariant(cfg(fin(-1), fin(0), fin(1, 2), PPoint1::infinity())) ==
          Rational(3, 2));
    CHECK_THROWS_AS(CircleConfig::from_points({fin(0), fin(0), fin(1), fin(2)}), NotDistinct);
}

TEST_CASE("invariant range is (1, 2]") {
    for (int n = 1; n <= 40; ++n) {
        const Rational c =
            canonical_invariant(cfg(fin(-1), fin(0), fin(n, 3), PPoint1::infinity()));
        CHECK(c > 1);
        CHECK(c <= 2);
    }
}

TEST_CASE("equivalence with witnesses") {
    const CircleConfig base = cfg(fin(-1), fin(0), fin(2), PPoint1::infinity());
    // image under u -> u + 5
    const Mobius t(1, 5, 0, 1);
    const CircleConfig moved = cfg(t(fin(-1)), t(fin(0)), t(fin(2)), t(PPoint1::infinity()));
    const EquivalenceWitness w1 = are_equivalent(base, moved);
    REQUIRE(w1.equivalent);
    REQUIRE(w1.witness.has_value());
    CHECK(w1.witness->orientation() > 0);

    const EquivalenceWitness w2 =
        are_equivalent(base, cfg(fin(-1), fin(0), fin(1, 2), PPoint1::infinity()));
    REQUIRE(w2.equivalent);
    REQUIRE(w2.witness.has_value());
    CHECK(w2.witness->orientation() > 0);

    const EquivalenceWitness w3 =
        are_equivalent(cfg(fin(-1), fin(0), fin(1), PPoint1::infinity()),
                       cfg(fin(-1), fin(0), fin(6), PPoint1::infinity()));
    CHECK(!w3.equivalent);
}

TEST_CASE("witness maps the configuration exactly") {
    const CircleConfig c1 = cfg(fin(-1), fin(0), fin(2), PPoint1::infinity());
    const CircleConfig c2 = cfg(fin(-1), fin(0), fin(1, 2), PPoint1::infinity());
    const EquivalenceWitness w = are_equivalent(c1, c2);
    REQUIRE(w.equivalent);
    // the witness carries the point set of c1 onto the point set of c2
    for (const auto& p : c1.points) {
        const PPoint1 img = (*w.witness)(p);
        bool hit = false;
        for (const auto& q : c2.points) hit = hit || img == q;
        CHECK(hit);
    }
}

TEST_CASE("family modulus") {
    const FamilyParams witness{Rational(6), {Rational(0), Rational(53, 12), Rational(-70, 3)}};
    CHECK(family_modulus(witness) == Rational(7, 6));
    CHECK_THROWS_AS(family_modulus(FamilyParams{Rational(6), {0, 0, 0}}), StarFails);

    // depends only on a, symmetric under a -> 1/a at the invariant level
    const FamilyParams f = sample_star_family(5);
    const Rational m = family_modulus(f);
    const Rational direct =
        std::min(Rational(1) + f.a, (Rational(1) + f.a) / f.a);
    CHECK(m == direct);
    CHECK(canonical_invariant(cfg(fin(-1), fin(0), PPoint1::finite(1 / f.a),
                                  PPoint1::infinity())) == m);
}
