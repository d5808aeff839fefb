#include <doctest.h>

#include <random>

#include "mtq/projective.hpp"

using namespace mtq;

namespace {
PPoint1 fin(int n, int d = 1) { return PPoint1::finite(Rational(n, d)); }
}

TEST_CASE("cross-ratio values") {
    CHECK(cross_ratio(fin(-1), fin(0), fin(1), PPoint1::infinity()) == fin(2));
    CHECK(cross_ratio(fin(-1), fin(0), fin(6), PPoint1::infinity()) == fin(7, 6));
    CHECK_THROWS_AS(cross_ratio(fin(0), fin(0), fin(1), fin(2)), NotDistinct);
}

TEST_CASE("cross-ratio is Mobius-invariant") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> small(-9, 9);
    int done = 0;
    while (done < 100) {
        std::array<PPoint1, 4> p;
        bool ok = true;
        for (int k = 0; k < 4; ++k) {
            p[static_cast<size_t>(k)] = fin(small(rng), 1 + (small(rng) & 3));
            for (int j = 0; j < k; ++j)
                if (p[static_cast<size_t>(j)] == p[static_cast<size_t>(k)]) ok = false;
        }
        if (!ok) continue;
        Mobius t;
        try {
            t = Mobius(small(rng), small(rng), small(rng), small(rng));
        } catch (const SingularTransform&) {
            continue;
        }
        CHECK(cross_ratio(t(p[0]), t(p[1]), t(p[2]), t(p[3])) ==
              cross_ratio(p[0], p[1], p[2], p[3]));
        ++done;
    }
}

TEST_CASE("mobius from three points") {
    const auto id = mobius_from_three_points({fin(0), fin(1), PPoint1::infinity()},
                                             {fin(0), fin(1), PPoint1::infinity()});
    CHECK(id.is_identity());

    // (0,1,inf) -> (1,0,inf) is u -> 1 - u
    const auto flip = mobius_from_three_points({fin(0), fin(1), PPoint1::infinity()},
                                               {fin(1), fin(0), PPoint1::infinity()});
    CHECK(flip(fin(5)) == fin(-4));
    CHECK(flip(PPoint1::infinity()) == PPoint1::infinity());

    // (-1,0,inf) -> (0,1,inf) is u -> u + 1
    const auto shift = mobius_from_three_points({fin(-1), fin(0), PPoint1::infinity()},
                                                {fin(0), fin(1), PPoint1::infinity()});
    CHECK(shift(fin(7)) == fin(8));
    CHECK_THROWS_AS(mobius_from_three_points({fin(0), fin(0), fin(1)},
                                             {fin(0), fin(1), fin(2)}),
                    NotDistinct);
}

TEST_CASE("projective transforms of CP^3") {
    const Transform4 id = Transform4::identity();
    const PPoint3 p(1, 2, 3, 4);
    CHECK(id(p) == p);

    // translation-type Mobius fixes infinity
    const Mobius t(1, 5, 0, 1);
    CHECK(t(PPoint1::infinity()) == PPoint1::infinity());

    // scaling action t = 2 on (1,1,1,1) -> (1,1,2,1/2)
    const Transform4 act = Transform4::cstar_action(2);
    CHECK(act(PPoint3(1, 1, 1, 1)) == PPoint3(1, 1, 2, Rational(1, 2)));
}

TEST_CASE("sigma swaps the last two coordinates") {
    CHECK(sigma_CP3(PPoint3(1, 1, 1, 1)) == PPoint3(1, 1, 1, 1));
    CHECK(sigma_CP3(PPoint3(0, 0, 0, 1)) == PPoint3(0, 0, 1, 0));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> small(-9, 9);
    for (int i = 0; i < 100; ++i) {
        PPoint3 p;
        try {
            p = PPoint3(small(rng), small(rng), small(rng), small(rng));
        } catch (const Error&) {
            continue;
        }
        CHECK(sigma_CP3(sigma_CP3(p)) == p);
    }
}

TEST_CASE("orientation flag is multiplicative") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> small(-9, 9);
    for (int i = 0; i < 100; ++i) {
        Mobius s, t;
        try {
            s = Mobius(small(rng), small(rng), small(rng), small(rng));
            t = Mobius(small(rng), small(rng), small(rng), small(rng));
        } catch (const SingularTransform&) {
            continue;
        }
        CHECK((s * t).orientation() == s.orientation() * t.orientation());
    }
}

TEST_CASE("point formatting round-trips") {
    CHECK(parse_point1("inf") == PPoint1::infinity());
    CHECK(parse_point1("7/6") == fin(7, 6));
    CHECK(format_point1(PPoint1::infinity()) == "inf");
    CHECK(parse_point1(format_point1(fin(-13, 4))) == fin(-13, 4));
}
