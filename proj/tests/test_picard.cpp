#include <doctest.h>

#include <random>

#include "mtq/picard.hpp"

using namespace mtq;

TEST_CASE("intersection pairing") {
    const DivisorClass mk = DivisorClass::anticanonical();
    CHECK(intersect(mk, mk) == 4);
    for (int j = 0; j < 4; ++j)
        CHECK(intersect(DivisorClass::exceptional(j), DivisorClass::exceptional(j)) == -1);
    CHECK(intersect(DivisorClass::ruling(1, 0), DivisorClass::ruling(0, 1)) == 1);
    CHECK(intersect(DivisorClass::ruling(1, 0), DivisorClass::ruling(1, 0)) == 0);
    // exceptional(j) stores the n-vector entry, so its pairing with the
    // anticanonical class is -n_j = -1
    CHECK(intersect(mk, DivisorClass::exceptional(2)) == -1);
}

TEST_CASE("pairing is bilinear and symmetric") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> small(-5, 5);
    auto rnd = [&] {
        return DivisorClass{small(rng), small(rng),
                            {small(rng), small(rng), small(rng), small(rng)}};
    };
    for (int i = 0; i < 100; ++i) {
        const DivisorClass a = rnd(), b = rnd(), c = rnd();
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
    }
}

TEST_CASE("line classes are uniquely anticanonical") {
    const LineClassSolution sol = solve_line_classes();
    const DivisorClass mk = DivisorClass::anticanonical();
    CHECK(sol.solutions_found == 1);
    CHECK(sol.l1 == mk);
    CHECK(sol.l2 == mk);
    CHECK(intersect(sol.l1, sol.l2) == 4);
    // L1 + L2 = -2K = (4,4,2,2,2,2)
    const DivisorClass sum = sol.l1 + sol.l2;
    CHECK(sum == (mk + mk));
    CHECK(sol.candidates_searched > 0);
}
