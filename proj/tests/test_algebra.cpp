#include <doctest.h>

#include <random>

#include "mtq/binary_form.hpp"
#include "mtq/poly2.hpp"

using namespace mtq;

namespace {

PolyQ P(std::initializer_list<int> ascending) {
    std::vector<Rational> c;
    for (int v : ascending) c.emplace_back(v);
    return PolyQ(std::move(c));
}

BinaryForm random_form(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    const int d = deg(rng);
    for (;;) {
        std::vector<Rational> c(static_cast<size_t>(d) + 1);
        for (auto& v : c) v = coeff(rng);
        PolyQ p(std::move(c));
        if (!p.is_zero()) return BinaryForm(d, p);
    }
}

} // namespace

TEST_CASE("rational parsing and exact square roots") {
    CHECK(parse_rational("53/12") == Rational(53, 12));
    CHECK(parse_rational("-70/3") == Rational(-70, 3));
    CHECK(parse_rational("8") == 8);
    CHECK(format_rational(Rational(7, 6)) == "7/6");
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK(rational_sqrt_exact(Rational(49, 36)) == Rational(7, 6));
    CHECK(!rational_sqrt_exact(Rational(2)).has_value());
}

TEST_CASE("polynomial arithmetic, division and gcd") {
    const PolyQ a = P({-1, 0, 1});      // u^2 - 1
    const PolyQ b = P({1, 1});          // u + 1
    auto [q, r] = divmod(a, b);
    CHECK(q == P({-1, 1}));
    CHECK(r.is_zero());
    CHECK(poly_gcd(a, b) == monic(b));
    CHECK(squarefree_part(b * b * a) == monic(a)); // (u+1)^3 (u-1) -> (u+1)(u-1)
    const auto dec = squarefree_decomposition(b * b * a);
    // (u+1)^2 (u^2-1) = (u-1) * (u+1)^3
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == P({-1, 1}));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == P({1, 1}));
    CHECK(dec[1].second == 3);
}

TEST_CASE("resultants and elimination") {
    // eliminate z from z - u^2 and z - 1  ->  u^2 - 1 up to sign
    const Poly2 f(std::vector<PolyQ>{-P({0, 0, 1}), P({1})});
    const Poly2 g(std::vector<PolyQ>{P({-1}), P({1})});
    const PolyQ res = resultant_eliminate_z(f, g);
    CHECK((res == P({-1, 0, 1}) || res == P({1, 0, -1})));

    // z^2 and z - u  ->  u^2
    const Poly2 f2(std::vector<PolyQ>{PolyQ(), PolyQ(), P({1})});
    const Poly2 g2(std::vector<PolyQ>{-P({0, 1}), P({1})});
    CHECK(monic(resultant_eliminate_z(f2, g2)) == P({0, 0, 1}));

    // degree 0 in the eliminated variable
    const Poly2 h(std::vector<PolyQ>{P({1, 1})});
    CHECK_THROWS_AS(resultant_eliminate_z(h, g2), DegenerateElimination);

    CHECK(resultant(P({-1, 1}), P({1, 1})) != 0);
    CHECK(resultant(P({-1, 1}), P({-1, 1}) * P({5, 3})) == 0);
}

TEST_CASE("real root isolation of binary forms") {
    // u^2 as a degree-2 form: root 0 with multiplicity 2
    const auto r1 = isolate_real_roots(BinaryForm(2, P({0, 0, 1})));
    REQUIRE(r1.size() == 1);
    CHECK(std::get<AlgebraicReal>(r1[0].where) == Rational(0));
    CHECK(r1[0].multiplicity == 2);

    // y0 y1 (y0 + y1)(y0 - 6 y1): roots {0, -1, 6, inf}, all simple
    const PolyQ quartic = P({0, 1}) * P({1, 1}) * P({-6, 1}); // u(u+1)(u-6)
    const auto r2 = isolate_real_roots(BinaryForm(4, quartic));
    REQUIRE(r2.size() == 4);
    CHECK(std::get<AlgebraicReal>(r2[0].where) == Rational(-1));
    CHECK(std::get<AlgebraicReal>(r2[1].where) == Rational(0));
    CHECK(std::get<AlgebraicReal>(r2[2].where) == Rational(6));
    CHECK(is_infinity(r2[3].where));
    for (const auto& r : r2) CHECK(r.multiplicity == 1);

    // 144u^3 - 3529u^2 + 28816u - 78400 as a degree-4 form:
    // 8 (mult 2), 1225/144 (mult 1), inf (mult 1)
    const PolyQ cubic = P({-78400, 28816, -3529, 144});
    CHECK(cubic == P({-8, 1}) * P({-8, 1}) * P({-1225, 144}));
    const auto r3 = isolate_real_roots(BinaryForm(4, cubic));
    REQUIRE(r3.size() == 3);
    CHECK(std::get<AlgebraicReal>(r3[0].where) == Rational(8));
    CHECK(r3[0].multiplicity == 2);
    CHECK(std::get<AlgebraicReal>(r3[1].where) == Rational(1225, 144));
    CHECK(r3[1].multiplicity == 1);
    CHECK(is_infinity(r3[2].where));
    CHECK(r3[2].multiplicity == 1);

    CHECK_THROWS_AS(isolate_real_roots(BinaryForm(3, PolyQ())), ZeroForm);
}

TEST_CASE("root multiplicity sum matches the Sturm count when all roots are real") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const BinaryForm f = random_form(rng, 8);
        int total = 0;
        for (const auto& r : isolate_real_roots(f)) total += r.multiplicity;
        CHECK(total <= f.deg);
        const PolyQ sf = squarefree_part(f.p);
        const auto chain = sturm_chain(sf);
        const Rational bound = root_bound(sf);
        CHECK(sturm_count(chain, -bound, bound) ==
              static_cast<int>(isolate_real_roots(BinaryForm(sf.degree(), sf)).size()));
    }
}

TEST_CASE("double-root profile and reassembly") {
    // (u-8)^2 (144u - 1225) with a simple root at infinity
    const PolyQ cubic = P({-78400, 28816, -3529, 144});
    const auto profile = double_root_profile(BinaryForm(4, cubic));
    bool saw_double = false, saw_inf = false;
    for (const auto& f : profile.factors) {
        if (f.exponent == 2) {
            saw_double = true;
            CHECK(f.factor.p == P({-8, 1}));
        }
        if (f.factor.infinity_multiplicity() > 0) saw_inf = true;
    }
    CHECK(saw_double);
    CHECK(saw_inf);

    // u^4 -> single factor u with exponent 4
    const auto pure = double_root_profile(BinaryForm(4, P({0, 0, 0, 0, 1})));
    REQUIRE(pure.factors.size() == 1);
    CHECK(pure.factors[0].exponent == 4);
    CHECK(pure.factors[0].factor.p == P({0, 1}));

    // reassembly: constant * prod factor^exp == f, 200 random forms of degree <= 8
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const BinaryForm f = random_form(rng, 8);
        const auto prof = double_root_profile(f);
        BinaryForm acc(0, P({1}));
        for (const auto& fac : prof.factors)
            for (int e = 0; e < fac.exponent; ++e) acc = acc * fac.factor;
        CHECK(acc * prof.constant == f);
    }
}

TEST_CASE("perfect-square detection") {
    // s^8 -> s^4
    const auto sq1 = is_perfect_square(BinaryForm(8, P({0, 0, 0, 0, 0, 0, 0, 0, 1})));
    REQUIRE(sq1.has_value());
    CHECK(sq1->root.p == P({0, 0, 0, 0, 1}));
    CHECK(sq1->constant == 1);

    // (s^4 - 1)^2 expanded
    const PolyQ g = P({-1, 0, 0, 0, 1});
    const auto sq2 = is_perfect_square(BinaryForm(8, g * g));
    REQUIRE(sq2.has_value());
    CHECK((sq2->root.p == monic(g) || sq2->root.p == -monic(g)));

    // s^8 + 1 is squarefree
    CHECK(!is_perfect_square(BinaryForm(8, P({1, 0, 0, 0, 0, 0, 0, 0, 1}))).has_value());

    // 200 random squares round-trip up to sign and constant
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const BinaryForm h = random_form(rng, 4);
        const auto back = is_perfect_square(h * h);
        REQUIRE(back.has_value());
        const BinaryForm reassembled = back->root * back->root * back->constant;
        CHECK(reassembled == h * h);
    }
}

TEST_CASE("algebraic reals compare exactly") {
    // sqrt(2) as a root of u^2 - 2 in (1, 2)
    const AlgebraicReal s2(P({-2, 0, 1}), 1, 2);
    CHECK(!s2.is_rational());
    CHECK(s2 > Rational(7, 5));
    CHECK(s2 < Rational(3, 2));
    CHECK(s2.is_root_of(P({-2, 0, 1})));
    CHECK(s2.sign_of(P({-2, 0, 1})) == 0);
    CHECK(s2.sign_of(P({-1, 1})) > 0);
    const AlgebraicReal r(Rational(8));
    CHECK(r.is_rational());
    CHECK(r.rational_value() == 8);
    CHECK(r.compare(s2) > 0);
}
