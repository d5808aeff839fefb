#include <doctest.h>

#include <nlohmann/json.hpp>

#include "mtq/json_io.hpp"

using namespace mtq;

TEST_CASE("rational and point encodings") {
    CHECK(rational_to_json(Rational(53, 12)) == Json("53/12"));
    CHECK(rational_from_json(Json("-70/3")) == Rational(-70, 3));
    CHECK(point1_to_json(PPoint1::infinity()) == Json("inf"));
    CHECK(point1_from_json(Json("inf")) == PPoint1::infinity());
    CHECK(point1_from_json(point1_to_json(PPoint1::finite(Rational(7, 6)))) ==
          PPoint1::finite(Rational(7, 6)));
}

TEST_CASE("polynomial encoding is descending with stated degree") {
    const PolyQ p(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}); // u^2 - 1
    const Json j = poly_to_json(p);
    CHECK(j["degree"] == 2);
    CHECK(j["coeffs"] == Json::array({"1", "0", "-1"}));
    CHECK(poly_from_json(j) == p);
    // formal-degree padding
    const Json padded = poly_to_json(p, 4);
    CHECK(padded["coeffs"].size() == 5);
    CHECK(poly_from_json(padded) == p);
}

TEST_CASE("family encoding matches the documented shape") {
    const FamilyParams witness{Rational(6), {Rational(0), Rational(53, 12), Rational(-70, 3)}};
    const Json j = family_to_json(witness);
    CHECK(j["a"] == Json("6"));
    CHECK(j["q"] == Json::array({"0", "53/12", "-70/3"}));
    const FamilyParams back = family_from_json(j);
    CHECK(back.a == witness.a);
    CHECK(back.q == witness.q);

    const Json star = star_to_json(check_star(witness));
    CHECK(star["star"] == true);
    CHECK(star["double_root"] == Json("8"));
    CHECK(star["interval"] == Json("(a,inf)"));
}

TEST_CASE("cone curve round-trip and output determinism") {
    const FamilyParams witness{Rational(6), {Rational(0), Rational(53, 12), Rational(-70, 3)}};
    const ConeCurve b = branch_curve(witness);
    const Json j = cone_curve_to_json(b);
    const ConeCurve back = cone_curve_from_json(j);
    CHECK(back.A == b.A);
    CHECK(back.b == b.b);
    CHECK(back.c == b.c);
    CHECK(j.dump(2) == cone_curve_to_json(branch_curve(witness)).dump(2));
}
