#include "mtq/json_io.hpp"

#include <nlohmann/json.hpp>

namespace mtq {

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a rational as \"p/q\" text");
    return parse_rational(j.get<std::string>());
}

Json poly_to_json(const PolyQ& p, int formal_deg) {
    const int d = std::max(formal_deg, std::max(p.degree(), 0));
    Json coeffs = Json::array();
    for (int i = d; i >= 0; --i) coeffs.push_back(format_rational(p.coeff(i)));
    return Json{{"degree", d}, {"coeffs", coeffs}};
}

PolyQ poly_from_json(const Json& j) {
    const Json& coeffs = j.is_object() ? j.at("coeffs") : j;
    if (!coeffs.is_array() || coeffs.empty()) throw ParseError("expected a coefficient array");
    std::vector<Rational> asc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        asc.push_back(rational_from_json(*it));
    return PolyQ(std::move(asc));
}

Json point1_to_json(const PPoint1& p) { return format_point1(p); }

PPoint1 point1_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a point as text");
    return parse_point1(j.get<std::string>());
}

Json family_to_json(const FamilyParams& params) {
    return Json{{"a", format_rational(params.a)},
                {"q", Json::array({format_rational(params.q[0]), format_rational(params.q[1]),
                                   format_rational(params.q[2])})}};
}

FamilyParams family_from_json(const Json& j) {
    const Json& q = j.at("q");
    if (!q.is_array() || q.size() != 3) throw ParseError("expected 3 Q coefficients");
    return FamilyParams{rational_from_json(j.at("a")),
                        {rational_from_json(q[0]), rational_from_json(q[1]),
                         rational_from_json(q[2])}};
}

Json star_to_json(const StarVerdict& v) {
    Json out{{"star", v.holds}};
    if (v.holds) {
        out["double_root"] = v.lambda0->is_rational()
                                 ? Json(format_rational(v.lambda0->rational_value()))
                                 : Json(v.lambda0->to_string());
        out["interval"] = *v.interval == DoubleRootInterval::AboveA ? "(a,inf)" : "(-1,0)";
    } else {
        out["double_root"] = nullptr;
        out["interval"] = nullptr;
    }
    Json roots = Json::array();
    for (const auto& r : v.real_roots) {
        Json e;
        e["root"] = is_infinity(r.where) ? Json("inf")
                                         : Json(std::get<AlgebraicReal>(r.where).to_string());
        e["multiplicity"] = r.multiplicity;
        roots.push_back(e);
    }
    out["real_roots"] = roots;
    return out;
}

Json cone_curve_to_json(const ConeCurve& curve) {
    Json b = Json::array(), c = Json::array();
    for (int i = 2; i >= 0; --i) b.push_back(format_rational(curve.b.coeff(i)));
    for (int i = 4; i >= 0; --i) c.push_back(format_rational(curve.c.coeff(i)));
    return Json{{"A", format_rational(curve.A)}, {"b", b}, {"c", c}};
}

ConeCurve cone_curve_from_json(const Json& j) {
    auto read = [](const Json& arr) {
        if (!arr.is_array() || arr.empty()) throw ParseError("expected a coefficient array");
        std::vector<Rational> asc;
        for (auto it = arr.rbegin(); it != arr.rend(); ++it)
            asc.push_back(rational_from_json(*it));
        return PolyQ(std::move(asc));
    };
    return ConeCurve{rational_from_json(j.at("A")), read(j.at("b")), read(j.at("c"))};
}

Json mobius_to_json(const Mobius& t) {
    return Json::array({Json::array({format_rational(t.m00), format_rational(t.m01)}),
                        Json::array({format_rational(t.m10), format_rational(t.m11)})});
}

namespace {

Json complex_to_json(const std::complex<double>& z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

} // namespace

Json conic_to_json(const PlaneConicF& conic) {
    Json plane = Json::array(), matrix = Json::array(), param = Json::array();
    for (double c : conic.plane) plane.push_back(c);
    for (const auto& row : conic.n) {
        Json r = Json::array();
        for (double c : row) r.push_back(c);
        matrix.push_back(r);
    }
    for (const auto& p : conic.param) {
        Json r = Json::array();
        for (int i = 2; i >= 0; --i) r.push_back(p.coeff(i));
        param.push_back(r);
    }
    return Json{{"plane", plane},
                {"pivot", conic.pivot},
                {"matrix", matrix},
                {"matrix_rank", conic.matrix_rank},
                {"param", param}};
}

Json contact_to_json(const ContactReport& report) {
    Json pts = Json::array();
    for (const auto& p : report.points) {
        Json e;
        e["at_infinity"] = p.at_infinity;
        if (!p.at_infinity) e["where"] = complex_to_json(p.where);
        e["multiplicity"] = p.multiplicity;
        pts.push_back(e);
    }
    return Json{{"points", pts}, {"total", report.total}, {"all_even", report.all_even}};
}

Json node_to_json(const NodeInfo& node) {
    Json out;
    out["at_infinity"] = node.at_infinity;
    if (!node.at_infinity) {
        out["u"] = complex_to_json(node.u);
        out["zeta"] = complex_to_json(node.zeta);
    }
    out["type"] = node.type == NodeType::Node ? "NODE" : "WORSE";
    return out;
}

std::string component_name(RealLocusComponent c) {
    switch (c) {
        case RealLocusComponent::T2Sphere: return "T2_SPHERE";
        case RealLocusComponent::T4Sphere: return "T4_SPHERE";
        default: return "EMPTY";
    }
}

} // namespace mtq
