#include "mtq/projective.hpp"

namespace mtq {

std::string format_point1(const PPoint1& p) {
    if (p.is_infinity()) return "inf";
    return format_rational(p.value());
}

PPoint1 parse_point1(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "-inf") return PPoint1::infinity();
    return PPoint1::finite(parse_rational(text));
}

Transform4 Transform4::identity() {
    Transform4 t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t.m[i][j] = (i == j) ? 1 : 0;
    return t;
}

Transform4 Transform4::cstar_action(const Rational& t) {
    if (t == 0) throw SingularTransform("C* parameter must be nonzero");
    return diagonal(1, 1, t, Rational(1) / t);
}

Transform4 Transform4::diagonal(const Rational& d0, const Rational& d1, const Rational& d2,
                                const Rational& d3) {
    Transform4 t = identity();
    t.m[0][0] = d0;
    t.m[1][1] = d1;
    t.m[2][2] = d2;
    t.m[3][3] = d3;
    return t;
}

PPoint3 Transform4::operator()(const PPoint3& p) const {
    if (det() == 0) throw SingularTransform();
    std::array<Rational, 4> out{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[static_cast<size_t>(i)] += m[i][j] * p.y[static_cast<size_t>(j)];
    return PPoint3(std::move(out));
}

Rational Transform4::det() const {
    // expansion by minors, 4x4
    auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    return m[0][0] * minor3(1, 2, 3, 1, 2, 3) - m[0][1] * minor3(1, 2, 3, 0, 2, 3) +
           m[0][2] * minor3(1, 2, 3, 0, 1, 3) - m[0][3] * minor3(1, 2, 3, 0, 1, 2);
}

PPoint1 cross_ratio(const PPoint1& p1, const PPoint1& p2, const PPoint1& p3, const PPoint1& p4) {
    const std::array<PPoint1, 4> pts{p1, p2, p3, p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (pts[static_cast<size_t>(i)] == pts[static_cast<size_t>(j)]) throw NotDistinct();
    auto d = [](const PPoint1& p, const PPoint1& q) { return p.a * q.b - q.a * p.b; };
    return PPoint1(d(p1, p3) * d(p2, p4), d(p1, p4) * d(p2, p3));
}

Mobius mobius_from_three_points(const std::array<PPoint1, 3>& src,
                                const std::array<PPoint1, 3>& dst) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (src[static_cast<size_t>(i)] == src[static_cast<size_t>(j)]) throw NotDistinct();
            if (dst[static_cast<size_t>(i)] == dst[static_cast<size_t>(j)]) throw NotDistinct();
        }
    // Matrix sending (p1, p2, p3) to (0, 1, inf):
    // rows built from cross products of homogeneous coordinates.
    auto standard = [](const std::array<PPoint1, 3>& p) {
        auto d = [](const PPoint1& x, const PPoint1& y) { return x.a * y.b - y.a * x.b; };
        // T(z) = (z - p1)(p2 - p3) / ((z - p3)(p2 - p1)) homogenized
        const Rational k1 = d(p[1], p[2]);
        const Rational k2 = d(p[1], p[0]);
        return Mobius(p[0].b * k1, -p[0].a * k1, p[2].b * k2, -p[2].a * k2);
    };
    const Mobius t1 = standard(src);
    const Mobius t2 = standard(dst);
    return t2.inverse() * t1;
}

PPoint3 sigma_CP3(const PPoint3& p) {
    return PPoint3(p.y[0], p.y[1], p.y[3], p.y[2]);
}

} // namespace mtq
