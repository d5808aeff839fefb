#pragma once

#include <array>

#include "mtq/rational.hpp"

namespace mtq {

// Point of RP^1 with rational homogeneous coordinates (a : b); (1 : 0) is inf.
struct PPoint1 {
    Rational a, b;

    PPoint1() : a(0), b(1) {}
    PPoint1(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0 && b == 0) throw Error("(0 : 0) is not a projective point");
    }
    static PPoint1 infinity() { return PPoint1(1, 0); }
    static PPoint1 finite(const Rational& v) { return PPoint1(v, 1); }

    bool is_infinity() const { return b == 0; }
    Rational value() const {
        if (is_infinity()) throw Error("value() of the point at infinity");
        return a / b;
    }
    friend bool operator==(const PPoint1& p, const PPoint1& q) {
        return p.a * q.b == q.a * p.b;
    }
    friend bool operator!=(const PPoint1& p, const PPoint1& q) { return !(p == q); }
};

std::string format_point1(const PPoint1& p);
PPoint1 parse_point1(const std::string& text);

// Point of CP^3 restricted to real (rational) coordinates.
struct PPoint3 {
    std::array<Rational, 4> y;

    PPoint3() : y{Rational(1), Rational(0), Rational(0), Rational(0)} {}
    explicit PPoint3(std::array<Rational, 4> y_) : y(std::move(y_)) {
        if (y[0] == 0 && y[1] == 0 && y[2] == 0 && y[3] == 0)
            throw Error("all-zero quadruple is not a projective point");
    }
    PPoint3(Rational y0, Rational y1, Rational y2, Rational y3)
        : PPoint3(std::array<Rational, 4>{std::move(y0), std::move(y1), std::move(y2), std::move(y3)}) {}

    friend bool operator==(const PPoint3& p, const PPoint3& q) {
        // cross-multiplication over all coordinate pairs
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p.y[i] * q.y[j] != p.y[j] * q.y[i]) return false;
        return true;
    }
    friend bool operator!=(const PPoint3& p, const PPoint3& q) { return !(p == q); }
};

// Rational 2x2 matrix acting on RP^1 by fractional-linear maps.
struct Mobius {
    Rational m00, m01, m10, m11;

    Mobius() : m00(1), m01(0), m10(0), m11(1) {}
    Mobius(Rational a, Rational b, Rational c, Rational d)
        : m00(std::move(a)), m01(std::move(b)), m10(std::move(c)), m11(std::move(d)) {
        if (det() == 0) throw SingularTransform();
    }

    Rational det() const { return m00 * m11 - m01 * m10; }
    int orientation() const { return sign(det()); }

    PPoint1 operator()(const PPoint1& p) const {
        return PPoint1(m00 * p.a + m01 * p.b, m10 * p.a + m11 * p.b);
    }
    Mobius inverse() const { return Mobius(m11, -m01, -m10, m00); }
    friend Mobius operator*(const Mobius& s, const Mobius& t) {
        return Mobius(s.m00 * t.m00 + s.m01 * t.m10, s.m00 * t.m01 + s.m01 * t.m11,
                      s.m10 * t.m00 + s.m11 * t.m10, s.m10 * t.m01 + s.m11 * t.m11);
    }
    bool is_identity() const {
        return m01 == 0 && m10 == 0 && m00 == m11;
    }
};

// 4x4 rational projective transform of CP^3.
struct Transform4 {
    std::array<std::array<Rational, 4>, 4> m;

    static Transform4 identity();
    static Transform4 cstar_action(const Rational& t); // diag(1, 1, t, 1/t)
    static Transform4 diagonal(const Rational& d0, const Rational& d1, const Rational& d2,
                               const Rational& d3);
    PPoint3 operator()(const PPoint3& p) const;
    Rational det() const;
};

// [p1, p2; p3, p4] = ((p1-p3)(p2-p4)) / ((p1-p4)(p2-p3)), projectively.
PPoint1 cross_ratio(const PPoint1& p1, const PPoint1& p2, const PPoint1& p3, const PPoint1& p4);

// The unique Mobius map with T(src[i]) = dst[i].
Mobius mobius_from_three_points(const std::array<PPoint1, 3>& src,
                                const std::array<PPoint1, 3>& dst);

// Real structure of CP^3: (y0, y1, y2, y3) -> (conj y0, conj y1, conj y3, conj y2);
// on rational (real) points the conjugation is trivial and only the swap acts.
PPoint3 sigma_CP3(const PPoint3& p);

} // namespace mtq
