#pragma once

#include <optional>
#include <string>

#include "mtq/poly.hpp"

namespace mtq {

// A real algebraic number: a squarefree defining polynomial together with an
// isolating interval containing exactly this root. Rational values collapse
// to a point interval.
class AlgebraicReal {
public:
    AlgebraicReal() : AlgebraicReal(Rational(0)) {}
    explicit AlgebraicReal(const Rational& value);
    AlgebraicReal(PolyQ minimal, Rational lo, Rational hi);

    const PolyQ& minimal_poly() const { return minpoly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    bool is_rational() const { return lo_ == hi_; }
    // Only valid when is_rational().
    const Rational& rational_value() const { return lo_; }

    void refine() const;                       // halve the interval
    void refine_below(const Rational& width) const;

    double approx() const;

    int compare(const Rational& r) const;      // -1, 0, +1
    int compare(const AlgebraicReal& other) const;
    int sgn() const { return compare(Rational(0)); }

    bool operator==(const Rational& r) const { return compare(r) == 0; }
    bool operator<(const Rational& r) const { return compare(r) < 0; }
    bool operator>(const Rational& r) const { return compare(r) > 0; }
    bool operator==(const AlgebraicReal& o) const { return compare(o) == 0; }

    // Exact test of p(alpha) == 0.
    bool is_root_of(const PolyQ& p) const;

    // Exact sign of p(alpha).
    int sign_of(const PolyQ& p) const;

    std::string to_string() const;

private:
    PolyQ minpoly_; // squarefree, nonzero at interval endpoints unless point
    mutable Rational lo_, hi_;
};

} // namespace mtq
