#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "mtq/algebraic_real.hpp"
#include "mtq/poly.hpp"

namespace mtq {

// Homogeneous form of degree d in (y0, y1) with rational coefficients.
// Stored dehomogenized at y1 = 1 as a polynomial in u = y0/y1; the root at
// infinity (1 : 0) has multiplicity d - deg p.
struct BinaryForm {
    int deg = 0;
    PolyQ p; // p(u) = F(u, 1)

    BinaryForm() = default;
    BinaryForm(int degree, PolyQ dehom) : deg(degree), p(std::move(dehom)) {
        if (!p.is_zero() && p.degree() > deg) throw Error("coefficients exceed stated degree");
    }

    // From coefficients descending in y0: c[0] y0^d + c[1] y0^{d-1} y1 + ...
    static BinaryForm from_descending(const std::vector<Rational>& c);
    std::vector<Rational> descending_coeffs() const;

    bool is_zero() const { return p.is_zero(); }
    int infinity_multiplicity() const { return is_zero() ? 0 : deg - p.degree(); }
    Rational eval(const Rational& y0, const Rational& y1) const;

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        return BinaryForm(a.deg + b.deg, a.p * b.p);
    }
    friend BinaryForm operator*(const BinaryForm& a, const Rational& s) {
        return BinaryForm(a.deg, a.p * s);
    }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.deg == b.deg && a.p == b.p;
    }
};

// A real projective root: either a finite real algebraic number or (1 : 0).
struct ProjectiveInfinity {
    friend bool operator==(ProjectiveInfinity, ProjectiveInfinity) { return true; }
};
using RootLocation = std::variant<AlgebraicReal, ProjectiveInfinity>;

inline bool is_infinity(const RootLocation& r) {
    return std::holds_alternative<ProjectiveInfinity>(r);
}

struct RealRoot {
    RootLocation where;
    int multiplicity;
};

// All real projective roots of f with multiplicities, ascending with the
// infinity root last.
std::vector<RealRoot> isolate_real_roots(const BinaryForm& f);

// Squarefree decomposition of f over Q, as binary forms. The infinity root
// appears as the degree-1 form "y1" (dehomogenized constant 1). The product
// of factor^exponent equals f up to a nonzero rational constant, returned
// alongside.
struct SquarefreeFactor {
    BinaryForm factor;
    int exponent;
};
struct DoubleRootProfile {
    std::vector<SquarefreeFactor> factors;
    Rational constant; // f = constant * prod factor^exponent
};
DoubleRootProfile double_root_profile(const BinaryForm& f);

// If f = c * g^2 with c a positive rational, returns (g, c).
struct PerfectSquare {
    BinaryForm root;
    Rational constant;
};
std::optional<PerfectSquare> is_perfect_square(const BinaryForm& f);

} // namespace mtq
