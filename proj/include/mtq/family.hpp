#pragma once

#include <optional>

#include "mtq/algebraic_real.hpp"
#include "mtq/binary_form.hpp"
#include "mtq/projective.hpp"

namespace mtq {

// The quartic family {y2 y3 + Q(y0, y1)}^2 - y0 y1 (y0 + y1)(y0 - a y1) = 0.
struct FamilyParams {
    Rational a;                      // positive
    std::array<Rational, 3> q;       // Q = q[0] y0^2 + q[1] y0 y1 + q[2] y1^2

    PolyQ q_dehom() const { return PolyQ({q[2], q[1], q[0]}); } // Q(u, 1)
    BinaryForm q_form() const { return BinaryForm(2, q_dehom()); }
    // P = y0 y1 (y0 + y1)(y0 - a y1), dehomogenized u (u + 1)(u - a)
    PolyQ p_dehom() const;
    BinaryForm p_form() const { return BinaryForm(4, p_dehom()); }
    // R = Q^2 - P as a degree-4 binary form
    BinaryForm r_form() const { return BinaryForm(4, q_dehom() * q_dehom() - p_dehom()); }
};

enum class DoubleRootInterval { NegUnit, AboveA }; // (-1, 0) vs (a, inf)

struct StarVerdict {
    bool holds = false;
    std::optional<AlgebraicReal> lambda0;
    std::optional<DoubleRootInterval> interval;
    std::vector<RealRoot> real_roots; // full real projective root profile of R
};

StarVerdict check_star(const FamilyParams& params);

struct NormalizationRecord {
    Mobius transform;        // action on (y0 : y1)
    Rational quartic_scale;  // c with P_a(T^{-1} y) = c * P_{a'}(y); a positive square
    Rational y23_scale;      // sqrt(c), absorbed into (y2, y3)
    bool identity = false;
};

// Move the double root into (a', inf) by a real projective transform of
// (y0, y1) permuting the branch set {0, -1, inf, a}.
std::pair<FamilyParams, NormalizationRecord> normalize_family(const FamilyParams& params);

// Transport a family through a Mobius map carrying {0,-1,inf,a} onto
// {0,-1,inf,a'}; throws NoAdmissibleTransform when the quartic scale is not
// a positive rational square.
std::pair<FamilyParams, NormalizationRecord> transport_family(const FamilyParams& params,
                                                              const Mobius& t);

// Gradient of f = (y2 y3 + Q)^2 - P at a rational point.
std::array<Rational, 4> surface_gradient(const FamilyParams& params, const PPoint3& p);

// Value of f at a rational point.
Rational surface_value(const FamilyParams& params, const PPoint3& p);

struct SingularPoints {
    PPoint3 p_infinity;      // (0, 0, 0, 1)
    PPoint3 p_bar_infinity;  // (0, 0, 1, 0)
    AlgebraicReal lambda0;   // P_0 = (lambda0, 1, 0, 0)
    bool certified = false;  // all four partials vanish at each point, exactly
    std::array<int, 3> hessian_ranks{0, 0, 0}; // reported, not asserted
};

SingularPoints singular_points(const FamilyParams& params);

// Image of psi: (y0, y1, y2, y3) -> (y0^2, y1^2, y0 y1, y2 y3).
struct ConePoint {
    std::array<Rational, 4> z; // satisfies z0 z1 = z2^2
    bool has_chart = false;    // chart (u, zeta) = (z2/z1, z3/z1) when z1 != 0
    Rational u, zeta;
};

ConePoint quotient_map_psi(const PPoint3& p);

// Real structure on the cone chart; trivial on rational points.
ConePoint cone_real_structure(const ConePoint& q);

} // namespace mtq
