#pragma once

#include <complex>

#include "mtq/family.hpp"
#include "mtq/poly2.hpp"

namespace mtq {

// Curve A zeta^2 + b(u) zeta + c(u) = 0 on the O(2)-chart of the quadric
// cone; anticanonical (and disjoint from the cone node) iff A != 0.
template <class K>
struct ConeCurveT {
    K A = K(1);
    Poly<K> b, c;

    bool anticanonical() const { return !(A == K(0)); }
    bool shape_ok() const { return b.degree() <= 2 && c.degree() <= 4; }

    // Scale so that the zeta^2 coefficient is one.
    ConeCurveT normalized() const {
        if (A == K(0)) throw NotDoubleCover("curve has no zeta^2 term");
        return ConeCurveT{K(1), b / A, c / A};
    }
    // zeta-discriminant b^2 - 4 c of the normalized curve.
    Poly<K> discriminant() const {
        const auto n = normalized();
        return n.b * n.b - n.c * K(4);
    }
    Poly2T<K> implicit() const {
        return Poly2T<K>(std::vector<Poly<K>>{c, b, Poly<K>::constant(A)});
    }
};

using ConeCurve = ConeCurveT<Rational>;
using ConeCurveF = ConeCurveT<double>;

ConeCurveF to_float(const ConeCurve& curve);

// The branch curve of Lemma-type form: zeta^2 + 2 Q(u,1) zeta + (Q(u,1)^2 - u(u+1)(u-a)).
// Checks condition (*) unless force is set.
ConeCurve branch_curve(const FamilyParams& params, bool force = false);

// Roots of the zeta-discriminant as a degree-4 binary form, infinity included.
std::vector<RealRoot> branch_points_over_line(const ConeCurve& curve);

struct EllipticInvariants {
    std::array<PPoint1, 4> branch;
    Rational lambda;  // Legendre lambda for the canonical labeling
    Rational j;       // 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)
};

Rational j_from_lambda(const Rational& lambda);

// Branch points labeled ascending with infinity last; the first three are
// sent to (0, 1, inf) and lambda is the image of the fourth. The j-invariant
// is checked to agree across all 24 labelings.
EllipticInvariants elliptic_invariants(const std::array<PPoint1, 4>& branch);

// j-invariant of the branch curve; depends only on a:
// j = 256 (a^2 + a + 1)^3 / (a^2 (a + 1)^2).
Rational family_j_invariant(const FamilyParams& params);
Rational j_closed_form(const Rational& a);

// u-values of the degenerate fibers of the double cover: {-1, 0, a, inf}.
std::vector<PPoint1> reducible_fibers(const FamilyParams& params);

struct QShift {
    std::array<Rational, 3> d; // d0 + d1 u + d2 u^2
    bool verified = false;     // exact polynomial identity of the two branch curves
};

QShift q_shift_isomorphism(const FamilyParams& p1, const FamilyParams& p2);

enum class RealLocusComponent { T2Sphere, T4Sphere, Empty };

RealLocusComponent real_locus_classify(const FamilyParams& params, const PPoint1& u);

struct RealLocusSample {
    PPoint1 u;
    double zeta; // one sign; the mirror point is (u, -zeta)
    RealLocusComponent component;
};

std::vector<RealLocusSample> sample_real_locus(const FamilyParams& params, int n_per_component,
                                               uint64_t seed);

} // namespace mtq
