#pragma once

#include <complex>
#include <cstdint>

#include "mtq/binary_form.hpp"
#include "mtq/cone.hpp"
#include "mtq/family.hpp"

namespace mtq {

// Conic in the plane alpha y0 + beta y1 + gamma y2 + delta y3 = 0, carried
// around as a symmetric matrix in plane coordinates together with a degree-2
// parametrization s -> CP^3. Plane coordinates are the three coordinates
// other than the pivot; the pivot coordinate is solved from the plane
// equation.
template <class K>
struct PlaneConicT {
    std::array<K, 4> plane{};
    int pivot = 3;
    std::array<std::array<K, 3>, 3> n{}; // symmetric conic matrix
    std::array<Poly<K>, 4> param;        // y(s), one quadratic per coordinate
    int matrix_rank = 0;

    std::array<K, 3> project(const std::array<K, 4>& y) const {
        std::array<K, 3> x;
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != pivot) x[static_cast<size_t>(k++)] = y[static_cast<size_t>(i)];
        return x;
    }
    std::array<K, 4> embed(const std::array<K, 3>& x) const {
        std::array<K, 4> y;
        K acc(0);
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != pivot) {
                y[static_cast<size_t>(i)] = x[static_cast<size_t>(k++)];
                acc = acc + plane[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
            }
        y[static_cast<size_t>(pivot)] = -acc / plane[static_cast<size_t>(pivot)];
        return y;
    }
    K q_value(const std::array<K, 3>& x) const {
        K acc(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                acc = acc + x[static_cast<size_t>(i)] * n[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                x[static_cast<size_t>(j)];
        return acc;
    }
    std::array<K, 4> point_at(const K& s) const {
        return {param[0].eval(s), param[1].eval(s), param[2].eval(s), param[3].eval(s)};
    }
};

using PlaneConicQ = PlaneConicT<Rational>;
using PlaneConicF = PlaneConicT<double>;

PlaneConicF to_float(const PlaneConicQ& conic);

// Build from three quadratics in plane coordinates; embeds the
// parametrization, fits the symmetric matrix to it and validates.
PlaneConicQ make_plane_conic(const std::array<Rational, 4>& plane,
                             const std::array<PolyQ, 3>& x);
PlaneConicF make_plane_conic(const std::array<double, 4>& plane,
                             const std::array<Poly<double>, 3>& x, double tol = 1e-9);

// Restriction of the family quartic to the parametrization: a binary form of
// degree 8 in s. The zero form means the conic lies inside the surface.
BinaryForm restrict_surface_to_conic(const FamilyParams& params, const PlaneConicQ& conic);
// Float variant; formal degree 8, coefficients ascending, size 9.
std::array<double, 9> restrict_surface_to_conic(const FamilyParams& params,
                                                const PlaneConicF& conic);

// One intersection point with its multiplicity; `where` is the parameter on
// the relevant line (s for conics, u on the cone), complex in general.
struct ContactPoint {
    std::complex<double> where;
    bool at_infinity = false;
    int multiplicity = 1;
};
struct ContactReport {
    std::vector<ContactPoint> points;
    int total = 0;
    bool all_even = false;
};

struct TouchingVerdict {
    bool touching = false;
    double defect = 0; // perfect-square defect; exactly 0 on the exact path
    ContactReport report;
};

TouchingVerdict is_touching(const FamilyParams& params, const PlaneConicQ& conic);
TouchingVerdict is_touching(const FamilyParams& params, const PlaneConicF& conic,
                            double tol_defect = 1e-10, double cluster_radius = 1e-6);

// Gauss-Newton search for a touching conic in the given plane; deterministic
// for a fixed seed. The returned conic passes is_touching at tol_defect.
PlaneConicF find_touching_conic(const FamilyParams& params, const std::array<double, 4>& plane,
                                uint64_t seed, double tol_defect = 1e-10);

// The reflection (y0, y1, y2, y3) -> (y0, y1, (delta/gamma) y3, (gamma/delta) y2);
// preserves the plane and every psi-fiber through it.
template <class K>
struct ReflectionT {
    K r23, r32; // y2 <- r23 * y3, y3 <- r32 * y2
    std::array<K, 4> operator()(const std::array<K, 4>& y) const {
        return {y[0], y[1], r23 * y[3], r32 * y[2]};
    }
};
using ReflectionQ = ReflectionT<Rational>;
using ReflectionF = ReflectionT<double>;

ReflectionQ reflection_involution(const std::array<Rational, 4>& plane);
ReflectionF reflection_involution(const std::array<double, 4>& plane);
PPoint3 reflect(const ReflectionQ& iota, const PPoint3& p);

bool is_symmetric_conic(const PlaneConicQ& conic);
bool is_symmetric_conic(const PlaneConicF& conic, double tol = 1e-8);

// Implicit equation of psi(conic) on the cone chart, normalized to
// zeta^2 + b(u) zeta + c(u); requires the conic to be non-symmetric and to
// avoid the line {y0 = y1 = 0}.
ConeCurve conic_image_on_cone(const PlaneConicQ& conic);
ConeCurveF conic_image_on_cone(const PlaneConicF& conic, double tol = 1e-8);

enum class NodeType { Node, Worse };
struct NodeInfo {
    bool at_infinity = false;
    std::complex<double> u, zeta;
    NodeType type = NodeType::Node;
};

std::vector<NodeInfo> detect_nodes(const ConeCurve& curve);
std::vector<NodeInfo> detect_nodes(const ConeCurveF& curve, double cluster_radius = 1e-6);

ContactReport contact_with_branch(const ConeCurve& curve, const FamilyParams& params);
ContactReport contact_with_branch(const ConeCurveF& curve, const FamilyParams& params,
                                  double cluster_radius = 1e-6);

enum class LiftVerdict { SplitsNodal, SplitsSmooth, Irreducible };

struct LiftResult {
    LiftVerdict verdict = LiftVerdict::Irreducible;
    NodeInfo node;
    std::complex<double> s1, s2; // node parameters on the conic
    std::complex<double> w1, w2; // branch values of the double cover at s1, s2
};

LiftResult lift_minitwistor_line(const FamilyParams& params, const PlaneConicF& conic,
                                 double tol_defect = 1e-10, double cluster_radius = 1e-6);

// The two points of C cap iota(C) off the fixed line, as parameters on C;
// their common psi-image is the node of the image curve.
std::array<std::complex<double>, 2> conic_self_intersection_params(const PlaneConicF& conic);

// Roots of a real-coefficient polynomial via the companion matrix; leading
// coefficients below rel_tol * max|coeff| are dropped first.
std::vector<std::complex<double>> complex_roots(const std::vector<double>& ascending,
                                                double rel_tol = 1e-11);

// Single-linkage clustering of roots; returns (representative, size) pairs.
std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    const std::vector<std::complex<double>>& roots, double radius);

} // namespace mtq
