#include "mtq/cone.hpp"

#include <random>

namespace mtq {

ConeCurveF to_float(const ConeCurve& curve) {
    auto conv = [](const PolyQ& p) {
        std::vector<double> c;
        c.reserve(p.c.size());
        for (const auto& v : p.c) c.push_back(to_double(v));
        return Poly<double>(std::move(c));
    };
    return ConeCurveF{to_double(curve.A), conv(curve.b), conv(curve.c)};
}

ConeCurve branch_curve(const FamilyParams& params, bool force) {
    if (!force) {
        if (!check_star(params).holds) throw StarFails();
    } else if (params.a <= 0) {
        throw InvalidFamily();
    }
    const PolyQ q = params.q_dehom();
    return ConeCurve{Rational(1), q * Rational(2), q * q - params.p_dehom()};
}

std::vector<RealRoot> branch_points_over_line(const ConeCurve& curve) {
    if (!curve.anticanonical()) throw NotDoubleCover();
    const PolyQ disc = curve.discriminant();
    if (disc.is_zero()) throw ZeroForm("identically degenerate cover");
    return isolate_real_roots(BinaryForm(4, disc));
}

Rational j_from_lambda(const Rational& lambda) {
    if (lambda == 0 || lambda == 1) throw NotDistinct("lambda must avoid {0, 1}");
    const Rational n = lambda * lambda - lambda + 1;
    return Rational(256) * n * n * n / (lambda * lambda * (lambda - 1) * (lambda - 1));
}

namespace {

Rational lambda_for_labeling(const std::array<PPoint1, 4>& pts) {
    const Mobius t = mobius_from_three_points({pts[0], pts[1], pts[2]},
                                              {PPoint1::finite(0), PPoint1::finite(1),
                                               PPoint1::infinity()});
    const PPoint1 image = t(pts[3]);
    if (image.is_infinity()) throw NotDistinct();
    return image.value();
}

} // namespace

EllipticInvariants elliptic_invariants(const std::array<PPoint1, 4>& branch) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (branch[static_cast<size_t>(i)] == branch[static_cast<size_t>(j)])
                throw NotDistinct();

    // canonical labeling: ascending with infinity last
    std::array<PPoint1, 4> sorted = branch;
    std::sort(sorted.begin(), sorted.end(), [](const PPoint1& p, const PPoint1& q) {
        if (p.is_infinity()) return false;
        if (q.is_infinity()) return true;
        return p.value() < q.value();
    });

    EllipticInvariants out;
    out.branch = sorted;
    out.lambda = lambda_for_labeling(sorted);
    out.j = j_from_lambda(out.lambda);

    // the j-invariant must not depend on the labeling
    std::array<int, 4> idx = {0, 1, 2, 3};
    std::sort(idx.begin(), idx.end());
    do {
        const std::array<PPoint1, 4> perm = {sorted[static_cast<size_t>(idx[0])],
                                             sorted[static_cast<size_t>(idx[1])],
                                             sorted[static_cast<size_t>(idx[2])],
                                             sorted[static_cast<size_t>(idx[3])]};
        if (j_from_lambda(lambda_for_labeling(perm)) != out.j)
            throw Error("j-invariant depends on the labeling (bug)");
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

Rational j_closed_form(const Rational& a) {
    const Rational n = a * a + a + 1;
    return Rational(256) * n * n * n / (a * a * (a + 1) * (a + 1));
}

Rational family_j_invariant(const FamilyParams& params) {
    if (!check_star(params).holds) throw StarFails();
    return elliptic_invariants({PPoint1::finite(-1), PPoint1::finite(0),
                                PPoint1::finite(params.a), PPoint1::infinity()})
        .j;
}

std::vector<PPoint1> reducible_fibers(const FamilyParams& params) {
    if (!check_star(params).holds) throw StarFails();
    return {PPoint1::finite(-1), PPoint1::finite(0), PPoint1::finite(params.a),
            PPoint1::infinity()};
}

QShift q_shift_isomorphism(const FamilyParams& p1, const FamilyParams& p2) {
    if (p1.a != p2.a) throw MismatchedA();
    QShift out;
    const PolyQ d = p1.q_dehom() - p2.q_dehom();
    out.d = {d.coeff(0), d.coeff(1), d.coeff(2)};
    // the identity is formal in Q, so the curves are built unconditionally
    const Poly2 b1 = branch_curve(p1, true).implicit();
    const Poly2 b2 = branch_curve(p2, true).implicit();
    out.verified = (b2.shift_z(d) == b1);
    return out;
}

RealLocusComponent real_locus_classify(const FamilyParams& params, const PPoint1& u) {
    if (!check_star(params).holds) throw StarFails();
    if (u.is_infinity()) return RealLocusComponent::T4Sphere;
    const Rational v = u.value();
    if (v >= -1 && v <= 0) return RealLocusComponent::T2Sphere;
    if (v >= params.a) return RealLocusComponent::T4Sphere;
    return RealLocusComponent::Empty;
}

std::vector<RealLocusSample> sample_real_locus(const FamilyParams& params, int n_per_component,
                                               uint64_t seed) {
    if (!check_star(params).holds) throw StarFails();
    if (n_per_component < 1) throw Error("need at least one sample per component");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 1023);

    std::vector<RealLocusSample> out;
    const PolyQ p = params.p_dehom();
    auto push = [&](const Rational& u, RealLocusComponent comp) {
        const Rational radicand = p.eval(u);
        if (radicand < 0) throw Error("negative radicand on a real-locus sample (bug)");
        out.push_back({PPoint1::finite(u), std::sqrt(to_double(radicand)), comp});
    };

    // boundary circle points first
    push(Rational(-1), RealLocusComponent::T2Sphere);
    push(Rational(0), RealLocusComponent::T2Sphere);
    push(params.a, RealLocusComponent::T4Sphere);
    out.push_back({PPoint1::infinity(), 0.0, RealLocusComponent::T4Sphere}); // chart limit

    for (int i = 0; i < n_per_component; ++i) {
        const Rational t(num(rng), 1024);
        push(-t, RealLocusComponent::T2Sphere); // u in (-1, 0)
    }
    for (int i = 0; i < n_per_component; ++i) {
        const Rational t(num(rng), 1024);
        push(params.a + t / (Rational(1) - t), RealLocusComponent::T4Sphere); // u in (a, inf)
    }
    return out;
}

} // namespace mtq
