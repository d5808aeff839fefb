#include "mtq/family.hpp"

namespace mtq {

namespace {

// F(S y) for a 2x2 substitution S acting on (y0, y1).
BinaryForm compose_form(const BinaryForm& f, const Rational& s00, const Rational& s01,
                        const Rational& s10, const Rational& s11) {
    const auto c = f.descending_coeffs();
    const PolyQ A({s01, s00}); // s00 u + s01
    const PolyQ B({s11, s10}); // s10 u + s11
    PolyQ acc;
    for (int k = 0; k <= f.deg; ++k) {
        const Rational& ck = c[static_cast<size_t>(k)];
        if (ck == 0) continue;
        acc = acc + A.pow(static_cast<unsigned>(f.deg - k)) * B.pow(static_cast<unsigned>(k)) * ck;
    }
    return BinaryForm(f.deg, acc);
}

BinaryForm partial_y0(const BinaryForm& f) {
    if (f.deg == 0) return BinaryForm(0, PolyQ());
    const auto c = f.descending_coeffs();
    std::vector<Rational> out(static_cast<size_t>(f.deg), Rational(0));
    for (int k = 0; k < f.deg; ++k)
        out[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] * Rational(f.deg - k);
    return BinaryForm::from_descending(out);
}

BinaryForm partial_y1(const BinaryForm& f) {
    if (f.deg == 0) return BinaryForm(0, PolyQ());
    const auto c = f.descending_coeffs();
    std::vector<Rational> out(static_cast<size_t>(f.deg), Rational(0));
    for (int k = 1; k <= f.deg; ++k)
        out[static_cast<size_t>(k - 1)] = c[static_cast<size_t>(k)] * Rational(k);
    return BinaryForm::from_descending(out);
}

const std::array<PPoint1, 3> kStandardTriple = {PPoint1::finite(0), PPoint1::finite(-1),
                                                PPoint1::infinity()};

} // namespace

PolyQ FamilyParams::p_dehom() const {
    // u (u + 1)(u - a) = u^3 + (1 - a) u^2 - a u
    return PolyQ({Rational(0), -a, Rational(1) - a, Rational(1)});
}

StarVerdict check_star(const FamilyParams& params) {
    if (params.a <= 0) throw InvalidFamily("family parameter a must be positive");
    StarVerdict verdict;
    const BinaryForm r = params.r_form();
    verdict.real_roots = isolate_real_roots(r);

    const auto profile = double_root_profile(r);
    int repeated_finite_degree = 0;
    bool inf_repeated = false;
    bool too_high = false;
    std::optional<PolyQ> double_factor;
    for (const auto& sf : profile.factors) {
        const bool at_inf = sf.factor.p.degree() < sf.factor.deg; // the y1 factor
        if (sf.exponent >= 3) too_high = true;
        if (sf.exponent == 2) {
            if (at_inf)
                inf_repeated = true;
            else {
                repeated_finite_degree += sf.factor.p.degree();
                double_factor = sf.factor.p;
            }
        }
    }

    if (too_high || inf_repeated || repeated_finite_degree != 1 || !double_factor) {
        verdict.holds = false;
        return verdict;
    }
    // unique finite double root, necessarily rational (linear factor)
    const Rational lambda0 = -double_factor->coeff(0) / double_factor->coeff(1);
    verdict.lambda0 = AlgebraicReal(lambda0);
    if (lambda0 > Rational(-1) && lambda0 < Rational(0))
        verdict.interval = DoubleRootInterval::NegUnit;
    else if (lambda0 > params.a)
        verdict.interval = DoubleRootInterval::AboveA;
    else {
        verdict.holds = false; // double root on the branch set; degenerate family
        return verdict;
    }
    verdict.holds = true;
    return verdict;
}

std::pair<FamilyParams, NormalizationRecord> transport_family(const FamilyParams& params,
                                                              const Mobius& t) {
    const Mobius s = t.inverse();
    const BinaryForm p_img = compose_form(params.p_form(), s.m00, s.m01, s.m10, s.m11);
    // image branch set must contain {0, -1, inf}; the leftover root is a'
    const PPoint1 images[4] = {t(PPoint1::finite(0)), t(PPoint1::finite(-1)),
                               t(PPoint1::infinity()), t(PPoint1::finite(params.a))};
    std::optional<Rational> a_new;
    int named = 0;
    for (const auto& img : images) {
        bool standard = false;
        for (const auto& st : kStandardTriple)
            if (img == st) {
                standard = true;
                break;
            }
        if (standard) {
            ++named;
        } else {
            if (img.is_infinity()) throw NoAdmissibleTransform("leftover branch point at infinity");
            a_new = img.value();
        }
    }
    if (named != 3 || !a_new)
        throw NoAdmissibleTransform("transform does not carry the branch set onto {0,-1,inf,a'}");
    if (*a_new <= 0) throw NoAdmissibleTransform("transformed family parameter not positive");

    FamilyParams out;
    out.a = *a_new;
    const PolyQ target = out.p_dehom();
    if (p_img.p.degree() != target.degree())
        throw NoAdmissibleTransform("transformed quartic has the wrong shape");
    const Rational c = p_img.p.lead() / target.lead();
    if (!(target * c == p_img.p))
        throw NoAdmissibleTransform("transformed quartic is not proportional to the target");
    const auto k = rational_sqrt_exact(c);
    if (!k || *k == 0)
        throw NoAdmissibleTransform("quartic scale is not a positive rational square");

    const BinaryForm q_img = compose_form(params.q_form(), s.m00, s.m01, s.m10, s.m11);
    const auto qc = q_img.descending_coeffs();
    out.q = {qc[0] / *k, qc[1] / *k, qc[2] / *k};

    NormalizationRecord rec;
    rec.transform = t;
    rec.quartic_scale = c;
    rec.y23_scale = *k;
    rec.identity = t.is_identity();
    return {out, rec};
}

std::pair<FamilyParams, NormalizationRecord> normalize_family(const FamilyParams& params) {
    const StarVerdict verdict = check_star(params);
    if (!verdict.holds) throw StarFails();
    if (verdict.interval == DoubleRootInterval::AboveA) {
        NormalizationRecord rec;
        rec.quartic_scale = 1;
        rec.y23_scale = 1;
        rec.identity = true;
        return {params, rec};
    }

    const Rational lambda0 = verdict.lambda0->rational_value();
    const std::array<PPoint1, 4> branch = {PPoint1::finite(0), PPoint1::finite(-1),
                                           PPoint1::infinity(), PPoint1::finite(params.a)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            for (int l = 0; l < 4; ++l) {
                if (l == i || l == j) continue;
                const std::array<PPoint1, 3> src = {branch[static_cast<size_t>(i)],
                                                    branch[static_cast<size_t>(j)],
                                                    branch[static_cast<size_t>(l)]};
                const Mobius t = mobius_from_three_points(src, kStandardTriple);
                const PPoint1 lam_img = t(PPoint1::finite(lambda0));
                if (lam_img.is_infinity()) continue;
                try {
                    auto [out, rec] = transport_family(params, t);
                    if (lam_img.value() <= out.a) continue;
                    const StarVerdict check = check_star(out);
                    if (!check.holds || check.interval != DoubleRootInterval::AboveA) continue;
                    return {out, rec};
                } catch (const NoAdmissibleTransform&) {
                    continue;
                }
            }
        }
    throw NoAdmissibleTransform("no branch-set transform moves the double root into (a', inf)");
}

Rational surface_value(const FamilyParams& params, const PPoint3& p) {
    const Rational w = p.y[2] * p.y[3] + params.q_form().eval(p.y[0], p.y[1]);
    return w * w - params.p_form().eval(p.y[0], p.y[1]);
}

std::array<Rational, 4> surface_gradient(const FamilyParams& params, const PPoint3& p) {
    const BinaryForm q = params.q_form();
    const BinaryForm pf = params.p_form();
    const Rational w = p.y[2] * p.y[3] + q.eval(p.y[0], p.y[1]);
    std::array<Rational, 4> grad;
    grad[0] = 2 * w * partial_y0(q).eval(p.y[0], p.y[1]) - partial_y0(pf).eval(p.y[0], p.y[1]);
    grad[1] = 2 * w * partial_y1(q).eval(p.y[0], p.y[1]) - partial_y1(pf).eval(p.y[0], p.y[1]);
    grad[2] = 2 * w * p.y[3];
    grad[3] = 2 * w * p.y[2];
    return grad;
}

namespace {

int rational_matrix_rank(std::array<std::array<Rational, 4>, 4> m) {
    int rank = 0;
    for (int col = 0; col < 4 && rank < 4; ++col) {
        int pivot = -1;
        for (int row = rank; row < 4; ++row)
            if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
        const Rational inv = Rational(1) / m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int row = rank + 1; row < 4; ++row) {
            const Rational f = m[static_cast<size_t>(row)][static_cast<size_t>(col)] * inv;
            if (f == 0) continue;
            for (int j = col; j < 4; ++j)
                m[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                    f * m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

std::array<std::array<Rational, 4>, 4> surface_hessian(const FamilyParams& params,
                                                       const PPoint3& p) {
    const BinaryForm q = params.q_form();
    const BinaryForm pf = params.p_form();
    const Rational y0 = p.y[0], y1 = p.y[1], y2 = p.y[2], y3 = p.y[3];
    const Rational w = y2 * y3 + q.eval(y0, y1);
    const Rational q0 = partial_y0(q).eval(y0, y1);
    const Rational q1 = partial_y1(q).eval(y0, y1);
    const Rational q00 = partial_y0(partial_y0(q)).eval(y0, y1);
    const Rational q01 = partial_y1(partial_y0(q)).eval(y0, y1);
    const Rational q11 = partial_y1(partial_y1(q)).eval(y0, y1);
    const Rational p00 = partial_y0(partial_y0(pf)).eval(y0, y1);
    const Rational p01 = partial_y1(partial_y0(pf)).eval(y0, y1);
    const Rational p11 = partial_y1(partial_y1(pf)).eval(y0, y1);

    std::array<std::array<Rational, 4>, 4> h;
    h[0][0] = 2 * (q0 * q0 + w * q00) - p00;
    h[0][1] = h[1][0] = 2 * (q0 * q1 + w * q01) - p01;
    h[1][1] = 2 * (q1 * q1 + w * q11) - p11;
    h[0][2] = h[2][0] = 2 * q0 * y3;
    h[0][3] = h[3][0] = 2 * q0 * y2;
    h[1][2] = h[2][1] = 2 * q1 * y3;
    h[1][3] = h[3][1] = 2 * q1 * y2;
    h[2][2] = 2 * y3 * y3;
    h[2][3] = h[3][2] = 2 * w;
    h[3][3] = 2 * y2 * y2;
    return h;
}

} // namespace

SingularPoints singular_points(const FamilyParams& params) {
    const StarVerdict verdict = check_star(params);
    if (!verdict.holds) throw StarFails();

    SingularPoints out;
    out.p_infinity = PPoint3(0, 0, 0, 1);
    out.p_bar_infinity = PPoint3(0, 0, 1, 0);
    out.lambda0 = *verdict.lambda0;

    bool ok = true;
    for (const PPoint3* p : {&out.p_infinity, &out.p_bar_infinity}) {
        for (const auto& g : surface_gradient(params, *p))
            if (g != 0) ok = false;
    }
    // At P0 = (lambda0, 1, 0, 0): the y2/y3 partials vanish identically and the
    // (y0, y1) partials are 2 Q Q_i - P_i evaluated on the double root.
    const BinaryForm q = params.q_form();
    const BinaryForm pf = params.p_form();
    const PolyQ g0 = (q.p * partial_y0(q).p) * Rational(2) - partial_y0(pf).p;
    const PolyQ g1 = (q.p * partial_y1(q).p) * Rational(2) - partial_y1(pf).p;
    if (!out.lambda0.is_root_of(g0) || !out.lambda0.is_root_of(g1)) ok = false;
    out.certified = ok;

    out.hessian_ranks[0] = rational_matrix_rank(surface_hessian(params, out.p_infinity));
    out.hessian_ranks[1] = rational_matrix_rank(surface_hessian(params, out.p_bar_infinity));
    if (out.lambda0.is_rational()) {
        const PPoint3 p0(out.lambda0.rational_value(), 1, 0, 0);
        out.hessian_ranks[2] = rational_matrix_rank(surface_hessian(params, p0));
    } else {
        out.hessian_ranks[2] = -1; // not computed for irrational double roots
    }
    return out;
}

ConePoint quotient_map_psi(const PPoint3& p) {
    if (p.y[0] == 0 && p.y[1] == 0)
        throw Indeterminate("psi is indeterminate on the line y0 = y1 = 0");
    ConePoint out;
    out.z = {p.y[0] * p.y[0], p.y[1] * p.y[1], p.y[0] * p.y[1], p.y[2] * p.y[3]};
    if (out.z[1] != 0) {
        out.has_chart = true;
        out.u = out.z[2] / out.z[1];
        out.zeta = out.z[3] / out.z[1];
    }
    return out;
}

ConePoint cone_real_structure(const ConePoint& q) {
    // (u, zeta) -> (conj u, conj zeta); rational coordinates are fixed
    return q;
}

} // namespace mtq
