#include "mtq/sampling.hpp"

#include <optional>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mtq {

namespace {

Rational rand_rational(std::mt19937_64& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

Rational rand_nonzero(std::mt19937_64& rng, int max_num, int max_den) {
    for (;;) {
        Rational r = rand_rational(rng, max_num, max_den);
        if (r != 0) return r;
    }
}

// P'(u) for P = u (u + 1)(u - a) = u^3 + (1 - a) u^2 - a u.
Rational p_derivative_at(const Rational& a, const Rational& u) {
    return Rational(3) * u * u + Rational(2) * (Rational(1) - a) * u - a;
}

// Complete (q11, q02) so that Q(lambda0) = zeta0 and Q'(lambda0) = P'(lambda0)/(2 zeta0),
// making lambda0 a double root of R = Q^2 - P.
FamilyParams family_from_tangency(const Rational& a, const Rational& lambda0,
                                  const Rational& zeta0, const Rational& q20) {
    const Rational qprime = p_derivative_at(a, lambda0) / (Rational(2) * zeta0);
    const Rational q11 = qprime - Rational(2) * q20 * lambda0;
    const Rational q02 = zeta0 - q20 * lambda0 * lambda0 - q11 * lambda0;
    return FamilyParams{a, {q20, q11, q02}};
}

} // namespace

FamilyParams sample_star_family(uint64_t seed, DoubleRootInterval interval) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(1, 16);
    std::uniform_int_distribution<int> medium(1, 200);
    std::uniform_int_distribution<int> coin(0, 1);

    for (int tries = 0; tries < 400; ++tries) {
        Rational lambda0, zeta0;
        if (interval == DoubleRootInterval::AboveA) {
            lambda0 = Rational(1) + Rational(medium(rng), small(rng));
            // zeta0^2 < lambda0^2 (lambda0 + 1) keeps a > 0
            zeta0 = lambda0 * Rational(small(rng), 16);
        } else {
            lambda0 = Rational(-medium(rng), 201); // in (-1, 0)
            // zeta0^2 > lambda0^2 (lambda0 + 1) keeps a > 0; the right side is < 1
            zeta0 = Rational(1) + Rational(small(rng), 8);
        }
        if (coin(rng)) zeta0 = -zeta0;
        const Rational a = lambda0 - zeta0 * zeta0 / (lambda0 * (lambda0 + 1));
        if (a <= 0) continue;

        const FamilyParams params =
            family_from_tangency(a, lambda0, zeta0, rand_rational(rng, 8, 8));
        const StarVerdict v = check_star(params);
        if (v.holds && v.interval == interval && v.lambda0->is_rational() &&
            v.lambda0->rational_value() == lambda0)
            return params;
    }
    throw Error("star-family sampler exhausted its retry budget (bug)");
}

FamilyParams resample_q(const FamilyParams& params, uint64_t seed) {
    const StarVerdict v = check_star(params);
    if (!v.holds) throw StarFails();
    if (!v.lambda0->is_rational()) throw Error("resample_q needs a rational double root");
    const Rational lambda0 = v.lambda0->rational_value();
    const Rational zeta0 = params.q_dehom().eval(lambda0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);

    for (int tries = 0; tries < 400; ++tries) {
        const Rational q20 = params.q[0] + rand_nonzero(rng, 8, 8);
        const Rational z = coin(rng) ? zeta0 : -zeta0;
        const FamilyParams second = family_from_tangency(params.a, lambda0, z, q20);
        if (second.q == params.q) continue;
        if (check_star(second).holds) return second;
    }
    throw Error("resample_q exhausted its retry budget (bug)");
}

std::pair<FamilyParams, FamilyParams> sample_pair_sharing_a(uint64_t seed) {
    std::mt19937_64 rng(seed);
    const FamilyParams first = sample_star_family(rng());
    return {first, resample_q(first, rng())};
}

namespace {

struct AffinePoint {
    Rational x, y;
};

// Chord-tangent addition on y^2 = x^3 + c2 x^2 + c1 x; nullopt is the point
// at infinity.
std::optional<AffinePoint> ec_add(const std::optional<AffinePoint>& p,
                                  const std::optional<AffinePoint>& q, const Rational& c2,
                                  const Rational& c1) {
    if (!p) return q;
    if (!q) return p;
    Rational m;
    if (p->x == q->x) {
        if (p->y != q->y || p->y == 0) return std::nullopt;
        m = (Rational(3) * p->x * p->x + Rational(2) * c2 * p->x + c1) / (Rational(2) * p->y);
    } else {
        m = (q->y - p->y) / (q->x - p->x);
    }
    const Rational x3 = m * m - c2 - p->x - q->x;
    return AffinePoint{x3, m * (p->x - x3) - p->y};
}

} // namespace

std::vector<CurvePoint> rational_curve_points(const FamilyParams& params, int count) {
    const StarVerdict v = check_star(params);
    if (!v.holds) throw StarFails();
    if (!v.lambda0->is_rational())
        throw Error("curve-point generation needs a rational double root");
    const Rational lambda0 = v.lambda0->rational_value();
    const Rational c2 = Rational(1) - params.a;
    const Rational c1 = -params.a;

    const std::optional<AffinePoint> base{AffinePoint{lambda0, params.q_dehom().eval(lambda0)}};
    const std::array<std::optional<AffinePoint>, 3> torsion = {
        AffinePoint{Rational(0), Rational(0)}, AffinePoint{Rational(-1), Rational(0)},
        AffinePoint{params.a, Rational(0)}};

    std::vector<CurvePoint> out;
    std::set<Rational> seen;
    auto push = [&](const std::optional<AffinePoint>& p) {
        if (!p || p->y == 0) return;
        if (!seen.insert(p->x).second) return;
        out.push_back({p->x, p->y});
    };

    std::optional<AffinePoint> cur = base;
    for (int it = 0; static_cast<int>(out.size()) < count && it < 4 * count + 16 && cur; ++it) {
        push(cur);
        for (const auto& t : torsion) push(ec_add(cur, t, c2, c1));
        cur = ec_add(cur, base, c2, c1);
    }
    // base had finite order: combine what was found pairwise
    for (size_t i = 0; i < out.size() && static_cast<int>(out.size()) < count; ++i)
        for (size_t j = i; j < out.size() && static_cast<int>(out.size()) < count; ++j)
            push(ec_add(AffinePoint{out[i].u, out[i].w}, AffinePoint{out[j].u, out[j].w}, c2,
                        c1));
    if (static_cast<int>(out.size()) < count)
        throw Error("could not generate the requested number of curve points");
    out.resize(static_cast<size_t>(count));
    return out;
}

std::vector<PPoint3> sample_surface_points(const FamilyParams& params, int count,
                                           uint64_t seed) {
    if (count < 8) throw Error("need at least eight samples");
    std::mt19937_64 rng(seed);
    const PolyQ q = params.q_dehom();

    std::vector<PPoint3> out;
    out.reserve(static_cast<size_t>(count));
    auto push = [&](PPoint3 p) {
        if (surface_value(params, p) != 0) throw Error("sampled point is off the surface (bug)");
        out.push_back(std::move(p));
    };

    // fiber over u = infinity: y1 = 0, y2 y3 = -q20
    push(PPoint3(Rational(1), Rational(0), Rational(1), -params.q[0]));
    // fibers over the branch set: P = 0, so y2 y3 = -Q(u, 1)
    for (const Rational& u : {Rational(0), Rational(-1), params.a}) {
        const Rational y2 = rand_nonzero(rng, 50, 16);
        push(PPoint3(u, Rational(1), y2, -q.eval(u) / y2));
    }

    // the chord-tangent multiples grow quadratically in height, and exact
    // gradient evaluation pays for every extra digit, so cap the fiber count
    const int n_u = std::min(std::max(8, count / 32), 24);
    const std::vector<CurvePoint> curve = rational_curve_points(params, n_u);
    std::uniform_int_distribution<size_t> pick(0, curve.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    while (static_cast<int>(out.size()) < count) {
        const CurvePoint& cp = curve[pick(rng)];
        const Rational y2 = rand_nonzero(rng, 50, 16);
        const Rational w = coin(rng) ? cp.w : -cp.w;
        push(PPoint3(cp.u, Rational(1), y2, (-q.eval(cp.u) + w) / y2));
    }
    return out;
}

namespace {

bool gradient_vanishes(const FamilyParams& params, const PPoint3& p) {
    const auto g = surface_gradient(params, p);
    return g[0] == 0 && g[1] == 0 && g[2] == 0 && g[3] == 0;
}

bool is_listed_singular(const FamilyParams& params, const StarVerdict& star, const PPoint3& p) {
    if (p == PPoint3(Rational(0), Rational(0), Rational(0), Rational(1))) return true;
    if (p == PPoint3(Rational(0), Rational(0), Rational(1), Rational(0))) return true;
    if (star.lambda0->is_rational() &&
        p == PPoint3(star.lambda0->rational_value(), Rational(1), Rational(0), Rational(0)))
        return true;
    (void)params;
    return false;
}

} // namespace

ScreenResult singular_screen_serial(const FamilyParams& params,
                                    const std::vector<PPoint3>& samples) {
    const StarVerdict star = check_star(params);
    if (!star.holds) throw StarFails();
    ScreenResult out;
    for (const PPoint3& p : samples) {
        ++out.checked;
        if (gradient_vanishes(params, p) && !is_listed_singular(params, star, p))
            out.offending.push_back(p);
    }
    return out;
}

ScreenResult singular_screen_parallel(const FamilyParams& params,
                                      const std::vector<PPoint3>& samples) {
    const StarVerdict star = check_star(params);
    if (!star.holds) throw StarFails();
    ScreenResult out;
    out.checked = static_cast<long long>(samples.size());
    const auto n = static_cast<long long>(samples.size());
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<PPoint3> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long i = 0; i < n; ++i) {
            const PPoint3& p = samples[static_cast<size_t>(i)];
            if (gradient_vanishes(params, p) && !is_listed_singular(params, star, p))
                local.push_back(p);
        }
#pragma omp critical
        out.offending.insert(out.offending.end(), local.begin(), local.end());
    }
#else
    for (long long i = 0; i < n; ++i) {
        const PPoint3& p = samples[static_cast<size_t>(i)];
        if (gradient_vanishes(params, p) && !is_listed_singular(params, star, p))
            out.offending.push_back(p);
    }
#endif
    return out;
}

ScreenResult singular_screen(const FamilyParams& params, int count, uint64_t seed,
                             bool parallel) {
    const std::vector<PPoint3> samples = sample_surface_points(params, count, seed);
    return parallel ? singular_screen_parallel(params, samples)
                    : singular_screen_serial(params, samples);
}

} // namespace mtq
