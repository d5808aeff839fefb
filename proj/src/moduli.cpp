#include "mtq/moduli.hpp"

namespace mtq {

CircleConfig CircleConfig::from_points(const std::array<PPoint1, 4>& pts) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (pts[static_cast<size_t>(i)] == pts[static_cast<size_t>(j)]) throw NotDistinct();
    CircleConfig cfg;
    cfg.points = pts;
    cfg.cyclic = {0, 1, 2, 3};
    std::sort(cfg.cyclic.begin(), cfg.cyclic.end(), [&](int a, int b) {
        const PPoint1& p = pts[static_cast<size_t>(a)];
        const PPoint1& q = pts[static_cast<size_t>(b)];
        if (p.is_infinity()) return false;
        if (q.is_infinity()) return true;
        return p.value() < q.value();
    });
    return cfg;
}

Rational canonical_invariant(const CircleConfig& config) {
    std::optional<Rational> best;
    for (int r = 0; r < 4; ++r) {
        const PPoint1 v = cross_ratio(config.at_cyclic(r), config.at_cyclic(r + 1),
                                      config.at_cyclic(r + 2), config.at_cyclic(r + 3));
        if (v.is_infinity()) continue;
        const Rational x = v.value();
        if (x > 1 && (!best || x < *best)) best = x;
    }
    if (!best) throw Error("no cyclic labeling produced a cross-ratio in (1, inf) (bug)");
    return *best;
}

EquivalenceWitness are_equivalent(const CircleConfig& c1, const CircleConfig& c2) {
    EquivalenceWitness out;
    if (canonical_invariant(c1) != canonical_invariant(c2)) return out;
    for (int r = 0; r < 4; ++r) {
        Mobius t;
        try {
            t = mobius_from_three_points({c1.at_cyclic(0), c1.at_cyclic(1), c1.at_cyclic(2)},
                                         {c2.at_cyclic(r), c2.at_cyclic(r + 1),
                                          c2.at_cyclic(r + 2)});
        } catch (const NotDistinct&) {
            continue;
        }
        if (t.orientation() <= 0) continue;
        if (t(c1.at_cyclic(3)) == c2.at_cyclic(r + 3)) {
            out.equivalent = true;
            out.witness = t;
            return out;
        }
    }
    // equal invariants must yield a witness; reaching here is a bug signal
    throw Error("equal invariants but no orientation-preserving witness found");
}

Rational family_modulus(const FamilyParams& params) {
    if (!check_star(params).holds) throw StarFails();
    const CircleConfig cfg = CircleConfig::from_points(
        {PPoint1::finite(-1), PPoint1::finite(0), PPoint1::finite(params.a),
         PPoint1::infinity()});
    return canonical_invariant(cfg);
}

} // namespace mtq
