#include "mtq/binary_form.hpp"

namespace mtq {

BinaryForm BinaryForm::from_descending(const std::vector<Rational>& c) {
    if (c.empty()) throw Error("empty coefficient list");
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<Rational> asc(c.rbegin(), c.rend());
    // asc[i] multiplies u^i after dehomogenization (u = y0/y1)
    return BinaryForm(d, PolyQ(std::move(asc)));
}

std::vector<Rational> BinaryForm::descending_coeffs() const {
    std::vector<Rational> out(static_cast<size_t>(deg) + 1, Rational(0));
    for (int i = 0; i <= p.degree(); ++i) out[static_cast<size_t>(deg - i)] = p.coeff(i);
    return out;
}

Rational BinaryForm::eval(const Rational& y0, const Rational& y1) const {
    const auto c = descending_coeffs();
    Rational acc = 0;
    Rational y0p = 1;
    for (int k = deg; k >= 0; --k) {
        Rational y1p = 1;
        for (int j = 0; j < k; ++j) y1p *= y1;
        acc += c[static_cast<size_t>(k)] * y0p * y1p;
        y0p *= y0;
    }
    return acc;
}

std::vector<RealRoot> isolate_real_roots(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroForm("isolate_real_roots of the zero form");
    std::vector<RealRoot> out;
    const auto decomp = squarefree_decomposition(f.p);
    struct Entry {
        AlgebraicReal root;
        int mult;
    };
    std::vector<Entry> finite;
    for (const auto& [factor, exp] : decomp) {
        for (const auto& iso : isolate_real_roots_squarefree(factor))
            finite.push_back({AlgebraicReal(factor, iso.lo, iso.hi), exp});
    }
    std::sort(finite.begin(), finite.end(),
              [](const Entry& a, const Entry& b) { return a.root.compare(b.root) < 0; });
    for (auto& e : finite) out.push_back({RootLocation(e.root), e.mult});
    if (f.infinity_multiplicity() > 0)
        out.push_back({RootLocation(ProjectiveInfinity{}), f.infinity_multiplicity()});
    return out;
}

DoubleRootProfile double_root_profile(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroForm("double_root_profile of the zero form");
    DoubleRootProfile out;
    const auto decomp = squarefree_decomposition(f.p);
    for (const auto& [factor, exp] : decomp)
        out.factors.push_back({BinaryForm(factor.degree(), factor), exp});
    if (f.infinity_multiplicity() > 0)
        out.factors.push_back(
            {BinaryForm(1, PolyQ::constant(Rational(1))), f.infinity_multiplicity()});
    // reassembly constant
    PolyQ prod = PolyQ::constant(Rational(1));
    for (const auto& sf : out.factors) prod = prod * sf.factor.p.pow(static_cast<unsigned>(sf.exponent));
    out.constant = f.p.lead() / prod.lead();
    return out;
}

std::optional<PerfectSquare> is_perfect_square(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroForm("is_perfect_square of the zero form");
    if (f.deg % 2 != 0) throw Error("is_perfect_square needs even degree");
    if (f.infinity_multiplicity() % 2 != 0) return std::nullopt;
    const auto decomp = squarefree_decomposition(f.p);
    PolyQ g = PolyQ::constant(Rational(1));
    for (const auto& [factor, exp] : decomp) {
        if (exp % 2 != 0) return std::nullopt;
        g = g * factor.pow(static_cast<unsigned>(exp / 2));
    }
    const Rational c = f.p.lead() / (g.lead() * g.lead());
    if (c <= 0) return std::nullopt;
    if (!(g * g * c == f.p)) return std::nullopt;
    return PerfectSquare{BinaryForm(f.deg / 2, g), c};
}

} // namespace mtq
