#include "mtq/poly2.hpp"

namespace mtq {

PolyQ resultant_eliminate_z(const Poly2& f, const Poly2& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroForm("resultant of zero polynomial");
    const int m = f.degree_z();
    const int n = g.degree_z();
    if (m == 0 || n == 0)
        throw DegenerateElimination("input has degree 0 in the eliminated variable");
    const int bound = f.degree_u() * n + g.degree_u() * m;
    const PolyQ leadf = f.coeff_z(m);
    const PolyQ leadg = g.coeff_z(n);

    std::vector<Rational> nodes, values;
    Rational node = 0;
    int step = 0;
    while (static_cast<int>(nodes.size()) < bound + 1) {
        // walk 0, 1, -1, 2, -2, ... skipping nodes that drop the z-degree
        if (leadf.eval(node) != 0 && leadg.eval(node) != 0) {
            nodes.push_back(node);
            values.push_back(resultant(f.eval_u(node), g.eval_u(node)));
        }
        ++step;
        node = (step % 2 == 1) ? Rational((step + 1) / 2) : Rational(-(step / 2));
    }
    return lagrange_interpolate(nodes, values);
}

Poly2 transpose_vars(const Poly2& f) {
    std::vector<PolyQ> out(static_cast<size_t>(f.degree_u() + 1));
    for (int j = 0; j <= f.degree_z(); ++j) {
        const PolyQ& cj = f.coeff_z(j);
        for (int i = 0; i <= cj.degree(); ++i) {
            auto& target = out[static_cast<size_t>(i)];
            std::vector<Rational> c(static_cast<size_t>(j) + 1, Rational(0));
            c[static_cast<size_t>(j)] = cj.coeff(i);
            target = target + PolyQ(std::move(c));
        }
    }
    return Poly2(std::move(out));
}

PolyQ resultant_eliminate_u(const Poly2& f, const Poly2& g) {
    return resultant_eliminate_z(transpose_vars(f), transpose_vars(g));
}

} // namespace mtq
