#include "mtq/poly.hpp"

namespace mtq {

std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p) {
    if (p.is_zero()) throw ZeroForm("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<PolyQ, int>> out;
    if (p.degree() == 0) return out;

    // Yun's algorithm over Q (characteristic zero).
    PolyQ f = monic(p);
    PolyQ g = poly_gcd(f, f.derivative());
    PolyQ w = divmod(f, g).first;   // product of distinct factors
    PolyQ y = divmod(f.derivative(), g).first;
    int k = 1;
    while (w.degree() > 0) {
        PolyQ z = y - w.derivative();
        PolyQ factor = poly_gcd(w, z);
        if (factor.degree() > 0) out.emplace_back(factor, k);
        w = divmod(w, factor).first;
        y = divmod(z, factor).first;
        ++k;
    }
    return out;
}

Rational resultant(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroForm("resultant of zero polynomial");
    const int m = a.degree();
    const int n = b.degree();
    if (m == 0) {
        Rational r = 1;
        for (int i = 0; i < n; ++i) r *= a.coeff(0);
        return r;
    }
    if (n == 0) {
        Rational r = 1;
        for (int i = 0; i < m; ++i) r *= b.coeff(0);
        return r;
    }
    const int size = m + n;
    std::vector<std::vector<Rational>> s(static_cast<size_t>(size),
                                         std::vector<Rational>(static_cast<size_t>(size), Rational(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[row][row + j] = a.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[n + row][row + j] = b.coeff(n - j);

    // plain Gaussian elimination over Q, tracking the determinant
    Rational det = 1;
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int row = col; row < size; ++row)
            if (s[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(s[pivot], s[col]);
            det = -det;
        }
        det *= s[col][col];
        const Rational inv = Rational(1) / s[col][col];
        for (int row = col + 1; row < size; ++row) {
            if (s[row][col] == 0) continue;
            const Rational f = s[row][col] * inv;
            for (int j = col; j < size; ++j) s[row][j] -= f * s[col][j];
        }
    }
    return det;
}

std::vector<PolyQ> sturm_chain(const PolyQ& p) {
    std::vector<PolyQ> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const auto& s1 = chain[chain.size() - 2];
        const auto& s2 = chain.back();
        PolyQ rem = divmod(s1, s2).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

namespace {

int sign_variations_at(const std::vector<PolyQ>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& s : chain) {
        const int sg = sign(s.eval(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++vars;
        prev = sg;
    }
    return vars;
}

} // namespace

int sturm_count(const std::vector<PolyQ>& chain, const Rational& lo, const Rational& hi) {
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

Rational root_bound(const PolyQ& p) {
    if (p.degree() <= 0) return Rational(1);
    Rational maxratio = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i) / p.lead());
        if (r > maxratio) maxratio = r;
    }
    return maxratio + 1;
}

std::vector<IsolatedRoot> isolate_real_roots_squarefree(const PolyQ& p) {
    std::vector<IsolatedRoot> out;
    if (p.degree() <= 0) return out;
    const auto chain = sturm_chain(p);
    const Rational bound = root_bound(p);

    struct Segment {
        Rational lo, hi;
        int count;
    };
    std::vector<Segment> work;
    const int total = sturm_count(chain, -bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});

    while (!work.empty()) {
        Segment seg = work.back();
        work.pop_back();
        if (seg.count == 1) {
            // shrink so that the endpoints are not roots and detect exact roots
            Rational lo = seg.lo, hi = seg.hi;
            while (true) {
                const Rational mid = (lo + hi) / 2;
                if (p.eval(mid) == 0) {
                    out.push_back({mid, mid});
                    break;
                }
                const int left = sturm_count(chain, lo, mid);
                if (left == 1)
                    hi = mid;
                else
                    lo = mid;
                if (hi - lo < Rational(1, 1024)) {
                    out.push_back({lo, hi});
                    break;
                }
            }
            continue;
        }
        const Rational mid = (seg.lo + seg.hi) / 2;
        if (p.eval(mid) == 0) {
            // nudge the midpoint off the root
            Rational eps = (seg.hi - seg.lo) / 1024;
            Rational m2 = mid + eps;
            while (p.eval(m2) == 0) m2 += eps;
            const int left = sturm_count(chain, seg.lo, m2);
            const int right = seg.count - left;
            if (left > 0) work.push_back({seg.lo, m2, left});
            if (right > 0) work.push_back({m2, seg.hi, right});
            continue;
        }
        const int left = sturm_count(chain, seg.lo, mid);
        const int right = seg.count - left;
        if (left > 0) work.push_back({seg.lo, mid, left});
        if (right > 0) work.push_back({mid, seg.hi, right});
    }

    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
    return out;
}

} // namespace mtq
