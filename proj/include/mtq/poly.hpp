#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "mtq/errors.hpp"
#include "mtq/rational.hpp"

namespace mtq {

// Dense univariate polynomial, coefficients ascending by power.
// The zero polynomial has an empty coefficient vector and degree -1.
template <class K>
struct Poly {
    std::vector<K> c;

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }
    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const K& lead() const {
        assert(!c.empty());
        return c.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return K(0);
        return c[static_cast<size_t>(i)];
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Evaluate with a different scalar type (e.g. Rational poly at a double).
    template <class T>
    T eval_as(const T& x) const {
        T acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<K> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * K(static_cast<int>(i));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const K& s) {
        Poly r = a;
        for (auto& v : r.c) v = v * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }
    friend Poly operator/(const Poly& a, const K& s) {
        Poly r = a;
        for (auto& v : r.c) v = v / s;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    // Substitute another polynomial for the variable.
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * inner + Poly::constant(*it);
        return acc;
    }

    Poly pow(unsigned n) const {
        Poly r = Poly::constant(K(1));
        Poly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    // Shift coefficients: multiply by x^n.
    Poly shifted(int n) const {
        if (is_zero()) return Poly();
        std::vector<K> r(c.size() + static_cast<size_t>(n), K(0));
        for (size_t i = 0; i < c.size(); ++i) r[i + static_cast<size_t>(n)] = c[i];
        return Poly(std::move(r));
    }

    // x^d * p(1/x) for d = degree (coefficient reversal).
    Poly reversed() const {
        std::vector<K> r(c.rbegin(), c.rend());
        return Poly(std::move(r));
    }
};

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    Poly<K> rem = a;
    if (a.degree() < b.degree()) return {Poly<K>(), rem};
    std::vector<K> q(static_cast<size_t>(a.degree() - b.degree()) + 1, K(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        const K factor = rem.lead() / b.lead();
        q[static_cast<size_t>(shift)] = factor;
        rem = rem - (b * factor).shifted(shift);
    }
    return {Poly<K>(std::move(q)), rem};
}

using PolyQ = Poly<Rational>;

inline PolyQ monic(const PolyQ& p) {
    if (p.is_zero()) return p;
    return p / p.lead();
}

inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline PolyQ squarefree_part(const PolyQ& p) {
    if (p.degree() <= 0) return monic(p);
    auto [q, r] = divmod(p, poly_gcd(p, p.derivative()));
    (void)r;
    return monic(q);
}

// Yun's squarefree decomposition: p = lc * prod factors[i].first ^ factors[i].second,
// factors monic, squarefree and pairwise coprime, exponents strictly increasing.
std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p);

// Resultant of two nonzero polynomials via Sylvester matrix with exact
// fraction-free-ish Gaussian elimination (rationals, small degrees).
Rational resultant(const PolyQ& a, const PolyQ& b);

// Sturm chain of a squarefree polynomial.
std::vector<PolyQ> sturm_chain(const PolyQ& p);

// Number of real roots of the squarefree p in the half-open interval (lo, hi].
int sturm_count(const std::vector<PolyQ>& chain, const Rational& lo, const Rational& hi);

// Cauchy bound: all real roots lie in (-bound, bound).
Rational root_bound(const PolyQ& p);

// Isolating intervals (lo, hi) with p(lo) != 0 != p(hi) for the distinct real
// roots of the squarefree p, in ascending order; exact roots reported with
// lo == hi.
struct IsolatedRoot {
    Rational lo, hi; // lo == hi means the root is exactly rational
};
std::vector<IsolatedRoot> isolate_real_roots_squarefree(const PolyQ& p);

} // namespace mtq
