#pragma once

#include "mtq/poly.hpp"

namespace mtq {

// Dense bivariate polynomial in (u, z), stored as a polynomial in z whose
// coefficients are polynomials in u. The zero polynomial has empty z.
template <class K>
struct Poly2T {
    std::vector<Poly<K>> z; // z[j] = coefficient of z^j, a polynomial in u

    Poly2T() = default;
    explicit Poly2T(std::vector<Poly<K>> coeffs) : z(std::move(coeffs)) { trim(); }

    void trim() {
        while (!z.empty() && z.back().is_zero()) z.pop_back();
    }
    bool is_zero() const { return z.empty(); }
    int degree_z() const { return static_cast<int>(z.size()) - 1; }
    int degree_u() const {
        int d = -1;
        for (const auto& p : z) d = std::max(d, p.degree());
        return d;
    }
    Poly<K> coeff_z(int j) const {
        if (j < 0 || j >= static_cast<int>(z.size())) return Poly<K>();
        return z[static_cast<size_t>(j)];
    }

    // Evaluate u, leaving a univariate polynomial in z.
    Poly<K> eval_u(const K& u0) const {
        std::vector<K> out;
        out.reserve(z.size());
        for (const auto& p : z) out.push_back(p.eval(u0));
        return Poly<K>(std::move(out));
    }
    // Evaluate z, leaving a univariate polynomial in u.
    Poly<K> eval_z(const K& z0) const {
        Poly<K> acc;
        for (auto it = z.rbegin(); it != z.rend(); ++it)
            acc = acc * Poly<K>::constant(z0) + *it;
        return acc;
    }
    K eval(const K& u0, const K& z0) const { return eval_u(u0).eval(z0); }

    // Substitute z := z + s(u).
    Poly2T shift_z(const Poly<K>& s) const {
        // binomial expansion via Horner in z
        Poly2T acc;
        for (auto it = z.rbegin(); it != z.rend(); ++it) {
            acc = acc.mul_by_z_plus(s);
            acc = acc + Poly2T(std::vector<Poly<K>>{*it});
        }
        return acc;
    }
    // Substitute z := q(u), collapsing to a univariate polynomial in u.
    Poly<K> substitute_z(const Poly<K>& q) const {
        Poly<K> acc;
        for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * q + *it;
        return acc;
    }

    Poly2T mul_by_z_plus(const Poly<K>& s) const { // multiply by (z + s(u))
        if (is_zero()) return Poly2T();
        std::vector<Poly<K>> out(z.size() + 1);
        for (size_t j = 0; j < z.size(); ++j) {
            out[j + 1] = out[j + 1] + z[j];
            out[j] = out[j] + z[j] * s;
        }
        return Poly2T(std::move(out));
    }

    friend Poly2T operator+(const Poly2T& a, const Poly2T& b) {
        std::vector<Poly<K>> out(std::max(a.z.size(), b.z.size()));
        for (size_t j = 0; j < a.z.size(); ++j) out[j] = out[j] + a.z[j];
        for (size_t j = 0; j < b.z.size(); ++j) out[j] = out[j] + b.z[j];
        return Poly2T(std::move(out));
    }
    friend Poly2T operator-(const Poly2T& a, const Poly2T& b) {
        std::vector<Poly<K>> out(std::max(a.z.size(), b.z.size()));
        for (size_t j = 0; j < a.z.size(); ++j) out[j] = out[j] + a.z[j];
        for (size_t j = 0; j < b.z.size(); ++j) out[j] = out[j] - b.z[j];
        return Poly2T(std::move(out));
    }
    friend Poly2T operator*(const Poly2T& a, const Poly2T& b) {
        if (a.is_zero() || b.is_zero()) return Poly2T();
        std::vector<Poly<K>> out(a.z.size() + b.z.size() - 1);
        for (size_t i = 0; i < a.z.size(); ++i)
            for (size_t j = 0; j < b.z.size(); ++j) out[i + j] = out[i + j] + a.z[i] * b.z[j];
        return Poly2T(std::move(out));
    }
    friend bool operator==(const Poly2T& a, const Poly2T& b) { return a.z == b.z; }
};

using Poly2 = Poly2T<Rational>;

// Resultant of f and g with respect to z; the result is a polynomial in the
// kept variable u. Computed by evaluation at interpolation nodes that keep
// both leading z-coefficients nonzero, then Lagrange interpolation (exact
// over the rationals).
PolyQ resultant_eliminate_z(const Poly2& f, const Poly2& g);

// Convenience: eliminate u instead, by transposing the representation.
Poly2 transpose_vars(const Poly2& f);
PolyQ resultant_eliminate_u(const Poly2& f, const Poly2& g);

// Lagrange interpolation through (nodes[i], values[i]).
template <class K>
Poly<K> lagrange_interpolate(const std::vector<K>& nodes, const std::vector<K>& values) {
    const size_t n = nodes.size();
    Poly<K> acc;
    for (size_t i = 0; i < n; ++i) {
        Poly<K> basis = Poly<K>::constant(K(1));
        K denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = basis * Poly<K>(std::vector<K>{-nodes[j], K(1)});
            denom = denom * (nodes[i] - nodes[j]);
        }
        acc = acc + basis * (values[i] / denom);
    }
    return acc;
}

} // namespace mtq
