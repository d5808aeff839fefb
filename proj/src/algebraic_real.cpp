#include "mtq/algebraic_real.hpp"

#include <sstream>

namespace mtq {

AlgebraicReal::AlgebraicReal(const Rational& value)
    : minpoly_(PolyQ({-value, Rational(1)})), lo_(value), hi_(value) {}

AlgebraicReal::AlgebraicReal(PolyQ minimal, Rational lo, Rational hi)
    : minpoly_(std::move(minimal)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (minpoly_.is_zero()) throw ZeroForm("algebraic real needs a nonzero polynomial");
    if (lo_ > hi_) throw Error("inverted isolating interval");
    if (lo_ != hi_) {
        // try to snap to a rational root once, then validate the interval
        const Rational mid = (lo_ + hi_) / 2;
        if (minpoly_.eval(lo_) == 0) { hi_ = lo_; return; }
        if (minpoly_.eval(hi_) == 0) { lo_ = hi_; return; }
        if (minpoly_.eval(mid) == 0) { lo_ = hi_ = mid; return; }
        const auto chain = sturm_chain(minpoly_);
        if (sturm_count(chain, lo_, hi_) != 1)
            throw Error("interval does not isolate exactly one root");
    }
}

void AlgebraicReal::refine() const {
    if (is_rational()) return;
    const Rational mid = (lo_ + hi_) / 2;
    const int sm = sign(minpoly_.eval(mid));
    if (sm == 0) {
        lo_ = hi_ = mid;
        return;
    }
    const int slo = sign(minpoly_.eval(lo_));
    if (slo != sm)
        hi_ = mid;
    else
        lo_ = mid;
}

void AlgebraicReal::refine_below(const Rational& width) const {
    while (!is_rational() && hi_ - lo_ >= width) refine();
}

double AlgebraicReal::approx() const {
    refine_below(Rational(1, Integer(1) << 80));
    return to_double((lo_ + hi_) / 2);
}

int AlgebraicReal::compare(const Rational& r) const {
    if (is_rational()) {
        if (lo_ < r) return -1;
        if (lo_ > r) return 1;
        return 0;
    }
    while (true) {
        if (r <= lo_) return 1;
        if (r >= hi_) return -1;
        if (minpoly_.eval(r) == 0) {
            // r is a root inside the isolating interval, hence the root itself
            lo_ = hi_ = r;
            return 0;
        }
        refine();
    }
}

int AlgebraicReal::compare(const AlgebraicReal& other) const {
    if (other.is_rational()) return compare(other.rational_value());
    if (is_rational()) return -other.compare(rational_value());

    const PolyQ g = poly_gcd(minpoly_, other.minpoly_);
    const bool may_be_equal = g.degree() > 0 && is_root_of(g) && other.is_root_of(g);
    std::vector<PolyQ> gchain;
    if (may_be_equal) gchain = sturm_chain(g);

    while (true) {
        if (hi_ < other.lo_) return -1;
        if (other.hi_ < lo_) return 1;
        if (may_be_equal) {
            // both are roots of the squarefree g; equal iff the union of the
            // two isolating intervals contains a single root of g
            const Rational l = std::min(lo_, other.lo_);
            const Rational h = std::max(hi_, other.hi_);
            if (sturm_count(gchain, l, h) == 1) return 0;
        }
        refine();
        other.refine();
        if (is_rational()) return -other.compare(rational_value());
        if (other.is_rational()) return compare(other.rational_value());
    }
}

bool AlgebraicReal::is_root_of(const PolyQ& p) const {
    if (p.is_zero()) return true;
    if (is_rational()) return p.eval(rational_value()) == 0;
    const PolyQ g = poly_gcd(p, minpoly_);
    if (g.degree() <= 0) return false;
    const auto chain = sturm_chain(g);
    return sturm_count(chain, lo_, hi_) == 1;
}

int AlgebraicReal::sign_of(const PolyQ& p) const {
    if (p.is_zero()) return 0;
    if (is_rational()) return sign(p.eval(rational_value()));
    if (is_root_of(p)) return 0;
    // p has no root equal to alpha; shrink until p has constant sign on the interval
    const PolyQ psf = squarefree_part(p);
    const auto chain = sturm_chain(psf);
    while (sturm_count(chain, lo_, hi_) != 0) refine();
    return sign(p.eval((lo_ + hi_) / 2));
}

std::string AlgebraicReal::to_string() const {
    if (is_rational()) return format_rational(rational_value());
    std::ostringstream os;
    os << "root in (" << format_rational(lo_) << ", " << format_rational(hi_) << ")";
    return os.str();
}

} // namespace mtq
