#pragma once

#include <array>
#include <vector>

namespace mtq {

// Class a f1 + b f2 - sum n_j E_j on the 4-point blow-up of the quadric,
// with pairing D.D' = a b' + a' b - sum n_j n'_j.
struct DivisorClass {
    int a = 0, b = 0;
    std::array<int, 4> n{0, 0, 0, 0};

    static DivisorClass anticanonical() { return {2, 2, {1, 1, 1, 1}}; }
    static DivisorClass exceptional(int j) {
        DivisorClass d;
        d.n[static_cast<size_t>(j)] = 1;
        return d;
    }
    static DivisorClass ruling(int a_, int b_) { return {a_, b_, {0, 0, 0, 0}}; }

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        DivisorClass r{x.a + y.a, x.b + y.b, {}};
        for (int j = 0; j < 4; ++j)
            r.n[static_cast<size_t>(j)] = x.n[static_cast<size_t>(j)] + y.n[static_cast<size_t>(j)];
        return r;
    }
    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.a == y.a && x.b == y.b && x.n == y.n;
    }
};

int intersect(const DivisorClass& d1, const DivisorClass& d2);

struct LineClassSolution {
    DivisorClass l1, l2;
    int candidates_searched = 0;
    int solutions_found = 0;
};

// Exhaustive search under the constraints: L1 + L2 = -2K, (a_i, b_i) in
// {(1,3), (2,2), (3,1)}, n_ij in {0, 1, 2} with n_1j + n_2j = 2, n_ij = 1
// (transversality with the four reducible fibers) and a_i = b_i (section
// pairing); the unique solution is L1 = L2 = -K.
LineClassSolution solve_line_classes();

} // namespace mtq
