#include "mtq/picard.hpp"

#include "mtq/errors.hpp"

namespace mtq {

int intersect(const DivisorClass& d1, const DivisorClass& d2) {
    int v = d1.a * d2.b + d2.a * d1.b;
    for (int j = 0; j < 4; ++j)
        v -= d1.n[static_cast<size_t>(j)] * d2.n[static_cast<size_t>(j)];
    return v;
}

LineClassSolution solve_line_classes() {
    LineClassSolution out;
    const DivisorClass minus2k = DivisorClass::anticanonical() + DivisorClass::anticanonical();
    const std::array<std::array<int, 2>, 3> bidegrees = {{{1, 3}, {2, 2}, {3, 1}}};

    std::vector<std::pair<DivisorClass, DivisorClass>> solutions;
    for (const auto& ab1 : bidegrees) {
        for (int n0 = 0; n0 <= 2; ++n0)
            for (int n1 = 0; n1 <= 2; ++n1)
                for (int n2 = 0; n2 <= 2; ++n2)
                    for (int n3 = 0; n3 <= 2; ++n3) {
                        ++out.candidates_searched;
                        DivisorClass l1{ab1[0], ab1[1], {n0, n1, n2, n3}};
                        DivisorClass l2{minus2k.a - l1.a, minus2k.b - l1.b, {}};
                        for (int j = 0; j < 4; ++j)
                            l2.n[static_cast<size_t>(j)] =
                                minus2k.n[static_cast<size_t>(j)] - l1.n[static_cast<size_t>(j)];
                        // transversality with the 4 reducible fibers: n_ij = 1
                        bool ok = true;
                        for (int j = 0; j < 4; ++j)
                            if (l1.n[static_cast<size_t>(j)] != 1 ||
                                l2.n[static_cast<size_t>(j)] != 1)
                                ok = false;
                        // section pairing forces a_i = b_i
                        if (l1.a != l1.b || l2.a != l2.b) ok = false;
                        if (ok) solutions.emplace_back(l1, l2);
                    }
    }
    out.solutions_found = static_cast<int>(solutions.size());
    if (solutions.size() != 1)
        throw Error("line-class search did not find a unique solution (bug)");
    out.l1 = solutions[0].first;
    out.l2 = solutions[0].second;
    if (!(out.l1 == DivisorClass::anticanonical()) || !(out.l2 == DivisorClass::anticanonical()))
        throw Error("line classes are not anticanonical (bug)");
    return out;
}

} // namespace mtq
