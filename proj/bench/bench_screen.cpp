// Benchmark: serial vs. OpenMP singular-point screen on a fixed family.
#include <chrono>
#include <cstdio>

#include "mtq/sampling.hpp"

int main(int argc, char** argv) {
    const int count = argc > 1 ? std::atoi(argv[1]) : 20000;
    const mtq::FamilyParams witness{mtq::Rational(6),
                                    {mtq::Rational(0), mtq::Rational(53, 12),
                                     mtq::Rational(-70, 3)}};
    const auto samples = mtq::sample_surface_points(witness, count, 0);

    auto time = [&](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        const mtq::ScreenResult r = fn();
        const auto t1 = std::chrono::steady_clock::now();
        return std::pair<double, mtq::ScreenResult>(
            std::chrono::duration<double>(t1 - t0).count(), r);
    };

    const auto [ts, rs] = time([&] { return mtq::singular_screen_serial(witness, samples); });
    const auto [tp, rp] = time([&] { return mtq::singular_screen_parallel(witness, samples); });

    std::printf("samples: %d\n", count);
    std::printf("serial:   %.3fs  (clean=%d)\n", ts, rs.clean() ? 1 : 0);
    std::printf("parallel: %.3fs  (clean=%d)\n", tp, rp.clean() ? 1 : 0);
    std::printf("speedup:  %.2fx\n", tp > 0 ? ts / tp : 0.0);
    if (rs.offending != rp.offending) {
        std::printf("MISMATCH between serial and parallel results\n");
        return 1;
    }
    return 0;
}
