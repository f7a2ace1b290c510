// Times the OpenMP kernels against their serial reference implementations.

#include <chrono>
#include <cstdio>

#include "koba/inscribed.hpp"
#include "koba/oracles.hpp"
#include "koba/schwarz_lab.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class F>
double time_ms(F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the serial path\n");
#endif

    {
        const auto lens = koba::lens_params(0.5);
        double out_s = 0.0, out_p = 0.0;
        const double ms_s = time_ms([&] {
            out_s = koba::eroded_image_distance(lens.map, 1e-3, 2000000, koba::Exec::serial);
        });
        const double ms_p = time_ms([&] {
            out_p = koba::eroded_image_distance(lens.map, 1e-3, 2000000, koba::Exec::parallel);
        });
        report("eroded boundary image distance", ms_s, ms_p);
        if (out_s != out_p) std::printf("  MISMATCH: %.17g vs %.17g\n", out_s, out_p);
    }
    {
        double out_s = 0.0, out_p = 0.0;
        const double ms_s = time_ms([&] {
            out_s = koba::lambda_alpha_gap_scan(2.0, 4000, 1.0 - 1e-6, 811, koba::Exec::serial)
                        .max_gap;
        });
        const double ms_p = time_ms([&] {
            out_p = koba::lambda_alpha_gap_scan(2.0, 4000, 1.0 - 1e-6, 811, koba::Exec::parallel)
                        .max_gap;
        });
        report("model-domain gap scan", ms_s, ms_p);
        if (out_s != out_p) std::printf("  MISMATCH: %.17g vs %.17g\n", out_s, out_p);
    }
    {
        const auto region = koba::ConvexRegion2D::intersection(
            {koba::HalfPlane{{0.0, 1.0}, 0.8}, koba::HalfPlane{{0.0, -1.0}, 0.8}},
            {koba::Disk{{0.0, 0.0}, 1.0}});
        koba::InscribedSolution sol_s, sol_p;
        const double ms_s = time_ms([&] {
            sol_s = koba::brute_force_inscribed(region, {0.4, 0.1}, 5e-4, koba::Exec::serial);
        });
        const double ms_p = time_ms([&] {
            sol_p = koba::brute_force_inscribed(region, {0.4, 0.1}, 5e-4, koba::Exec::parallel);
        });
        report("brute-force inscribed-disk grid", ms_s, ms_p);
        if (sol_s.r_hat != sol_p.r_hat || sol_s.q != sol_p.q)
            std::printf("  MISMATCH: %.17g vs %.17g\n", sol_s.r_hat, sol_p.r_hat);
    }
    {
        std::vector<koba::RegimeSample> out_s, out_p;
        const double ms_s =
            time_ms([&] { out_s = koba::regime_scan_example23(24, koba::Exec::serial); });
        const double ms_p =
            time_ms([&] { out_p = koba::regime_scan_example23(24, koba::Exec::parallel); });
        report("cone regime scan", ms_s, ms_p);
        for (std::size_t i = 0; i < out_s.size(); ++i)
            if (out_s[i].report.improved_upper != out_p[i].report.improved_upper) {
                std::printf("  MISMATCH at row %zu\n", i);
                break;
            }
    }
    return 0;
}
