#include "koba/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "koba/numerics.hpp"
#include "koba/region2d.hpp"

namespace koba {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
}

double poincare_metric(cx z, cx xi) {
    const double mod = std::abs(z);
    if (mod >= 1.0) throw NotInterior("poincare_metric: point outside the unit disk");
    return std::abs(xi) / (1.0 - mod * mod);
}

double disk_distance(cx z, cx w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
        throw NotInterior("disk_distance: points must lie in the unit disk");
    const double rho = std::abs((z - w) / (1.0 - std::conj(z) * w));
    return 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

double halfplane_distance(cx z, cx w) {
    if (z.imag() <= 0.0 || w.imag() <= 0.0)
        throw NotInterior("halfplane_distance: points must lie in the upper half plane");
    if (z == w) return 0.0;
    const double rho = std::abs((z - w) / (z - std::conj(w)));
    return 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

LensMap LensMap::make(double h) {
    if (!(h > 0.0) || !(h < 1.0)) throw DomainError("lens parameter h must lie in (0, 1)");
    LensMap lens;
    lens.h = h;
    lens.c = std::sqrt(2.0 * h - h * h);
    lens.half_angle = std::atan(lens.c / (1.0 - h));
    lens.alpha = kPi / (2.0 * lens.half_angle);
    return lens;
}

double LensMap::boundary_margin(cx z) const {
    const cx ik{0.0, 1.0 - h};
    return std::min(1.0 - std::abs(z - ik), 1.0 - std::abs(z + ik));
}

bool LensMap::contains(cx z) const { return boundary_margin(z) > kBoundaryTol; }

cx LensMap::moebius(cx z) const {
    const cx m = (z + c) / (2.0 * c * (c - z));
    if (m.real() <= 0.0)
        throw BranchViolation("lens map: Moebius image left the right half plane");
    return m;
}

cx LensMap::map(cx z) const {
    const cx u = std::pow(moebius(z), alpha);
    return (u - 1.0) / (u + 1.0);
}

cx LensMap::map_derivative(cx z) const {
    const cx m = moebius(z);
    const cx u = std::pow(m, alpha);
    const cx cz = c - z;
    return 2.0 * alpha * std::pow(m, alpha - 1.0) / (cz * cz * (u + 1.0) * (u + 1.0));
}

double LensMap::one_minus_abs_map(cx z) const {
    const cx u = std::pow(moebius(z), alpha);
    // 1 - |phi|^2 = 4 Re(u) / |u+1|^2 keeps full precision near the vertex,
    // where |phi| -> 1.
    const double denom = std::norm(u + 1.0);
    const double one_minus_sq = 4.0 * u.real() / denom;
    const double abs_phi = std::abs((u - 1.0) / (u + 1.0));
    return one_minus_sq / (1.0 + abs_phi);
}

double lens_exact_metric(const LensMap& lens, cx z, cx xi) {
    if (!lens.contains(z)) throw NotInterior("lens_exact_metric: point outside the lens");
    const cx u = std::pow(lens.moebius(z), lens.alpha);
    const double one_minus_sq = 4.0 * u.real() / std::norm(u + 1.0);
    return std::abs(lens.map_derivative(z) * xi) / one_minus_sq;
}

namespace {

// Boundary curve of Lambda_alpha and point-to-boundary distance by dense
// sampling plus golden refinement. The curve has one corner at f(-1) = 0,
// kept as an explicit candidate.
struct LambdaBoundary {
    double alpha;
    std::vector<cx> points;  // f(e^{i phi}) on a uniform phi grid

    explicit LambdaBoundary(double a, int n = 4096) : alpha(a) {
        points.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const double phi = -kPi + 2.0 * kPi * (k + 0.5) / n;
            points.push_back(at(phi));
        }
    }

    cx at(double phi) const {
        const cx w = unit_dir(phi) + 1.0;
        return std::pow(w, 1.0 / alpha);
    }

    double distance(cx z) const {
        const int n = static_cast<int>(points.size());
        std::vector<double> d(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) d[k] = std::abs(z - points[k]);

        int best[3] = {-1, -1, -1};
        for (int k = 0; k < n; ++k) {
            const double v = d[static_cast<std::size_t>(k)];
            if (v > d[static_cast<std::size_t>((k + n - 1) % n)] ||
                v > d[static_cast<std::size_t>((k + 1) % n)])
                continue;
            for (int slot = 0; slot < 3; ++slot) {
                if (best[slot] < 0 || v < d[static_cast<std::size_t>(best[slot])]) {
                    for (int s = 2; s > slot; --s) best[s] = best[s - 1];
                    best[slot] = k;
                    break;
                }
            }
        }
        const double step = 2.0 * kPi / n;
        double out = std::abs(z);  // corner candidate f(-1) = 0
        auto objective = [&](double phi) { return std::abs(z - at(phi)); };
        for (const int k : best) {
            if (k < 0) continue;
            const double center = -kPi + step * (k + 0.5);
            const auto [phi, value] = golden_min(objective, center - step, center + step, 1e-12);
            out = std::min(out, value);
        }
        return out;
    }
};

}  // namespace

GapScan lambda_alpha_gap_scan(double alpha, int n_samples, double rho_max, unsigned seed,
                              Exec exec) {
    if (!(alpha > 1.0)) throw DomainError("lambda_alpha_gap_scan: alpha must exceed 1");
    if (n_samples < 1) throw DomainError("lambda_alpha_gap_scan: need at least one sample");
    if (!(rho_max > 0.0) || !(rho_max < 1.0))
        throw DomainError("lambda_alpha_gap_scan: rho_max must lie in (0, 1)");

    const LambdaBoundary boundary(alpha);

    // Deterministic sample set: theta uniform, 1 - rho log-uniform down to
    // 1 - rho_max.
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<cx> disk_points(static_cast<std::size_t>(n_samples));
    std::vector<double> rhos(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double theta = (2.0 * uni(rng) - 1.0) * kPi;
        const double one_minus_rho = std::pow(1.0 - rho_max, uni(rng));
        rhos[static_cast<std::size_t>(i)] = 1.0 - one_minus_rho;
        disk_points[static_cast<std::size_t>(i)] =
            rhos[static_cast<std::size_t>(i)] * unit_dir(theta);
    }

    GapScan scan;
    scan.gaps.assign(static_cast<std::size_t>(n_samples), 0.0);
    kernels::apply(exec, static_cast<std::size_t>(n_samples), [&](std::size_t i) {
        const double rho = rhos[i];
        const cx z = std::pow(disk_points[i] + 1.0, 1.0 / alpha);
        // k(z0, z) = atanh(rho) by invariance under f.
        const double exact = 0.5 * std::log((2.0 - (1.0 - rho)) / (1.0 - rho));
        const double delta = boundary.distance(z);
        scan.gaps[i] = exact - 0.5 * alpha * std::log(1.0 / delta);
    });
    scan.max_gap = *std::max_element(scan.gaps.begin(), scan.gaps.end());
    return scan;
}

}  // namespace koba
