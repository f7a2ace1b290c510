#include "koba/schwarz_lab.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "koba/numerics.hpp"

namespace koba {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
}

LensGeometry lens_params(double h) {
    LensMap lens = LensMap::make(h);
    const cx center{0.0, 1.0 - h};
    auto region = ConvexRegion2D::intersection(
        {}, {Disk{center, 1.0}, Disk{-center, 1.0}});
    return {lens, std::move(region)};
}

double lens_boundary_gap(const LensMap& lens, double t) {
    if (!(t > 0.0) || !(t < lens.c)) throw DomainError("lens_boundary_gap: need 0 < t < c");
    const double c = lens.c;
    return t * (2.0 * c - t) / (1.0 + std::sqrt(t * t - 2.0 * c * t + 1.0));
}

double lens_image_gap(const LensMap& lens, double t) {
    if (!(t > 0.0) || !(t < lens.c)) throw DomainError("lens_image_gap: need 0 < t < c");
    const double a = lens.alpha;
    const double near_pow = std::pow(2.0 * lens.c * t, a);
    const double far_pow = std::pow(2.0 * lens.c - t, a);
    return 2.0 * near_pow / (far_pow + near_pow);
}

std::vector<std::array<double, 3>> vertex_gap_series(const LensMap& lens,
                                                     const std::vector<double>& ts) {
    std::vector<std::array<double, 3>> rows;
    rows.reserve(ts.size());
    for (const double t : ts)
        rows.push_back({t, lens_boundary_gap(lens, t), lens_image_gap(lens, t)});
    return rows;
}

double eroded_image_distance(const LensMap& lens, double t, int n_samples, Exec exec) {
    if (n_samples < 2) throw DomainError("eroded_image_distance: need at least two samples");
    const double d = lens_boundary_gap(lens, t);
    if (!(d < lens.h - 1e-12)) throw EmptyErosion("erosion reaches the lens inradius");

    // Eroded boundary: arcs of radius s about the two circle centers, meeting
    // on the real axis at +-x_c with x_c = c - t. The map commutes with
    // conjugation, so the upper arc carries the minimum.
    const double s = 1.0 - d;
    const double k = 1.0 - lens.h;
    const double x_c = std::sqrt(s * s - k * k);
    const double phi_lo = std::atan2(k, x_c);
    const double phi_hi = kPi - phi_lo;
    const cx lower_center{0.0, -k};

    const auto best = kernels::min_index_over(exec, static_cast<std::size_t>(n_samples),
                                              [&](std::size_t i) {
        const double phi = phi_lo + (phi_hi - phi_lo) * static_cast<double>(i) /
                                        static_cast<double>(n_samples - 1);
        const cx z = lower_center + s * unit_dir(phi);
        return lens.one_minus_abs_map(z);
    });
    return best.value;
}

std::pair<double, double> fit_exponent(const std::vector<std::pair<double, double>>& rows) {
    if (rows.size() < 5) throw DegenerateFit("fit_exponent: need at least five rows");
    double sx = 0.0, sy = 0.0;
    for (const auto& [t, gap] : rows) {
        if (!(t > 0.0) || !(gap > 0.0)) throw DomainError("fit_exponent: rows must be positive");
        sx += std::log(t);
        sy += std::log(gap);
    }
    const double n = static_cast<double>(rows.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [t, gap] : rows) {
        const double dx = std::log(t) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(gap) - my);
    }
    if (sxx < 1e-14) throw DegenerateFit("fit_exponent: all abscissae equal");
    const double slope = sxy / sxx;
    return {slope, std::exp(my - slope * mx)};
}

double bernal_gonzalez_bound(double dist_b, double mu_a, double dist_a, double r) {
    if (!(dist_b > 0.0) || !(mu_a > 0.0) || !(dist_a > 0.0) || !(r > 0.0))
        throw DomainError("bernal_gonzalez_bound: arguments must be positive");
    return dist_b * std::exp(-2.0 * mu_a / std::min(r, dist_a));
}

double schwarz_pick_disk_bound(double dist_a, double dist_b, double s) {
    if (!(dist_a > 0.0) || !(dist_b > 0.0) || !(s > 0.0) || !(s < 1.0))
        throw DomainError("schwarz_pick_disk_bound: arguments out of range");
    return (1.0 - s) * dist_a * dist_b / 4.0;
}

ExperimentSeries run_lens_experiment(double h, double t_min, double t_max, int steps,
                                     int samples, Exec exec) {
    LensGeometry lens = lens_params(h);
    if (!(t_min > 0.0) || !(t_min < t_max) || !(t_max < lens.map.c))
        throw DomainError("run_lens_experiment: need 0 < t_min < t_max < c");
    if (steps < 5) throw DomainError("run_lens_experiment: need at least five steps");

    ExperimentSeries series;
    series.h = h;

    // mu(a) and dist(a, complement) for a = 0: the vertex distance c and the
    // inradius h. The comparator takes b = 0 in the disk, so dist_b = 1.
    const double mu_a = lens.map.c;
    const double dist_a = h;

    for (const double t : logspace(t_min, t_max, steps)) {
        LensExperimentRow row;
        row.t = t;
        row.d_t = lens_boundary_gap(lens.map, t);
        row.dprime_t = lens_image_gap(lens.map, t);
        row.empirical_image_dist = eroded_image_distance(lens.map, t, samples, exec);
        row.bg_bound = bernal_gonzalez_bound(1.0, mu_a, dist_a, row.d_t);
        series.rows.push_back(row);
    }

    std::vector<std::pair<double, double>> dprime_rows, emp_rows;
    for (const auto& row : series.rows) {
        dprime_rows.push_back({row.t, row.dprime_t});
        emp_rows.push_back({row.d_t, row.empirical_image_dist});
    }
    std::tie(series.fitted_alpha, series.fitted_C) = fit_exponent(dprime_rows);
    std::tie(series.fitted_alpha_emp, series.fitted_C_emp) = fit_exponent(emp_rows);
    for (auto& row : series.rows)
        row.power_bound = series.fitted_C_emp * std::pow(row.d_t, series.fitted_alpha_emp);
    return series;
}

ConvexRegion2D ice_cream_cone_domain() {
    return ConvexRegion2D::hull({Disk{{0.0, 0.0}, 1.0}, Disk{{2.0, 0.0}, 0.0}});
}

std::vector<RegimeSample> regime_scan_example23(int n_grid, Exec exec) {
    if (n_grid < 10) throw DomainError("regime_scan_example23: need a grid of at least 10");

    const auto domain = DomainND::planar(ice_cream_cone_domain());
    const double x_lo = std::sqrt(3.0) / 2.0;
    const double x_hi = 1.0;
    const double y_hi = 5.0 / (7.0 * std::sqrt(3.0));

    std::vector<cx> points;
    for (int i = 0; i < n_grid; ++i) {
        const double x = x_lo + (x_hi - x_lo) * (i + 0.5) / n_grid;
        for (int j = 0; j < n_grid; ++j) {
            const double y = -y_hi + 2.0 * y_hi * (j + 0.5) / n_grid;
            const cx z{x, y};
            if (std::abs(z) >= 1.0 - 1e-9) continue;  // the scan stays inside the disk
            points.push_back(z);
        }
    }

    std::vector<RegimeSample> samples(points.size());
    std::mutex failure_mutex;
    std::exception_ptr failure = nullptr;
    kernels::apply(exec, points.size(), [&](std::size_t i) {
        try {
            RegimeSample sample;
            sample.z = points[i];
            sample.report = bound_report_nd(domain, {points[i]}, {cx{1.0, 0.0}});
            sample.regime = sample.report.regime;
            samples[i] = sample;
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);
    return samples;
}

}  // namespace koba
