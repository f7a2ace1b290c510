#pragma once

#include <array>
#include <vector>

#include "koba/domains_nd.hpp"
#include "koba/oracles.hpp"
#include "koba/parallel.hpp"
#include "koba/region2d.hpp"

namespace koba {

struct LensExperimentRow {
    double t = 0.0;
    double d_t = 0.0;                   // boundary distance of the vertex point c - t
    double dprime_t = 0.0;              // image gap 1 - phi(c - t)
    double empirical_image_dist = 0.0;  // min over the eroded boundary of 1 - |phi|
    double bg_bound = 0.0;              // exponential comparator bound
    double power_bound = 0.0;           // fitted C * d(t)^alpha comparator
};

struct ExperimentSeries {
    double h = 0.0;
    std::vector<LensExperimentRow> rows;
    double fitted_alpha = 0.0;  // log-log fit of dprime against t
    double fitted_C = 0.0;
    double fitted_alpha_emp = 0.0;  // log-log fit of the empirical gap against d(t)
    double fitted_C_emp = 0.0;
};

struct LensGeometry {
    LensMap map;
    ConvexRegion2D region;
};

// Lens parameters c, A, alpha from the closed forms plus the two-disk region.
LensGeometry lens_params(double h);

// d(t) = t (2c - t) / (1 + sqrt(t^2 - 2ct + 1)), the boundary distance of c - t.
double lens_boundary_gap(const LensMap& lens, double t);
// d'(t) = 2 (2ct)^alpha / ((2c - t)^alpha + (2ct)^alpha), the image gap of c - t.
double lens_image_gap(const LensMap& lens, double t);

// Rows (t, d(t), d'(t)) for a list of offsets.
std::vector<std::array<double, 3>> vertex_gap_series(const LensMap& lens,
                                                     const std::vector<double>& ts);

// dist(phi(eroded lens), complement of the disk), estimated as the min of
// 1 - |phi| over n_samples points of the exactly parametrized eroded boundary
// (two arcs of radius 1 - d(t); the upper arc suffices by symmetry, and the
// vertex c - t is always included as a sample).
double eroded_image_distance(const LensMap& lens, double t, int n_samples,
                             Exec exec = Exec::parallel);

// Ordinary least squares of log(gap) against log(t): returns (slope,
// exp(intercept)).
std::pair<double, double> fit_exponent(const std::vector<std::pair<double, double>>& rows);

// dist_b * exp(-2 mu_a / min(r, dist_a)), the exponential comparator bound.
double bernal_gonzalez_bound(double dist_b, double mu_a, double dist_a, double r);

// (1 - s) dist_a dist_b / 4, the Schwarz-Pick bound for disk self-maps.
double schwarz_pick_disk_bound(double dist_a, double dist_b, double s);

ExperimentSeries run_lens_experiment(double h, double t_min, double t_max, int steps,
                                     int samples, Exec exec = Exec::parallel);

// The unit disk extended by the tangent cone through 2 (a hull of the unit
// disk and the point 2).
ConvexRegion2D ice_cream_cone_domain();

struct RegimeSample {
    cx z{0.0, 0.0};
    Regime regime = Regime::Case2;
    MetricBoundReport report;
};

// Grids the rectangle (sqrt(3)/2, 1) x (-5/(7 sqrt 3), 5/(7 sqrt 3))
// intersected with the unit disk inside the cone domain and runs the full
// bound pipeline at (z, 1) for each point.
std::vector<RegimeSample> regime_scan_example23(int n_grid, Exec exec = Exec::parallel);

}  // namespace koba
