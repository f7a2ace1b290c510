#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "koba/errors.hpp"
#include "koba/geometry.hpp"

namespace koba {

// Branch of the improved metric upper bound, selected by the sign of
// (2r + beta) * gamma - beta * r^2.
enum class Regime { Case2, Case3 };

inline const char* regime_name(Regime r) { return r == Regime::Case2 ? "Case2" : "Case3"; }

struct MetricBoundReport {
    double r = 0.0;        // distance of the slice base point to the slice boundary
    double r_hat = 0.0;    // largest inscribed-disk radius through the base point
    double dist_pq = 0.0;  // distance from the base point to the optimal center
    double beta = 0.0;     // r_hat - r
    double gamma = 0.0;    // dist_pq^2 - beta^2
    Regime regime = Regime::Case2;
    double graham_lower = 0.0;
    double graham_upper = 0.0;
    double improved_upper = 0.0;
    std::optional<double> exact;  // oracle value when one is available
};

// Sandwich ||xi||/(2r) <= metric <= ||xi||/r from the largest disk centered
// at the base point.
std::pair<double, double> graham_bounds(double r, double xi_norm);

// Two-regime improvement of the trivial upper bound. Case2 yields
// r_hat / (r_hat^2 - dist_pq^2); Case3 yields (1 + sqrt(gamma)/dist_pq) / (2r),
// the algebraically stabilized equivalent of
// (1/(2r)) * beta^2 / (dist_pq * (dist_pq - sqrt(gamma))).
std::pair<double, Regime> improved_metric_upper(double r, double r_hat, double dist_pq,
                                                double xi_norm);

// Assembles a full report (with the bounds evaluated per unit direction and
// scaled by xi_norm last).
MetricBoundReport make_bound_report(double r, double r_hat, double dist_pq, double xi_norm,
                                    std::optional<double> exact = std::nullopt);

// The interpolated-disk objective t -> r(t) / (r(t)^2 - t^2 alpha_dist^2)
// with r(t) = (1-t) delta_p + t delta_zeta. Accepts t = 1 when the
// denominator stays positive (the continuous extension).
double phi_zeta(double t, double delta_p, double delta_zeta, double alpha_dist);

// Closed-form minimizer of phi_zeta over [0, 1]. Returns (t_star, value);
// the value is always strictly below 1/delta_p.
std::pair<double, double> phi_zeta_min(double delta_p, double delta_zeta, double alpha_dist);

// Lower bound (1/2) log(delta_w / delta_z) for the Kobayashi distance on a
// convex domain, from the supporting-hyperplane map to the half-plane.
double kob_dist_lower(double delta_z, double delta_w);

// Upper bound ||z - w|| / dist_K for points of a compact convex K at distance
// dist_K from the complement.
double kob_dist_upper_compact(const std::vector<cx>& z, const std::vector<cx>& w, double dist_K);

}  // namespace koba
