#include "koba/bounds.hpp"

#include <cmath>

namespace koba {

std::pair<double, double> graham_bounds(double r, double xi_norm) {
    if (!(r > 0.0)) throw DomainError("graham_bounds: r must be positive");
    if (!(xi_norm > 0.0)) throw DomainError("graham_bounds: xi_norm must be positive");
    return {xi_norm / (2.0 * r), xi_norm / r};
}

std::pair<double, Regime> improved_metric_upper(double r, double r_hat, double dist_pq,
                                                double xi_norm) {
    if (!(r > 0.0) || r_hat < r)
        throw DegenerateGeometry("improved_metric_upper: need r_hat >= r > 0");
    if (dist_pq > r_hat + 1e-9)
        throw DegenerateGeometry("improved_metric_upper: dist_pq exceeds r_hat");

    const double beta = r_hat - r;
    const double gamma = dist_pq * dist_pq - beta * beta;

    // Ties route to Case2, matching the non-strict inequality of that branch.
    if ((2.0 * r + beta) * gamma <= beta * r * r) {
        const double denom = r_hat * r_hat - dist_pq * dist_pq;
        if (!(denom > 0.0))
            throw DegenerateGeometry("improved_metric_upper: dist_pq reaches r_hat in Case2");
        return {r_hat / denom * xi_norm, Regime::Case2};
    }

    // Case3 requires beta > 0 (beta = 0 with dist_pq > 0 means the optimal
    // center should have been p itself; treat as an upstream solver failure).
    if (beta <= 0.0)
        throw DegenerateGeometry("improved_metric_upper: beta = 0 with dist_pq > 0");
    const double value = (1.0 + std::sqrt(gamma) / dist_pq) / (2.0 * r);
    return {value * xi_norm, Regime::Case3};
}

MetricBoundReport make_bound_report(double r, double r_hat, double dist_pq, double xi_norm,
                                    std::optional<double> exact) {
    MetricBoundReport report;
    report.r = r;
    report.r_hat = std::max(r_hat, r);
    report.dist_pq = std::min(dist_pq, report.r_hat);
    report.beta = report.r_hat - report.r;
    report.gamma = report.dist_pq * report.dist_pq - report.beta * report.beta;
    const auto [lower, upper] = graham_bounds(r, xi_norm);
    report.graham_lower = lower;
    report.graham_upper = upper;
    const auto [improved, regime] = improved_metric_upper(report.r, report.r_hat, report.dist_pq,
                                                          xi_norm);
    report.improved_upper = improved;
    report.regime = regime;
    report.exact = exact;
    return report;
}

double phi_zeta(double t, double delta_p, double delta_zeta, double alpha_dist) {
    if (!(delta_p > 0.0) || !(delta_zeta > delta_p))
        throw DomainError("phi_zeta: need delta_zeta > delta_p > 0");
    if (alpha_dist < 0.0 || t < 0.0 || t > 1.0) throw DomainError("phi_zeta: argument out of range");
    const double rt = (1.0 - t) * delta_p + t * delta_zeta;
    const double denom = rt * rt - t * t * alpha_dist * alpha_dist;
    if (!(denom > 0.0)) throw DomainError("phi_zeta: nonpositive denominator");
    return rt / denom;
}

std::pair<double, double> phi_zeta_min(double delta_p, double delta_zeta, double alpha_dist) {
    if (!(delta_p > 0.0) || !(delta_zeta > delta_p))
        throw DomainError("phi_zeta_min: need delta_zeta > delta_p > 0");
    if (alpha_dist < 0.0 || alpha_dist > delta_zeta)
        throw DomainError("phi_zeta_min: need 0 <= alpha_dist <= delta_zeta");

    const double beta = delta_zeta - delta_p;
    const double gamma = alpha_dist * alpha_dist - beta * beta;

    if (gamma * (2.0 * delta_p + beta) <= beta * delta_p * delta_p) {
        // The objective decreases throughout [0, 1]; alpha_dist < delta_zeta
        // is forced in this branch, so the endpoint value is finite.
        const double value = delta_zeta / (delta_zeta * delta_zeta - alpha_dist * alpha_dist);
        return {1.0, value};
    }

    const double root = std::sqrt(gamma);
    const double t_star = delta_p * (alpha_dist * root - gamma) / (gamma * beta);
    const double value = (alpha_dist + root) / (2.0 * delta_p * alpha_dist);
    return {t_star, value};
}

double kob_dist_lower(double delta_z, double delta_w) {
    if (!(delta_z > 0.0) || !(delta_w > 0.0))
        throw DomainError("kob_dist_lower: distances must be positive");
    return 0.5 * std::log(delta_w / delta_z);
}

double kob_dist_upper_compact(const std::vector<cx>& z, const std::vector<cx>& w, double dist_K) {
    if (!(dist_K > 0.0)) throw DomainError("kob_dist_upper_compact: dist_K must be positive");
    if (z.size() != w.size()) throw DomainError("kob_dist_upper_compact: dimension mismatch");
    double sq = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) sq += std::norm(z[i] - w[i]);
    return std::sqrt(sq) / dist_K;
}

}  // namespace koba
