#include "koba/domains_nd.hpp"

#include <cmath>

namespace koba {

double norm(const CVec& v) {
    double sq = 0.0;
    for (const cx& c : v) sq += std::norm(c);
    return std::sqrt(sq);
}

cx inner(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw DomainError("inner: dimension mismatch");
    cx sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * std::conj(b[i]);
    return sum;
}

DomainND DomainND::ball(CVec center, double radius) {
    if (center.empty()) throw InvalidRegion("ball needs at least one dimension");
    if (!(radius > 0.0)) throw InvalidRegion("ball radius must be positive");
    DomainND d;
    d.is_ball_ = true;
    d.center_ = std::move(center);
    d.radius_ = radius;
    return d;
}

DomainND DomainND::planar(ConvexRegion2D region) {
    DomainND d;
    d.is_ball_ = false;
    d.region_ = std::move(region);
    return d;
}

bool DomainND::contains(const CVec& p) const {
    if (is_ball_) {
        if (p.size() != center_.size()) throw DomainError("point dimension mismatch");
        CVec off = p;
        for (std::size_t i = 0; i < off.size(); ++i) off[i] -= center_[i];
        return norm(off) < radius_ - kBoundaryTol;
    }
    if (p.size() != 1) throw DomainError("planar domains expect one complex coordinate");
    return region_.contains(p[0]);
}

namespace {

// The ball slice is a disk; the center follows from expanding
// ||pc + z xih||^2 < R^2, but the sign convention of the Hermitian component
// is verified against direct membership instead of trusted.
ConvexRegion2D ball_slice_disk(const CVec& pc, const CVec& xih, double radius) {
    const cx w = inner(pc, xih);
    const double rad_sq = radius * radius - norm(pc) * norm(pc) + std::norm(w);
    if (!(rad_sq > 0.0)) throw NotInterior("base point is not interior to the ball");
    const double rad = std::sqrt(rad_sq);

    auto member_mismatch = [&](cx center) {
        for (int j = 0; j < 32; ++j) {
            for (const double f : {0.25, 0.6, 0.95, 1.1}) {
                const cx z = center + rad * f * unit_dir(2.0 * 3.141592653589793 * j / 32.0);
                CVec point = pc;
                for (std::size_t i = 0; i < point.size(); ++i) point[i] += z * xih[i];
                const double dist = norm(point);
                if (std::abs(dist - radius) < 1e-9) continue;  // too close to call
                const bool in_domain = dist < radius;
                const bool in_slice = std::abs(z - center) < rad;
                if (in_domain != in_slice) return true;
            }
        }
        return false;
    };

    cx center = -w;
    if (member_mismatch(center)) {
        center = -std::conj(w);
        if (member_mismatch(center)) throw Error("ball slice center verification failed");
    }
    return ConvexRegion2D::disk(center, rad);
}

}  // namespace

SliceGeometry slice(const DomainND& domain, const CVec& p, const CVec& xi) {
    const double xi_norm = norm(xi);
    if (!(xi_norm > 0.0)) throw ZeroDirection("slice direction must be nonzero");
    if (!domain.contains(p)) throw NotInterior("base point is not interior to the domain");

    ConvexRegion2D slice_region = [&] {
        if (domain.is_ball()) {
            if (xi.size() != domain.dim()) throw DomainError("direction dimension mismatch");
            CVec pc = p;
            for (std::size_t i = 0; i < pc.size(); ++i) pc[i] -= domain.center()[i];
            CVec xih = xi;
            for (cx& c : xih) c /= xi_norm;
            return ball_slice_disk(pc, xih, domain.radius());
        }
        if (p.size() != 1 || xi.size() != 1)
            throw DomainError("planar domains expect one complex coordinate");
        return transform_to_slice(domain.region(), p[0], xi[0] / xi_norm);
    }();

    SliceGeometry geom{std::move(slice_region), 0.0, 0.0, cx{0.0, 0.0}, 0.0, {}};
    geom.r = geom.slice.boundary_distance({0.0, 0.0});
    auto sol = max_disk_radius_through(geom.slice, {0.0, 0.0});
    geom.r_hat = sol.r_hat;
    geom.q_planar = sol.q;
    geom.dist_pq = sol.dist_pq;
    geom.certificate = sol.certificate;
    return geom;
}

std::pair<CVec, CVec> unitary_reduce(const CVec& p, const CVec& xi) {
    if (p.size() != xi.size()) throw DomainError("unitary_reduce: dimension mismatch");
    const double xi_norm = norm(xi);
    if (!(xi_norm > 0.0)) throw ZeroDirection("unitary_reduce: direction must be nonzero");

    CVec e = xi;
    for (cx& c : e) c /= xi_norm;
    const cx along = inner(p, e);
    CVec perp = p;
    for (std::size_t i = 0; i < perp.size(); ++i) perp[i] -= along * e[i];

    CVec x(p.size(), cx{0.0, 0.0});
    x[0] = along;
    if (p.size() > 1) x[1] = norm(perp);
    CVec v(p.size(), cx{0.0, 0.0});
    v[0] = xi_norm;
    return {std::move(x), std::move(v)};
}

double ball_exact_metric(const CVec& x, const CVec& v) {
    const double x_norm = norm(x);
    if (x_norm >= 1.0) throw NotInterior("ball_exact_metric: point outside the unit ball");
    if (!(norm(v) > 0.0)) throw ZeroDirection("ball_exact_metric: direction must be nonzero");
    const double one_minus = 1.0 - x_norm * x_norm;
    const double pairing = std::abs(inner(v, x));
    return std::sqrt(norm(v) * norm(v) / one_minus + pairing * pairing / (one_minus * one_minus));
}

MetricBoundReport bound_report_nd(const DomainND& domain, const CVec& p, const CVec& xi,
                                  const ExactOracle& oracle) {
    const auto geom = slice(domain, p, xi);
    const double xi_norm = norm(xi);

    std::optional<double> exact;
    if (domain.is_ball()) {
        // kappa scales under z -> (z - c)/R, which maps the ball to the unit ball.
        CVec xs = p;
        for (std::size_t i = 0; i < xs.size(); ++i)
            xs[i] = (xs[i] - domain.center()[i]) / domain.radius();
        exact = ball_exact_metric(xs, xi) / domain.radius();
    } else if (oracle) {
        exact = oracle(p, xi);
    }

    return make_bound_report(geom.r, geom.r_hat, geom.dist_pq, xi_norm, exact);
}

}  // namespace koba
