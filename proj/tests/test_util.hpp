#pragma once

// Shared helpers for the test suites: deterministic random region generators
// and an independent ray-marching distance oracle that only relies on
// membership queries.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "koba/numerics.hpp"
#include "koba/region2d.hpp"

namespace koba::testing {

// Near-regular random polygons: evenly spread normals with angular jitter and
// comparable offsets. Keeps the level-set vertices well-conditioned, which the
// grid oracle's O(step) accuracy implicitly assumes.
inline ConvexRegion2D random_polygon(std::mt19937& rng, int sides) {
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::uniform_real_distribution<double> offset(0.97, 1.03);
    std::vector<HalfPlane> halfplanes;
    halfplanes.reserve(static_cast<std::size_t>(sides));
    for (int i = 0; i < sides; ++i) {
        const double theta = 2.0 * 3.141592653589793 * (i + 0.5 + jitter(rng)) / sides;
        halfplanes.push_back({unit_dir(theta), offset(rng)});
    }
    return ConvexRegion2D::intersection(std::move(halfplanes), {});
}

// Spread centers keep the inradius peak conical (three active constraints),
// which the grid oracle's O(step) accuracy needs.
inline ConvexRegion2D random_disk_intersection(std::mt19937& rng, int count) {
    std::uniform_real_distribution<double> center(-0.35, 0.35);
    std::uniform_real_distribution<double> radius(0.85, 1.05);
    std::vector<Disk> disks;
    disks.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        disks.push_back({cx{center(rng), center(rng)}, radius(rng)});
    return ConvexRegion2D::intersection({}, std::move(disks));
}

inline cx random_interior_point(std::mt19937& rng, const ConvexRegion2D& region,
                                double min_margin = 0.05) {
    const BBox& box = region.bounding_box();
    std::uniform_real_distribution<double> ux(box.xmin, box.xmax);
    std::uniform_real_distribution<double> uy(box.ymin, box.ymax);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const cx p{ux(rng), uy(rng)};
        if (region.signed_margin(p) >= min_margin) return p;
    }
    return region.witness();
}

// Interior point outside the closed inball. Inside the inball the optimal
// inscribed disk is the inball itself, independent of p, and its critical
// set makes the grid oracle's nearest-center estimate ill-conditioned; the
// oracle comparison is meaningful in the regime where the optimum moves
// with p.
inline cx random_point_outside_inball(std::mt19937& rng, const ConvexRegion2D& region,
                                      double min_margin = 0.05) {
    const BBox& box = region.bounding_box();
    std::uniform_real_distribution<double> ux(box.xmin, box.xmax);
    std::uniform_real_distribution<double> uy(box.ymin, box.ymax);
    for (int attempt = 0; attempt < 200000; ++attempt) {
        const cx p{ux(rng), uy(rng)};
        if (region.signed_margin(p) < min_margin) continue;
        if (std::abs(p - region.incenter()) > region.inradius() + 0.05) return p;
    }
    return region.witness();
}

// The grid oracle's nearest-center estimate is well-conditioned only when the
// active constraints at the optimal center are angularly well separated: the
// level-set vertex there moves like slack / cos(gamma/2) under level slack,
// so near-antipodal active normals (gamma near pi) amplify the oracle's
// O(step) error without bound. Draws violating this are rejected from the
// solver-vs-oracle comparison.
inline bool oracle_q_well_conditioned(const ConvexRegion2D& region, cx q, double level,
                                      double step) {
    struct Active {
        double margin;
        cx normal;
    };
    std::vector<Active> items;
    for (const auto& hp : region.halfplanes())
        items.push_back({hp.offset - dot(hp.normal, q), hp.normal});
    for (const auto& d : region.disks()) {
        const cx off = q - d.center;
        const double dist = std::abs(off);
        if (dist < 1e-12) continue;
        items.push_back({d.radius - dist, off / dist});
    }
    std::sort(items.begin(), items.end(),
              [](const Active& a, const Active& b) { return a.margin < b.margin; });
    if (items.size() < 2) return true;
    if (items[1].margin > level + 3.0 * step) return true;  // single active constraint
    const double cos_gamma = dot(items[0].normal, items[1].normal);
    const double half_angle_cos = std::sqrt(std::max(0.0, 0.5 * (1.0 + cos_gamma)));
    return half_angle_cos >= 0.55;
}

// Distance to the boundary seen only through membership: along each ray from
// x, bisect for the exit parameter; the boundary distance is the minimum exit
// length over directions (golden-refined around the best samples).
inline double ray_distance_oracle(const std::function<bool(cx)>& contains, cx x,
                                  double reach, int directions = 512) {
    auto exit_length = [&](double theta) {
        const cx u = unit_dir(theta);
        double hi = reach;
        double lo = 0.0;
        for (int it = 0; it < 80 && hi - lo > 1e-13 * reach; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (contains(x + mid * u))
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    std::vector<double> lengths(static_cast<std::size_t>(directions));
    double sample_min = reach;
    for (int k = 0; k < directions; ++k) {
        lengths[static_cast<std::size_t>(k)] =
            exit_length(2.0 * 3.141592653589793 * k / directions);
        sample_min = std::min(sample_min, lengths[static_cast<std::size_t>(k)]);
    }

    double best = sample_min;
    int refined = 0;
    for (int k = 0; k < directions && refined < 8; ++k) {
        const double v = lengths[static_cast<std::size_t>(k)];
        if (v > lengths[static_cast<std::size_t>((k + directions - 1) % directions)] ||
            v > lengths[static_cast<std::size_t>((k + 1) % directions)])
            continue;
        if (v > sample_min * (1.0 + 1e-2)) continue;
        const double step = 2.0 * 3.141592653589793 / directions;
        const double center = step * k;
        best = std::min(best, golden_min(exit_length, center - step, center + step, 1e-8).second);
        ++refined;
    }
    return best;
}

}  // namespace koba::testing
