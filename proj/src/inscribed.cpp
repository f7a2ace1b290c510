#include "koba/inscribed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "level_projection.hpp"

namespace koba {

namespace {

constexpr double kBisectTol = 1e-7;   // bisection resolution in the radius
constexpr double kProjTol = 1e-9;     // projection residual tolerance
constexpr int kMaxIter = 10000;       // iteration cap per feasibility test
constexpr double kLevelSlack = 1e-7;  // relaxation of the optimal level set

bool single_disk(const ConvexRegion2D& region) {
    return region.kind() == ConvexRegion2D::Kind::Intersection &&
           region.halfplanes().empty() && region.disks().size() == 1;
}

// Feasibility of {zeta : margin(zeta) >= r} meeting {|zeta - p| <= r} for
// intersection families: project p onto the level set exactly and compare
// the distance against r.
struct Feasibility {
    bool feasible = false;
    cx point{0.0, 0.0};
    long iterations = 0;
};

Feasibility intersection_feasible(const ConvexRegion2D& region, cx p, double r) {
    long checked = 0;
    const auto q = detail::project_to_level(region.halfplanes(), region.disks(), r, p, &checked);
    if (!q) return {false, p, checked};
    if (std::abs(*q - p) > r + kProjTol) return {false, *q, checked};
    return {true, *q, checked};
}

// Hull families: projected supergradient ascent on the concave boundary
// distance over the disk around p, with Polyak-style steps toward the level r.
Feasibility hull_feasible(const ConvexRegion2D& region, cx p, double r, cx start) {
    cx x = start;
    if (std::abs(x - p) > r) x = p;
    double best = -std::numeric_limits<double>::infinity();
    int since_improved = 0;
    for (int it = 0; it < kMaxIter; ++it) {
        const auto sg = region.hull_support_gap(x);
        if (sg.gap >= r - kProjTol) return {true, x, it + 1};
        if (sg.gap > best + 1e-13) {
            best = sg.gap;
            since_improved = 0;
        } else if (++since_improved >= 120) {
            return {false, x, it + 1};
        }
        x -= (r - sg.gap + 1e-12) * unit_dir(sg.theta);
        const cx off = x - p;
        const double dist = std::abs(off);
        if (dist > r) x = p + off * (r / dist);
    }
    return {false, x, kMaxIter};
}

Feasibility hull_level_feasible(const ConvexRegion2D& region, double r, cx start) {
    // Unconstrained level search: the ascent with a disk that covers the
    // whole region.
    const double big = region.bounding_box().diag() + 1.0;
    cx x = start;
    double best = -std::numeric_limits<double>::infinity();
    int since_improved = 0;
    for (int it = 0; it < kMaxIter; ++it) {
        const auto sg = region.hull_support_gap(x);
        if (sg.gap >= r - kProjTol) return {true, x, it + 1};
        if (sg.gap > best + 1e-13) {
            best = sg.gap;
            since_improved = 0;
        } else if (++since_improved >= 120) {
            return {false, x, it + 1};
        }
        x -= (r - sg.gap + 1e-12) * unit_dir(sg.theta);
        const cx off = x - start;
        if (std::abs(off) > big) x = start + off * (big / std::abs(off));
    }
    return {false, x, kMaxIter};
}

cx project_onto_level_set(const ConvexRegion2D& region, cx p, double level,
                          SolverCertificate* cert) {
    if (region.signed_margin(p) >= level) return p;

    if (region.kind() == ConvexRegion2D::Kind::Intersection) {
        long checked = 0;
        const auto q =
            detail::project_to_level(region.halfplanes(), region.disks(), level, p, &checked);
        if (cert) cert->projection_iterations += checked;
        if (!q) throw InfeasibleLevelSet("level set is empty at the given tolerance");
        return *q;
    }

    // Hull level sets are intersections of the tangent half-planes
    // {dot(u(theta), x) <= h(theta) - level}; project exactly onto a growing
    // outer approximation, adding the most violated tangent until feasible.
    std::vector<HalfPlane> cuts;
    constexpr int kInitialCuts = 64;
    cuts.reserve(kInitialCuts + 80);
    for (int k = 0; k < kInitialCuts; ++k) {
        const double theta = 2.0 * 3.141592653589793 * k / kInitialCuts;
        cuts.push_back({unit_dir(theta), region.support(theta) - level});
    }
    for (int round = 0; round < 80; ++round) {
        long checked = 0;
        const auto projected = detail::project_to_level(cuts, {}, 0.0, p, &checked);
        if (cert) cert->projection_iterations += checked;
        if (!projected) throw SolverDiverged("level-set projection did not converge");
        const auto sg = region.hull_support_gap(*projected);
        if (cert) cert->residual = std::max(cert->residual, std::max(0.0, level - sg.gap));
        if (sg.gap >= level - 1e-9) return *projected;
        cuts.push_back({unit_dir(sg.theta), region.support(sg.theta) - level});
    }
    throw SolverDiverged("level-set projection did not converge");
}

}  // namespace

std::pair<cx, double> interpolated_disk(cx p, double rp, cx z, double rz, double t) {
    return {(1.0 - t) * p + t * z, (1.0 - t) * rp + t * rz};
}

cx nearest_max_center(const ConvexRegion2D& region, cx p, double r_hat) {
    const double level = r_hat - kLevelSlack;

    if (single_disk(region)) {
        const auto& d = region.disks().front();
        const double rad = d.radius - level;
        if (rad < 0.0) throw InfeasibleLevelSet("level set is empty at the given tolerance");
        const cx off = p - d.center;
        const double dist = std::abs(off);
        if (dist <= rad) return p;
        return d.center + off * (rad / dist);
    }

    if (region.signed_margin(p) >= level) return p;

    if (region.kind() == ConvexRegion2D::Kind::Hull) {
        const auto feas = hull_level_feasible(region, level, region.witness());
        if (!feas.feasible) throw InfeasibleLevelSet("level set is empty at the given tolerance");
    }
    return project_onto_level_set(region, p, level, nullptr);
}

InscribedSolution max_disk_radius_through(const ConvexRegion2D& region, cx p) {
    if (!region.contains(p)) throw NotInterior("base point is not interior to the region");

    InscribedSolution sol;

    // A single disk admits only itself as the maximal inscribed disk, and its
    // closure contains every interior point.
    if (single_disk(region)) {
        const auto& d = region.disks().front();
        sol.r_hat = d.radius;
        sol.q = d.center;
        sol.dist_pq = std::abs(p - d.center);
        return sol;
    }

    const double delta_p = region.boundary_distance(p);
    const bool is_intersection = region.kind() == ConvexRegion2D::Kind::Intersection;
    double lo = delta_p;
    double hi = is_intersection
                    ? std::max(region.inradius(), lo)
                    : std::max(0.5 * std::min(region.bounding_box().width(),
                                              region.bounding_box().height()),
                               lo);

    cx warm = p;
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        const auto feas = is_intersection ? intersection_feasible(region, p, mid)
                                          : hull_feasible(region, p, mid, warm);
        sol.certificate.bisection_iterations += 1;
        sol.certificate.projection_iterations += feas.iterations;
        if (feas.feasible) {
            lo = mid;
            warm = feas.point;
        } else {
            hi = mid;
        }
    }

    sol.r_hat = std::max(lo, delta_p);
    sol.q = project_onto_level_set(region, p, sol.r_hat - kLevelSlack, &sol.certificate);
    sol.dist_pq = std::abs(sol.q - p);
    return sol;
}

namespace {

struct GridScan {
    cx origin{0.0, 0.0};
    double step = 0.0;
    std::size_t nx = 0, ny = 0;

    std::size_t total() const { return nx * ny; }
    cx at(std::size_t i) const {
        return origin + cx{step * static_cast<double>(i % nx),
                           step * static_cast<double>(i / nx)};
    }
};

GridScan make_scan(cx lo, cx hi, double step) {
    GridScan scan;
    scan.origin = lo;
    scan.step = step;
    scan.nx = static_cast<std::size_t>(std::floor((hi.real() - lo.real()) / step)) + 1;
    scan.ny = static_cast<std::size_t>(std::floor((hi.imag() - lo.imag()) / step)) + 1;
    return scan;
}

}  // namespace

InscribedSolution brute_force_inscribed(const ConvexRegion2D& region, cx p, double grid_step,
                                        Exec exec) {
    if (!region.contains(p)) throw NotInterior("base point is not interior to the region");
    if (!(grid_step > 0.0)) throw DomainError("grid step must be positive");

    const BBox& box = region.bounding_box();
    const GridScan coarse =
        make_scan({box.xmin, box.ymin}, {box.xmax, box.ymax}, grid_step);

    auto max_feasible = [&](const GridScan& scan) {
        return kernels::max_index_over(exec, scan.total(), [&](std::size_t i) {
            const cx zeta = scan.at(i);
            const double margin = region.signed_margin_fast(zeta);
            if (margin <= kBoundaryTol) return -std::numeric_limits<double>::infinity();
            if (std::abs(zeta - p) > margin) return -std::numeric_limits<double>::infinity();
            return margin;
        });
    };
    auto nearest_above = [&](const GridScan& scan, double level) {
        return kernels::min_index_over(exec, scan.total(), [&](std::size_t i) {
            const cx zeta = scan.at(i);
            if (region.signed_margin_fast(zeta) < level)
                return std::numeric_limits<double>::infinity();
            return std::abs(zeta - p);
        });
    };

    const auto best = max_feasible(coarse);

    InscribedSolution sol;
    sol.certificate.projection_iterations = static_cast<long>(coarse.total());
    sol.certificate.residual = grid_step;

    const double margin_p = region.signed_margin_fast(p);
    if (!(best.value > margin_p)) {
        sol.r_hat = margin_p;
        sol.q = p;
        sol.dist_pq = 0.0;
        return sol;
    }

    // Second scale: the optimum sits where the circle |zeta - p| = delta(zeta)
    // touches the level curve tangentially, so the coarse pass can miss it by
    // a few steps along the contact direction. Rescan a window around the
    // coarse argmax (and around the coarse nearest center) at step/16.
    const double fine_step = grid_step / 16.0;
    const double window = std::max(0.06, 8.0 * grid_step);
    const cx z_c = coarse.at(best.index);
    const GridScan fine_r = make_scan(z_c - cx{window, window}, z_c + cx{window, window},
                                      fine_step);
    const auto best_fine = max_feasible(fine_r);
    sol.certificate.projection_iterations += static_cast<long>(fine_r.total());
    sol.r_hat = std::max(best.value, best_fine.value);

    const double level = sol.r_hat - grid_step;
    const auto near_c = nearest_above(coarse, level);
    cx q_center = std::isfinite(near_c.value) ? coarse.at(near_c.index) : z_c;
    const GridScan fine_q = make_scan(q_center - cx{window, window},
                                      q_center + cx{window, window}, fine_step);
    const auto near_fine = nearest_above(fine_q, level);
    sol.certificate.projection_iterations += static_cast<long>(fine_q.total());
    if (std::isfinite(near_fine.value)) {
        sol.q = fine_q.at(near_fine.index);
        sol.dist_pq = near_fine.value;
    } else if (std::isfinite(near_c.value)) {
        sol.q = q_center;
        sol.dist_pq = near_c.value;
    } else {
        sol.q = p;
        sol.dist_pq = 0.0;
    }
    return sol;
}

}  // namespace koba
