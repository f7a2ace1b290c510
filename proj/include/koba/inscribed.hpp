#pragma once

#include <utility>

#include "koba/parallel.hpp"
#include "koba/region2d.hpp"

namespace koba {

struct SolverCertificate {
    int bisection_iterations = 0;
    long projection_iterations = 0;
    double residual = 0.0;
};

// Solution of the constrained inscribed-disk problem at p: the largest disk
// inside the region whose closure contains p, and the optimal center nearest p.
struct InscribedSolution {
    double r_hat = 0.0;   // radius of the largest such disk
    cx q{0.0, 0.0};       // optimal center nearest p
    double dist_pq = 0.0; // |q - p|
    SolverCertificate certificate;
};

// Bisection on the candidate radius over [distance(p), inradius]; feasibility
// of {zeta : distance(zeta) >= r, |zeta - p| <= r} via alternating projections
// (intersection families) or projected supergradient ascent on the concave
// boundary distance (hulls). Single-disk regions are solved in closed form.
InscribedSolution max_disk_radius_through(const ConvexRegion2D& region, cx p);

// Euclidean projection of p onto the level set {distance >= r_hat} (slightly
// relaxed, so the target stays well-posed at the exact optimum). r_hat must
// match max_disk_radius_through within solver tolerance.
cx nearest_max_center(const ConvexRegion2D& region, cx p, double r_hat);

// Disk with center (1-t)p + tz and radius (1-t)Rp + tRz.
std::pair<cx, double> interpolated_disk(cx p, double rp, cx z, double rz, double t);

// Independent exhaustive oracle: scans the bounding-box grid for feasible
// centers. Accuracy is O(grid_step).
InscribedSolution brute_force_inscribed(const ConvexRegion2D& region, cx p, double grid_step,
                                        Exec exec = Exec::parallel);

}  // namespace koba
