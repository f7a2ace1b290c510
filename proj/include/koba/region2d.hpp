#pragma once

#include <vector>

#include "koba/errors.hpp"
#include "koba/geometry.hpp"

namespace koba {

// Points with interior margin at or below this are treated as non-interior.
inline constexpr double kBoundaryTol = 1e-12;

// A bounded planar convex region, either an intersection of half-planes and
// disks or the convex hull of a family of generator disks.
//
// Regions are immutable after construction and validated eagerly: unit
// normals, boundedness (for half-plane families, the largest angular gap
// between normals must stay below pi), nonempty interior (a witness interior
// point is found and stored). Intersection regions also get a Chebyshev-style
// incenter and inradius via bisection over eroded feasibility.
class ConvexRegion2D {
public:
    enum class Kind { Intersection, Hull };

    static ConvexRegion2D intersection(std::vector<HalfPlane> halfplanes,
                                       std::vector<Disk> disks);
    static ConvexRegion2D hull(std::vector<Disk> generators);
    static ConvexRegion2D disk(cx center, double radius);

    Kind kind() const { return kind_; }
    const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }
    // Intersection: disk constraints. Hull: generator disks.
    const std::vector<Disk>& disks() const { return disks_; }

    // Open-region membership (strict constraints, boundary band excluded).
    bool contains(cx x) const;

    // Distance from an interior point to the complement. Throws NotInterior.
    double boundary_distance(cx x) const;

    // Positive inside, <= 0 outside. For interior x this equals the boundary
    // distance. Never throws.
    double signed_margin(cx x) const;

    // Cheaper hull margin: table lookup without golden-section refinement,
    // accurate to about 1e-4 at desk scale. Exact for intersections.
    double signed_margin_fast(cx x) const;

    // Inner parallel body {x : distance >= r}, same constraint family with
    // offsets and radii reduced by r. Intersection variant only.
    ConvexRegion2D erode(double r) const;

    // Max of the boundary distance (Intersection only; cached).
    double inradius() const;
    // A point approximately achieving the inradius.
    cx incenter() const;

    cx witness() const { return witness_; }
    const BBox& bounding_box() const { return bbox_; }

    // Support function h(theta) = sup over the region of dot(x, u(theta)).
    // Exact closed form for hulls; not provided for intersections.
    double support(double theta) const;

    struct SupportGap {
        double gap;    // h(theta) - dot(x, u(theta)) at the minimizing theta
        double theta;  // minimizing direction; -u(theta) is a supergradient
    };
    // Hull only: min over directions of the support margin, computed from a
    // 1024-entry direction table with golden-section refinement of the three
    // smallest local minima.
    SupportGap hull_support_gap(cx x) const;

private:
    ConvexRegion2D() = default;

    double intersection_margin(cx x) const;
    void init_intersection();
    void init_hull();

    Kind kind_ = Kind::Intersection;
    std::vector<HalfPlane> halfplanes_;
    std::vector<Disk> disks_;
    BBox bbox_;
    cx witness_{0.0, 0.0};
    double inradius_ = -1.0;
    cx incenter_{0.0, 0.0};
    std::vector<double> support_table_;  // hull: h at the table directions
};

// Rigid motion z -> conj(unit) * (z - origin) applied to a region; used to
// realize planar slices with a chosen base point and direction.
ConvexRegion2D transform_to_slice(const ConvexRegion2D& region, cx origin, cx unit);

}  // namespace koba
