#pragma once

#include <functional>
#include <vector>

#include "koba/bounds.hpp"
#include "koba/inscribed.hpp"
#include "koba/region2d.hpp"

namespace koba {

using CVec = std::vector<cx>;

double norm(const CVec& v);
// Hermitian pairing sum_k a_k * conj(b_k).
cx inner(const CVec& a, const CVec& b);

// A domain in C^n that admits planar slices: a Euclidean ball, or an embedded
// planar convex region (n = 1).
class DomainND {
public:
    static DomainND ball(CVec center, double radius);
    static DomainND planar(ConvexRegion2D region);

    bool is_ball() const { return is_ball_; }
    std::size_t dim() const { return is_ball_ ? center_.size() : 1; }
    const CVec& center() const { return center_; }
    double radius() const { return radius_; }
    const ConvexRegion2D& region() const { return region_; }

    bool contains(const CVec& p) const;

private:
    DomainND() : region_(ConvexRegion2D::disk({0.0, 0.0}, 1.0)) {}

    bool is_ball_ = false;
    CVec center_;
    double radius_ = 0.0;
    ConvexRegion2D region_;
};

// Planar data of the slice {z in C : p + z xi/||xi|| in D}, translated so the
// base point sits at 0, together with the inscribed-disk solve on it.
struct SliceGeometry {
    ConvexRegion2D slice;
    double r = 0.0;      // boundary distance of the slice at 0
    double r_hat = 0.0;  // largest inscribed-disk radius through 0
    cx q_planar{0.0, 0.0};
    double dist_pq = 0.0;
    SolverCertificate certificate;
};

SliceGeometry slice(const DomainND& domain, const CVec& p, const CVec& xi);

// Unitary image with the direction along the first coordinate: returns
// (x, v = (||xi||, 0, ..., 0)) with ||x|| = ||p|| and |<v, x>| = |<xi, p>|.
std::pair<CVec, CVec> unitary_reduce(const CVec& p, const CVec& xi);

// Exact Kobayashi metric of the unit Euclidean ball:
// sqrt(||v||^2/(1-||x||^2) + |<v,x>|^2/(1-||x||^2)^2).
double ball_exact_metric(const CVec& x, const CVec& v);

using ExactOracle = std::function<double(const CVec& p, const CVec& xi)>;

// Slice, solve the inscribed-disk problem, and evaluate every bound. Balls
// get the exact metric attached automatically; planar domains may register an
// oracle.
MetricBoundReport bound_report_nd(const DomainND& domain, const CVec& p, const CVec& xi,
                                  const ExactOracle& oracle = {});

}  // namespace koba
