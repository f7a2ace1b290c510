#pragma once

#include <vector>

#include "koba/errors.hpp"
#include "koba/geometry.hpp"
#include "koba/parallel.hpp"

namespace koba {

// Poincare metric |xi| / (1 - |z|^2) of the unit disk.
double poincare_metric(cx z, cx xi);

// Hyperbolic distance (1/2) log((1+rho)/(1-rho)), rho = |(z-w)/(1 - conj(z) w)|.
double disk_distance(cx z, cx w);

// Upper half-plane distance with rho = |(z-w)/(z - conj(w))|.
double halfplane_distance(cx z, cx w);

// The lens region D(i(1-h), 1) meet D(-i(1-h), 1) together with its explicit
// biholomorphism onto the unit disk: phi = Cayley ∘ (principal alpha-power)
// ∘ Moebius, where the Moebius factor M(z) = (z+c)/(2c(c-z)) carries the lens
// onto the sector |arg| < A and the power opens the sector to the half-plane.
struct LensMap {
    double h = 0.0;
    double c = 0.0;           // vertex: sqrt(2h - h^2)
    double half_angle = 0.0;  // A = arctan(c / (1-h)); the corner angle is 2A
    double alpha = 0.0;       // pi / (2A)

    static LensMap make(double h);

    bool contains(cx z) const;
    double boundary_margin(cx z) const;  // min margin against the two circles

    cx moebius(cx z) const;  // M(z); BranchViolation when Re M <= 0
    cx map(cx z) const;      // phi(z)
    cx map_derivative(cx z) const;
    // 1 - |phi(z)| evaluated without cancellation (stable near the vertex).
    double one_minus_abs_map(cx z) const;
};

// kappa of the lens at (z, xi) by biholomorphic invariance through the map.
double lens_exact_metric(const LensMap& lens, cx z, cx xi);

struct GapScan {
    double max_gap = 0.0;
    std::vector<double> gaps;
};

// Empirical boundedness check of the distance estimate on the model domain
// Lambda_alpha = (unit disk + 1)^(1/alpha): samples z = f(rho e^{i theta})
// with log-uniform 1 - rho down to 1 - rho_max and reports
// k(z0, z) - (alpha/2) log(1/dist(z, boundary)). The exact distance comes from
// invariance under f; the boundary distance from a dense sampled boundary
// curve with golden-section refinement (documented accuracy about 1e-6).
GapScan lambda_alpha_gap_scan(double alpha, int n_samples, double rho_max = 1.0 - 1e-6,
                              unsigned seed = 811, Exec exec = Exec::parallel);

}  // namespace koba
