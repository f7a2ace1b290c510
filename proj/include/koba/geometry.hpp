#pragma once

#include <cmath>
#include <complex>

namespace koba {

using cx = std::complex<double>;

// Real (Euclidean) inner product of two plane points.
inline double dot(cx a, cx b) { return a.real() * b.real() + a.imag() * b.imag(); }

inline cx unit_dir(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Half-plane constraint dot(normal, x) <= offset; normal must have unit length.
struct HalfPlane {
    cx normal;
    double offset;
};

// Closed disk |x - center| <= radius. Used both as an intersection constraint
// and as a hull generator (radius 0 degenerates to a point).
struct Disk {
    cx center;
    double radius;
};

struct BBox {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double diag() const { return std::hypot(width(), height()); }
    cx center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
    bool contains(cx p) const {
        return p.real() >= xmin && p.real() <= xmax && p.imag() >= ymin && p.imag() <= ymax;
    }
};

}  // namespace koba
