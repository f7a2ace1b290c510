#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace koba {

// Golden-section minimization of a unimodal function on [a, b].
// Returns (argmin, min value). tol is the absolute resolution in x.
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    double xm = 0.5 * (a + b);
    double fm = f(xm);
    if (f1 < fm) {
        xm = x1;
        fm = f1;
    }
    if (f2 < fm) {
        xm = x2;
        fm = f2;
    }
    return {xm, fm};
}

inline std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    const double la = std::log(lo);
    const double lb = std::log(hi);
    for (int i = 0; i < n; ++i)
        out.push_back(std::exp(la + (lb - la) * static_cast<double>(i) / (n - 1)));
    return out;
}

}  // namespace koba
