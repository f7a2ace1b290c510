#pragma once

// Exact Euclidean projection onto a level set {margin >= level} of an
// intersection family (half-planes and disks). In the plane the projection
// has at most two active constraints, so the single-constraint projections
// plus the pairwise boundary intersections form a complete closed-form
// candidate list. Shared by region construction (witness, inradius) and the
// inscribed-disk solver (feasibility tests and the optimal-center projection).

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "koba/geometry.hpp"

namespace koba::detail {

inline double family_margin(const std::vector<HalfPlane>& halfplanes,
                            const std::vector<Disk>& disks, cx x) {
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& hp : halfplanes) margin = std::min(margin, hp.offset - dot(hp.normal, x));
    for (const auto& d : disks) margin = std::min(margin, d.radius - std::abs(x - d.center));
    return margin;
}

// Returns the projection of p onto {margin >= level}, or nothing when the
// level set is empty at tolerance (1e-9).
inline std::optional<cx> project_to_level(const std::vector<HalfPlane>& halfplanes,
                                          const std::vector<Disk>& disks, double level, cx p,
                                          long* candidates_checked = nullptr) {
    constexpr double kFeasSlack = 1e-9;
    if (family_margin(halfplanes, disks, p) >= level) return p;

    struct Line {
        cx normal;
        double offset;  // boundary dot(normal, x) = offset, feasible side <=
    };
    std::vector<Line> lines;
    lines.reserve(halfplanes.size());
    for (const auto& hp : halfplanes) lines.push_back({hp.normal, hp.offset - level});
    std::vector<Disk> circles;
    circles.reserve(disks.size());
    for (const auto& d : disks) {
        const double rad = d.radius - level;
        if (rad < -kFeasSlack) return std::nullopt;  // one constraint already empty
        circles.push_back({d.center, std::max(rad, 0.0)});
    }

    std::optional<cx> best;
    double best_dist = std::numeric_limits<double>::infinity();
    auto consider = [&](cx cand) {
        if (candidates_checked) ++*candidates_checked;
        if (family_margin(halfplanes, disks, cand) < level - kFeasSlack) return;
        const double dist = std::abs(cand - p);
        if (dist < best_dist) {
            best_dist = dist;
            best = cand;
        }
    };

    for (const auto& line : lines) {
        const double excess = dot(line.normal, p) - line.offset;
        if (excess > 0.0) consider(p - excess * line.normal);
    }
    for (const auto& circle : circles) {
        const cx off = p - circle.center;
        const double dist = std::abs(off);
        if (dist > circle.radius && dist > 0.0)
            consider(circle.center + off * (circle.radius / dist));
    }

    auto line_line = [&](const Line& a, const Line& b) {
        const double det = a.normal.real() * b.normal.imag() - a.normal.imag() * b.normal.real();
        if (std::abs(det) < 1e-14) return;
        consider({(a.offset * b.normal.imag() - b.offset * a.normal.imag()) / det,
                  (a.normal.real() * b.offset - b.normal.real() * a.offset) / det});
    };
    auto line_circle = [&](const Line& l, const Disk& d) {
        const double e = dot(l.normal, d.center) - l.offset;
        const double h_sq = d.radius * d.radius - e * e;
        if (h_sq < -1e-15) return;
        const cx foot = d.center - e * l.normal;
        const cx tangent{-l.normal.imag(), l.normal.real()};
        const double h = std::sqrt(std::max(h_sq, 0.0));
        consider(foot + h * tangent);
        consider(foot - h * tangent);
    };
    auto circle_circle = [&](const Disk& a, const Disk& b) {
        const cx off = b.center - a.center;
        const double d = std::abs(off);
        if (d < 1e-15) return;
        const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
        const double h_sq = a.radius * a.radius - along * along;
        if (h_sq < -1e-12) return;
        const cx dir = off / d;
        const cx base = a.center + along * dir;
        const cx side{-dir.imag(), dir.real()};
        const double h = std::sqrt(std::max(h_sq, 0.0));
        consider(base + h * side);
        consider(base - h * side);
    };

    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) line_line(lines[i], lines[j]);
    for (const auto& line : lines)
        for (const auto& circle : circles) line_circle(line, circle);
    for (std::size_t i = 0; i < circles.size(); ++i)
        for (std::size_t j = i + 1; j < circles.size(); ++j) circle_circle(circles[i], circles[j]);

    return best;
}

}  // namespace koba::detail
