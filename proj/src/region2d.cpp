#include "koba/region2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "koba/numerics.hpp"
#include "level_projection.hpp"

namespace koba {

namespace {

constexpr int kTableSize = 1024;
constexpr double kTwoPi = 6.283185307179586476925286766559;

const std::array<cx, kTableSize>& direction_table() {
    static const std::array<cx, kTableSize> table = [] {
        std::array<cx, kTableSize> t;
        for (int k = 0; k < kTableSize; ++k) t[k] = unit_dir(kTwoPi * k / kTableSize);
        return t;
    }();
    return table;
}

BBox intersect(const BBox& a, const BBox& b) {
    return {std::max(a.xmin, b.xmin), std::min(a.xmax, b.xmax), std::max(a.ymin, b.ymin),
            std::min(a.ymax, b.ymax)};
}

BBox disk_box(const Disk& d) {
    return {d.center.real() - d.radius, d.center.real() + d.radius, d.center.imag() - d.radius,
            d.center.imag() + d.radius};
}

// Half-plane families bound the plane exactly when the largest angular gap
// between consecutive normal directions stays below pi.
bool halfplanes_bound(const std::vector<HalfPlane>& halfplanes) {
    if (halfplanes.size() < 3) return false;
    std::vector<double> angles;
    angles.reserve(halfplanes.size());
    for (const auto& hp : halfplanes) angles.push_back(std::atan2(hp.normal.imag(), hp.normal.real()));
    std::sort(angles.begin(), angles.end());
    double max_gap = angles.front() + kTwoPi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i)
        max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    return max_gap < 3.141592653589793 - 1e-9;
}

}  // namespace

ConvexRegion2D ConvexRegion2D::intersection(std::vector<HalfPlane> halfplanes,
                                            std::vector<Disk> disks) {
    ConvexRegion2D region;
    region.kind_ = Kind::Intersection;
    region.halfplanes_ = std::move(halfplanes);
    region.disks_ = std::move(disks);
    region.init_intersection();
    return region;
}

ConvexRegion2D ConvexRegion2D::hull(std::vector<Disk> generators) {
    ConvexRegion2D region;
    region.kind_ = Kind::Hull;
    region.disks_ = std::move(generators);
    region.init_hull();
    return region;
}

ConvexRegion2D ConvexRegion2D::disk(cx center, double radius) {
    return intersection({}, {Disk{center, radius}});
}

double ConvexRegion2D::intersection_margin(cx x) const {
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& hp : halfplanes_) margin = std::min(margin, hp.offset - dot(hp.normal, x));
    for (const auto& d : disks_) margin = std::min(margin, d.radius - std::abs(x - d.center));
    return margin;
}

void ConvexRegion2D::init_intersection() {
    if (halfplanes_.empty() && disks_.empty())
        throw InvalidRegion("intersection region needs at least one constraint");
    for (const auto& hp : halfplanes_) {
        if (std::abs(std::abs(hp.normal) - 1.0) > 1e-12)
            throw InvalidRegion("half-plane normal must have unit length");
        if (!std::isfinite(hp.offset)) throw InvalidRegion("non-finite half-plane offset");
    }
    for (const auto& d : disks_) {
        if (!(d.radius > 0.0) || !std::isfinite(d.radius) || !std::isfinite(std::abs(d.center)))
            throw InvalidRegion("disk constraint needs a positive finite radius");
    }

    const bool hp_bound = halfplanes_bound(halfplanes_);
    if (disks_.empty() && !hp_bound) throw InvalidRegion("intersection region is unbounded");

    bool have_box = false;
    BBox box{};
    if (!disks_.empty()) {
        box = disk_box(disks_.front());
        for (std::size_t i = 1; i < disks_.size(); ++i) box = intersect(box, disk_box(disks_[i]));
        have_box = true;
    }
    if (hp_bound) {
        BBox vbox{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
        bool any_vertex = false;
        for (std::size_t i = 0; i < halfplanes_.size(); ++i) {
            for (std::size_t j = i + 1; j < halfplanes_.size(); ++j) {
                const auto& a = halfplanes_[i];
                const auto& b = halfplanes_[j];
                const double det = a.normal.real() * b.normal.imag() - a.normal.imag() * b.normal.real();
                if (std::abs(det) < 1e-12) continue;
                const double vx = (a.offset * b.normal.imag() - b.offset * a.normal.imag()) / det;
                const double vy = (a.normal.real() * b.offset - b.normal.real() * a.offset) / det;
                const cx v{vx, vy};
                bool keep = true;
                for (const auto& hp : halfplanes_)
                    if (dot(hp.normal, v) - hp.offset > 1e-9) {
                        keep = false;
                        break;
                    }
                if (!keep) continue;
                any_vertex = true;
                vbox.xmin = std::min(vbox.xmin, vx);
                vbox.xmax = std::max(vbox.xmax, vx);
                vbox.ymin = std::min(vbox.ymin, vy);
                vbox.ymax = std::max(vbox.ymax, vy);
            }
        }
        if (!any_vertex && disks_.empty())
            throw InvalidRegion("half-plane family has empty interior");
        if (any_vertex) {
            box = have_box ? intersect(box, vbox) : vbox;
            have_box = true;
        }
    }
    if (!have_box) throw InvalidRegion("intersection region is unbounded");
    if (!(box.width() > 0.0) || !(box.height() > 0.0))
        throw InvalidRegion("intersection region has empty interior");
    bbox_ = box;

    // Interior witness: exact level-set projection from the box center at
    // progressively smaller margins.
    const double scale = std::min(bbox_.width(), bbox_.height());
    bool found = false;
    for (double eps = 1e-2 * scale; eps > 1e-11 * scale; eps *= 0.1) {
        const auto point = detail::project_to_level(halfplanes_, disks_, eps, bbox_.center());
        if (point) {
            witness_ = *point;
            found = true;
            break;
        }
    }
    if (!found) throw InvalidRegion("intersection region has empty interior");

    // Inradius and incenter by bisection on exact level-set feasibility.
    double lo = intersection_margin(witness_);
    double hi = std::max(0.5 * std::min(bbox_.width(), bbox_.height()), lo);
    incenter_ = witness_;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        const auto point = detail::project_to_level(halfplanes_, disks_, mid, incenter_);
        if (point) {
            lo = mid;
            incenter_ = *point;
        } else {
            hi = mid;
        }
    }
    inradius_ = lo;
}

void ConvexRegion2D::init_hull() {
    if (disks_.empty()) throw InvalidRegion("hull region needs at least one generator");
    for (const auto& d : disks_) {
        if (d.radius < 0.0 || !std::isfinite(d.radius) || !std::isfinite(std::abs(d.center)))
            throw InvalidRegion("hull generator needs a finite nonnegative radius");
    }

    BBox box = disk_box(disks_.front());
    for (std::size_t i = 1; i < disks_.size(); ++i) {
        const BBox b = disk_box(disks_[i]);
        box.xmin = std::min(box.xmin, b.xmin);
        box.xmax = std::max(box.xmax, b.xmax);
        box.ymin = std::min(box.ymin, b.ymin);
        box.ymax = std::max(box.ymax, b.ymax);
    }
    bbox_ = box;

    support_table_.resize(kTableSize);
    const auto& dirs = direction_table();
    for (int k = 0; k < kTableSize; ++k) {
        const cx u = dirs[static_cast<std::size_t>(k)];
        double h = -std::numeric_limits<double>::infinity();
        for (const auto& d : disks_) h = std::max(h, dot(d.center, u) + d.radius);
        support_table_[static_cast<std::size_t>(k)] = h;
    }

    // Interior witness: the fattest generator, else the centroid of a
    // non-degenerate triangle of point generators.
    std::size_t fattest = 0;
    for (std::size_t i = 1; i < disks_.size(); ++i)
        if (disks_[i].radius > disks_[fattest].radius) fattest = i;
    const double scale = std::max(bbox_.diag(), 1.0);
    if (disks_[fattest].radius > 1e-9 * scale) {
        witness_ = disks_[fattest].center;
        return;
    }
    double best_area = 0.0;
    cx best{0.0, 0.0};
    for (std::size_t i = 0; i < disks_.size(); ++i)
        for (std::size_t j = i + 1; j < disks_.size(); ++j)
            for (std::size_t k = j + 1; k < disks_.size(); ++k) {
                const cx a = disks_[i].center, b = disks_[j].center, c = disks_[k].center;
                const double area =
                    0.5 * std::abs((b.real() - a.real()) * (c.imag() - a.imag()) -
                                   (b.imag() - a.imag()) * (c.real() - a.real()));
                if (area > best_area) {
                    best_area = area;
                    best = (a + b + c) / 3.0;
                }
            }
    if (best_area < 1e-12 * scale * scale) throw InvalidRegion("hull region has empty interior");
    witness_ = best;
}

double ConvexRegion2D::support(double theta) const {
    if (kind_ != Kind::Hull) throw DomainError("support: hull regions only");
    const cx u = unit_dir(theta);
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& d : disks_) h = std::max(h, dot(d.center, u) + d.radius);
    return h;
}

ConvexRegion2D::SupportGap ConvexRegion2D::hull_support_gap(cx x) const {
    const auto& dirs = direction_table();
    std::array<double, kTableSize> gap;
    for (int k = 0; k < kTableSize; ++k)
        gap[static_cast<std::size_t>(k)] =
            support_table_[static_cast<std::size_t>(k)] - dot(x, dirs[static_cast<std::size_t>(k)]);

    // Collect local minima of the sampled margin, keep the three smallest.
    std::array<int, 3> best{-1, -1, -1};
    auto consider = [&](int k) {
        for (int slot = 0; slot < 3; ++slot) {
            if (best[static_cast<std::size_t>(slot)] < 0 ||
                gap[static_cast<std::size_t>(k)] <
                    gap[static_cast<std::size_t>(best[static_cast<std::size_t>(slot)])]) {
                for (int s = 2; s > slot; --s)
                    best[static_cast<std::size_t>(s)] = best[static_cast<std::size_t>(s - 1)];
                best[static_cast<std::size_t>(slot)] = k;
                return;
            }
        }
    };
    for (int k = 0; k < kTableSize; ++k) {
        const int prev = (k + kTableSize - 1) % kTableSize;
        const int next = (k + 1) % kTableSize;
        if (gap[static_cast<std::size_t>(k)] <= gap[static_cast<std::size_t>(prev)] &&
            gap[static_cast<std::size_t>(k)] <= gap[static_cast<std::size_t>(next)])
            consider(k);
    }

    const double step = kTwoPi / kTableSize;
    SupportGap out{std::numeric_limits<double>::infinity(), 0.0};
    auto objective = [&](double theta) { return support(theta) - dot(x, unit_dir(theta)); };
    for (int slot = 0; slot < 3; ++slot) {
        const int k = best[static_cast<std::size_t>(slot)];
        if (k < 0) continue;
        const double center = step * k;
        const auto [theta, value] = golden_min(objective, center - step, center + step, 1e-10);
        if (value < out.gap) out = {value, theta};
    }
    return out;
}

double ConvexRegion2D::signed_margin(cx x) const {
    if (kind_ == Kind::Intersection) return intersection_margin(x);
    return hull_support_gap(x).gap;
}

double ConvexRegion2D::signed_margin_fast(cx x) const {
    if (kind_ == Kind::Intersection) return intersection_margin(x);
    const auto& dirs = direction_table();
    // Coarse ring scan, then table-resolution windows around the best coarse
    // local minima. The support margin in theta is an envelope of broad
    // cosines, so 64 coarse samples hit every basin at desk scale.
    constexpr int stride = kTableSize / 64;
    std::array<double, 64> coarse;
    for (int c = 0; c < 64; ++c) {
        const int k = c * stride;
        coarse[static_cast<std::size_t>(c)] = support_table_[static_cast<std::size_t>(k)] -
                                              dot(x, dirs[static_cast<std::size_t>(k)]);
    }
    std::array<int, 4> best{-1, -1, -1, -1};
    for (int c = 0; c < 64; ++c) {
        const double v = coarse[static_cast<std::size_t>(c)];
        if (v > coarse[static_cast<std::size_t>((c + 63) % 64)] ||
            v > coarse[static_cast<std::size_t>((c + 1) % 64)])
            continue;
        for (int slot = 0; slot < 4; ++slot) {
            const int cur = best[static_cast<std::size_t>(slot)];
            if (cur < 0 || v < coarse[static_cast<std::size_t>(cur)]) {
                for (int s = 3; s > slot; --s)
                    best[static_cast<std::size_t>(s)] = best[static_cast<std::size_t>(s - 1)];
                best[static_cast<std::size_t>(slot)] = c;
                break;
            }
        }
    }
    double margin = std::numeric_limits<double>::infinity();
    int best_k = -1;
    for (const int c : best) {
        if (c < 0) continue;
        for (int off = -stride; off <= stride; ++off) {
            const int k = ((c * stride + off) % kTableSize + kTableSize) % kTableSize;
            const double v = support_table_[static_cast<std::size_t>(k)] -
                             dot(x, dirs[static_cast<std::size_t>(k)]);
            if (v < margin) {
                margin = v;
                best_k = k;
            }
        }
    }
    // One golden pass over the winning basin; the margin can have a kink
    // minimum (bitangent segments), where pure table sampling is only
    // O(diam * table step) accurate.
    if (best_k >= 0) {
        const double step = kTwoPi / kTableSize;
        auto objective = [&](double theta) { return support(theta) - dot(x, unit_dir(theta)); };
        margin = std::min(
            margin, golden_min(objective, step * (best_k - 1), step * (best_k + 1), 1e-6).second);
    }
    return margin;
}

bool ConvexRegion2D::contains(cx x) const { return signed_margin(x) > kBoundaryTol; }

double ConvexRegion2D::boundary_distance(cx x) const {
    const double margin = signed_margin(x);
    if (margin <= kBoundaryTol) throw NotInterior("point is not interior to the region");
    return margin;
}

ConvexRegion2D ConvexRegion2D::erode(double r) const {
    if (kind_ != Kind::Intersection) throw DomainError("erode: intersection regions only");
    if (!(r > 0.0)) throw DomainError("erode: radius must be positive");
    if (r >= inradius_ - 1e-9) throw EmptyErosion("erosion radius reaches the inradius");

    ConvexRegion2D region;
    region.kind_ = Kind::Intersection;
    region.halfplanes_.reserve(halfplanes_.size());
    for (const auto& hp : halfplanes_) region.halfplanes_.push_back({hp.normal, hp.offset - r});
    region.disks_.reserve(disks_.size());
    for (const auto& d : disks_) region.disks_.push_back({d.center, d.radius - r});
    region.bbox_ = bbox_;
    region.witness_ = incenter_;
    region.incenter_ = incenter_;
    region.inradius_ = inradius_ - r;
    if (region.intersection_margin(region.witness_) <= kBoundaryTol)
        throw EmptyErosion("eroded region has empty interior");
    return region;
}

double ConvexRegion2D::inradius() const {
    if (kind_ != Kind::Intersection) throw DomainError("inradius: intersection regions only");
    return inradius_;
}

cx ConvexRegion2D::incenter() const {
    if (kind_ != Kind::Intersection) throw DomainError("incenter: intersection regions only");
    return incenter_;
}

ConvexRegion2D transform_to_slice(const ConvexRegion2D& region, cx origin, cx unit) {
    const double norm = std::abs(unit);
    if (norm < 1e-15) throw ZeroDirection("slice direction must be nonzero");
    const cx u = unit / norm;
    const cx rot = std::conj(u);
    if (region.kind() == ConvexRegion2D::Kind::Hull) {
        std::vector<Disk> generators;
        generators.reserve(region.disks().size());
        for (const auto& d : region.disks())
            generators.push_back({rot * (d.center - origin), d.radius});
        return ConvexRegion2D::hull(std::move(generators));
    }
    std::vector<HalfPlane> halfplanes;
    halfplanes.reserve(region.halfplanes().size());
    for (const auto& hp : region.halfplanes())
        halfplanes.push_back({hp.normal * rot, hp.offset - dot(hp.normal, origin)});
    std::vector<Disk> disks;
    disks.reserve(region.disks().size());
    for (const auto& d : region.disks()) disks.push_back({rot * (d.center - origin), d.radius});
    return ConvexRegion2D::intersection(std::move(halfplanes), std::move(disks));
}

}  // namespace koba
