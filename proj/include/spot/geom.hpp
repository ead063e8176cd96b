#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spot/fourier.hpp"
#include "spot/vec2.hpp"

namespace spot {

using Polyline = std::vector<Vec2>;

inline double polygon_signed_area(const Polyline& loop) {
    double s = 0.0;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = loop[i], b = loop[(i + 1) % n];
        s += cross(a, b);
    }
    return 0.5 * s;
}

inline double polyline_length(const Polyline& pts, bool closed) {
    double len = 0.0;
    if (pts.size() < 2) return 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) len += dist(pts[i], pts[i + 1]);
    if (closed) len += dist(pts.back(), pts.front());
    return len;
}

// Winding number membership; overlapping opposite edges cancel, which makes
// keyhole-cut loops (annular regions) behave as the intended point set.
inline bool point_in_loop(Vec2 p, const Polyline& loop) {
    int winding = 0;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = loop[i], b = loop[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && cross(b - a, p - a) > 0) ++winding;
        } else {
            if (b.y <= p.y && cross(b - a, p - a) < 0) --winding;
        }
    }
    return winding != 0;
}

// Strict convexity test up to collinear points; accepts the degenerate
// 2-vertex "polygon" (a chord).
inline bool is_convex_loop(const Polyline& loop) {
    const std::size_t n = loop.size();
    if (n < 2) return false;
    if (n == 2) return true;
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = loop[i], b = loop[(i + 1) % n], c = loop[(i + 2) % n];
        const double z = cross(b - a, c - b);
        if (std::abs(z) < 1e-14) continue;
        const int s = z > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    return true;
}

// Andrew monotone chain; returns CCW hull.
inline Polyline convex_hull(Polyline pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    Polyline hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline Polyline densify(const Polyline& pts, bool closed, double step) {
    Polyline out;
    if (pts.empty()) return out;
    const std::size_t n = pts.size();
    const std::size_t last = closed ? n : n - 1;
    for (std::size_t i = 0; i < last; ++i) {
        const Vec2 a = pts[i], b = pts[(i + 1) % n];
        const double len = dist(a, b);
        const int m = std::max(1, static_cast<int>(std::ceil(len / step)));
        for (int j = 0; j < m; ++j) out.push_back(a + (b - a) * (static_cast<double>(j) / m));
    }
    if (!closed) out.push_back(pts.back());
    return out;
}

enum class ObstacleKind { chain, region };

// A planar continuum: a polygonal chain (1-D set) or a closed polygonal
// region, optionally with zero-area chain appendages (tentacles). Obstacles
// built from a Fourier profile keep it for curvature and shape derivatives.
struct Obstacle {
    ObstacleKind kind = ObstacleKind::chain;
    Polyline vertices;
    std::vector<Polyline> tentacles;
    std::optional<FourierShape> fourier;

    bool empty() const { return vertices.empty(); }

    bool loop_closed() const { return kind == ObstacleKind::region; }

    void each_segment(const std::function<void(Vec2, Vec2)>& fn) const {
        const std::size_t n = vertices.size();
        if (n >= 2) {
            const std::size_t last = loop_closed() ? n : n - 1;
            for (std::size_t i = 0; i < last; ++i)
                fn(vertices[i], vertices[(i + 1) % n]);
        }
        for (const auto& t : tentacles)
            for (std::size_t i = 0; i + 1 < t.size(); ++i) fn(t[i], t[i + 1]);
    }

    // Unsigned distance from p to the obstacle point set (0 inside regions).
    double distance(Vec2 p) const {
        if (empty()) throw std::invalid_argument("degenerate obstacle");
        if (kind == ObstacleKind::region && point_in_loop(p, vertices)) return 0.0;
        double d2 = std::numeric_limits<double>::max();
        each_segment([&](Vec2 a, Vec2 b) { d2 = std::min(d2, point_segment_dist2(p, a, b)); });
        if (d2 == std::numeric_limits<double>::max()) {
            for (const Vec2 v : vertices) d2 = std::min(d2, norm2(p - v));
        }
        return std::sqrt(d2);
    }

    // Signed distance to the boundary, negative inside regions. For chains
    // this equals the unsigned distance.
    double signed_boundary_distance(Vec2 p) const {
        if (empty()) throw std::invalid_argument("degenerate obstacle");
        double d2 = std::numeric_limits<double>::max();
        each_segment([&](Vec2 a, Vec2 b) { d2 = std::min(d2, point_segment_dist2(p, a, b)); });
        if (d2 == std::numeric_limits<double>::max()) {
            for (const Vec2 v : vertices) d2 = std::min(d2, norm2(p - v));
        }
        const double d = std::sqrt(d2);
        if (kind == ObstacleKind::region && point_in_loop(p, vertices)) return -d;
        return d;
    }

    double area() const {
        if (kind != ObstacleKind::region || vertices.size() < 3) return 0.0;
        return std::abs(polygon_signed_area(vertices));
    }

    BBox bounds() const {
        if (empty()) throw std::invalid_argument("degenerate obstacle");
        BBox box = bbox_of_point(vertices.front());
        for (const Vec2 v : vertices) box.expand(v);
        for (const auto& t : tentacles)
            for (const Vec2 v : t) box.expand(v);
        return box;
    }

    double diameter() const {
        const BBox box = bounds();
        return std::hypot(box.width(), box.height());
    }

    // Every point of the obstacle, densified at the given step (vertices of
    // degenerate single-point obstacles included).
    Polyline sample_points(double step) const {
        Polyline pts;
        if (vertices.size() == 1) pts.push_back(vertices[0]);
        else {
            Polyline body = densify(vertices, loop_closed(), step);
            pts.insert(pts.end(), body.begin(), body.end());
            if (!loop_closed() && !vertices.empty()) pts.push_back(vertices.back());
        }
        for (const auto& t : tentacles) {
            Polyline tp = densify(t, false, step);
            pts.insert(pts.end(), tp.begin(), tp.end());
        }
        return pts;
    }
};

inline Obstacle make_chain(Polyline pts) {
    Obstacle o;
    o.kind = ObstacleKind::chain;
    o.vertices = std::move(pts);
    return o;
}

inline Obstacle make_region(Polyline loop) {
    Obstacle o;
    o.kind = ObstacleKind::region;
    o.vertices = std::move(loop);
    return o;
}

inline Obstacle make_point(Vec2 p) { return make_chain({p}); }

inline Polyline circle_points(Vec2 c, double r, int n, bool ccw = true) {
    Polyline pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double th = two_pi() * i / n * (ccw ? 1.0 : -1.0);
        pts.push_back({c.x + r * std::cos(th), c.y + r * std::sin(th)});
    }
    return pts;
}

inline Obstacle make_circle_chain(Vec2 c, double r, int n = 720) {
    Polyline pts = circle_points(c, r, n);
    pts.push_back(pts.front());  // close the curve as a chain
    return make_chain(std::move(pts));
}

inline Obstacle make_disk_region(Vec2 c, double r, int n = 720) {
    return make_region(circle_points(c, r, n));
}

// Closed annular region as a keyhole loop: outer circle CCW, radial cut,
// inner circle CW, cut back. The two cut edges coincide and cancel in the
// winding number, so membership and the shoelace area are those of the
// annulus itself.
inline Obstacle make_annulus_region(Vec2 c, double r_in, double r_out, int n = 720) {
    if (!(0 < r_in && r_in < r_out))
        throw std::invalid_argument("make_annulus_region: requires 0 < r_in < r_out");
    Polyline pts;
    pts.reserve(2 * n + 2);
    for (int i = 0; i <= n; ++i) {
        const double th = two_pi() * i / n;
        pts.push_back({c.x + r_out * std::cos(th), c.y + r_out * std::sin(th)});
    }
    for (int i = n; i >= 0; --i) {
        const double th = two_pi() * i / n;
        pts.push_back({c.x + r_in * std::cos(th), c.y + r_in * std::sin(th)});
    }
    return make_region(std::move(pts));
}

inline Obstacle make_segment(Vec2 a, Vec2 b) { return make_chain({a, b}); }

inline Obstacle from_fourier(const FourierShape& f, int n = 512,
                             ObstacleKind kind = ObstacleKind::region) {
    Obstacle o;
    o.kind = kind;
    o.vertices = f.to_polygon(n);
    if (kind == ObstacleKind::chain) o.vertices.push_back(o.vertices.front());
    o.fourier = f;
    return o;
}

// --- Domain -----------------------------------------------------------

struct Circle {
    Vec2 center{0.0, 0.0};
    double radius = 1.0;
};

// Outer boundary or hole boundary: an exact circle or a simple polygon.
struct BoundaryPiece {
    bool is_circle = true;
    Circle circle;
    Polyline polygon;

    double length() const {
        if (is_circle) return two_pi() * circle.radius;
        return polyline_length(polygon, true);
    }

    // Distance to the boundary curve, positive on the side indicated by
    // `inside_positive` (true: positive inside the curve).
    double signed_distance(Vec2 p, bool inside_positive) const {
        double d;
        bool in;
        if (is_circle) {
            const double rho = dist(p, circle.center);
            d = std::abs(rho - circle.radius);
            in = rho <= circle.radius;
        } else {
            double d2 = std::numeric_limits<double>::max();
            const std::size_t n = polygon.size();
            for (std::size_t i = 0; i < n; ++i)
                d2 = std::min(d2, point_segment_dist2(p, polygon[i], polygon[(i + 1) % n]));
            d = std::sqrt(d2);
            in = point_in_loop(p, polygon);
        }
        const double s = (in == inside_positive) ? 1.0 : -1.0;
        return s * d;
    }

    BBox bounds() const {
        if (is_circle) {
            BBox b = bbox_of_point(circle.center);
            b.pad(circle.radius);
            return b;
        }
        BBox b = bbox_of_point(polygon.front());
        for (const Vec2 v : polygon) b.expand(v);
        return b;
    }
};

// The ambient set Omega: an outer circle or simple polygon minus a list of
// pairwise disjoint convex holes strictly inside it.
struct Domain {
    BoundaryPiece outer;
    std::vector<BoundaryPiece> holes;

    double boundary_length() const {
        double len = outer.length();
        for (const auto& hole : holes) len += hole.length();
        return len;
    }

    // Clearance from the Dirichlet boundary of Omega: positive inside Omega,
    // negative outside or inside holes, zero on the boundary.
    double clearance(Vec2 p) const {
        double phi = outer.signed_distance(p, /*inside_positive=*/true);
        for (const auto& hole : holes)
            phi = std::min(phi, hole.signed_distance(p, /*inside_positive=*/false));
        return phi;
    }

    bool contains(Vec2 p) const { return clearance(p) >= 0.0; }

    BBox bounds() const { return outer.bounds(); }

    Vec2 center() const {
        if (outer.is_circle) return outer.circle.center;
        Vec2 c{0, 0};
        for (const Vec2 v : outer.polygon) c += v;
        return c / static_cast<double>(outer.polygon.size());
    }
};

inline Domain disk_domain(double r0, Vec2 c = {0, 0}) {
    Domain d;
    d.outer.is_circle = true;
    d.outer.circle = {c, r0};
    return d;
}

inline Domain annulus_domain(double r1, double r0, Vec2 c = {0, 0}) {
    Domain d = disk_domain(r0, c);
    BoundaryPiece hole;
    hole.is_circle = true;
    hole.circle = {c, r1};
    d.holes.push_back(hole);
    return d;
}

inline Domain polygon_domain(Polyline outer_loop) {
    Domain d;
    d.outer.is_circle = false;
    d.outer.polygon = std::move(outer_loop);
    return d;
}

inline Domain square_domain(double side, Vec2 lo = {0, 0}) {
    return polygon_domain({{lo.x, lo.y},
                           {lo.x + side, lo.y},
                           {lo.x + side, lo.y + side},
                           {lo.x, lo.y + side}});
}

// --- Obstacle validation ----------------------------------------------

namespace detail {

inline bool proper_crossing(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
           ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace detail

// Structural checks: non-empty, region loops free of proper
// self-crossings (exactly overlapping keyhole cuts are allowed), tentacles
// attached to the body, positive Fourier radius.
inline void validate_obstacle(const Obstacle& o, double tol = 1e-9) {
    if (o.empty()) throw std::invalid_argument("degenerate obstacle");
    if (o.kind == ObstacleKind::region) {
        if (o.vertices.size() < 3)
            throw std::invalid_argument("region obstacle needs at least 3 vertices");
        const std::size_t n = o.vertices.size();
        if (n <= 2048) {  // quadratic check kept to moderate loops
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 2; j < n; ++j) {
                    if (i == 0 && j == n - 1) continue;
                    if (detail::proper_crossing(o.vertices[i], o.vertices[(i + 1) % n],
                                                o.vertices[j], o.vertices[(j + 1) % n]))
                        throw std::invalid_argument("region loop self-intersects");
                }
        }
    }
    for (const auto& t : o.tentacles) {
        if (t.empty()) throw std::invalid_argument("empty tentacle");
        double d2 = std::numeric_limits<double>::max();
        o.each_segment([&](Vec2 a, Vec2 b) {
            d2 = std::min(d2, point_segment_dist2(t.front(), a, b));
        });
        for (const Vec2 v : o.vertices) d2 = std::min(d2, norm2(t.front() - v));
        if (std::sqrt(d2) > std::max(tol, 1e-12))
            throw std::invalid_argument("tentacle not attached to obstacle body");
    }
    if (o.fourier) {
        if (o.fourier->min_radius() <= 0.0)
            throw std::invalid_argument("fourier obstacle has r(theta) <= 0");
    }
}

// --- Convex perimeter bound (the quantity L*) --------------------------

struct ConvexBoundResult {
    double bound = 0.0;           // exact for convex Omega, else a lower bound
    bool exact = false;
    std::vector<std::string> warnings;
};

namespace detail {

// Convex polygon / convex polygon disjointness via separating axis.
inline bool convex_polygons_overlap(const Polyline& p, const Polyline& q) {
    auto separated_by_edge_of = [](const Polyline& poly, const Polyline& other) {
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 a = poly[i], b = poly[(i + 1) % n];
            const Vec2 axis{-(b - a).y, (b - a).x};
            double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
            for (const Vec2 v : poly) {
                const double s = dot(axis, v);
                pmin = std::min(pmin, s);
                pmax = std::max(pmax, s);
            }
            for (const Vec2 v : other) {
                const double s = dot(axis, v);
                qmin = std::min(qmin, s);
                qmax = std::max(qmax, s);
            }
            if (pmax < qmin || qmax < pmin) return true;
        }
        return false;
    };
    return !separated_by_edge_of(p, q) && !separated_by_edge_of(q, p);
}

inline bool candidate_inside_domain(const Polyline& cand, const Domain& dom) {
    for (const Vec2 v : cand)
        if (dom.outer.signed_distance(v, true) < -1e-12) return false;
    // convex candidate with all vertices inside a circle stays inside; for a
    // polygonal outer check densified edges
    if (!dom.outer.is_circle) {
        const Polyline dense = densify(cand, true, 0.02 * polyline_length(cand, true) + 1e-12);
        for (const Vec2 v : dense)
            if (dom.outer.signed_distance(v, true) < -1e-12) return false;
    }
    for (const auto& hole : dom.holes) {
        Polyline hole_poly = hole.is_circle
                                 ? circle_points(hole.circle.center, hole.circle.radius, 256)
                                 : hole.polygon;
        if (convex_polygons_overlap(cand, hole_poly)) return false;
    }
    return true;
}

}  // namespace detail

// Largest perimeter over a family of convex candidates inside the closed
// domain; a certified lower bound on L*(Omega). When Omega itself is convex
// the exact value is the boundary length of Omega.
inline ConvexBoundResult convex_perimeter_bound(const Domain& domain,
                                                const std::vector<Polyline>& candidates) {
    ConvexBoundResult res;
    const bool outer_convex =
        domain.outer.is_circle || is_convex_loop(domain.outer.polygon);
    if (outer_convex && domain.holes.empty()) {
        res.exact = true;
        res.bound = domain.outer.length();
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Polyline& cand = candidates[i];
        if (cand.size() < 2 || !is_convex_loop(cand)) {
            res.warnings.push_back("candidate " + std::to_string(i) + " skipped: not convex");
            continue;
        }
        if (!detail::candidate_inside_domain(cand, domain)) {
            res.warnings.push_back("candidate " + std::to_string(i) +
                                   " skipped: not inside the domain");
            continue;
        }
        res.bound = std::max(res.bound, polyline_length(cand, true));
    }
    return res;
}

}  // namespace spot
