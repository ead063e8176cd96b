#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

#include "spot/field.hpp"
#include "spot/geom.hpp"

namespace spot {

namespace detail {

// Marks grid nodes inside the loop by a scanline winding count. Uses the
// same half-open crossing convention as point_in_loop, so the two agree
// away from the curve itself.
inline void rasterize_inside(const Polyline& loop, const ScalarField& grid,
                             std::vector<char>& inside) {
    inside.assign(grid.values.size(), 0);
    const std::size_t n = loop.size();
    if (n < 3) return;
    std::vector<std::pair<double, int>> crossings;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.origin.y + j * grid.h;
        crossings.clear();
        for (std::size_t s = 0; s < n; ++s) {
            const Vec2 a = loop[s], b = loop[(s + 1) % n];
            if (a.y <= y && b.y > y)
                crossings.push_back({a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x), +1});
            else if (a.y > y && b.y <= y)
                crossings.push_back({a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x), -1});
        }
        if (crossings.empty()) continue;
        std::sort(crossings.begin(), crossings.end());
        int winding = 0;
        std::size_t c = 0;
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.origin.x + i * grid.h;
            while (c < crossings.size() && crossings[c].first <= x) winding += crossings[c++].second;
            if (winding != 0) inside[static_cast<std::size_t>(j) * grid.nx + i] = 1;
        }
    }
}

}  // namespace detail

// Exact Euclidean distance from every grid node to the obstacle point set
// (0 inside region obstacles). Distances are exact geometric point-to-segment
// values at the nodes, not a propagated transform.
inline ScalarField distance_field(const Obstacle& obstacle, BBox box, double h) {
    if (obstacle.empty()) throw std::invalid_argument("degenerate obstacle");
    const BBox ob = obstacle.bounds();
    if (!box.contains(ob.lo) || !box.contains(ob.hi))
        throw std::invalid_argument("distance_field: box does not contain the obstacle");

    ScalarField f = make_field_over(box, h);
    std::vector<std::array<Vec2, 2>> segs;
    obstacle.each_segment([&](Vec2 a, Vec2 b) { segs.push_back({a, b}); });

    for (int j = 0; j < f.ny; ++j) {
        const double py = f.origin.y + j * f.h;
        for (int i = 0; i < f.nx; ++i) {
            const Vec2 p{f.origin.x + i * f.h, py};
            double best = std::numeric_limits<double>::max();
            for (const auto& s : segs) {
                const double v = point_segment_dist2(p, s[0], s[1]);
                if (v < best) best = v;
            }
            if (segs.empty())
                for (const Vec2 v : obstacle.vertices) best = std::min(best, norm2(p - v));
            f.at(i, j) = std::sqrt(best);
        }
    }

    if (obstacle.kind == ObstacleKind::region) {
        std::vector<char> inside;
        detail::rasterize_inside(obstacle.vertices, f, inside);
        for (std::size_t k = 0; k < f.values.size(); ++k)
            if (inside[k]) f.values[k] = 0.0;
    }
    return f;
}

}  // namespace spot
