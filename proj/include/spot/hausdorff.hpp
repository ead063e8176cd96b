#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

#include "spot/geom.hpp"

namespace spot {

namespace detail {

inline double directed_hausdorff(const Polyline& samples, const Obstacle& target) {
    double worst = 0.0;
    std::vector<std::array<Vec2, 2>> segs;
    target.each_segment([&](Vec2 a, Vec2 b) { segs.push_back({a, b}); });
    for (const Vec2 p : samples) {
        double best = std::numeric_limits<double>::max();
        for (const auto& s : segs) best = std::min(best, point_segment_dist2(p, s[0], s[1]));
        if (segs.empty())
            for (const Vec2 v : target.vertices) best = std::min(best, norm2(p - v));
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

}  // namespace detail

// Symmetric Hausdorff distance between the two obstacle point sets,
// evaluated on chains densified at `step` (auto-chosen from the sizes when
// not given). Point-to-segment distances keep the directed part exact up to
// the densification of the outer sup.
inline double hausdorff_distance(const Obstacle& a, const Obstacle& b,
                                 double step = 0.0) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff_distance: empty obstacle");
    if (step <= 0.0) {
        const double scale = std::max({a.diameter(), b.diameter(), 1e-12});
        step = scale / 1024.0;
    }
    const double ab = detail::directed_hausdorff(a.sample_points(step), b);
    const double ba = detail::directed_hausdorff(b.sample_points(step), a);
    return std::max(ab, ba);
}

// Segment-union approximation of a continuum: cover the obstacle with disks
// of radius 1/n centered on a greedy (1/n)-net, join centers of intersecting
// disks, and emit the net graph as a single connected chain by a depth-first
// walk (edges retraced on backtrack, which leaves the point set unchanged).
// The result is within Hausdorff distance 2/n of the input.
inline Obstacle segment_approximation(const Obstacle& obstacle, int n) {
    if (obstacle.empty()) throw std::invalid_argument("degenerate obstacle");
    if (n < 1) throw std::invalid_argument("segment_approximation: requires n >= 1");
    const double radius = 1.0 / n;

    // candidate spacing + greedy net radius stay below 1/n combined, so the
    // radius-1/n disks genuinely cover the set and the link graph below is
    // connected whenever the input is
    Polyline candidates = obstacle.sample_points(0.2 * radius);
    if (obstacle.kind == ObstacleKind::region) {
        // interior points so the filled set is covered too
        const BBox box = obstacle.bounds();
        const double step = 0.14 * radius;
        for (double y = box.lo.y; y <= box.hi.y; y += step)
            for (double x = box.lo.x; x <= box.hi.x; x += step)
                if (point_in_loop({x, y}, obstacle.vertices)) candidates.push_back({x, y});
    }

    Polyline net;
    const double net_r2 = 0.81 * radius * radius;
    for (const Vec2 p : candidates) {
        bool covered = false;
        for (const Vec2 q : net)
            if (norm2(p - q) <= net_r2) {
                covered = true;
                break;
            }
        if (!covered) net.push_back(p);
    }
    if (net.size() == 1) return make_point(net[0]);

    const double link2 = 4.0 * radius * radius;  // intersecting disks
    std::vector<std::vector<int>> adj(net.size());
    for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t j = i + 1; j < net.size(); ++j)
            if (norm2(net[i] - net[j]) <= link2) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }

    Polyline walk;
    std::vector<char> visited(net.size(), 0);
    std::vector<std::pair<int, std::size_t>> stack;  // node, next-neighbor index
    visited[0] = 1;
    walk.push_back(net[0]);
    stack.push_back({0, 0});
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        bool descended = false;
        while (next < adj[node].size()) {
            const int nb = adj[node][next++];
            if (!visited[nb]) {
                visited[nb] = 1;
                walk.push_back(net[nb]);
                stack.push_back({nb, 0});
                descended = true;
                break;
            }
        }
        if (!descended) {
            stack.pop_back();
            if (!stack.empty()) walk.push_back(net[stack.back().first]);
        }
    }
    return make_chain(std::move(walk));
}

}  // namespace spot
