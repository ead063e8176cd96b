#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spot/hausdorff.hpp"

using Catch::Approx;
using namespace spot;

namespace {

// Test-local brute-force Hausdorff over dense point clouds of the two sets
// (interior grid samples included for filled regions).
double brute_hausdorff(const Obstacle& a, const Obstacle& b, double step) {
    auto cloud = [&](const Obstacle& o) {
        Polyline pts = o.sample_points(step);
        if (o.kind == ObstacleKind::region) {
            const BBox bb = o.bounds();
            for (double y = bb.lo.y; y <= bb.hi.y; y += 2 * step)
                for (double x = bb.lo.x; x <= bb.hi.x; x += 2 * step)
                    if (point_in_loop({x, y}, o.vertices)) pts.push_back({x, y});
        }
        return pts;
    };
    auto directed = [](const Polyline& u, const Obstacle& v) {
        double worst = 0.0;
        for (const Vec2 p : u) worst = std::max(worst, v.distance(p));
        return worst;
    };
    return std::max(directed(cloud(a), b), directed(cloud(b), a));
}

}  // namespace

TEST_CASE("hausdorff basics", "[hausdorff]") {
    const Obstacle seg = make_segment({0, 0}, {1, 0});
    CHECK(hausdorff_distance(seg, seg) == 0.0);
    CHECK(hausdorff_distance(make_point({0, 0}), make_point({1, 0})) == Approx(1.0));
    const Obstacle shifted = make_segment({0, 0.25}, {1, 0.25});
    CHECK(hausdorff_distance(seg, shifted) == Approx(0.25).margin(1e-9));
    CHECK_THROWS(hausdorff_distance(Obstacle{}, seg));
}

TEST_CASE("hausdorff is symmetric and satisfies the triangle inequality", "[hausdorff]") {
    std::vector<Obstacle> family = {
        make_segment({0, 0}, {1, 0}),
        make_segment({0, 0.3}, {1.2, 0.1}),
        make_circle_chain({0.5, 0}, 0.4, 128),
        make_disk_region({0.4, 0.1}, 0.3, 128),
        make_point({0.2, 0.2}),
    };
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            const double dij = hausdorff_distance(family[i], family[j]);
            const double dji = hausdorff_distance(family[j], family[i]);
            CHECK(dij == Approx(dji).margin(1e-12));
            for (std::size_t k = 0; k < family.size(); ++k) {
                const double dik = hausdorff_distance(family[i], family[k]);
                const double dkj = hausdorff_distance(family[k], family[j]);
                CHECK(dij <= dik + dkj + 1e-9);
            }
        }
}

TEST_CASE("segment approximation covers within 2/n", "[hausdorff]") {
    SECTION("segment input") {
        const Obstacle seg = make_segment({0, 0}, {1.3, 0.4});
        for (int n : {4, 10}) {
            const Obstacle approx = segment_approximation(seg, n);
            CHECK(brute_hausdorff(seg, approx, 0.01) <= 2.0 / n + 1e-9);
        }
    }
    SECTION("circle chain, n = 10") {
        const Obstacle circle = make_circle_chain({0, 0}, 1.0, 512);
        const Obstacle approx = segment_approximation(circle, 10);
        CHECK(brute_hausdorff(circle, approx, 0.01) <= 0.2 + 1e-9);
    }
    SECTION("point input degenerates to a point") {
        const Obstacle p = make_point({0.3, -0.2});
        const Obstacle approx = segment_approximation(p, 5);
        REQUIRE(approx.vertices.size() == 1);
        CHECK(dist(approx.vertices[0], {0.3, -0.2}) < 1e-12);
    }
    SECTION("chain output is connected") {
        const Obstacle circle = make_circle_chain({0, 0}, 1.0, 256);
        const Obstacle approx = segment_approximation(circle, 8);
        REQUIRE(approx.kind == ObstacleKind::chain);
        for (std::size_t i = 0; i + 1 < approx.vertices.size(); ++i)
            CHECK(dist(approx.vertices[i], approx.vertices[i + 1]) <= 2.0 / 8 + 1e-9);
    }
    SECTION("filled region input") {
        const Obstacle disk = make_disk_region({0, 0}, 0.5, 256);
        const Obstacle approx = segment_approximation(disk, 6);
        CHECK(brute_hausdorff(disk, approx, 0.02) <= 2.0 / 6 + 1e-9);
    }
}
