#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spot/fourier.hpp"
#include "spot/geom.hpp"

using Catch::Approx;
using namespace spot;

namespace {

// Finite-difference curvature of the sampled polar curve (circumscribed
// circle of three nearby points).
double fd_curvature(const FourierShape& f, double th, double dth = 1e-3) {
    const Vec2 p1 = f.point(th - dth), p2 = f.point(th), p3 = f.point(th + dth);
    const double a = dist(p1, p2), b = dist(p2, p3), c = dist(p1, p3);
    const double area2 = cross(p2 - p1, p3 - p1);
    return 2.0 * area2 / (a * b * c);
}

}  // namespace

TEST_CASE("circle curvature is 1/r", "[fourier]") {
    FourierShape f;
    f.a0 = 0.75;
    for (double th : {0.0, 0.9, 2.4, 5.5})
        CHECK(f.curvature(th) == Approx(1.0 / 0.75).epsilon(1e-12));
}

TEST_CASE("curvature matches the finite-difference oracle", "[fourier]") {
    FourierShape f;
    f.a0 = 1.0;
    f.a = {0.0, 0.1};
    f.b = {0.0, 0.0};  // r = 1 + 0.1 cos 2 theta
    for (double th : {0.0, 0.7, 1.57, 3.0})
        CHECK(f.curvature(th) == Approx(fd_curvature(f, th)).epsilon(1e-5));
}

TEST_CASE("curvature scales as 1/c under homothety", "[fourier]") {
    FourierShape f;
    f.a0 = 1.0;
    f.a = {0.05, 0.1};
    f.b = {0.02, -0.04};
    const FourierShape g = f.scaled(2.5);
    for (double th : {0.3, 1.0, 4.0})
        CHECK(g.curvature(th) == Approx(f.curvature(th) / 2.5).epsilon(1e-12));
}

TEST_CASE("curvature rejects nonpositive radius", "[fourier]") {
    FourierShape f;
    f.a0 = 0.1;
    f.a = {0.5};
    f.b = {0.0};
    CHECK_THROWS(f.curvature(pi()));
}

TEST_CASE("perimeter and area closed forms", "[fourier]") {
    FourierShape circle;
    circle.a0 = 1.3;
    CHECK(circle.perimeter() == Approx(two_pi() * 1.3).epsilon(1e-12));
    CHECK(circle.area() == Approx(pi() * 1.3 * 1.3).epsilon(1e-12));

    FourierShape f;
    f.a0 = 1.0;
    f.a = {0.1, -0.05};
    f.b = {0.02, 0.07};
    // area closed form vs shoelace of a dense polygon
    const double shoelace = std::abs(polygon_signed_area(f.to_polygon(4096)));
    CHECK(f.area() == Approx(shoelace).epsilon(1e-5));
    // perimeter vs dense polygon length
    const double len = polyline_length(f.to_polygon(8192), true);
    CHECK(f.perimeter() == Approx(len).epsilon(1e-5));
}

TEST_CASE("symmetry metrics", "[fourier]") {
    SECTION("circle") {
        FourierShape f;
        f.a0 = 0.8;
        f.a = {0.0};
        f.b = {0.0};
        const auto m = symmetry_metrics(f);
        CHECK(m.radial_deviation == Approx(0.0).margin(1e-12));
        CHECK(m.axial_deviation == Approx(0.0).margin(1e-12));
    }
    SECTION("r = 1 + 0.2 cos theta") {
        FourierShape f;
        f.a0 = 1.0;
        f.a = {0.2};
        f.b = {0.0};
        const auto m = symmetry_metrics(f);
        CHECK(m.radial_deviation == Approx(0.2).epsilon(1e-6));
        CHECK(std::min(m.best_axis_angle, pi() - m.best_axis_angle) ==
              Approx(0.0).margin(1e-6));
        CHECK(m.axial_deviation == Approx(0.0).margin(1e-9));
    }
    SECTION("mixed modes, cross-check against a dense scan") {
        FourierShape f;
        f.a0 = 1.0;
        f.a = {0.1, 0.0};
        f.b = {0.0, 0.1};  // r = 1 + 0.1 cos th + 0.1 sin 2 th
        const auto m = symmetry_metrics(f);
        // brute force scan of 720 axis angles, direct pointwise reflection
        double best = 1e300, best_phi = 0.0;
        for (int i = 0; i < 720; ++i) {
            const double phi = pi() * i / 720;
            double worst = 0.0;
            for (int k = 0; k < 1024; ++k) {
                const double th = two_pi() * k / 1024;
                worst = std::max(worst, std::abs(f.radius(th) - f.radius(2 * phi - th)));
            }
            if (worst < best) {
                best = worst;
                best_phi = phi;
            }
        }
        CHECK(m.axial_deviation <= best / f.a0 + 1e-9);
        CHECK(m.axial_deviation == Approx(best / f.a0).margin(2e-3));
        CHECK(std::abs(std::remainder(m.best_axis_angle - best_phi, pi())) < 0.02);
    }
}

TEST_CASE("reflected profile evaluates to r(2 phi - theta)", "[fourier]") {
    FourierShape f;
    f.a0 = 1.0;
    f.a = {0.1, -0.03, 0.02};
    f.b = {0.05, 0.04, -0.01};
    const double phi = 0.7;
    const FourierShape g = f.reflected(phi);
    for (double th : {0.0, 0.4, 2.0, 5.0})
        CHECK(g.radius(th) == Approx(f.radius(2 * phi - th)).epsilon(1e-12));
}
