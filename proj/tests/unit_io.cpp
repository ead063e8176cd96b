#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "spot/io.hpp"

using Catch::Approx;
using namespace spot;

TEST_CASE("domain round trip", "[io]") {
    Domain d = annulus_domain(1.0, 2.25);
    BoundaryPiece hole;
    hole.is_circle = false;
    hole.polygon = {{0.2, 1.4}, {0.4, 1.5}, {0.3, 1.7}};
    d.holes.push_back(hole);
    const Domain back = domain_from_json(to_json(d));
    CHECK(back.outer.is_circle);
    CHECK(back.outer.circle.radius == 2.25);
    REQUIRE(back.holes.size() == 2);
    CHECK(back.holes[0].circle.radius == 1.0);
    REQUIRE(back.holes[1].polygon.size() == 3);
    CHECK(back.holes[1].polygon[2].y == 1.7);
}

TEST_CASE("obstacle round trips", "[io]") {
    SECTION("vertex chain") {
        const Obstacle o = make_segment({0, 0}, {1, 0.5});
        const Obstacle back = obstacle_from_json(to_json(o));
        CHECK(back.kind == ObstacleKind::chain);
        REQUIRE(back.vertices.size() == 2);
        CHECK(back.vertices[1].x == 1.0);
    }
    SECTION("fourier region") {
        FourierShape f;
        f.center = {0.1, -0.2};
        f.a0 = 0.7;
        f.a = {0.05, 0.0};
        f.b = {0.0, 0.02};
        const Obstacle o = from_fourier(f, 128);
        const json j = to_json(o);
        CHECK(j.contains("fourier"));
        const Obstacle back = obstacle_from_json(j, 128);
        REQUIRE(back.fourier.has_value());
        CHECK(back.fourier->a0 == 0.7);
        CHECK(back.vertices.size() == 128);
    }
    SECTION("tentacles survive") {
        Obstacle o = make_disk_region({0, 0}, 0.5, 64);
        o.tentacles.push_back({{0.5, 0.0}, {0.8, 0.0}});
        const Obstacle back = obstacle_from_json(to_json(o));
        REQUIRE(back.tentacles.size() == 1);
    }
    SECTION("malformed inputs throw") {
        CHECK_THROWS(obstacle_from_json(json{{"kind", "blob"}}));
        CHECK_THROWS(obstacle_from_json(json{{"kind", "chain"}}));
        CHECK_THROWS(domain_from_json(json{{"outer", {{"circle", {{"center", {0, 0}},
                                                                  {"radius", -1}}}}}}));
    }
}

TEST_CASE("optimize config round trip", "[io]") {
    const Domain d = disk_domain(1.0);
    OptimizeConfig c;
    c.L = pi();
    c.K_max = 3;
    c.init.a0 = 0.5;
    c.init.a = {0.0, 0.01, 0.0};
    c.init.b = {0.0, 0.0, 0.0};
    c.attachment = Attachment::none;
    c.scheme = BoundaryScheme::ghost;
    const json j = config_to_json(d, c);
    const auto [d2, c2] = config_from_json(j);
    CHECK(d2.outer.circle.radius == 1.0);
    CHECK(c2.L == Approx(pi()));
    CHECK(c2.K_max == 3);
    CHECK(c2.init.a[1] == 0.01);
    CHECK(c2.scheme == BoundaryScheme::ghost);
}

TEST_CASE("csv formats", "[io]") {
    MinkowskiEstimate e;
    e.content = 2.0;
    e.grid_h = 0.01;
    e.eps_samples = {{0.5, 1.9, 2.0}, {0.25, 0.95, 1.99}};
    std::ostringstream os;
    write_minkowski_csv(e, os);
    const std::string out = os.str();
    CHECK(out.rfind("eps,area,quotient\n", 0) == 0);
    CHECK(out.find("0.5,1.9,2\n") != std::string::npos);

    std::ostringstream os2;
    write_trace_csv({{0, 5.0, 3.14, 0.0}, {1, 5.5, 3.14, 0.01}}, os2);
    CHECK(os2.str().rfind("iter,lambda1,perimeter,step\n", 0) == 0);

    ScalarField f({0, 0}, 0.5, 2, 2);
    f.at(1, 1) = 3.0;
    std::ostringstream os3;
    write_field_csv(f, os3);
    CHECK(os3.str().find("0.5,0.5,3\n") != std::string::npos);
}

TEST_CASE("eigen and obstacle result json fields", "[io]") {
    EigenResult r;
    r.lambda1 = 5.78;
    r.residual = 1e-7;
    r.iterations = 12;
    r.h = 0.01;
    r.n_interior = 1234;
    const json j = to_json(r);
    CHECK(j.at("lambda1") == 5.78);
    CHECK(j.at("n_interior") == 1234);

    ObstacleResult res;
    res.lambda1 = 39.0;
    res.obstacle.a0 = 0.5;
    res.history.push_back({0, 39.0, 3.14, 0.0});
    const json jr = to_json(res);
    CHECK(jr.contains("symmetry"));
    CHECK(jr.contains("coeffs"));
    CHECK(jr.at("history").size() == 1);
    CHECK(jr.at("stop") == "converged");
}
