#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spot/analytic.hpp"
#include "spot/spectral.hpp"

using Catch::Approx;
using namespace spot;

TEST_CASE("unit square at h = 1/4: nine interior nodes, closed-form stencil value",
          "[spectral]") {
    const Domain sq = square_domain(1.0);
    const DirichletProblem p = assemble(sq, nullptr, 0.25, BoundaryScheme::mask);
    CHECK(p.n_interior == 9);
    const EigenResult r = smallest_eigenpair(p, 1e-12);
    // discrete lambda1 of the 5-point stencil on a grid-aligned square
    const double h = 0.25;
    const double exact = (4.0 / (h * h)) * 2.0 * std::pow(std::sin(pi() * h / 2.0), 2);
    CHECK(r.lambda1 == Approx(exact).epsilon(1e-10));
    CHECK(r.residual <= 1e-6 * r.lambda1);
}

TEST_CASE("unit square at h = 1/64 approximates 2 pi^2", "[spectral]") {
    const Domain sq = square_domain(1.0);
    const EigenResult r = smallest_eigenpair(sq, nullptr, 1.0 / 64, BoundaryScheme::mask);
    CHECK(r.lambda1 == Approx(2.0 * pi() * pi()).epsilon(5e-3));
}

TEST_CASE("disk eigenvalue vs analytic", "[spectral][slow]") {
    const Domain disk = disk_domain(1.0);
    const EigenResult r = smallest_eigenpair(disk, nullptr, 1.0 / 128, BoundaryScheme::ghost);
    CHECK(r.lambda1 == Approx(disk_lambda1(1.0)).epsilon(0.01));
}

TEST_CASE("annulus via concentric disk region obstacle vs analytic", "[spectral][slow]") {
    const Domain disk = disk_domain(1.0);
    const Obstacle hole = make_disk_region({0, 0}, 0.5, 512);
    const EigenResult r = smallest_eigenpair(disk, &hole, 1.0 / 128, BoundaryScheme::ghost);
    CHECK(r.lambda1 == Approx(annulus_lambda1(0.5, 1.0)).epsilon(0.01));
}

TEST_CASE("fully blocked domain", "[spectral]") {
    const Domain disk = disk_domain(1.0);
    const Obstacle all = make_disk_region({0, 0}, 1.05, 256);
    CHECK_THROWS_WITH(assemble(disk, &all, 0.1), "domain fully blocked");
}

TEST_CASE("chain obstacles still block (capacity respected)", "[spectral]") {
    const Domain disk = disk_domain(1.0);
    const Obstacle ring_chain = make_circle_chain({0, 0}, 0.5, 512);
    const EigenResult with_chain =
        smallest_eigenpair(disk, &ring_chain, 1.0 / 48, BoundaryScheme::mask);
    const EigenResult without = smallest_eigenpair(disk, nullptr, 1.0 / 48, BoundaryScheme::mask);
    CHECK(with_chain.lambda1 > 2.0 * without.lambda1);  // annulus-like, far above disk
}

TEST_CASE("discrete domain monotonicity on nested obstacles", "[spectral]") {
    const Domain disk = disk_domain(1.0);
    const double h = 1.0 / 48;
    double prev = smallest_eigenpair(disk, nullptr, h, BoundaryScheme::mask).lambda1;
    for (double r : {0.15, 0.3, 0.45}) {
        const Obstacle o = make_disk_region({0.1, 0.0}, r, 256);
        const double cur = smallest_eigenpair(disk, &o, h, BoundaryScheme::mask).lambda1;
        CHECK(cur >= prev - 1e-12);
        prev = cur;
    }
}

TEST_CASE("exact scaling law on the discrete operator", "[spectral]") {
    const Domain d1 = disk_domain(1.0);
    const Obstacle o1 = make_disk_region({0.2, 0.1}, 0.3, 128);
    const double l1 = smallest_eigenpair(d1, &o1, 1.0 / 32, BoundaryScheme::mask).lambda1;

    const Domain d2 = disk_domain(2.0);
    Obstacle o2 = o1;
    for (auto& v : o2.vertices) v = v * 2.0;
    const double l2 = smallest_eigenpair(d2, &o2, 2.0 / 32, BoundaryScheme::mask).lambda1;
    CHECK(l2 == Approx(l1 / 4.0).epsilon(1e-11));
}

TEST_CASE("positivity: single sign per component and global minimum over components",
          "[spectral]") {
    // two separated squares inside one rectangle domain, split by a chain
    const Domain rect = polygon_domain({{0, 0}, {2.2, 0}, {2.2, 1}, {0, 1}});
    const Obstacle wall = make_chain({{1.1, -0.1}, {1.1, 1.1}});
    const DirichletProblem p = assemble(rect, &wall, 1.0 / 40, BoundaryScheme::mask);
    CHECK(p.n_components == 2);
    const EigenResult r = smallest_eigenpair(p, 1e-10);
    // left part is 1 x 1.1-ish, right part 1 x 1.1: the larger side wins (smaller lambda)
    for (double v : r.u1.values) CHECK(v >= -1e-12);
    CHECK(r.component >= 0);
    CHECK(r.lambda1 > 0);
}

TEST_CASE("convergence order under h-halving", "[spectral][slow]") {
    const Domain disk = disk_domain(1.0);
    const double exact = disk_lambda1(1.0);
    const double e1 =
        std::abs(smallest_eigenpair(disk, nullptr, 1.0 / 32, BoundaryScheme::ghost).lambda1 - exact);
    const double e2 =
        std::abs(smallest_eigenpair(disk, nullptr, 1.0 / 64, BoundaryScheme::ghost).lambda1 - exact);
    const double e3 =
        std::abs(smallest_eigenpair(disk, nullptr, 1.0 / 128, BoundaryScheme::ghost).lambda1 - exact);
    CHECK(e1 / e2 >= 3.0);
    CHECK(e2 / e3 >= 3.0);
}

TEST_CASE("Rayleigh quotient of a test field bounds lambda1 from above", "[spectral]") {
    const Domain disk = disk_domain(1.0);
    const DirichletProblem p = assemble(disk, nullptr, 1.0 / 48, BoundaryScheme::mask);
    const EigenResult r = smallest_eigenpair(p, 1e-10);
    // distance-based bump v = clearance(x)
    std::vector<double> v(p.n_interior), Av(p.n_interior);
    for (int e = 0; e < p.n_interior; ++e)
        v[e] = p.phi.at(p.node_i[e], p.node_j[e]);
    p.apply(v, Av);
    double num = 0, den = 0;
    for (int e = 0; e < p.n_interior; ++e) {
        num += v[e] * Av[e];
        den += v[e] * v[e];
    }
    CHECK(num / den >= r.lambda1 - 1e-9);
}

TEST_CASE("boundary gradient: annulus radial derivative vs Bessel oracle",
          "[spectral][slow]") {
    const double r_in = 0.5, r_out = 1.0;
    const Domain disk = disk_domain(r_out);
    const Obstacle hole = make_disk_region({0, 0}, r_in, 512);
    const EigenResult r = smallest_eigenpair(disk, &hole, 1.0 / 128, BoundaryScheme::ghost);

    FourierShape inner;
    inner.a0 = r_in;
    std::vector<double> thetas;
    for (int k = 0; k < 16; ++k) thetas.push_back(two_pi() * k / 16);
    const std::vector<double> g2 = boundary_gradient_sq(r, inner, thetas, disk);

    // rotational symmetry: all samples agree within 2%
    const double mean = [&] {
        double s = 0;
        for (double v : g2) s += v;
        return s / g2.size();
    }();
    for (double v : g2) CHECK(v == Approx(mean).epsilon(0.02));

    // analytic |u'(r_in)|^2 for the L2-normalized annulus eigenfunction
    const double om = std::sqrt(annulus_lambda1(r_in, r_out));
    auto cross = [&](double rho) {
        return bessel_j0(om * rho) * bessel_y0(om * r_out) -
               bessel_j0(om * r_out) * bessel_y0(om * rho);
    };
    auto cross_d = [&](double rho) {
        // d/drho: J0' = -J1, Y0' = -Y1
        return -om * (bessel_j1(om * rho) * bessel_y0(om * r_out) -
                      bessel_j0(om * r_out) * bessel_y1(om * rho));
    };
    // normalize: int_rin^rout cross(rho)^2 2 pi rho drho = 1
    const int nq = 4000;
    double norm2 = 0.0;
    for (int k = 0; k < nq; ++k) {
        const double rho = r_in + (r_out - r_in) * (k + 0.5) / nq;
        norm2 += cross(rho) * cross(rho) * two_pi() * rho * (r_out - r_in) / nq;
    }
    const double expect = std::pow(cross_d(r_in), 2) / norm2;
    CHECK(mean == Approx(expect).epsilon(0.03));
}

TEST_CASE("lagrange multiplier of the concentric configuration", "[spectral][slow]") {
    const double r_in = 0.5, r_out = 1.0;
    const Domain disk = disk_domain(r_out);
    const Obstacle hole = make_disk_region({0, 0}, r_in, 512);
    const EigenResult r = smallest_eigenpair(disk, &hole, 1.0 / 128, BoundaryScheme::ghost);

    FourierShape inner;
    inner.a0 = r_in;
    const MinkowskiEstimate est = outer_minkowski_content(hole, 1.0 / 256);
    const double mu = lagrange_multiplier(r, inner, est, disk);

    // mu = |grad u|^2 / C with C = 1/r on the circle: both sides from the
    // analytic radial solution
    const double om = std::sqrt(annulus_lambda1(r_in, r_out));
    auto cross = [&](double rho) {
        return bessel_j0(om * rho) * bessel_y0(om * r_out) -
               bessel_j0(om * r_out) * bessel_y0(om * rho);
    };
    const int nq = 4000;
    double nrm = 0.0;
    for (int k = 0; k < nq; ++k) {
        const double rho = r_in + (r_out - r_in) * (k + 0.5) / nq;
        nrm += cross(rho) * cross(rho) * two_pi() * rho * (r_out - r_in) / nq;
    }
    const double du = -om * (bessel_j1(om * r_in) * bessel_y0(om * r_out) -
                             bessel_j0(om * r_out) * bessel_y1(om * r_in));
    const double expect = (du * du / nrm) * r_in;  // |grad u|^2 / (1/r)
    CHECK(mu == Approx(expect).epsilon(0.05));
    CHECK(mu > 0.0);
    CHECK_THROWS(lagrange_multiplier(r, inner, MinkowskiEstimate{}, disk));
}

TEST_CASE("stencil clearance guard", "[spectral]") {
    const Domain disk = disk_domain(1.0);
    const Obstacle hole = make_disk_region({0, 0}, 0.9, 256);
    const EigenResult r = smallest_eigenpair(disk, &hole, 1.0 / 32, BoundaryScheme::mask);
    FourierShape inner;
    inner.a0 = 0.9;  // 0.1 from the outer boundary, under 3h = 3/32
    CHECK_THROWS_WITH(boundary_gradient_sq(r, inner, {0.0}, disk),
                      "insufficient stencil clearance");
}
