#pragma once

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spot/analytic.hpp"
#include "spot/fourier.hpp"
#include "spot/geom.hpp"
#include "spot/minkowski.hpp"
#include "spot/spectral.hpp"

// Maximizes lambda1(Omega \ K) over star-shaped Fourier obstacles under the
// perimeter budget SM1(K) <= L: ascend along the eigenvalue shape gradient,
// project back onto {perimeter = L} by scaling the radial profile, accept
// only eigenvalue increases. Obstacles can float freely inside Omega, wrap
// the inner hole of a ring (boundary glued onto an arc of the hole), or
// enclose a set of small holes; the perimeter functional follows the mode.

namespace spot {

enum class Attachment { none, wrap_hole, enclose_holes };

struct OptimizeConfig {
    double L = 1.0;             // perimeter budget
    int K_max = 6;              // Fourier truncation order
    double step0 = 0.05;        // initial step in coefficient space
    int max_iters = 80;
    double h = 1.0 / 128;
    double eigen_tol = 1e-8;
    double constraint_tol = 5e-3;   // relative perimeter tolerance
    double stall_tol = 1e-5;        // relative lambda gain regarded as stall
    FourierShape init;
    bool allow_center_motion = true;
    Attachment attachment = Attachment::none;
    BoundaryScheme scheme = BoundaryScheme::ghost;
    double margin_cells = 3.5;  // clearance kept from dOmega, in units of h
    int quad_samples = 512;     // boundary quadrature (>= 256)
    int polygon_samples = 512;  // obstacle polygonization for the grid solver
};

enum class StopReason { converged, stalled_max_iters, touching_boundary };

struct IterRecord {
    int iter = 0;
    double lambda1 = 0.0;
    double perimeter = 0.0;
    double step = 0.0;
};

struct ObstacleResult {
    FourierShape obstacle;
    double lambda1 = 0.0;
    double perimeter = 0.0;            // analytic constraint functional
    double minkowski_content = 0.0;    // independent certification
    double mu = 0.0;                   // Gauss/Rellich Lagrange multiplier
    double mu_fit = 0.0;               // least-squares fit of |grad u|^2 = mu C
    double optimality_residual = 0.0;  // sup |1 - |grad u|^2/(mu_fit C)| on free boundary
    SymmetryMetrics symmetry;
    std::vector<IterRecord> history;
    StopReason stop = StopReason::converged;
    int eigensolves = 0;
};

namespace detail {

struct CoeffView {
    // layout: a0, a[1..K], b[1..K], (cx, cy when center moves)
    static std::vector<double> pack(const FourierShape& f, bool with_center) {
        std::vector<double> c;
        c.push_back(f.a0);
        c.insert(c.end(), f.a.begin(), f.a.end());
        c.insert(c.end(), f.b.begin(), f.b.end());
        if (with_center) {
            c.push_back(f.center.x);
            c.push_back(f.center.y);
        }
        return c;
    }
    static FourierShape unpack(const std::vector<double>& c, int K, Vec2 center0,
                               bool with_center) {
        FourierShape f;
        f.a0 = c[0];
        f.a.assign(c.begin() + 1, c.begin() + 1 + K);
        f.b.assign(c.begin() + 1 + K, c.begin() + 1 + 2 * K);
        f.center = with_center ? Vec2{c[1 + 2 * K], c[2 + 2 * K]} : center0;
        return f;
    }
};

// Boundary velocity factor (V_c . n) dsigma = v_c(theta) dtheta for each
// coefficient; the polar parametrization collapses the normal projection and
// the arclength element into r(theta) itself.
inline double velocity_factor(const FourierShape& f, double th, std::size_t idx, int K,
                              bool with_center) {
    const double r = f.radius(th);
    if (idx == 0) return r;
    if (idx <= static_cast<std::size_t>(K)) return r * std::cos(static_cast<double>(idx) * th);
    if (idx <= static_cast<std::size_t>(2 * K))
        return r * std::sin(static_cast<double>(idx - K) * th);
    if (!with_center) throw std::logic_error("velocity_factor: bad index");
    const double dr = f.radius_d1(th);
    if (idx == static_cast<std::size_t>(2 * K + 1))
        return r * std::cos(th) + dr * std::sin(th);
    return r * std::sin(th) - dr * std::cos(th);
}

}  // namespace detail

// Hole radius used by wrap mode (the obstacle is glued onto this circle).
inline double wrap_hole_radius(const Domain& domain) {
    if (domain.holes.size() != 1 || !domain.holes[0].is_circle)
        throw std::invalid_argument("wrap mode expects a single circular hole");
    return domain.holes[0].circle.radius;
}

// Perimeter of the obstacle in the sense of the outer Minkowski content of
// the attached set: plain polar arclength for free obstacles; arclength of
// the part outside the hole plus the glued arc of the hole for wrapped
// obstacles; arclength plus the boundary length of every enclosed hole for
// enclosing obstacles.
inline double obstacle_perimeter(const FourierShape& f, const Domain& domain,
                                 Attachment mode, int nsamples = 2048) {
    if (mode == Attachment::none) return f.perimeter(nsamples);
    const double dth = two_pi() / nsamples;
    if (mode == Attachment::wrap_hole) {
        const double r1 = wrap_hole_radius(domain);
        double arc = 0.0, glued = 0.0;
        for (int i = 0; i < nsamples; ++i) {
            const double th = i * dth;
            if (f.radius(th) > r1) {
                arc += f.speed(th) * dth;
                glued += r1 * dth;
            }
        }
        return arc + glued;
    }
    // enclose_holes
    double per = f.perimeter(nsamples);
    for (const auto& hole : domain.holes) {
        const Polyline pts = hole.is_circle
                                 ? circle_points(hole.circle.center, hole.circle.radius, 128)
                                 : densify(hole.polygon, true, hole.length() / 128.0);
        bool enclosed = true;
        for (const Vec2 p : pts) {
            const Vec2 d = p - f.center;
            const double th = std::atan2(d.y, d.x);
            if (norm(d) >= f.radius(th)) {
                enclosed = false;
                break;
            }
        }
        if (enclosed) per += hole.length();
    }
    return per;
}

// d(perimeter)/d(coefficient) via the curvature form of the perimeter shape
// derivative, int C (V_c . n) dsigma, for free star-shaped obstacles.
inline std::vector<double> perimeter_shape_gradient(const FourierShape& f,
                                                    bool with_center = false,
                                                    int nsamples = 2048) {
    if (f.min_radius() <= 0.0)
        throw std::domain_error("perimeter gradient: self-intersecting parametrization");
    const int K = f.order();
    const std::size_t ncoef = 1 + 2 * K + (with_center ? 2 : 0);
    std::vector<double> g(ncoef, 0.0);
    const double dth = two_pi() / nsamples;
    for (int i = 0; i < nsamples; ++i) {
        const double th = i * dth;
        const double c = f.curvature(th);
        for (std::size_t idx = 0; idx < ncoef; ++idx)
            g[idx] += c * detail::velocity_factor(f, th, idx, K, with_center) * dth;
    }
    return g;
}

// d(lambda1)/d(coefficient) = + int_{free} |grad u1|^2 (V_c . n) dsigma
// (outward velocity grows K and raises lambda1). Wrapped obstacles integrate
// over the free boundary only.
inline std::vector<double> eigen_shape_gradient(const FourierShape& f,
                                                const EigenResult& eig,
                                                const Domain& domain,
                                                const OptimizeConfig& cfg) {
    if (!eig.converged)
        throw std::invalid_argument("eigen_shape_gradient: eigenpair not converged");
    const int K = f.order();
    const bool with_center = cfg.allow_center_motion && cfg.attachment == Attachment::none;
    const std::size_t ncoef = 1 + 2 * K + (with_center ? 2 : 0);
    const double r1 = cfg.attachment == Attachment::wrap_hole
                          ? wrap_hole_radius(domain)
                          : -std::numeric_limits<double>::max();

    const double dth = two_pi() / cfg.quad_samples;
    std::vector<double> thetas;
    thetas.reserve(cfg.quad_samples);
    for (int i = 0; i < cfg.quad_samples; ++i) {
        const double th = i * dth;
        if (f.radius(th) > r1 + 2.0 * cfg.h) thetas.push_back(th);
    }
    const std::vector<double> grad2 = boundary_gradient_sq(eig, f, thetas, domain);
    std::vector<double> g(ncoef, 0.0);
    for (std::size_t s = 0; s < thetas.size(); ++s)
        for (std::size_t idx = 0; idx < ncoef; ++idx)
            g[idx] += grad2[s] * detail::velocity_factor(f, thetas[s], idx, K, with_center) * dth;
    return g;
}

namespace detail {

inline bool shape_admissible(const FourierShape& f, const Domain& domain,
                             const OptimizeConfig& cfg) {
    const double margin = cfg.margin_cells * cfg.h;
    const int n = 512;
    const double dth = two_pi() / n;
    double rmin = std::numeric_limits<double>::max();
    for (int i = 0; i < n; ++i) {
        const double th = i * dth;
        const double r = f.radius(th);
        rmin = std::min(rmin, r);
        if (r <= 0.0) return false;
        const Vec2 p = f.point(th);
        if (domain.outer.signed_distance(p, true) < margin) return false;
        if (cfg.attachment == Attachment::none) {
            for (const auto& hole : domain.holes)
                if (hole.signed_distance(p, false) < margin) return false;
        }
    }
    if (rmin < 2.0 * cfg.h && cfg.attachment != Attachment::wrap_hole) return false;
    if (cfg.attachment == Attachment::enclose_holes) {
        // each hole fully inside or fully outside the curve, with margin
        for (const auto& hole : domain.holes) {
            const Polyline pts =
                hole.is_circle ? circle_points(hole.circle.center, hole.circle.radius, 64)
                               : densify(hole.polygon, true, hole.length() / 64.0);
            int in = 0, out = 0;
            for (const Vec2 p : pts) {
                const Vec2 d = p - f.center;
                const double rr = norm(d);
                const double rb = f.radius(std::atan2(d.y, d.x));
                if (rr < rb - margin) ++in;
                else if (rr > rb + margin) ++out;
                else return false;
            }
            if (in != 0 && out != 0) return false;
        }
    }
    return true;
}

// Scale the radial profile so the perimeter functional meets the budget.
// The perimeter is linear in the scale for free obstacles and monotone for
// the attached modes, so a bracketed bisection always lands.
inline std::optional<FourierShape> project_to_budget(const FourierShape& f,
                                                     const Domain& domain,
                                                     const OptimizeConfig& cfg) {
    const double p0 = obstacle_perimeter(f, domain, cfg.attachment);
    if (!(p0 > 0)) return std::nullopt;
    if (cfg.attachment == Attachment::none) return f.scaled(cfg.L / p0);
    double lo = cfg.L / p0, hi = lo;
    auto per = [&](double t) { return obstacle_perimeter(f.scaled(t), domain, cfg.attachment); };
    int guard = 0;
    while (per(lo) > cfg.L && guard++ < 60) lo *= 0.8;
    guard = 0;
    while (per(hi) < cfg.L && guard++ < 60) hi *= 1.25;
    if (per(lo) > cfg.L || per(hi) < cfg.L) return std::nullopt;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (per(mid) < cfg.L) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-13 * hi) break;
    }
    const FourierShape out = f.scaled(0.5 * (lo + hi));
    const double achieved = obstacle_perimeter(out, domain, cfg.attachment);
    if (std::abs(achieved - cfg.L) > cfg.constraint_tol * cfg.L) return std::nullopt;
    return out;
}

inline EigenResult solve_shape(const FourierShape& f, const Domain& domain,
                               const OptimizeConfig& cfg, const ScalarField* warm,
                               int& counter) {
    const Obstacle obs = from_fourier(f, cfg.polygon_samples, ObstacleKind::region);
    const DirichletProblem prob = assemble(domain, &obs, cfg.h, cfg.scheme);
    ++counter;
    return smallest_eigenpair(prob, cfg.eigen_tol, 500, warm);
}

}  // namespace detail

// Free-boundary sample angles of the obstacle (angles where the curve lies
// outside the glued hole in wrap mode).
inline std::vector<double> free_boundary_angles(const FourierShape& f,
                                                const Domain& domain,
                                                const OptimizeConfig& cfg,
                                                int nsamples) {
    const double r1 = cfg.attachment == Attachment::wrap_hole
                          ? wrap_hole_radius(domain)
                          : -std::numeric_limits<double>::max();
    std::vector<double> thetas;
    const double dth = two_pi() / nsamples;
    for (int i = 0; i < nsamples; ++i) {
        const double th = i * dth;
        if (f.radius(th) > r1 + 4.0 * cfg.h) thetas.push_back(th);
    }
    return thetas;
}

// Projected gradient ascent from cfg.init. Deterministic given the config.
inline ObstacleResult maximize(const Domain& domain, const OptimizeConfig& cfg) {
    if (!(cfg.L > 0 && cfg.L < domain.boundary_length()))
        throw std::invalid_argument(
            "optimize: perimeter budget must satisfy 0 < L < H1(boundary of Omega)");
    if (cfg.K_max < 0 || static_cast<int>(cfg.init.a.size()) != cfg.K_max ||
        cfg.init.b.size() != cfg.init.a.size())
        throw std::invalid_argument("optimize: init coefficients must match K_max");

    ObstacleResult res;
    res.eigensolves = 0;

    auto projected = detail::project_to_budget(cfg.init, domain, cfg);
    if (!projected || !detail::shape_admissible(*projected, domain, cfg))
        throw std::invalid_argument("optimize: seed obstacle not admissible at the budget");
    FourierShape cur = *projected;

    EigenResult eig = detail::solve_shape(cur, domain, cfg, nullptr, res.eigensolves);
    const bool with_center = cfg.allow_center_motion && cfg.attachment == Attachment::none;

    double step = cfg.step0;
    int stall_count = 0, touch_count = 0;
    res.stop = StopReason::stalled_max_iters;
    res.history.push_back({0, eig.lambda1, obstacle_perimeter(cur, domain, cfg.attachment), 0.0});

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        std::vector<double> g = eigen_shape_gradient(cur, eig, domain, cfg);
        // remove the perimeter-normal component so steps stay near the
        // constraint manifold and the rescale projection is second order
        {
            std::vector<double> dp;
            if (cfg.attachment == Attachment::none) {
                dp = perimeter_shape_gradient(cur, with_center);
            } else {
                const auto c0 = detail::CoeffView::pack(cur, with_center);
                dp.assign(c0.size(), 0.0);
                const double fd = 1e-6 * std::max(1.0, cur.a0);
                for (std::size_t i = 0; i < c0.size(); ++i) {
                    auto cp = c0, cm = c0;
                    cp[i] += fd;
                    cm[i] -= fd;
                    dp[i] = (obstacle_perimeter(
                                 detail::CoeffView::unpack(cp, cfg.K_max, cur.center, with_center),
                                 domain, cfg.attachment) -
                             obstacle_perimeter(
                                 detail::CoeffView::unpack(cm, cfg.K_max, cur.center, with_center),
                                 domain, cfg.attachment)) /
                            (2 * fd);
                }
            }
            double gp = 0.0, pp = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                gp += g[i] * dp[i];
                pp += dp[i] * dp[i];
            }
            if (pp > 0)
                for (std::size_t i = 0; i < g.size(); ++i) g[i] -= gp / pp * dp[i];
        }
        double gnorm = 0.0;
        for (double v : g) gnorm += v * v;
        gnorm = std::sqrt(gnorm);

        bool accepted = false;
        bool any_admissible = false;
        double trial_step = step;
        if (gnorm > 1e-14) {
            const auto c0 = detail::CoeffView::pack(cur, with_center);
            for (int halving = 0; halving <= 20; ++halving) {
                auto c = c0;
                for (std::size_t i = 0; i < c.size(); ++i)
                    c[i] += trial_step * g[i] / gnorm;
                FourierShape cand =
                    detail::CoeffView::unpack(c, cfg.K_max, cur.center, with_center);
                auto proj = detail::project_to_budget(cand, domain, cfg);
                if (!proj || !detail::shape_admissible(*proj, domain, cfg)) {
                    trial_step *= 0.5;
                    continue;
                }
                any_admissible = true;
                EigenResult cand_eig =
                    detail::solve_shape(*proj, domain, cfg, &eig.u1, res.eigensolves);
                if (cand_eig.lambda1 > eig.lambda1) {
                    cur = *proj;
                    const double gain = (cand_eig.lambda1 - eig.lambda1) / eig.lambda1;
                    eig = std::move(cand_eig);
                    step = std::min(trial_step * 1.5, cfg.step0 * 8.0);
                    accepted = true;
                    stall_count = gain < cfg.stall_tol ? stall_count + 1 : 0;
                    break;
                }
                trial_step *= 0.5;
            }
        }
        res.history.push_back({iter, eig.lambda1,
                               obstacle_perimeter(cur, domain, cfg.attachment),
                               accepted ? trial_step : 0.0});
        if (!accepted) {
            ++stall_count;
            step = std::max(step * 0.5, cfg.step0 * 1e-4);
        }
        touch_count = (!accepted && !any_admissible && gnorm > 1e-14) ? touch_count + 1 : 0;
        if (touch_count >= 3) {
            res.stop = StopReason::touching_boundary;
            break;
        }
        if (stall_count >= 5) {
            res.stop = StopReason::converged;
            break;
        }
    }

    res.obstacle = cur;
    res.lambda1 = eig.lambda1;
    res.perimeter = obstacle_perimeter(cur, domain, cfg.attachment);
    res.symmetry = symmetry_metrics(cur);

    // optimality condition |grad u1|^2 = mu C on the free boundary
    const std::vector<double> thetas = free_boundary_angles(cur, domain, cfg, 256);
    if (thetas.size() >= 8) {
        const std::vector<double> g2 = boundary_gradient_sq(eig, cur, thetas, domain);
        double num = 0.0, den = 0.0;
        std::vector<double> curv(thetas.size());
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            curv[i] = cur.curvature(thetas[i]);
            num += g2[i] * curv[i];
            den += curv[i] * curv[i];
        }
        res.mu_fit = den > 0 ? num / den : 0.0;
        double worst = 0.0;
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            const double model = res.mu_fit * curv[i];
            if (model > 1e-12) worst = std::max(worst, std::abs(g2[i] - model) / model);
        }
        res.optimality_residual = worst;
    }

    // independent certification of the constraint functional
    {
        const Obstacle obs = from_fourier(cur, cfg.polygon_samples, ObstacleKind::region);
        const double hm = std::min(cfg.h, cur.a0 / 96.0);
        if (cfg.attachment == Attachment::none) {
            const MinkowskiEstimate est = outer_minkowski_content(obs, hm);
            res.minkowski_content = est.content;
            res.mu = lagrange_multiplier(eig, cur, est, domain, 512, 0.0);
        } else {
            // attached obstacles: certify against the analytic functional only
            res.minkowski_content = res.perimeter;
            MinkowskiEstimate est;
            est.content = res.perimeter;
            est.grid_h = cfg.h;
            const double above = cfg.attachment == Attachment::wrap_hole
                                     ? wrap_hole_radius(domain) + 4.0 * cfg.h
                                     : 0.0;
            res.mu = lagrange_multiplier(eig, cur, est, domain, 512, above);
        }
    }
    return res;
}

// Runs one maximize per seed concurrently (each run is single threaded and
// deterministic); returns all results with the best one first.
inline std::vector<ObstacleResult> maximize_seeded(const Domain& domain,
                                                   const OptimizeConfig& base,
                                                   const std::vector<FourierShape>& seeds) {
    std::vector<std::future<ObstacleResult>> futures;
    futures.reserve(seeds.size());
    for (const FourierShape& seed : seeds) {
        OptimizeConfig cfg = base;
        cfg.init = seed;
        cfg.K_max = seed.order();
        futures.push_back(std::async(std::launch::async,
                                     [&domain, cfg] { return maximize(domain, cfg); }));
    }
    std::vector<ObstacleResult> results;
    for (auto& fu : futures) results.push_back(fu.get());
    std::stable_sort(results.begin(), results.end(),
                     [](const ObstacleResult& a, const ObstacleResult& b) {
                         return a.lambda1 > b.lambda1;
                     });
    return results;
}

// Default seed family: concentric, two off-center, two mode-2 perturbed.
inline std::vector<FourierShape> default_seeds(const FourierShape& base, double offset,
                                               double mode2) {
    if (base.order() < 2)
        throw std::invalid_argument("default_seeds: base shape needs order >= 2");
    std::vector<FourierShape> seeds(5, base);
    seeds[1].center.x += offset;
    seeds[2].center.y -= offset;
    seeds[3].a[1] += mode2;
    seeds[4].b[1] -= mode2;
    return seeds;
}

// --- Ring experiment ----------------------------------------------------

struct AnnulusExperiment {
    double r1 = 0.0, r0 = 0.0, L = 0.0;
    bool radial_class_empty = false;
    double ring_thickness = 0.0;       // h with 2 pi (2 r1 + h) = L
    double radial_best_lambda = 0.0;   // analytic value of the glued ring
    double half_ring_reference = 0.0;  // lambda1 of the half annulus
    std::vector<ObstacleResult> runs;
    double best_nonradial_lambda = 0.0;
    bool nonradial_wins = false;
    double gap = 0.0;
};

// Compares the best radially symmetric candidate (the ring glued onto the
// inner disk) with optimizer runs seeded asymmetrically and glued to the
// hole. A radial candidate must wrap the hole, which costs perimeter
// 2 pi (2 r1 + h) >= 4 pi r1; below that the radial class is empty.
inline AnnulusExperiment annulus_experiment(double r1, double r0, double L,
                                            const std::vector<FourierShape>& seeds,
                                            OptimizeConfig cfg) {
    if (!(0 < r1 && r1 < r0))
        throw std::invalid_argument("annulus_experiment: requires 0 < r1 < r0");
    if (!(L < two_pi() * (r0 + r1)))
        throw std::invalid_argument("annulus_experiment: L must be below the boundary length");
    AnnulusExperiment ex;
    ex.r1 = r1;
    ex.r0 = r0;
    ex.L = L;
    ex.half_ring_reference = half_annulus_lambda1(r1, r0);
    ex.ring_thickness = L / two_pi() - 2.0 * r1;
    if (ex.ring_thickness < 0.0) {
        ex.radial_class_empty = true;
    } else {
        ex.radial_best_lambda = annulus_lambda1(r1 + ex.ring_thickness, r0);
    }

    const Domain domain = annulus_domain(r1, r0);
    cfg.L = L;
    cfg.attachment = Attachment::wrap_hole;
    cfg.allow_center_motion = false;
    ex.runs = maximize_seeded(domain, cfg, seeds);
    for (const auto& run : ex.runs)
        ex.best_nonradial_lambda = std::max(ex.best_nonradial_lambda, run.lambda1);
    if (!ex.radial_class_empty) {
        ex.gap = ex.best_nonradial_lambda - ex.radial_best_lambda;
        ex.nonradial_wins = ex.gap > 0.0;
    } else {
        ex.nonradial_wins = true;
        ex.gap = 0.0;
    }
    return ex;
}

// Smooth glued seeds for the ring: a one-sided lump and truncated
// square-wave profiles approximating partial rings.
inline std::vector<FourierShape> annulus_seeds(double r1, double r0, int K_max) {
    const double H = 0.55 * (r0 - r1);
    std::vector<FourierShape> seeds;
    {
        FourierShape lump;
        lump.a0 = r1 + 0.5 * H;
        lump.a.assign(K_max, 0.0);
        lump.b.assign(K_max, 0.0);
        lump.a[0] = 0.55 * H;
        seeds.push_back(lump);
    }
    {
        // smooth indicator of the upper half: 1/2 + (2/pi) sum sin(k th)/k, k odd
        FourierShape half;
        half.a0 = r1 + 0.5 * H;
        half.a.assign(K_max, 0.0);
        half.b.assign(K_max, 0.0);
        for (int k = 1; k <= K_max; k += 2)
            half.b[k - 1] = H * 2.0 / (pi() * k);
        seeds.push_back(half);
    }
    {
        // three-quarter ring profile
        FourierShape threequarter;
        threequarter.a0 = r1 + 0.75 * H;
        threequarter.a.assign(K_max, 0.0);
        threequarter.b.assign(K_max, 0.0);
        const double duty = 0.75;
        for (int k = 1; k <= K_max; ++k) {
            // Fourier series of a duty-cycle square bump centered at pi/2
            const double amp = H * 2.0 / (pi() * k) * std::sin(pi() * k * duty);
            threequarter.a[k - 1] = amp * std::sin(0.5 * pi() * k);
            threequarter.b[k - 1] = amp * std::cos(0.5 * pi() * k) * -1.0;
        }
        seeds.push_back(threequarter);
    }
    return seeds;
}

}  // namespace spot
