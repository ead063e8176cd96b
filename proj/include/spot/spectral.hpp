#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spot/distance.hpp"
#include "spot/field.hpp"
#include "spot/fourier.hpp"
#include "spot/geom.hpp"
#include "spot/minkowski.hpp"

// 5-point Dirichlet Laplacian on Omega \ K over a uniform grid, and its
// smallest eigenpair. The boundary enters through a clearance level function
// phi (positive in the fluid, zero on the Dirichlet set): plain node masking
// at phi > h/2, or ghost corrections that shorten boundary arms by linear
// extrapolation (a symmetric Shortley-Weller variant, second order for the
// eigenvalue while keeping the operator SPD).

namespace spot {

enum class BoundaryScheme { mask, ghost };

struct DirichletProblem {
    double h = 0.0;
    BoundaryScheme scheme = BoundaryScheme::ghost;
    ScalarField phi;             // clearance from the Dirichlet set
    std::vector<int> eq_index;   // grid node -> equation index or -1
    std::vector<int> node_i, node_j;  // equation -> grid node
    int n_interior = 0;

    // operator: diag + up to 4 neighbors (E, W, N, S)
    std::vector<double> diag;
    std::vector<std::array<int, 4>> nbr;

    std::vector<int> component;  // equation -> connected component id
    int n_components = 0;

    double inv_h2() const { return 1.0 / (h * h); }

    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        const double offc = -inv_h2();
        for (int e = 0; e < n_interior; ++e) {
            double s = diag[e] * x[e];
            for (int d = 0; d < 4; ++d) {
                const int o = nbr[e][d];
                if (o >= 0) s += offc * x[o];
            }
            y[e] = s;
        }
    }
};

struct EigenResult {
    double lambda1 = 0.0;
    ScalarField u1;          // L2-normalized, nonnegative, zero on Dirichlet nodes
    double residual = 0.0;   // ||A u - lambda u||_2 / ||u||_2
    int iterations = 0;
    bool converged = false;
    int component = 0;       // component realizing the eigenvalue
    int n_interior = 0;
    double h = 0.0;
};

namespace detail {

// Clearance of the Dirichlet set: min over the domain boundary clearance and
// the obstacle level. Region obstacles contribute their signed boundary
// distance (negative inside); chains are thickened by h/2 to their nearest
// nodes. The obstacle term is evaluated exactly in a band around its
// boundary and clamped beyond it, which is all the assembly looks at.
inline ScalarField clearance_field(const Domain& domain, const Obstacle* obstacle,
                                   double h) {
    BBox box = domain.bounds();
    box.pad(2.0 * h);
    ScalarField phi = make_field_over(box, h);

    for (int j = 0; j < phi.ny; ++j)
        for (int i = 0; i < phi.nx; ++i) phi.at(i, j) = domain.clearance(phi.node(i, j));

    if (obstacle != nullptr && !obstacle->empty()) {
        const double band = 6.0 * h;
        const std::size_t total = phi.values.size();
        std::vector<double> d2(total, std::numeric_limits<double>::max());
        auto stamp = [&](Vec2 a, Vec2 b) {
            const double x0 = std::min(a.x, b.x) - band, x1 = std::max(a.x, b.x) + band;
            const double y0 = std::min(a.y, b.y) - band, y1 = std::max(a.y, b.y) + band;
            const int i0 = std::max(0, static_cast<int>(std::floor((x0 - phi.origin.x) / h)));
            const int i1 = std::min(phi.nx - 1, static_cast<int>(std::ceil((x1 - phi.origin.x) / h)));
            const int j0 = std::max(0, static_cast<int>(std::floor((y0 - phi.origin.y) / h)));
            const int j1 = std::min(phi.ny - 1, static_cast<int>(std::ceil((y1 - phi.origin.y) / h)));
            for (int j = j0; j <= j1; ++j)
                for (int i = i0; i <= i1; ++i) {
                    const std::size_t idx = static_cast<std::size_t>(j) * phi.nx + i;
                    const double v = point_segment_dist2(phi.node(i, j), a, b);
                    if (v < d2[idx]) d2[idx] = v;
                }
        };
        bool has_segments = false;
        obstacle->each_segment([&](Vec2 a, Vec2 b) {
            has_segments = true;
            stamp(a, b);
        });
        if (!has_segments)
            for (const Vec2 v : obstacle->vertices) stamp(v, v);

        std::vector<char> inside;
        if (obstacle->kind == ObstacleKind::region)
            rasterize_inside(obstacle->vertices, phi, inside);

        const bool is_region = obstacle->kind == ObstacleKind::region;
        for (std::size_t idx = 0; idx < total; ++idx) {
            double level;
            const double d =
                d2[idx] == std::numeric_limits<double>::max() ? band : std::sqrt(d2[idx]);
            if (is_region) {
                const double s = (!inside.empty() && inside[idx]) ? -1.0 : 1.0;
                level = s * std::min(d, band);
            } else {
                level = std::min(d, band) - 0.5 * h;
            }
            phi.values[idx] = std::min(phi.values[idx], level);
        }
    }
    return phi;
}

}  // namespace detail

// Discretizes -Laplace on Omega \ K with Dirichlet conditions. Throws
// "domain fully blocked" when no interior node remains (the lambda1 of the
// empty set, reported distinctly).
inline DirichletProblem assemble(const Domain& domain, const Obstacle* obstacle,
                                 double h, BoundaryScheme scheme = BoundaryScheme::ghost) {
    if (!(h > 0)) throw std::invalid_argument("assemble: h must be positive");
    DirichletProblem p;
    p.h = h;
    p.scheme = scheme;
    p.phi = detail::clearance_field(domain, obstacle, h);

    const int nx = p.phi.nx, ny = p.phi.ny;
    const double interior_cut = scheme == BoundaryScheme::mask ? 0.5 * h : 0.05 * h;
    p.eq_index.assign(p.phi.values.size(), -1);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            if (p.phi.at(i, j) > interior_cut) {
                p.eq_index[static_cast<std::size_t>(j) * nx + i] = p.n_interior++;
                p.node_i.push_back(i);
                p.node_j.push_back(j);
            }
        }
    if (p.n_interior == 0) throw std::runtime_error("domain fully blocked");

    const double ih2 = p.inv_h2();
    p.diag.assign(p.n_interior, 0.0);
    p.nbr.assign(p.n_interior, {-1, -1, -1, -1});
    constexpr int di[4] = {1, -1, 0, 0};
    constexpr int dj[4] = {0, 0, 1, -1};
    constexpr double theta_min = 0.05;
    for (int e = 0; e < p.n_interior; ++e) {
        const int i = p.node_i[e], j = p.node_j[e];
        const double phi_c = p.phi.at(i, j);
        double diag = 0.0;
        for (int d = 0; d < 4; ++d) {
            const int ii = i + di[d], jj = j + dj[d];
            int other = -1;
            if (ii >= 0 && ii < nx && jj >= 0 && jj < ny)
                other = p.eq_index[static_cast<std::size_t>(jj) * nx + ii];
            if (other >= 0) {
                p.nbr[e][d] = other;
                diag += ih2;
            } else if (scheme == BoundaryScheme::mask) {
                diag += ih2;
            } else {
                const double phi_n = (ii >= 0 && ii < nx && jj >= 0 && jj < ny)
                                         ? p.phi.at(ii, jj)
                                         : 0.0;
                double theta = 1.0;
                if (phi_c > phi_n) theta = phi_c / (phi_c - phi_n);
                theta = std::clamp(theta, theta_min, 1.0);
                diag += ih2 / theta;
            }
        }
        p.diag[e] = diag;
    }

    // connected components of the interior graph
    p.component.assign(p.n_interior, -1);
    for (int s = 0; s < p.n_interior; ++s) {
        if (p.component[s] >= 0) continue;
        const int id = p.n_components++;
        std::queue<int> q;
        q.push(s);
        p.component[s] = id;
        while (!q.empty()) {
            const int e = q.front();
            q.pop();
            for (int d = 0; d < 4; ++d) {
                const int o = p.nbr[e][d];
                if (o >= 0 && p.component[o] < 0) {
                    p.component[o] = id;
                    q.push(o);
                }
            }
        }
    }
    return p;
}

inline DirichletProblem assemble(const Domain& domain, const Obstacle& obstacle,
                                 double h, BoundaryScheme scheme = BoundaryScheme::ghost) {
    return assemble(domain, &obstacle, h, scheme);
}

namespace detail {

// Jacobi-preconditioned CG on (A - sigma I) x = b; returns iterations used,
// or -1 when a negative-curvature direction shows the shift crossed the
// spectrum (caller reduces sigma and retries).
inline int cg_solve(const DirichletProblem& p, double sigma, const std::vector<double>& b,
                    std::vector<double>& x, double rel_tol, int max_iter) {
    const int n = p.n_interior;
    std::vector<double> r(n), z(n), q(n), Ap(n);
    p.apply(x, Ap);
    for (int i = 0; i < n; ++i) r[i] = b[i] - (Ap[i] - sigma * x[i]);
    const double b_norm = std::sqrt(std::inner_product(b.begin(), b.end(), b.begin(), 0.0));
    if (b_norm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        return 0;
    }
    double rz = 0.0;
    for (int i = 0; i < n; ++i) {
        z[i] = r[i] / (p.diag[i] - sigma);
        rz += r[i] * z[i];
    }
    std::vector<double> d = z;
    for (int it = 1; it <= max_iter; ++it) {
        p.apply(d, Ap);
        double dAd = 0.0;
        for (int i = 0; i < n; ++i) {
            Ap[i] -= sigma * d[i];
            dAd += d[i] * Ap[i];
        }
        if (dAd <= 0.0) return -1;
        const double alpha = rz / dAd;
        double rnorm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] += alpha * d[i];
            r[i] -= alpha * Ap[i];
            rnorm2 += r[i] * r[i];
        }
        if (std::sqrt(rnorm2) <= rel_tol * b_norm) return it;
        double rz_new = 0.0;
        for (int i = 0; i < n; ++i) {
            z[i] = r[i] / (p.diag[i] - sigma);
            rz_new += r[i] * z[i];
        }
        const double beta = rz_new / rz;
        rz = rz_new;
        for (int i = 0; i < n; ++i) d[i] = z[i] + beta * d[i];
    }
    return max_iter;
}

}  // namespace detail

// Smallest eigenpair by inverse power iteration with CG inner solves.
// Shifts track the Rayleigh quotient from below once it has settled (kept
// strictly under the spectrum via the negative-curvature safeguard), which
// rescues the clustered spectra of thin annular domains. The eigenfunction
// is sign-normalized nonnegative and L2-normalized with node weight h^2.
inline EigenResult smallest_eigenpair(const DirichletProblem& p, double tol = 1e-8,
                                      int max_outer = 500,
                                      const ScalarField* warm_start = nullptr) {
    const int n = p.n_interior;
    std::vector<double> x(n, 1.0), y(n), Ax(n);
    if (warm_start != nullptr) {
        const BBox wb = warm_start->box();
        for (int e = 0; e < n; ++e) {
            const Vec2 pos = p.phi.node(p.node_i[e], p.node_j[e]);
            x[e] = wb.contains(pos) ? warm_start->sample(pos) : 0.0;
        }
        double nrm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
        if (!(nrm > 1e-12)) std::fill(x.begin(), x.end(), 1.0);
    }
    auto normalize = [&](std::vector<double>& v) {
        const double nrm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        for (auto& t : v) t /= nrm;
        return nrm;
    };
    normalize(x);

    auto rayleigh = [&](const std::vector<double>& v) {
        p.apply(v, Ax);
        return std::inner_product(v.begin(), v.end(), Ax.begin(), 0.0);
    };

    double rho = rayleigh(x);
    double rel_change = 1.0;
    int outer = 0;
    bool converged = false;
    double sigma = 0.0;
    for (outer = 1; outer <= max_outer; ++outer) {
        // shift once the quotient has settled; delta keeps sigma below lambda1
        double delta = std::clamp(20.0 * rel_change, 1e-3, 1.0);
        sigma = rho * (1.0 - delta);
        if (delta >= 1.0) sigma = 0.0;
        const double inner_tol = std::clamp(0.05 * rel_change, 1e-10, 1e-4);
        y = x;
        int its = detail::cg_solve(p, sigma, x, y, inner_tol, 20000);
        int guard = 0;
        while (its < 0 && guard++ < 60) {  // shift crossed the spectrum
            delta = std::min(1.0, delta * 4.0);
            sigma = delta >= 1.0 ? 0.0 : rho * (1.0 - delta);
            y = x;
            its = detail::cg_solve(p, sigma, x, y, inner_tol, 20000);
        }
        if (its < 0) throw std::runtime_error("eigen solve: could not find an SPD shift");
        normalize(y);
        x.swap(y);
        const double rho_new = rayleigh(x);
        rel_change = std::abs(rho_new - rho) / std::max(rho_new, 1e-300);
        rho = rho_new;
        if (rel_change < tol) {
            converged = true;
            break;
        }
    }

    // sign: make the dominant component nonnegative
    double pos = 0.0, neg = 0.0;
    for (double v : x) (v >= 0 ? pos : neg) += std::abs(v);
    if (neg > pos)
        for (auto& v : x) v = -v;

    p.apply(x, Ax);
    double res2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = Ax[i] - rho * x[i];
        res2 += r * r;
    }

    EigenResult out;
    out.lambda1 = rho;
    out.residual = std::sqrt(res2);
    out.iterations = outer;
    out.converged = converged;
    out.n_interior = n;
    out.h = p.h;
    if (!converged) {
        std::ostringstream msg;
        msg << "eigen solve did not converge after " << max_outer
            << " iterations (last Rayleigh quotient " << rho << ", rel change "
            << rel_change << ")";
        throw std::runtime_error(msg.str());
    }

    int imax = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(x[i]) > std::abs(x[imax])) imax = i;
    out.component = p.component[imax];

    // L2 normalization: trapezoid over interior nodes with weight h^2
    const double l2 =
        p.h * std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    out.u1 = ScalarField(p.phi.origin, p.h, p.phi.nx, p.phi.ny);
    for (int e = 0; e < n; ++e)
        out.u1.at(p.node_i[e], p.node_j[e]) = std::max(x[e], 0.0) / l2;
    return out;
}

inline EigenResult smallest_eigenpair(const Domain& domain, const Obstacle* obstacle,
                                      double h,
                                      BoundaryScheme scheme = BoundaryScheme::ghost,
                                      double tol = 1e-8,
                                      const ScalarField* warm_start = nullptr) {
    const DirichletProblem p = assemble(domain, obstacle, h, scheme);
    return smallest_eigenpair(p, tol, 500, warm_start);
}

// Squared normal derivative of u1 at boundary samples of a star-shaped
// obstacle, by a one-sided second-order fit along the outward normal using
// u = 0 on the boundary itself.
inline std::vector<double> boundary_gradient_sq(const EigenResult& result,
                                                const FourierShape& shape,
                                                const std::vector<double>& thetas,
                                                const Domain& domain) {
    if (!result.converged)
        throw std::invalid_argument("boundary_gradient_sq: eigenpair not converged");
    const double h = result.u1.h;
    std::vector<double> out;
    out.reserve(thetas.size());
    for (const double th : thetas) {
        const Vec2 pb = shape.point(th);
        if (domain.clearance(pb) <= 3.0 * h)
            throw std::runtime_error("insufficient stencil clearance");
        const Vec2 nrm = shape.outward_normal(th);
        const double u1 = result.u1.sample(pb + h * nrm);
        const double u2 = result.u1.sample(pb + 2.0 * h * nrm);
        const double du = (4.0 * u1 - u2) / (2.0 * h);
        out.push_back(du * du);
    }
    return out;
}

// Lagrange multiplier of the perimeter constraint from the Gauss/Rellich
// boundary identity: mu = [oint (du/dn)^2 X.n ds] / SM1(K), with X relative
// to the given origin (the center of Omega). Touching parts contribute
// nothing since du/dn = 0 there.
inline double lagrange_multiplier(const EigenResult& result, const FourierShape& shape,
                                  const MinkowskiEstimate& content, const Domain& domain,
                                  int nsamples = 512, double free_radius_above = 0.0) {
    if (!(content.content > 0))
        throw std::invalid_argument("lagrange_multiplier: content must be positive");
    const Vec2 origin = domain.center();
    const double dth = two_pi() / nsamples;
    std::vector<double> thetas;
    thetas.reserve(nsamples);
    for (int i = 0; i < nsamples; ++i) {
        const double th = i * dth;
        if (shape.radius(th) > free_radius_above) thetas.push_back(th);
    }
    const std::vector<double> grad2 = boundary_gradient_sq(result, shape, thetas, domain);
    double integral = 0.0;
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        const double th = thetas[k];
        const Vec2 X = shape.point(th) - origin;
        integral += grad2[k] * dot(X, shape.outward_normal(th)) * shape.speed(th) * dth;
    }
    return integral / content.content;
}

}  // namespace spot
