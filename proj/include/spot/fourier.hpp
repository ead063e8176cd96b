#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spot/vec2.hpp"

// Star-shaped boundary r(theta) = a0 + sum_k (a_k cos k theta + b_k sin k theta)
// around a movable center. This is the parametrization the optimizer works in.

namespace spot {

struct FourierShape {
    Vec2 center{0.0, 0.0};
    double a0 = 1.0;
    std::vector<double> a;  // cosine coefficients, k = 1..K
    std::vector<double> b;  // sine coefficients, k = 1..K

    int order() const { return static_cast<int>(a.size()); }

    double radius(double th) const {
        double r = a0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double kt = (k + 1) * th;
            r += a[k] * std::cos(kt) + b[k] * std::sin(kt);
        }
        return r;
    }

    double radius_d1(double th) const {
        double d = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double m = static_cast<double>(k + 1);
            const double kt = m * th;
            d += m * (-a[k] * std::sin(kt) + b[k] * std::cos(kt));
        }
        return d;
    }

    double radius_d2(double th) const {
        double d = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double m = static_cast<double>(k + 1);
            const double kt = m * th;
            d += -m * m * (a[k] * std::cos(kt) + b[k] * std::sin(kt));
        }
        return d;
    }

    Vec2 point(double th) const {
        const double r = radius(th);
        return {center.x + r * std::cos(th), center.y + r * std::sin(th)};
    }

    // Unit normal pointing out of the enclosed region (CCW traversal).
    Vec2 outward_normal(double th) const {
        const double r = radius(th), dr = radius_d1(th);
        const double c = std::cos(th), s = std::sin(th);
        // n ~ r*e_r - r'*e_theta
        Vec2 n{r * c + dr * s, r * s - dr * c};
        const double len = std::hypot(n.x, n.y);
        return {n.x / len, n.y / len};
    }

    // Signed curvature of the polar curve; positive where the region is
    // locally convex (CCW traversal).
    double curvature(double th) const {
        const double r = radius(th);
        if (!(r > 0.0))
            throw std::domain_error("curvature: self-intersecting parametrization (r <= 0)");
        const double dr = radius_d1(th), ddr = radius_d2(th);
        const double denom = std::pow(r * r + dr * dr, 1.5);
        return (r * r + 2.0 * dr * dr - r * ddr) / denom;
    }

    // Arclength element |p'(theta)|.
    double speed(double th) const {
        const double r = radius(th), dr = radius_d1(th);
        return std::sqrt(r * r + dr * dr);
    }

    // Exact polar arclength by the trapezoid rule (periodic integrand, so
    // the rule is spectrally accurate for finite Fourier series).
    double perimeter(int nsamples = 2048) const {
        double sum = 0.0;
        const double dth = two_pi() / nsamples;
        for (int i = 0; i < nsamples; ++i) sum += speed(i * dth);
        return sum * dth;
    }

    // Enclosed area 1/2 int r^2 dtheta, in closed form.
    double area() const {
        double s = a0 * a0;
        for (std::size_t k = 0; k < a.size(); ++k)
            s += 0.5 * (a[k] * a[k] + b[k] * b[k]);
        return pi() * s;
    }

    double min_radius(int nsamples = 2048) const {
        double m = radius(0.0);
        const double dth = two_pi() / nsamples;
        for (int i = 1; i < nsamples; ++i) m = std::min(m, radius(i * dth));
        return m;
    }

    double max_radius(int nsamples = 2048) const {
        double m = radius(0.0);
        const double dth = two_pi() / nsamples;
        for (int i = 1; i < nsamples; ++i) m = std::max(m, radius(i * dth));
        return m;
    }

    std::vector<Vec2> to_polygon(int n) const {
        std::vector<Vec2> pts;
        pts.reserve(n);
        const double dth = two_pi() / n;
        for (int i = 0; i < n; ++i) pts.push_back(point(i * dth));
        return pts;
    }

    // Profile scaled by t about the center; the polar arclength scales
    // linearly with t.
    FourierShape scaled(double t) const {
        FourierShape s = *this;
        s.a0 *= t;
        for (auto& v : s.a) v *= t;
        for (auto& v : s.b) v *= t;
        return s;
    }

    // Radial profile of the reflection across the axis at angle phi through
    // the center: r_reflected(theta) = r(2 phi - theta).
    FourierShape reflected(double phi) const {
        FourierShape s = *this;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double c2 = std::cos(2.0 * (k + 1) * phi);
            const double s2 = std::sin(2.0 * (k + 1) * phi);
            s.a[k] = a[k] * c2 + b[k] * s2;
            s.b[k] = a[k] * s2 - b[k] * c2;
        }
        return s;
    }
};

struct SymmetryMetrics {
    double radial_deviation = 0.0;  // sup |r - a0| / a0
    double best_axis_angle = 0.0;   // axis minimizing the reflection misfit
    double axial_deviation = 0.0;   // that minimum over a0
};

namespace detail {

inline double reflection_misfit(const FourierShape& f, double phi, int nsamples) {
    const FourierShape g = f.reflected(phi);
    double worst = 0.0;
    const double dth = two_pi() / nsamples;
    for (int i = 0; i < nsamples; ++i) {
        const double th = i * dth;
        worst = std::max(worst, std::abs(f.radius(th) - g.radius(th)));
    }
    return worst;
}

}  // namespace detail

// Deviations from radial and axial symmetry of the profile. The best axis
// is found by a scan over candidate angles followed by golden-section
// refinement; reflection axes are only meaningful modulo pi.
inline SymmetryMetrics symmetry_metrics(const FourierShape& f, int nsamples = 1024,
                                        int axis_scan = 360) {
    SymmetryMetrics m;
    const double dth = two_pi() / nsamples;
    for (int i = 0; i < nsamples; ++i)
        m.radial_deviation =
            std::max(m.radial_deviation, std::abs(f.radius(i * dth) - f.a0));
    m.radial_deviation /= f.a0;

    double best_phi = 0.0, best = detail::reflection_misfit(f, 0.0, nsamples);
    for (int i = 1; i < axis_scan; ++i) {
        const double phi = pi() * i / axis_scan;
        const double v = detail::reflection_misfit(f, phi, nsamples);
        if (v < best) {
            best = v;
            best_phi = phi;
        }
    }
    // golden-section refinement around the scan winner
    double lo = best_phi - pi() / axis_scan, hi = best_phi + pi() / axis_scan;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = detail::reflection_misfit(f, x1, nsamples);
    double f2 = detail::reflection_misfit(f, x2, nsamples);
    for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = detail::reflection_misfit(f, x1, nsamples);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = detail::reflection_misfit(f, x2, nsamples);
        }
    }
    const double phi = 0.5 * (lo + hi);
    const double v = detail::reflection_misfit(f, phi, nsamples);
    if (v < best) {
        best = v;
        best_phi = phi;
    }
    m.best_axis_angle = std::fmod(best_phi + pi(), pi());
    m.axial_deviation = best / f.a0;
    return m;
}

}  // namespace spot
