#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spot/bessel.hpp"

// Closed-form eigenvalues of disks, annuli and half-annuli through Bessel
// roots. These are the reference values the grid solver is checked against.

namespace spot {

enum class RootKind { j_zero, cross_product_zero };

struct BesselRootQuery {
    int order = 0;                    // 0 or 1
    RootKind kind = RootKind::j_zero;
    double r_inner = 0.0;             // cross-product queries only
    double r_outer = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

namespace detail {

inline double root_target(const BesselRootQuery& q, double omega) {
    if (q.kind == RootKind::j_zero) {
        return bessel_j(q.order, omega);
    }
    const double a = q.r_inner, b = q.r_outer;
    return bessel_j(q.order, omega * a) * bessel_y(q.order, omega * b)
         - bessel_j(q.order, omega * b) * bessel_y(q.order, omega * a);
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double flo) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((hi - lo) <= 1e-12 * mid) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0) == (fm < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// Isolates the smallest positive root by a geometric scan (ratio 1.05) and
// refines it by bisection to 1e-12 relative. Fills the bracket fields of
// the query with the isolating interval.
inline double find_smallest_root(BesselRootQuery& q) {
    if (q.kind == RootKind::cross_product_zero && !(q.r_inner < q.r_outer))
        throw std::invalid_argument("bessel root query: requires r_inner < r_outer");
    const double scale = q.kind == RootKind::cross_product_zero ? q.r_outer : 1.0;
    double omega = 1e-3 / scale;
    const double omega_max =
        q.kind == RootKind::cross_product_zero
            ? 50.0 / (q.r_outer - q.r_inner) + 50.0 / q.r_outer
            : 50.0;
    auto f = [&q](double w) { return detail::root_target(q, w); };
    double prev_w = omega, prev_f = f(omega);
    while (omega < omega_max) {
        omega *= 1.05;
        const double cur = f(omega);
        if (prev_f == 0.0) return prev_w;
        if ((prev_f < 0) != (cur < 0)) {
            q.bracket_lo = prev_w;
            q.bracket_hi = omega;
            return detail::bisect(f, prev_w, omega, prev_f);
        }
        prev_w = omega;
        prev_f = cur;
    }
    std::ostringstream msg;
    msg << "bessel root scan found no sign change in [" << 1e-3 / scale << ", "
        << omega_max << "] (order " << q.order << ", kind "
        << (q.kind == RootKind::j_zero ? "j_zero" : "cross_product") << ")";
    throw std::runtime_error(msg.str());
}

inline double j0_first_zero() {
    static const double root = [] {
        BesselRootQuery q{0, RootKind::j_zero, 0, 0, 0, 0};
        return find_smallest_root(q);
    }();
    return root;
}

// lambda1 of the disk B(R): (j_{0,1}/R)^2.
inline double disk_lambda1(double R) {
    if (!(R > 0)) throw std::invalid_argument("disk_lambda1: requires R > 0");
    const double j01 = j0_first_zero();
    return (j01 / R) * (j01 / R);
}

// lambda1 of the annulus B(r_out) \ closure(B(r_in)), Dirichlet on both
// circles: omega^2 with omega the smallest root of the order-0 cross product.
inline double annulus_lambda1(double r_in, double r_out) {
    if (!(0 < r_in && r_in < r_out))
        throw std::invalid_argument("annulus_lambda1: requires 0 < r_in < r_out");
    BesselRootQuery q{0, RootKind::cross_product_zero, r_in, r_out, 0, 0};
    const double w = find_smallest_root(q);
    return w * w;
}

// lambda1 of the half-annulus (Dirichlet on the two circles and the two
// radial cuts), which coincides with lambda2 of the full annulus: smallest
// root of the order-1 cross product.
inline double half_annulus_lambda1(double r_in, double r_out) {
    if (!(0 < r_in && r_in < r_out))
        throw std::invalid_argument("half_annulus_lambda1: requires 0 < r_in < r_out");
    BesselRootQuery q{1, RootKind::cross_product_zero, r_in, r_out, 0, 0};
    const double w = find_smallest_root(q);
    return w * w;
}

// Thickness h making the full-thickness half-ring cost the same perimeter
// budget as the concentric ring obstacle, with the inner radius normalized
// to 1. May be negative, meaning the half-ring is not admissible at this
// outer radius.
inline double ring_admissible_h(double r0) {
    if (!(r0 > 1)) throw std::invalid_argument("ring_admissible_h: requires r0 > 1");
    constexpr double pi = detail::kPi;
    return 0.5 * (r0 - 3.0) + (r0 - 1.0) / pi;
}

struct HpwResult {
    bool condition_met = false;
    double defect = 0.0;    // L0^2 - L1^2 - 4 pi area
    double lambda1 = 0.0;   // valid only when condition_met
};

// Checks the doubly-connected admissibility identity L0^2 - L1^2 = 4 pi A;
// when met, the concentric ring with those boundary lengths is the unique
// maximizer and its eigenvalue is returned.
inline HpwResult hpw_bound(double L0, double L1, double area,
                           double rel_tol = 1e-9) {
    if (!(L0 > L1 && L1 > 0))
        throw std::invalid_argument("hpw_bound: requires L0 > L1 > 0");
    constexpr double pi = detail::kPi;
    HpwResult res;
    res.defect = L0 * L0 - L1 * L1 - 4.0 * pi * area;
    if (std::abs(res.defect) <= rel_tol * L0 * L0) {
        res.condition_met = true;
        res.lambda1 = annulus_lambda1(L1 / (2.0 * pi), L0 / (2.0 * pi));
    }
    return res;
}

}  // namespace spot
