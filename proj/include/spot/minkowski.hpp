#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spot/distance.hpp"
#include "spot/field.hpp"
#include "spot/geom.hpp"

// Outer Minkowski content through the tubular-neighborhood quotient
//   g(eps) = area(K^eps \ K)/eps - pi*eps,
// maximized over a geometric schedule of eps values. The quotient is
// non-increasing in eps, so the supremum is approached from the small-eps
// end; the floor eps >= 2h keeps the dilation resolved by the grid.

namespace spot {

struct MinkowskiSample {
    double eps = 0.0;
    double area = 0.0;      // area of {0 < d <= eps}
    double quotient = 0.0;  // g(eps)
};

struct MinkowskiEstimate {
    double content = 0.0;
    std::vector<MinkowskiSample> eps_samples;
    double grid_h = 0.0;
};

namespace detail {

// Area fraction of one grid cell where the bilinear field is <= t, from the
// polygon cut out by linear interpolation along the cell edges.
inline double cell_sublevel_fraction(double v00, double v10, double v11, double v01,
                                     double t) {
    const double v[4] = {v00, v10, v11, v01};
    const double cx[4] = {0, 1, 1, 0};
    const double cy[4] = {0, 0, 1, 1};
    double px[8], py[8];
    int m = 0;
    for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) & 3;
        if (v[i] <= t) {
            px[m] = cx[i];
            py[m] = cy[i];
            ++m;
        }
        if ((v[i] <= t) != (v[j] <= t)) {
            const double s = (t - v[i]) / (v[j] - v[i]);
            px[m] = cx[i] + s * (cx[j] - cx[i]);
            py[m] = cy[i] + s * (cy[j] - cy[i]);
            ++m;
        }
    }
    if (m < 3) return 0.0;
    double area2 = 0.0;
    for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        area2 += px[i] * py[j] - px[j] * py[i];
    }
    return 0.5 * std::abs(area2);
}

inline double sublevel_area(const ScalarField& f, double t) {
    double cells = 0.0;
    for (int j = 0; j + 1 < f.ny; ++j)
        for (int i = 0; i + 1 < f.nx; ++i) {
            const double v00 = f.at(i, j), v10 = f.at(i + 1, j);
            const double v11 = f.at(i + 1, j + 1), v01 = f.at(i, j + 1);
            if (v00 <= t && v10 <= t && v11 <= t && v01 <= t) {
                cells += 1.0;
            } else if (v00 <= t || v10 <= t || v11 <= t || v01 <= t) {
                cells += cell_sublevel_fraction(v00, v10, v11, v01, t);
            }
        }
    return cells * f.h * f.h;
}

}  // namespace detail

// Exact area of the obstacle point set: shoelace area of the region loop
// (tentacles have zero area), 0 for chains.
inline double obstacle_area(const Obstacle& o) { return o.area(); }

// Lebesgue measure of {0 < d(., K) <= eps} from the sampled distance field,
// with marching-squares fractional cells at the outer rim.
inline double dilation_area(const ScalarField& field, const Obstacle& obstacle,
                            double eps) {
    if (eps < 2.0 * field.h) throw std::invalid_argument("eps under-resolved");
    const BBox ob = obstacle.bounds();
    const BBox fb = field.box();
    if (ob.lo.x - eps < fb.lo.x - 1e-12 || ob.lo.y - eps < fb.lo.y - 1e-12 ||
        ob.hi.x + eps > fb.hi.x + 1e-12 || ob.hi.y + eps > fb.hi.y + 1e-12)
        throw std::invalid_argument("dilation_area: field box does not cover the dilation");
    return detail::sublevel_area(field, eps) - obstacle_area(obstacle);
}

// Geometric schedule eps0, eps0*ratio, ... down to (and clamped at) floor.
inline std::vector<double> geometric_eps_schedule(double eps0, double floor_eps,
                                                  double ratio = 0.5) {
    if (!(eps0 > 0 && floor_eps > 0 && ratio > 0 && ratio < 1))
        throw std::invalid_argument("geometric_eps_schedule: bad parameters");
    std::vector<double> eps;
    for (double e = eps0; e > floor_eps; e *= ratio) eps.push_back(e);
    eps.push_back(floor_eps);
    if (eps.size() >= 2 && eps[eps.size() - 2] / floor_eps < 1.0 + 1e-9)
        eps.erase(eps.end() - 2);
    return eps;
}

// Sup-characterization estimate of the outer Minkowski content. The default
// schedule starts at diameter/4 and halves down to the floor 2h.
inline MinkowskiEstimate outer_minkowski_content(const Obstacle& obstacle, double h,
                                                 std::vector<double> eps_schedule = {}) {
    if (obstacle.empty()) throw std::invalid_argument("degenerate obstacle");
    if (eps_schedule.empty()) {
        const double eps0 = std::max(obstacle.diameter() / 4.0, 4.0 * h);
        eps_schedule = geometric_eps_schedule(eps0, 2.0 * h);
    }
    for (double e : eps_schedule)
        if (e < 2.0 * h) throw std::invalid_argument("eps under-resolved");

    const double eps_max = *std::max_element(eps_schedule.begin(), eps_schedule.end());
    BBox box = obstacle.bounds();
    box.pad(eps_max + 3.0 * h);
    const ScalarField field = distance_field(obstacle, box, h);

    MinkowskiEstimate est;
    est.grid_h = h;
    for (double eps : eps_schedule) {
        MinkowskiSample s;
        s.eps = eps;
        s.area = dilation_area(field, obstacle, eps);
        s.quotient = s.area / eps - pi() * eps;
        est.eps_samples.push_back(s);
        est.content = std::max(est.content, s.quotient);
    }
    return est;
}

}  // namespace spot
