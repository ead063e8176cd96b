#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spot/vec2.hpp"

namespace spot {

// Uniform-grid sampling of a scalar function over a bounding box. Node
// (i, j) sits at origin + (i*h, j*h); values are stored row-major in i.
struct ScalarField {
    Vec2 origin{0.0, 0.0};
    double h = 1.0;
    int nx = 0;
    int ny = 0;
    std::vector<double> values;

    ScalarField() = default;
    ScalarField(Vec2 origin_, double h_, int nx_, int ny_)
        : origin(origin_), h(h_), nx(nx_), ny(ny_) {
        if (!(h > 0)) throw std::invalid_argument("ScalarField: spacing must be positive");
        if (nx < 2 || ny < 2)
            throw std::invalid_argument("ScalarField: grid dimensions must be >= 2");
        values.assign(static_cast<std::size_t>(nx) * ny, 0.0);
    }

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }

    Vec2 node(int i, int j) const { return {origin.x + i * h, origin.y + j * h}; }

    bool in_grid(int i, int j) const { return i >= 0 && i < nx && j >= 0 && j < ny; }

    // Bilinear interpolation; p must lie inside the grid box.
    double sample(Vec2 p) const {
        const double fx = (p.x - origin.x) / h;
        const double fy = (p.y - origin.y) / h;
        int i = static_cast<int>(std::floor(fx));
        int j = static_cast<int>(std::floor(fy));
        i = std::min(std::max(i, 0), nx - 2);
        j = std::min(std::max(j, 0), ny - 2);
        const double tx = fx - i, ty = fy - j;
        if (tx < -1e-9 || tx > 1.0 + 1e-9 || ty < -1e-9 || ty > 1.0 + 1e-9)
            throw std::out_of_range("ScalarField::sample: point outside grid");
        return (1 - tx) * (1 - ty) * at(i, j) + tx * (1 - ty) * at(i + 1, j) +
               (1 - tx) * ty * at(i, j + 1) + tx * ty * at(i + 1, j + 1);
    }

    BBox box() const {
        return {origin, {origin.x + (nx - 1) * h, origin.y + (ny - 1) * h}};
    }
};

// Grid covering `box` at spacing h (box corners rounded outward to nodes).
inline ScalarField make_field_over(BBox box, double h) {
    if (!(h > 0)) throw std::invalid_argument("make_field_over: spacing must be positive");
    const int nx = static_cast<int>(std::ceil(box.width() / h)) + 1;
    const int ny = static_cast<int>(std::ceil(box.height() / h)) + 1;
    return ScalarField(box.lo, h, std::max(nx, 2), std::max(ny, 2));
}

}  // namespace spot
