#pragma once

#include <cstdint>

namespace lfpp {

/// Axis-aligned rectangle in physical (torus) coordinates.
struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double cx() const { return 0.5 * (x0 + x1); }
    double cy() const { return 0.5 * (y0 + y1); }
    bool contains(double x, double y) const {
        return x >= x0 && x <= x1 && y >= y0 && y <= y1;
    }
};

/// Inclusive vertex-index box of the measurement window.
struct IndexBox {
    int ix0 = 0, iy0 = 0, ix1 = -1, iy1 = -1;

    int width() const { return ix1 - ix0 + 1; }
    int height() const { return iy1 - iy0 + 1; }
    long long count() const { return 1LL * width() * height(); }
    bool contains(int ix, int iy) const {
        return ix >= ix0 && ix <= ix1 && iy >= iy0 && iy <= iy1;
    }
    bool on_edge(int ix, int iy) const {
        return ix == ix0 || ix == ix1 || iy == iy0 || iy == iy1;
    }
};

/// Square torus grid: n cells per side (power of two), physical side length,
/// and the measurement window. The window must keep a buffer of at least
/// side_length/4 from the fundamental-domain boundary on every side so that
/// no measured path or ball can feel the periodic wrap.
struct GridSpec {
    int n = 0;
    double side_length = 0.0;
    Rect window;

    double spacing() const { return side_length / n; }

    /// Throws std::invalid_argument on malformed specs.
    void validate() const;

    /// Vertex indices whose physical position lies inside the window.
    IndexBox window_box() const;

    /// Grid with the maximal admissible window [L/4, 3L/4]^2.
    static GridSpec with_centered_window(int n, double side_length);
};

}  // namespace lfpp
