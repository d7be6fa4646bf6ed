#include "lfpp/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lfpp {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

void GridSpec::validate() const {
    if (!is_pow2(n) || n < 8) {
        throw std::invalid_argument("GridSpec: n must be a power of two >= 8, got " +
                                    std::to_string(n));
    }
    if (!(side_length > 0.0)) {
        throw std::invalid_argument("GridSpec: side_length must be positive");
    }
    if (!(window.x0 < window.x1) || !(window.y0 < window.y1)) {
        throw std::invalid_argument("GridSpec: window is empty");
    }
    const double buf = side_length / 4.0;
    const double tol = 1e-12 * side_length;
    if (window.x0 < buf - tol || window.y0 < buf - tol ||
        window.x1 > side_length - buf + tol || window.y1 > side_length - buf + tol) {
        throw std::invalid_argument(
            "GridSpec: window must be inset >= side_length/4 from the fundamental domain "
            "boundary");
    }
}

IndexBox GridSpec::window_box() const {
    const double a = spacing();
    const double guard = 1e-9;
    IndexBox b;
    b.ix0 = static_cast<int>(std::ceil(window.x0 / a - guard));
    b.iy0 = static_cast<int>(std::ceil(window.y0 / a - guard));
    b.ix1 = static_cast<int>(std::floor(window.x1 / a + guard));
    b.iy1 = static_cast<int>(std::floor(window.y1 / a + guard));
    if (b.width() < 2 || b.height() < 2) {
        throw std::invalid_argument("GridSpec: window resolves to fewer than 2x2 vertices");
    }
    return b;
}

GridSpec GridSpec::with_centered_window(int n, double side_length) {
    GridSpec g;
    g.n = n;
    g.side_length = side_length;
    g.window = Rect{side_length / 4.0, side_length / 4.0, 3.0 * side_length / 4.0,
                    3.0 * side_length / 4.0};
    g.validate();
    return g;
}

}  // namespace lfpp
