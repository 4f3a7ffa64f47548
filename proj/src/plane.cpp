#include "brauer/plane.hpp"

#include <string>

#include "brauer/errors.hpp"

namespace brauer {

void require_dim(int d) {
    if (d < 2) throw OutOfRange("d must be at least 2");
}

Region brauer_triangle() {
    return make_region({DPt{-1, 0}, DPt{1, 0}, DPt{1, 1}},
                       {{"family", "triangle"}});
}

Region separable_rectangle(int d) {
    require_dim(d);
    double top = 1.0 / d;
    return make_region({DPt{0, 0}, DPt{1, 0}, DPt{1, top}, DPt{0, top}},
                       {{"family", "separable"}, {"d", std::to_string(d)}});
}

Region werner_segment(int d) {
    require_dim(d);
    double denom = static_cast<double>(d) * (d + 1);
    return make_region({DPt{-1, 0}, DPt{1, 2.0 / denom}},
                       {{"family", "werner"}, {"d", std::to_string(d)}});
}

Region isotropic_segment(int d) {
    require_dim(d);
    return make_region({DPt{1.0 / (d + 1), 0}, DPt{1, 1}},
                       {{"family", "isotropic"}, {"d", std::to_string(d)}});
}

BlockWeights weights_from_fb(double f, double b) {
    double mu1 = (1 - f) / 2;
    return BlockWeights{b, mu1, 1 - b - mu1};
}

std::pair<double, double> fb_from_weights(const BlockWeights& w) {
    return {1 - 2 * w.mu1, w.mu0};
}

bool in_triangle(double f, double b, double tol) {
    return brauer_triangle().contains(f, b, tol);
}

bool in_separable_rectangle(double f, double b, int d, double tol) {
    return separable_rectangle(d).contains(f, b, tol);
}

bool on_werner_segment(double f, double b, int d, double tol) {
    return werner_segment(d).contains(f, b, tol);
}

bool on_isotropic_segment(double f, double b, int d, double tol) {
    return isotropic_segment(d).contains(f, b, tol);
}

} // namespace brauer
