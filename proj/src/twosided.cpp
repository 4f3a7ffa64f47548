#include "brauer/twosided.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "brauer/errors.hpp"
#include "brauer/plane.hpp"

namespace brauer {

double TrigPoly::eval(double delta) const {
    const double s = std::sin(delta);
    return a0 + as * s + ac * std::cos(delta) + as2 * s * s + ad2 * std::sin(2 * delta);
}

namespace {

Generator point(int min_d, double f, double b) {
    Generator g;
    g.kind = GenKind::Point;
    g.min_d = min_d;
    g.point = DPt{f, b};
    return g;
}

Generator curve(int min_d, TrigPoly f, TrigPoly b) {
    Generator g;
    g.kind = GenKind::Curve;
    g.min_d = min_d;
    g.f = f;
    g.b = b;
    return g;
}

// Shared by (1,2) and (2,2): the multiplicity-two curve
// (1 - (3/2)sin^2, (sqrt(2(d+2))cos + sqrt(d-1)sin) / (6d)).
Generator two_copy_curve(int d) {
    return curve(2, TrigPoly{1, 0, 0, -1.5, 0},
                 TrigPoly{0, std::sqrt(d - 1.0) / (6 * d), std::sqrt(2.0 * (d + 2)) / (6 * d), 0, 0});
}

std::vector<Generator> all_generators(int n, int m, int d) {
    std::vector<Generator> gens;
    if (n == 1 && m == 2) {
        gens.push_back(point(2, 1, 0));
        gens.push_back(point(3, -1, 0));
        gens.push_back(two_copy_curve(d));
    } else if (n == 1 && m == 3) {
        gens.push_back(point(2, 1, 0));
        gens.push_back(point(2, 1, (d + 2.0) / (3.0 * d)));
        gens.push_back(point(2, -1.0 / 3, 0));
        gens.push_back(point(2, 0, (d - 1.0) / (3.0 * d)));
        gens.push_back(point(4, -1, 0));
        gens.push_back(curve(2, TrigPoly{1, 0, 0, -4.0 / 3, 0},
                             TrigPoly{(d + 4.0) / (6 * d), 0, 0, -4.0 / (6 * d),
                                      std::sqrt(d * (d + 4.0)) / (6 * d)}));
        gens.push_back(curve(3, TrigPoly{2.0 / 3, 0, 0, -4.0 / 3, 0},
                             TrigPoly{(3.0 * d + 6) / (12 * d), 0, 0, -(2.0 * d + 8) / (12 * d),
                                      std::sqrt(3.0 * (d + 2) * (d - 2)) / (12 * d)}));
    } else if (n == 2 && m == 2) {
        gens.push_back(point(2, 1, 0));
        gens.push_back(point(4, -1, 0));
        gens.push_back(two_copy_curve(d));
        gens.push_back(curve(3,
                             TrigPoly{-2.0 / (2 * d), 0, 0, 4.0 / (2 * d),
                                      std::sqrt(d * d - 4.0) / (2 * d)},
                             TrigPoly{(d * d - 4.0) / (4.0 * d * d), 0, 0,
                                      (8.0 - d * d) / (4.0 * d * d),
                                      2 * std::sqrt(d * d - 4.0) / (4.0 * d * d)}));
    } else {
        throw UnsupportedCase("no closed form for this extendibility case");
    }
    return gens;
}

} // namespace

std::vector<Generator> generators(int n, int m, int d) {
    require_dim(d);
    if (n > m) std::swap(n, m);
    if (n < 1) throw UnsupportedCase("site counts must be positive");
    std::vector<Generator> gens;
    for (Generator& g : all_generators(n, m, d))
        if (g.min_d <= d) gens.push_back(std::move(g));
    return gens;
}

Region region_twosided(int n, int m, int d, int resolution) {
    if (resolution < 64) throw OutOfRange("resolution must be at least 64");
    std::vector<DPt> pts;
    for (const Generator& g : generators(n, m, d)) {
        if (g.kind == GenKind::Point) {
            pts.push_back(g.point);
        } else {
            for (int k = 0; k < resolution; ++k) {
                const double delta = 2 * std::numbers::pi * k / resolution;
                pts.push_back(DPt{g.f.eval(delta), g.b.eval(delta)});
            }
        }
    }
    // The printed curves can leave the physical triangle (negative b at some
    // delta), so the hull is clipped back to it.
    auto hull = convex_hull(std::move(pts));
    hull = clip_convex(hull, brauer_triangle().vertices);
    if (n > m) std::swap(n, m);
    Region r;
    r.vertices = std::move(hull);
    r.meta["family"] = "twosided";
    r.meta["case"] = std::to_string(n) + "," + std::to_string(m);
    r.meta["d"] = std::to_string(d);
    r.meta["resolution"] = std::to_string(resolution);
    return r;
}

} // namespace brauer
