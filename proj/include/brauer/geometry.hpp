#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

template <typename T>
struct Pt {
    T x{}, y{};
};

template <typename T>
bool operator==(const Pt<T>& a, const Pt<T>& b) {
    return a.x == b.x && a.y == b.y;
}

template <typename T>
bool operator<(const Pt<T>& a, const Pt<T>& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

using DPt = Pt<double>;

// Twice the signed area of triangle (a, b, c); positive for a left turn.
template <typename T>
T cross(const Pt<T>& a, const Pt<T>& b, const Pt<T>& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Monotone-chain convex hull.  Returns the vertices in counterclockwise
// order starting at the lexicographically smallest point; collinear points
// are dropped.  Degenerate inputs yield fewer than three vertices.
template <typename T>
std::vector<Pt<T>> convex_hull(std::vector<Pt<T>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Pt<T>> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= T(0)) --k;
        hull[k++] = pts[i];
    }
    for (size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper chain
        while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i]) <= T(0)) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

// Exact containment in a counterclockwise convex polygon; boundary points
// count as inside.  Handles degenerate polygons (segments and points).
template <typename T>
bool polygon_contains(const std::vector<Pt<T>>& poly, const Pt<T>& p) {
    const size_t n = poly.size();
    if (n == 0) return false;
    if (n == 1) return poly[0] == p;
    if (n == 2) {
        if (cross(poly[0], poly[1], p) != T(0)) return false;
        // on the line: box test
        auto [lo, hi] = std::minmax(poly[0], poly[1]);
        return !(p < lo) && !(hi < p);
    }
    for (size_t i = 0; i < n; ++i)
        if (cross(poly[i], poly[(i + 1) % n], p) < T(0)) return false;
    return true;
}

double point_segment_dist(const DPt& p, const DPt& a, const DPt& b);

// Distance from a point to a filled convex polygon (zero when inside).
double point_polygon_dist(const DPt& p, const std::vector<DPt>& poly);

// Hausdorff distance between two filled convex polygons.
double hausdorff_polygons(const std::vector<DPt>& a, const std::vector<DPt>& b);

// Support function h(u) = max_{v in poly} <v, u> for u = (ux, uy).
double polygon_support(const std::vector<DPt>& poly, double ux, double uy);

// Intersection of a subject polygon with a convex clip polygon
// (Sutherland-Hodgman, rehulled to canonical form).
std::vector<DPt> clip_convex(const std::vector<DPt>& subject, const std::vector<DPt>& clip);

// Containment with tolerance: p may stick out of each edge by at most tol.
bool polygon_contains_tol(const std::vector<DPt>& poly, const DPt& p, double tol);

// A convex region of the (f, b) plane with provenance notes.
struct Region {
    std::map<std::string, std::string> meta;
    std::vector<DPt> vertices;  // counterclockwise convex polygon
    std::optional<double> gap;  // outer/inner approximation width when known

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_svg() const;
    static Region from_json(const std::string& text);

    bool contains(double f, double b, double tol) const {
        return polygon_contains_tol(vertices, DPt{f, b}, tol);
    }
};

Region make_region(std::vector<DPt> points, std::map<std::string, std::string> meta);

double hausdorff(const Region& a, const Region& b);

} // namespace brauer
