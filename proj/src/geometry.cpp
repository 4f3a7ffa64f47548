#include "brauer/geometry.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "brauer/errors.hpp"

namespace brauer {

double point_segment_dist(const DPt& p, const DPt& a, const DPt& b) {
    double vx = b.x - a.x, vy = b.y - a.y;
    double wx = p.x - a.x, wy = p.y - a.y;
    double vv = vx * vx + vy * vy;
    double t = vv > 0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
    double dx = wx - t * vx, dy = wy - t * vy;
    return std::hypot(dx, dy);
}

double point_polygon_dist(const DPt& p, const std::vector<DPt>& poly) {
    const size_t n = poly.size();
    if (n == 0) throw UsageError("distance to an empty polygon");
    if (n == 1) return std::hypot(p.x - poly[0].x, p.y - poly[0].y);
    if (n >= 3 && polygon_contains(poly, p)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_dist(p, poly[i], poly[(i + 1) % n]));
    return best;
}

double hausdorff_polygons(const std::vector<DPt>& a, const std::vector<DPt>& b) {
    double worst = 0.0;
    for (const DPt& p : a) worst = std::max(worst, point_polygon_dist(p, b));
    for (const DPt& p : b) worst = std::max(worst, point_polygon_dist(p, a));
    return worst;
}

double polygon_support(const std::vector<DPt>& poly, double ux, double uy) {
    if (poly.empty()) throw UsageError("support of an empty polygon");
    double best = -std::numeric_limits<double>::infinity();
    for (const DPt& p : poly) best = std::max(best, p.x * ux + p.y * uy);
    return best;
}

std::vector<DPt> clip_convex(const std::vector<DPt>& subject, const std::vector<DPt>& clip) {
    if (clip.size() < 3) throw UsageError("clip polygon must have an interior");
    std::vector<DPt> cur = subject;
    for (size_t i = 0; i < clip.size() && !cur.empty(); ++i) {
        const DPt& a = clip[i];
        const DPt& b = clip[(i + 1) % clip.size()];
        std::vector<DPt> next;
        for (size_t j = 0; j < cur.size(); ++j) {
            const DPt& p = cur[j];
            const DPt& q = cur[(j + 1) % cur.size()];
            double sp = cross(a, b, p), sq = cross(a, b, q);
            if (sp >= 0) next.push_back(p);
            if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
                double t = sp / (sp - sq);
                next.push_back(DPt{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        cur = std::move(next);
    }
    return convex_hull(std::move(cur));
}

bool polygon_contains_tol(const std::vector<DPt>& poly, const DPt& p, double tol) {
    if (poly.empty()) return false;
    return point_polygon_dist(p, poly) <= tol;
}

Region make_region(std::vector<DPt> points, std::map<std::string, std::string> meta) {
    Region r;
    r.meta = std::move(meta);
    r.vertices = convex_hull(std::move(points));
    return r;
}

double hausdorff(const Region& a, const Region& b) {
    return hausdorff_polygons(a.vertices, b.vertices);
}

std::string Region::to_json() const {
    nlohmann::json j;
    j["kind"] = "region";
    j["meta"] = meta;
    auto verts = nlohmann::json::array();
    for (const DPt& p : vertices) verts.push_back({p.x, p.y});
    j["vertices"] = std::move(verts);
    if (gap) j["gap"] = *gap;
    return j.dump();
}

std::string Region::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "f,b\n";
    for (const DPt& p : vertices) out << p.x << ',' << p.y << '\n';
    return out.str();
}

Region Region::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad region JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("kind", "") != "region" || !j.contains("vertices"))
        throw UsageError("not a region document");
    Region r;
    nlohmann::json meta = j.value("meta", nlohmann::json::object());
    for (auto& [key, val] : meta.items())
        r.meta[key] = val.is_string() ? val.get<std::string>() : val.dump();
    for (auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2) throw UsageError("region vertex must be a pair");
        r.vertices.push_back(DPt{v[0].get<double>(), v[1].get<double>()});
    }
    if (j.contains("gap")) r.gap = j["gap"].get<double>();
    return r;
}

namespace {

// Maps (f, b) to SVG pixel coordinates; f in [-1.1, 1.1], b in [-0.1, 1.1].
void to_pixel(double f, double b, double& x, double& y) {
    x = (f + 1.1) / 2.2 * 800.0;
    y = 600.0 - (b + 0.1) / 1.2 * 600.0;
}

void append_poly(std::string& out, const std::vector<DPt>& pts, const char* style) {
    if (pts.empty()) return;
    out += "<polygon points=\"";
    char buf[64];
    for (const DPt& p : pts) {
        double x, y;
        to_pixel(p.x, p.y, x, y);
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x, y);
        out += buf;
    }
    out.pop_back();
    out += "\" style=\"";
    out += style;
    out += "\"/>\n";
}

} // namespace

std::string Region::to_svg() const {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    char buf[160];

    // axes
    double x0, y0, x1, y1;
    to_pixel(-1.1, 0, x0, y0);
    to_pixel(1.1, 0, x1, y1);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#bbb\"/>\n",
                  x0, y0, x1, y1);
    out += buf;
    to_pixel(0, -0.1, x0, y0);
    to_pixel(0, 1.1, x1, y1);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#bbb\"/>\n",
                  x0, y0, x1, y1);
    out += buf;

    // full state-space triangle for reference
    append_poly(out, {DPt{-1, 0}, DPt{1, 0}, DPt{1, 1}},
                "fill:none;stroke:#888;stroke-width:1;stroke-dasharray:6 3");

    // separable rectangle when the dimension is recorded
    auto it = meta.find("d");
    if (it != meta.end()) {
        int d = std::atoi(it->second.c_str());
        if (d >= 2)
            append_poly(out, {DPt{0, 0}, DPt{1, 0}, DPt{1, 1.0 / d}, DPt{0, 1.0 / d}},
                        "fill:none;stroke:#4a4;stroke-width:1;stroke-dasharray:2 3");
    }

    if (vertices.size() >= 3) {
        append_poly(out, vertices, "fill:#36c;fill-opacity:0.25;stroke:#36c;stroke-width:1.5");
    } else if (vertices.size() == 2) {
        to_pixel(vertices[0].x, vertices[0].y, x0, y0);
        to_pixel(vertices[1].x, vertices[1].y, x1, y1);
        std::snprintf(
            buf, sizeof buf,
            "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#36c\" stroke-width=\"1.5\"/>\n",
            x0, y0, x1, y1);
        out += buf;
    }
    for (const DPt& p : vertices) {
        to_pixel(p.x, p.y, x0, y0);
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"#c33\"/>\n",
                      x0, y0);
        out += buf;
    }

    std::string title;
    for (const auto& [k, v] : meta) {
        if (!title.empty()) title += "  ";
        title += k + "=" + v;
    }
    std::snprintf(buf, sizeof buf, "<text x=\"12\" y=\"20\" font-size=\"14\" fill=\"#333\">%s</text>\n",
                  title.substr(0, 100).c_str());
    out += buf;
    out += "</svg>\n";
    return out;
}

} // namespace brauer
