#include <doctest.h>

#include <gmpxx.h>

#include "brauer/errors.hpp"
#include "brauer/geometry.hpp"

using namespace brauer;
using doctest::Approx;

TEST_SUITE("geometry") {

TEST_CASE("hull of a square with interior points") {
    auto hull = convex_hull<double>({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.25, 0.75}});
    REQUIRE(hull.size() == 4);
    CHECK(hull[0] == DPt{0, 0});
    CHECK(hull[1] == DPt{1, 0});
    CHECK(hull[2] == DPt{1, 1});
    CHECK(hull[3] == DPt{0, 1});
}

TEST_CASE("hull drops collinear and duplicate points") {
    auto hull = convex_hull<double>({{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, 0}, {0, 0}});
    REQUIRE(hull.size() == 3);
    CHECK(hull[0] == DPt{0, 0});
    CHECK(hull[1] == DPt{2, 0});
    CHECK(hull[2] == DPt{1, 1});
}

TEST_CASE("hull orientation is counterclockwise") {
    auto hull = convex_hull<double>({{-1, 0}, {1, 0}, {1, 1}, {0, 0.2}, {0.3, 0.4}});
    REQUIRE(hull.size() >= 3);
    double area2 = 0;
    for (size_t i = 0; i < hull.size(); ++i) {
        const DPt& p = hull[i];
        const DPt& q = hull[(i + 1) % hull.size()];
        area2 += p.x * q.y - q.x * p.y;
    }
    CHECK(area2 > 0);
}

TEST_CASE("degenerate hulls") {
    CHECK(convex_hull<double>({}).empty());
    CHECK(convex_hull<double>({{2, 3}, {2, 3}}).size() == 1);
    auto seg = convex_hull<double>({{0, 0}, {1, 1}, {0.5, 0.5}});
    REQUIRE(seg.size() == 2);
    CHECK(seg[0] == DPt{0, 0});
    CHECK(seg[1] == DPt{1, 1});
}

TEST_CASE("rational hull is exact") {
    using QPt = Pt<mpq_class>;
    std::vector<QPt> pts = {{mpq_class(0), mpq_class(0)},
                            {mpq_class(1), mpq_class(0)},
                            {mpq_class(1, 3), mpq_class(1, 9)},
                            {mpq_class(1), mpq_class(1)},
                            {mpq_class(1, 2), mpq_class(1, 2)}};
    auto hull = convex_hull(pts);
    REQUIRE(hull.size() == 3);
    CHECK(hull[0].x == 0);
    CHECK(hull[1].x == 1);
    CHECK(hull[1].y == 0);
    CHECK(hull[2].y == 1);
    // (1/3, 1/9) sits strictly inside, (1/2, 1/2) exactly on the hypotenuse
    CHECK(polygon_contains(hull, QPt{mpq_class(1, 3), mpq_class(1, 9)}));
    CHECK(polygon_contains(hull, QPt{mpq_class(1, 2), mpq_class(1, 2)}));
    CHECK_FALSE(polygon_contains(hull, QPt{mpq_class(1, 3), mpq_class(1, 2)}));
}

TEST_CASE("exact containment on degenerate polygons") {
    using QPt = Pt<mpq_class>;
    std::vector<QPt> seg = {{mpq_class(0), mpq_class(0)}, {mpq_class(2), mpq_class(1)}};
    CHECK(polygon_contains(seg, QPt{mpq_class(1), mpq_class(1, 2)}));
    CHECK_FALSE(polygon_contains(seg, QPt{mpq_class(1), mpq_class(1, 3)}));
    CHECK_FALSE(polygon_contains(seg, QPt{mpq_class(3), mpq_class(3, 2)}));
    std::vector<QPt> dot = {{mpq_class(1, 7), mpq_class(2, 7)}};
    CHECK(polygon_contains(dot, QPt{mpq_class(1, 7), mpq_class(2, 7)}));
    CHECK_FALSE(polygon_contains(dot, QPt{mpq_class(1, 7), mpq_class(3, 7)}));
}

TEST_CASE("point to segment and polygon distances") {
    CHECK(point_segment_dist({0, 1}, {-1, 0}, {1, 0}) == Approx(1));
    CHECK(point_segment_dist({2, 0}, {-1, 0}, {1, 0}) == Approx(1));
    CHECK(point_segment_dist({0, 0}, {0, 0}, {0, 0}) == Approx(0));
    std::vector<DPt> tri = {{0, 0}, {2, 0}, {0, 2}};
    CHECK(point_polygon_dist({0.5, 0.5}, tri) == Approx(0));
    CHECK(point_polygon_dist({-1, 0}, tri) == Approx(1));
    CHECK(point_polygon_dist({2, 2}, tri) == Approx(std::sqrt(2)));
}

TEST_CASE("hausdorff distances") {
    std::vector<DPt> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::vector<DPt> shifted = {{0.5, 0}, {1.5, 0}, {1.5, 1}, {0.5, 1}};
    CHECK(hausdorff_polygons(sq, sq) == Approx(0));
    CHECK(hausdorff_polygons(sq, shifted) == Approx(0.5));
    std::vector<DPt> inner = {{0.25, 0.25}, {0.75, 0.25}, {0.75, 0.75}, {0.25, 0.75}};
    CHECK(hausdorff_polygons(sq, inner) == Approx(0.25 * std::sqrt(2)));
}

TEST_CASE("support function") {
    std::vector<DPt> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(polygon_support(sq, 1, 0) == Approx(1));
    CHECK(polygon_support(sq, -1, 0) == Approx(0));
    double s = std::sqrt(0.5);
    CHECK(polygon_support(sq, s, s) == Approx(std::sqrt(2)));
}

TEST_CASE("clipping a square with a triangle") {
    std::vector<DPt> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::vector<DPt> tri = {{0, 0}, {1, 0}, {0, 1}};
    auto out = clip_convex(sq, tri);
    REQUIRE(out.size() == 3);
    CHECK(polygon_contains(out, DPt{0, 0}));
    CHECK(polygon_contains(out, DPt{0.5, 0.5}));
    CHECK_FALSE(polygon_contains(out, DPt{0.6, 0.6}));

    // clipping against a disjoint region empties the polygon
    std::vector<DPt> far = {{5, 5}, {6, 5}, {5, 6}};
    CHECK(clip_convex(sq, far).empty());

    // clipping against a superset is the identity
    std::vector<DPt> big = {{-1, -1}, {2, -1}, {2, 2}, {-1, 2}};
    CHECK(clip_convex(sq, big) == sq);
}

TEST_CASE("region json round trip") {
    Region r = make_region({{0, 0}, {1, 0}, {0.5, 0.8}}, {{"family", "test"}, {"d", "3"}});
    r.gap = 1e-7;
    std::string text = r.to_json();
    CHECK(text.find("\"kind\":\"region\"") != std::string::npos);
    Region back = Region::from_json(text);
    CHECK(back.meta == r.meta);
    CHECK(back.vertices == r.vertices);
    REQUIRE(back.gap.has_value());
    CHECK(*back.gap == Approx(1e-7));

    CHECK_THROWS_AS(Region::from_json("{\"kind\":\"other\"}"), UsageError);
    CHECK_THROWS_AS(Region::from_json("not json"), UsageError);
}

TEST_CASE("csv and svg output") {
    Region r = make_region({{-1, 0}, {1, 0}, {1, 1}}, {{"family", "triangle"}, {"d", "4"}});
    std::string csv = r.to_csv();
    CHECK(csv.substr(0, 4) == "f,b\n");
    CHECK(csv.find("-1,0\n") != std::string::npos);
    std::string svg = r.to_svg();
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("region containment tolerance") {
    Region r = make_region({{-1, 0}, {1, 0}, {1, 1}}, {});
    CHECK(r.contains(0, 0.1, 1e-12));
    CHECK(r.contains(-1, 0, 1e-12));
    CHECK(r.contains(-1.0 - 1e-9, 0, 1e-6));
    CHECK_FALSE(r.contains(-1.01, 0, 1e-6));
    CHECK_FALSE(r.contains(0, 0.6, 1e-6));
}

} // TEST_SUITE
