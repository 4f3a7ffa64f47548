#include <doctest.h>

#include <cmath>

#include "brauer/errors.hpp"
#include "brauer/plane.hpp"
#include "brauer/twosided.hpp"

using namespace brauer;
using doctest::Approx;

namespace {

bool has_vertex(const Region& r, double f, double b, double tol = 1e-9) {
    for (const DPt& v : r.vertices)
        if (std::abs(v.x - f) < tol && std::abs(v.y - b) < tol) return true;
    return false;
}

} // namespace

TEST_SUITE("twosided") {

TEST_CASE("generator inventory respects the dimension gates") {
    CHECK(generators(1, 2, 2).size() == 2); // (1,0) and the curve
    CHECK(generators(1, 2, 3).size() == 3); // (-1,0) joins at d=3
    CHECK(generators(1, 3, 2).size() == 5); // four points and one curve
    CHECK(generators(1, 3, 3).size() == 6); // second curve joins at d=3
    CHECK(generators(1, 3, 4).size() == 7); // (-1,0) joins at d=4
    CHECK(generators(2, 2, 2).size() == 2);
    CHECK(generators(2, 2, 3).size() == 3); // second curve at d=3
    CHECK(generators(2, 2, 4).size() == 4); // (-1,0) at d=4
    // the pair is symmetric
    CHECK(generators(2, 1, 3).size() == generators(1, 2, 3).size());
    CHECK(generators(3, 1, 4).size() == generators(1, 3, 4).size());
}

TEST_CASE("unsupported cases and bad arguments are rejected") {
    CHECK_THROWS_AS(generators(1, 4, 5), UnsupportedCase);
    CHECK_THROWS_AS(generators(2, 3, 5), UnsupportedCase);
    CHECK_THROWS_AS(generators(3, 3, 5), UnsupportedCase);
    CHECK_THROWS_AS(generators(0, 2, 5), UnsupportedCase);
    CHECK_THROWS_AS(generators(1, 2, 1), OutOfRange);
    CHECK_THROWS_AS(region_twosided(1, 2, 3, 32), OutOfRange);
}

TEST_CASE("curve spot values") {
    // two-copy curve at d=3: delta=0 gives (1, sqrt(10)/18), pi/2 gives (-1/2, sqrt(2)/18)
    for (const Generator& g : generators(1, 2, 3)) {
        if (g.kind != GenKind::Curve) continue;
        CHECK(g.f.eval(0) == Approx(1));
        CHECK(g.b.eval(0) == Approx(std::sqrt(10.0) / 18));
        CHECK(g.f.eval(std::acos(0.0)) == Approx(-0.5)); // delta = pi/2
        CHECK(g.b.eval(std::acos(0.0)) == Approx(std::sqrt(2.0) / 18));
    }
    // (2,2) second curve at d=3, delta=0: (-1/3, 5/36)
    bool seen = false;
    for (const Generator& g : generators(2, 2, 3))
        if (g.kind == GenKind::Curve && g.min_d == 3) {
            CHECK(g.f.eval(0) == Approx(-1.0 / 3));
            CHECK(g.b.eval(0) == Approx(5.0 / 36));
            seen = true;
        }
    CHECK(seen);
}

TEST_CASE("named points appear as hull vertices") {
    for (int d = 2; d <= 6; ++d) {
        Region r12 = region_twosided(1, 2, d);
        CHECK(has_vertex(r12, 1, 0));
        CHECK(has_vertex(r12, -1, 0) == (d >= 3));
        CHECK(has_vertex(r12, 1, std::sqrt(2.0 * (d + 2)) / (6 * d)));

        Region r13 = region_twosided(1, 3, d);
        CHECK(has_vertex(r13, 1, 0));
        CHECK(has_vertex(r13, 1, (d + 2.0) / (3.0 * d)));
        CHECK(has_vertex(r13, -1, 0) == (d >= 4));
        CHECK(r13.contains(-1.0 / 3, 0, 1e-9));
        CHECK(r13.contains(0, (d - 1.0) / (3.0 * d), 1e-9));

        Region r22 = region_twosided(2, 2, d);
        CHECK(has_vertex(r22, 1, 0));
        CHECK(has_vertex(r22, -1, 0) == (d >= 4));
    }
}

TEST_CASE("regions live inside the triangle") {
    for (int d = 2; d <= 6; ++d)
        for (auto [n, m] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
            Region r = region_twosided(n, m, d);
            REQUIRE(r.vertices.size() >= 3);
            for (const DPt& v : r.vertices) {
                CHECK(in_triangle(v.x, v.y, 1e-9));
                CHECK(v.y >= -1e-12); // clipping removed the negative-b excursions
            }
        }
}

TEST_CASE("separable states are covered by the four-site closed form") {
    // The (1,3) generator list is complete enough to cover the separable
    // rectangle; its wide curve passes exactly through the (0, 1/d) corner.
    for (int d = 2; d <= 5; ++d) {
        Region sep = separable_rectangle(d);
        Region r = region_twosided(1, 3, d);
        for (const DPt& v : sep.vertices)
            CHECK(polygon_contains_tol(r.vertices, v, 1e-9));
    }
}

TEST_CASE("two-copy closed form is a known partial description") {
    // The printed multiplicity-two curve tops out at b = sqrt(2(d+2))/(6d) on
    // the f = 1 edge, below the separable ceiling b = 1/d. The hull of the
    // printed generators therefore misses separable states; the numerical
    // range is authoritative for these cases. If this check ever flips, the
    // generator tables changed and the region comparisons must be revisited.
    for (int d : {2, 3, 4}) {
        CHECK(std::sqrt(2.0 * (d + 2)) / (6 * d) < 1.0 / d);
        CHECK(!region_twosided(1, 2, d).contains(0.5, 1.0 / d, 1e-9));
        CHECK(!region_twosided(2, 2, d).contains(0.5, 1.0 / d, 1e-9));
    }
}

TEST_CASE("the two two-copy cases coincide at d = 2 and differ at d = 3") {
    Region a2 = region_twosided(1, 2, 2), b2 = region_twosided(2, 2, 2);
    CHECK(hausdorff(a2, b2) <= 1e-9);
    Region a3 = region_twosided(1, 2, 3), b3 = region_twosided(2, 2, 3);
    CHECK(hausdorff(a3, b3) > 1e-3);
    // the d=3 extra curve is what separates them
    CHECK(b3.contains(-1.0 / 3, 5.0 / 36, 1e-9));
    CHECK(!a3.contains(-1.0 / 3, 5.0 / 36, 1e-6));
}

TEST_CASE("region construction is deterministic and labeled") {
    Region a = region_twosided(1, 3, 4, 256);
    Region b = region_twosided(1, 3, 4, 256);
    CHECK(a.vertices == b.vertices);
    CHECK(a.meta.at("family") == "twosided");
    CHECK(a.meta.at("case") == "1,3");
    CHECK(a.meta.at("d") == "4");
    CHECK(a.meta.at("resolution") == "256");
    // canonical order for a swapped pair
    CHECK(region_twosided(3, 1, 4, 256).meta.at("case") == "1,3");
    CHECK(region_twosided(3, 1, 4, 256).vertices == a.vertices);
}

TEST_CASE("finer sampling only refines the hull") {
    for (auto [n, m] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
        Region coarse = region_twosided(n, m, 3, 128);
        Region fine = region_twosided(n, m, 3, 1024);
        for (const DPt& v : coarse.vertices)
            CHECK(polygon_contains_tol(fine.vertices, v, 1e-9));
        CHECK(hausdorff(coarse, fine) < 1e-3);
    }
}

} // TEST_SUITE
