#include <doctest.h>

#include "brauer/plane.hpp"

using namespace brauer;
using doctest::Approx;

TEST_SUITE("plane") {

TEST_CASE("triangle corners") {
    Region t = brauer_triangle();
    REQUIRE(t.vertices.size() == 3);
    CHECK(t.vertices[0] == DPt{-1, 0});
    CHECK(t.vertices[1] == DPt{1, 0});
    CHECK(t.vertices[2] == DPt{1, 1});
    CHECK(in_triangle(0, 0.2, 0));
    CHECK(in_triangle(1, 1, 1e-12));
    CHECK_FALSE(in_triangle(-0.5, 0.5, 1e-6));
    CHECK_FALSE(in_triangle(0, -0.1, 1e-6));
}

TEST_CASE("separable rectangle") {
    Region r = separable_rectangle(3);
    REQUIRE(r.vertices.size() == 4);
    CHECK(in_separable_rectangle(0.5, 1.0 / 3, 3, 1e-12));
    CHECK_FALSE(in_separable_rectangle(0.5, 1.0 / 3 + 1e-3, 3, 1e-6));
    CHECK_FALSE(in_separable_rectangle(-0.1, 0.1, 3, 1e-6));
}

TEST_CASE("werner segment endpoints") {
    for (int d = 2; d <= 6; ++d) {
        Region w = werner_segment(d);
        REQUIRE(w.vertices.size() == 2);
        CHECK(w.vertices[0].x == Approx(-1));
        CHECK(w.vertices[0].y == Approx(0));
        CHECK(w.vertices[1].x == Approx(1));
        CHECK(w.vertices[1].y == Approx(2.0 / (d * (d + 1))));
    }
    // d = 3 right endpoint hits b = 1/6
    CHECK(werner_segment(3).vertices[1].y == Approx(1.0 / 6));
}

TEST_CASE("isotropic segment endpoints") {
    for (int d = 2; d <= 6; ++d) {
        Region iso = isotropic_segment(d);
        REQUIRE(iso.vertices.size() == 2);
        CHECK(iso.vertices[0].x == Approx(1.0 / (d + 1)));
        CHECK(iso.vertices[0].y == Approx(0));
        CHECK(iso.vertices[1].x == Approx(1));
        CHECK(iso.vertices[1].y == Approx(1));
    }
    CHECK(isotropic_segment(3).vertices[0].x == Approx(0.25));
}

TEST_CASE("both special segments pass through the maximally mixed point") {
    for (int d = 2; d <= 8; ++d) {
        double f = 1.0 / d, b = 1.0 / (d * d);
        CHECK(on_werner_segment(f, b, d, 1e-12));
        CHECK(on_isotropic_segment(f, b, d, 1e-12));
    }
}

TEST_CASE("segments lie inside the triangle") {
    for (int d = 2; d <= 6; ++d) {
        for (const DPt& p : werner_segment(d).vertices) CHECK(in_triangle(p.x, p.y, 1e-12));
        for (const DPt& p : isotropic_segment(d).vertices) CHECK(in_triangle(p.x, p.y, 1e-12));
    }
}

TEST_CASE("weights round trip") {
    auto w = weights_from_fb(0.4, 0.2);
    CHECK(w.mu1 == Approx(0.3));
    CHECK(w.mu0 == Approx(0.2));
    CHECK(w.mu0 + w.mu1 + w.mu2 == Approx(1));
    auto [f, b] = fb_from_weights(w);
    CHECK(f == Approx(0.4));
    CHECK(b == Approx(0.2));

    // triangle corners in weights
    auto corner = weights_from_fb(-1, 0);
    CHECK(corner.mu1 == Approx(1));
    CHECK(corner.mu2 == Approx(0));
    corner = weights_from_fb(1, 1);
    CHECK(corner.mu0 == Approx(1));
    CHECK(corner.mu1 == Approx(0));
    CHECK(corner.mu2 == Approx(0));
}

} // TEST_SUITE
