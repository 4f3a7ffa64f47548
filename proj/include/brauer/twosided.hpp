#pragma once

#include <vector>

#include "brauer/geometry.hpp"

namespace brauer {

// Trigonometric polynomial a0 + as*sin(delta) + ac*cos(delta)
//                             + as2*sin(delta)^2 + ad2*sin(2*delta).
struct TrigPoly {
    double a0 = 0, as = 0, ac = 0, as2 = 0, ad2 = 0;
    double eval(double delta) const;
};

enum class GenKind { Point, Curve };

// One boundary generator of a closed-form region: either a fixed point or a
// one-parameter curve (f(delta), b(delta)), present only for d >= min_d.
struct Generator {
    GenKind kind;
    int min_d;
    DPt point{0, 0}; // kind == Point
    TrigPoly f, b;   // kind == Curve
};

// Generators for the (n,m) two-sided-extendible region at dimension d,
// already filtered to those with min_d <= d. The pair is symmetric, so
// (n,m) is canonicalized to n <= m. Supported cases: (1,2), (1,3), (2,2).
std::vector<Generator> generators(int n, int m, int d);

// Convex hull of all point generators plus curve samples at
// delta = 2*pi*k/resolution, intersected with the state triangle.
Region region_twosided(int n, int m, int d, int resolution = 720);

} // namespace brauer
