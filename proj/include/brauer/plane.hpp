#pragma once

#include <utility>

#include "brauer/geometry.hpp"

namespace brauer {

// The (f, b) plane: f is the expectation of the flip operator, b of the
// rank-one projector onto the maximally entangled vector.  Every two-site
// state of any dimension lands in the triangle below.

// Triangle with corners (-1,0), (1,0), (1,1); dimension-independent.
// Throws OutOfRange unless d >= 2.
void require_dim(int d);

Region brauer_triangle();

// Product/separable square [0,1] x [0,1/d].
Region separable_rectangle(int d);

// Mixtures of the normalized symmetric and antisymmetric projectors:
// the segment b = (f+1)/(d(d+1)), f in [-1,1].
Region werner_segment(int d);

// Mixtures of the maximally entangled projector with its complement:
// the segment f = (d b + 1)/(d+1), b in [0,1].
Region isotropic_segment(int d);

// Spectral weights on the three invariant blocks of a two-site state:
// mu0 on the maximally entangled projector, mu1 on the antisymmetric
// block, mu2 on the traceless symmetric block.  f = 1 - 2 mu1, b = mu0.
struct BlockWeights {
    double mu0, mu1, mu2;
};

BlockWeights weights_from_fb(double f, double b);
std::pair<double, double> fb_from_weights(const BlockWeights& w);

bool in_triangle(double f, double b, double tol);
bool in_separable_rectangle(double f, double b, int d, double tol);
bool on_werner_segment(double f, double b, int d, double tol);
bool on_isotropic_segment(double f, double b, int d, double tol);

} // namespace brauer
