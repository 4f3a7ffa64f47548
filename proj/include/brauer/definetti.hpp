#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "brauer/geometry.hpp"
#include "brauer/partition.hpp"

namespace brauer {

using QPt = Pt<mpq_class>;

// Flip expectation of the two-site marginal of the symmetrized n-site state
// supported on the unitary-group sector lam (a partition of n of depth <= d).
// Exact rational; needs n >= 2.
mpq_class f_scalar(const Partition& lam, int n, int d);

// Expectation of the maximally entangled projector on the same marginal when
// the orthogonal-group content is mu (a standard O(d) shape appearing in the
// branching of lam).  Affine and strictly decreasing in the so(d) Casimir of
// mu, so the extreme values come from the extreme Casimir labels.
mpq_class b_scalar(const Partition& lam, const Partition& mu, int n, int d);

// Shapes with the smallest and largest so(d) Casimir among the orthogonal
// branch targets of lam.  Closed forms for d <= 4 (constant time for any n);
// explicit branching otherwise.  Ties resolve to the lexicographically
// smallest shape.
std::pair<Partition, Partition> min_max_so(const Partition& lam, int d);

// Exact convex hull of the n-site extendibility region in the (f, b) plane.
std::vector<QPt> definetti_hull_q(int n, int d);

Region region_definetti(int n, int d);

// Lower boundary of the infinite-n region at d = 3, for f in [5/9, 1].
double limit_lower_b_d3(double f);

// Infinite-n region: convex hull of (purity, transpose overlap / d) over
// single-site density matrices, from seeded random samples plus the exact
// extreme families.
Region region_limit(int d, int samples, unsigned long long seed);

} // namespace brauer
