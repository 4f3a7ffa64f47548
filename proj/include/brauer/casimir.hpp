#pragma once

#include "brauer/partition.hpp"

namespace brauer {

// Quadratic Casimir eigenvalue of u(d) on the irrep labelled by lam:
//   chi(lam) = sum_i lam_i (lam_i + d + 1 - 2i).
// Integer-exact.  Requires depth(lam) <= d.
long long chi_u(const Partition& lam, int d);

// Quadratic Casimir eigenvalue of so(d) on the irrep labelled by lam:
//   xi(lam) = sum_i 2 lam_i (lam_i + d - 2i).
// Integer-exact.  Requires depth(lam) <= floor(d/2) (a standard O(d) label).
long long xi_so(const Partition& lam, int d);

// Same polynomial evaluated without the depth gate.  Used to check that the
// O(d) modification rule preserves xi; not meaningful as a Casimir eigenvalue
// for non-standard labels.
long long xi_formal(const Partition& lam, int d);

} // namespace brauer
