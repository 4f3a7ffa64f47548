#pragma once

#include <map>
#include <string>
#include <vector>

#include "brauer/partition.hpp"

namespace brauer {

// Littlewood-Richardson coefficient c^lam_{mu,nu}: the number of LR skew
// tableaux of shape lam/mu and weight nu (semistandard filling whose reverse
// reading word is a lattice word).  Computed by complete cell-by-cell
// backtracking with lattice-prefix pruning; results are memoized in a
// process-wide, mutex-guarded cache.
long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// GL(d) tensor product decomposition: Rep_mu (x) Rep_nu = sum_lam c^lam_{mu,nu} Rep_lam,
// restricted to labels of depth <= d.
std::map<Partition, long long> tensor_u(const Partition& mu, const Partition& nu, int d);

// Pieri rule: Rep_mu (x) Rep_[k].  Adds k boxes, no two in the same column;
// multiplicity-free.  Returned in reverse-lexicographic order.
std::vector<Partition> pieri_u(const Partition& mu, int k, int d);

// LR memo cache control.  The persisted format is a flat JSON object
// {"lam|mu|nu": coefficient}.  Loading merges into the live cache and never
// changes results, only speed; loading a file written by lr_cache_save is a
// results no-op by construction.
void lr_cache_load(const std::string& path);
void lr_cache_save(const std::string& path);
void lr_cache_clear();
size_t lr_cache_size();

} // namespace brauer
