#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "brauer/partition.hpp"

namespace brauer {

// Label of an O(d) tensor irrep: a Young diagram plus an associate flag
// (printed as a trailing '*').  For even d a label whose shape has exactly
// d/2 nonzero rows is self-associate, and normalization clears its flag.
struct OLabel {
    Partition shape;
    bool star = false;

    static OLabel parse(std::string_view text);  // "[2,2]*", "[]", "0*"
    std::string str() const;

    auto operator<=>(const OLabel&) const = default;
};

// True when shape is a standard O(d) label, i.e. depth(shape) <= floor(d/2).
bool standard_label(const Partition& shape, int d);

// Clears the associate flag on self-associate labels (even d, depth == d/2).
OLabel normalize_label(OLabel a, int d);

// Result of the modification rule: a sign and the standard label the
// non-standard diagram reduces to.  The label's flag carries the parity of
// modification steps applied (already normalized).
struct Modified {
    int sign;
    OLabel label;
};

// King's modification rule.  Repeatedly removes a continuous boundary hook
// of h = 2p - d boxes (p = current number of rows) starting from the
// bottom-left box, walking right when possible and up otherwise, until the
// diagram is standard.  Sign picks up (-1)^(x-1) per step, where x is the
// column in which the hook removal ends, and each step toggles the associate
// flag.  Returns nullopt when a removal does not leave a valid Young diagram
// with the same first column (the label carries no representation).
std::optional<Modified> modify(const Partition& lam, int d);

// Newell-Littlewood number: N^lam_{mu,nu} = sum_{a,b,c} c^mu_{a,b} c^nu_{a,c} c^lam_{b,c}.
// Dimension-free; memoized.
long long newell_littlewood(const Partition& lam, const Partition& mu, const Partition& nu);

using ODecomp = std::map<OLabel, long long>;

// O(d) tensor product decomposition via Newell-Littlewood fusion followed by
// modification of non-standard outputs.  Signed contributions are
// accumulated and must cancel to nonnegative multiplicities; a negative
// total throws NegativeMultiplicity.  Associate flags compose as
// star (x) unstar = star, star (x) star = unstar.
ODecomp tensor_o(const OLabel& a, const OLabel& b, int d);

// Pieri-type rule for O(d): a (x) Rep_[k].  Fast path (valid when
// depth(a) < floor(d/2)): remove j boxes, no two in the same column, then add
// k - j boxes, no two in the same column, for all j; falls back to tensor_o
// when the depth bound is tight.
ODecomp pieri_o(const OLabel& a, int k, int d);

// Littlewood branching GL(d) -> O(d):
//   Rep_lam|_O(d) = sum_{kappa,mu} c^lam_{2 kappa, mu} Phi_mu,
// with non-standard mu passed through the modification rule.  Full d-columns
// are stripped first; each stripped column toggles the associate flag of
// every output label.  Signed accumulation with a nonnegativity check.
ODecomp branch_u_to_o(const Partition& lam, int d);

} // namespace brauer
