#include "brauer/casimir.hpp"

#include "brauer/errors.hpp"

namespace brauer {

long long chi_u(const Partition& lam, int d) {
    if (d < 1) throw OutOfRange("d must be positive");
    if (lam.depth() > d) throw DepthExceeded("chi_u: depth exceeds d");
    long long total = 0;
    for (int i = 1; i <= lam.depth(); ++i) {
        long long li = lam.row(i);
        total += li * (li + d + 1 - 2 * i);
    }
    return total;
}

long long xi_formal(const Partition& lam, int d) {
    long long total = 0;
    for (int i = 1; i <= lam.depth(); ++i) {
        long long li = lam.row(i);
        total += 2 * li * (li + d - 2 * i);
    }
    return total;
}

long long xi_so(const Partition& lam, int d) {
    if (d < 2) throw OutOfRange("d must be at least 2");
    if (lam.depth() > d / 2) throw DepthExceeded("xi_so: not a standard O(d) label");
    return xi_formal(lam, d);
}

} // namespace brauer
