#include "brauer/definetti.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "brauer/casimir.hpp"
#include "brauer/errors.hpp"
#include "brauer/ogroup.hpp"

namespace brauer {

namespace {

void require_site(int n, int d) {
    if (n < 2) throw OutOfRange("need at least two sites");
    if (d < 2) throw OutOfRange("d must be at least 2");
}

} // namespace

mpq_class f_scalar(const Partition& lam, int n, int d) {
    require_site(n, d);
    if (lam.size() != n) throw UsageError("lam must be a partition of n");
    if (lam.depth() > d) throw DepthExceeded("lam deeper than d");
    mpq_class chiL(static_cast<long>(chi_u(lam, d)));
    mpq_class chi1(static_cast<long>(chi_u(Partition{1}, d)));
    mpq_class chi2(static_cast<long>(chi_u(Partition{2}, d)));
    mpq_class chi11(static_cast<long>(chi_u(Partition{1, 1}, d)));
    mpq_class pairs(static_cast<long>(n) * (n - 1));
    return 2 / (chi2 - chi11) *
           (2 * chiL / pairs + 2 * (n - 2) * chi1 / (n - 1) - (chi2 + chi11) / 2);
}

mpq_class b_scalar(const Partition& lam, const Partition& mu, int n, int d) {
    require_site(n, d);
    mpq_class xiM(static_cast<long>(xi_so(mu, d)));
    mpq_class xi1(static_cast<long>(xi_formal(Partition{1}, d)));
    mpq_class xi2(static_cast<long>(xi_formal(Partition{2}, d)));
    mpq_class xi11(static_cast<long>(xi_formal(Partition{1, 1}, d)));
    mpq_class pairs(static_cast<long>(n) * (n - 1));
    return -1 / xi2 *
           (2 * xiM / pairs + 2 * (n - 2) * xi1 / (n - 1) - (xi2 + xi11) / 2 -
            (xi2 - xi11) / 2 * f_scalar(lam, n, d));
}

namespace {

std::pair<Partition, Partition> min_max_general(const Partition& lam, int d) {
    long long bestLo = std::numeric_limits<long long>::max();
    long long bestHi = std::numeric_limits<long long>::min();
    Partition lo, hi;
    // ODecomp iterates labels in increasing order, so on Casimir ties the
    // lexicographically smallest shape is kept.
    for (const auto& [label, count] : branch_u_to_o(lam, d)) {
        (void)count;
        long long xi = xi_so(label.shape, d);
        if (xi < bestLo) {
            bestLo = xi;
            lo = label.shape;
        }
        if (xi > bestHi) {
            bestHi = xi;
            hi = label.shape;
        }
    }
    return {lo, hi};
}

} // namespace

std::pair<Partition, Partition> min_max_so(const Partition& lam, int d) {
    if (d < 2) throw OutOfRange("d must be at least 2");
    if (lam.depth() > d) throw DepthExceeded("lam deeper than d");
    auto [core, stripped] = strip_full_columns(lam, d);
    (void)stripped;
    const int l1 = core.row(1);
    const int z1 = l1 % 2, z2 = core.row(2) % 2;
    // Closed forms exist for one- and two-row cores; deeper cores go through
    // the explicit branching because modification can fold a deep target onto
    // a shallower shape with a larger Casimir value.
    switch (d) {
        case 2:
            return {Partition{z1}, Partition{l1}};
        case 3:
            return {Partition{(z1 == 0 && z2 == 0) ? 0 : 1}, Partition{l1}};
        default:
            return min_max_general(lam, d);
    }
}

std::vector<QPt> definetti_hull_q(int n, int d) {
    require_site(n, d);
    std::vector<QPt> pts;
    for (const Partition& lam : enumerate_partitions(n, d)) {
        mpq_class f = f_scalar(lam, n, d);
        auto [muLo, muHi] = min_max_so(lam, d);
        // b is decreasing in the Casimir: the low-Casimir shape gives the top.
        pts.push_back(QPt{f, b_scalar(lam, muLo, n, d)});
        pts.push_back(QPt{f, b_scalar(lam, muHi, n, d)});
    }
    return convex_hull(std::move(pts));
}

Region region_definetti(int n, int d) {
    std::vector<DPt> pts;
    for (const QPt& p : definetti_hull_q(n, d))
        pts.push_back(DPt{p.x.get_d(), p.y.get_d()});
    return make_region(std::move(pts), {{"family", "definetti"},
                                        {"n", std::to_string(n)},
                                        {"d", std::to_string(d)}});
}

double limit_lower_b_d3(double f) {
    if (f < 0.5 || f > 1.0) throw OutOfRange("lower boundary needs f in [1/2, 1]");
    double u = (1.0 - std::sqrt(2.0 * f - 1.0)) / 2.0;
    return u * u / 3.0;
}

Region region_limit(int d, int samples, unsigned long long seed) {
    if (d < 2) throw OutOfRange("d must be at least 2");
    if (samples < 0) throw OutOfRange("samples must be nonnegative");
    using Eigen::MatrixXcd;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::uniform_int_distribution<int> rankDist(1, d);

    std::vector<DPt> pts;
    auto push_state = [&](const MatrixXcd& sigma) {
        double f = (sigma * sigma).trace().real();
        double b = (sigma * sigma.transpose()).trace().real() / d;
        pts.push_back(DPt{f, b});
    };

    // Exact extreme states: a real pure state, the maximally mixed state, and
    // a pure state orthogonal to its own complex conjugate.
    pts.push_back(DPt{1.0, 1.0 / d});
    pts.push_back(DPt{1.0 / d, 1.0 / (static_cast<double>(d) * d)});
    pts.push_back(DPt{1.0, 0.0});

    if (d >= 3) {
        // Two-level family mixing a conjugate-orthogonal pure state with a
        // real one; traces out the curved part of the lower boundary.
        MatrixXcd psi = MatrixXcd::Zero(d, 1);
        psi(0, 0) = std::complex<double>(1 / std::sqrt(2.0), 0);
        psi(1, 0) = std::complex<double>(0, 1 / std::sqrt(2.0));
        MatrixXcd e3 = MatrixXcd::Zero(d, 1);
        e3(2, 0) = 1.0;
        const int steps = 400;
        for (int s = 0; s <= steps; ++s) {
            double t = static_cast<double>(s) / steps;
            push_state(t * (psi * psi.adjoint()) + (1 - t) * (e3 * e3.adjoint()));
        }
    }

    for (int s = 0; s < samples; ++s) {
        int k = rankDist(rng);
        MatrixXcd g(d, k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < k; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        MatrixXcd sigma = g * g.adjoint();
        push_state(sigma / sigma.trace().real());
    }

    Region r = make_region(std::move(pts), {{"family", "limit"},
                                            {"d", std::to_string(d)},
                                            {"samples", std::to_string(samples)},
                                            {"seed", std::to_string(seed)}});
    return r;
}

} // namespace brauer
