#include "brauer/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "brauer/errors.hpp"
#include "brauer/plane.hpp"

namespace brauer {

Mode Mode::definetti(int n) {
    if (n < 1) throw OutOfRange("site count must be positive");
    Mode mode;
    mode.family = Family::DeFinetti;
    mode.n = n;
    return mode;
}

Mode Mode::twosided(int n, int m) {
    if (n < 1 || m < 1) throw OutOfRange("site counts must be positive");
    Mode mode;
    mode.family = Family::TwoSided;
    mode.n = n;
    mode.m = m;
    return mode;
}

Mode Mode::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("mode must be definetti:N or twosided:N,M");
    const std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
    try {
        if (head == "definetti") return definetti(std::stoi(tail));
        if (head == "twosided") {
            auto comma = tail.find(',');
            if (comma == std::string::npos) throw UsageError("twosided mode needs N,M");
            return twosided(std::stoi(tail.substr(0, comma)), std::stoi(tail.substr(comma + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw UsageError("mode site counts must be integers");
    } catch (const std::out_of_range&) {
        throw UsageError("mode site counts must be integers");
    }
    throw UsageError("unknown mode family: " + head);
}

int Mode::sites() const { return family == Family::DeFinetti ? n : n + m; }

std::string Mode::str() const {
    if (family == Family::DeFinetti) return "definetti:" + std::to_string(n);
    return "twosided:" + std::to_string(n) + "," + std::to_string(m);
}

namespace {

// Basis index digits are big-endian: site 1 is the most significant.
struct Space {
    int N, d;
    long long dim;
    std::vector<long long> place; // place[site-1] = d^(N-site)

    Space(int N, int d, int cap) : N(N), d(d) {
        require_dim(d);
        if (N < 1) throw OutOfRange("site count must be positive");
        dim = 1;
        for (int k = 0; k < N; ++k) {
            dim *= d;
            if (dim > cap) throw CapExceeded("operator dimension d^N exceeds the cap");
        }
        place.resize(N);
        long long p = 1;
        for (int site = N; site >= 1; --site) {
            place[site - 1] = p;
            p *= d;
        }
    }
    int digit(long long x, int site) const { return int(x / place[site - 1] % d); }
    long long with_digit(long long x, int site, int value) const {
        return x + (long long)(value - digit(x, site)) * place[site - 1];
    }
};

void require_pair(int i, int j, int N) {
    if (i < 1 || j <= i || j > N) throw OutOfRange("need sites 1 <= i < j <= N");
}

// sum over the given sites of the matrix unit E_ab acting on that site
SymMatrix site_sum_unit(const Space& sp, const std::vector<int>& sites, int a, int b) {
    SymMatrix M = SymMatrix::Zero(sp.dim, sp.dim);
    for (long long x = 0; x < sp.dim; ++x)
        for (int site : sites)
            if (sp.digit(x, site) == b) M(sp.with_digit(x, site, a), x) += 1;
    return M;
}

} // namespace

SymMatrix op_flip(int i, int j, int N, int d, int cap) {
    require_pair(i, j, N);
    Space sp(N, d, cap);
    SymMatrix M = SymMatrix::Zero(sp.dim, sp.dim);
    for (long long x = 0; x < sp.dim; ++x) {
        const int a = sp.digit(x, i), b = sp.digit(x, j);
        M(sp.with_digit(sp.with_digit(x, i, b), j, a), x) = 1;
    }
    return M;
}

SymMatrix op_btilde(int i, int j, int N, int d, int cap) {
    require_pair(i, j, N);
    Space sp(N, d, cap);
    SymMatrix M = SymMatrix::Zero(sp.dim, sp.dim);
    const double w = 1.0 / d;
    for (long long x = 0; x < sp.dim; ++x) {
        const int b = sp.digit(x, i);
        if (b != sp.digit(x, j)) continue;
        for (int a = 0; a < d; ++a) M(sp.with_digit(sp.with_digit(x, i, a), j, a), x) += w;
    }
    return M;
}

SymMatrix op_savg(const Mode& mode, Kind kind, int d, int cap) {
    const int N = mode.sites();
    Space sp(N, d, cap);
    std::vector<std::pair<int, int>> pairs;
    double weight;
    if (mode.family == Mode::Family::DeFinetti) {
        if (mode.n < 2) throw OutOfRange("pair average needs at least two sites");
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) pairs.emplace_back(i, j);
        weight = 2.0 / (double(mode.n) * (mode.n - 1));
    } else {
        for (int i = 1; i <= mode.n; ++i)
            for (int j = mode.n + 1; j <= N; ++j) pairs.emplace_back(i, j);
        weight = 1.0 / (double(mode.n) * mode.m);
    }
    SymMatrix M = SymMatrix::Zero(sp.dim, sp.dim);
    for (auto [i, j] : pairs)
        M += kind == Kind::F ? op_flip(i, j, N, d, cap) : op_btilde(i, j, N, d, cap);
    return weight * M;
}

SymMatrix casimir_matrix(CasAlgebra algebra, const std::vector<int>& sites, int N, int d,
                         int cap) {
    Space sp(N, d, cap);
    if (sites.empty()) throw OutOfRange("need a nonempty site set");
    for (int site : sites)
        if (site < 1 || site > N) throw OutOfRange("site index out of range");
    SymMatrix C = SymMatrix::Zero(sp.dim, sp.dim);
    if (algebra == CasAlgebra::U) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                SymMatrix E = site_sum_unit(sp, sites, a, b);
                C += E * E.transpose();
            }
    } else {
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) {
                SymMatrix Y =
                    site_sum_unit(sp, sites, a, b) - site_sum_unit(sp, sites, b, a);
                C += -2 * (Y * Y);
            }
    }
    return C;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eig(const SymMatrix& A, double tol) {
    Eigen::SelfAdjointEigenSolver<SymMatrix> solver(A);
    if (solver.info() != Eigen::Success) throw NoConvergence("eigensolver did not converge");
    const Eigen::VectorXd vals = solver.eigenvalues();
    const Eigen::MatrixXd vecs = solver.eigenvectors();
    const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
    for (Eigen::Index k = 0; k < vals.size(); ++k)
        if ((A * vecs.col(k) - vals(k) * vecs.col(k)).norm() > tol * scale)
            throw NoConvergence("eigenpair residual above tolerance");
    return {vals, vecs};
}

Region numerical_range(const SymMatrix& A, const SymMatrix& B, int angles) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw UsageError("need two square matrices of equal dimension");
    if (angles < 64) throw OutOfRange("need at least 64 angles");
    std::vector<DPt> pts;
    std::vector<double> outer(angles);
    auto push_point = [&](const Eigen::VectorXd& v) {
        pts.push_back(DPt{v.dot(A * v), v.dot(B * v)});
    };
    for (int k = 0; k < angles; ++k) {
        const double theta = 2 * std::numbers::pi * k / angles;
        const SymMatrix M = std::cos(theta) * A + std::sin(theta) * B;
        auto [vals, vecs] = sym_eig(M, 1e-9);
        const Eigen::Index dim = vals.size();
        const double top = vals(dim - 1);
        outer[k] = top;
        const double degTol = 1e-9 * std::max(1.0, std::abs(top));
        Eigen::Index first = dim - 1;
        while (first > 0 && top - vals(first - 1) <= degTol) --first;
        if (first == dim - 1) {
            push_point(vecs.col(dim - 1));
            continue;
        }
        // Exposed corners hide inside the degenerate top block: scan the
        // block's own compressed pair around this direction.
        const Eigen::MatrixXd V = vecs.rightCols(dim - first);
        const SymMatrix Ac = V.transpose() * A * V, Bc = V.transpose() * B * V;
        for (double phi :
             {theta - std::numbers::pi / 2, theta, theta + std::numbers::pi / 2}) {
            const SymMatrix Mc = std::cos(phi) * Ac + std::sin(phi) * Bc;
            auto [cvals, cvecs] = sym_eig(Mc, 1e-9);
            push_point(V * cvecs.col(cvals.size() - 1));
        }
    }
    Region r;
    r.vertices = convex_hull(std::move(pts));
    double gap = 0;
    for (int k = 0; k < angles; ++k) {
        const double theta = 2 * std::numbers::pi * k / angles;
        gap = std::max(gap, outer[k] - polygon_support(r.vertices, std::cos(theta),
                                                       std::sin(theta)));
    }
    r.gap = std::max(gap, 0.0);
    return r;
}

Region region_oracle(const Mode& mode, int d, int angles, int cap) {
    Region r = numerical_range(op_savg(mode, Kind::F, d, cap),
                               op_savg(mode, Kind::B, d, cap), angles);
    r.meta["family"] = "oracle";
    r.meta["mode"] = mode.str();
    r.meta["d"] = std::to_string(d);
    r.meta["angles"] = std::to_string(angles);
    return r;
}

} // namespace brauer
