#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "brauer/geometry.hpp"

namespace brauer {

// Dense real symmetric operator on (C^d)^(tensor N) in the computational
// basis, which is the fixed real structure all of these operators share.
using SymMatrix = Eigen::MatrixXd;

inline constexpr int kDefaultCap = 1024;

// Which pair average to build: an extendibility pattern plus the site count.
struct Mode {
    enum class Family { DeFinetti, TwoSided };
    Family family = Family::DeFinetti;
    int n = 0, m = 0; // m is unused for the de Finetti family

    static Mode definetti(int n);
    static Mode twosided(int n, int m);
    // Accepts "definetti:N" and "twosided:N,M".
    static Mode parse(const std::string& text);

    int sites() const;
    std::string str() const;
};

enum class Kind { F, B };
enum class CasAlgebra { U, SO };

// Transposition of sites i and j (1-based), identity elsewhere.
SymMatrix op_flip(int i, int j, int N, int d, int cap = kDefaultCap);

// (1/d) sum_{a,b} |aa><bb| on sites i and j, identity elsewhere.
SymMatrix op_btilde(int i, int j, int N, int d, int cap = kDefaultCap);

// Pair-averaged operator: all pairs with weight 2/(n(n-1)) for de Finetti,
// left-right cross pairs with weight 1/(nm) for two-sided.
SymMatrix op_savg(const Mode& mode, Kind kind, int d, int cap = kDefaultCap);

// Quadratic Casimir of the diagonal action on the given sites (1-based):
// u(d):  sum_{a,b} rho(E_ab) rho(E_ba);
// so(d): -2 sum_{a<b} rho(Y_ab)^2 with Y_ab = E_ab - E_ba.
SymMatrix casimir_matrix(CasAlgebra algebra, const std::vector<int>& sites, int N, int d,
                         int cap = kDefaultCap);

// Full spectral decomposition, eigenvalues ascending. Throws NoConvergence
// if any residual ||Av - lambda v|| exceeds tol * max(1, ||A||).
std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eig(const SymMatrix& A, double tol = 1e-10);

// Joint numerical range of (A, B): sweep directions theta_k = 2 pi k/angles,
// collect (v'Av, v'Bv) over top eigenvectors of cos(theta) A + sin(theta) B,
// and hull them. Degenerate top blocks are scanned at three auxiliary angles
// so exposed corners are not missed. The returned Region's gap field is the
// largest support-function gap between this inner hull and the outer
// half-plane intersection.
Region numerical_range(const SymMatrix& A, const SymMatrix& B, int angles);

// Extendibility region for the mode as the joint numerical range of the two
// pair averages.
Region region_oracle(const Mode& mode, int d, int angles = 720, int cap = kDefaultCap);

} // namespace brauer
