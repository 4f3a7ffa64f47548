#include "brauer/validate.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brauer/casimir.hpp"
#include "brauer/definetti.hpp"
#include "brauer/errors.hpp"
#include "brauer/geometry.hpp"
#include "brauer/lr.hpp"
#include "brauer/ogroup.hpp"
#include "brauer/oracle.hpp"
#include "brauer/partition.hpp"
#include "brauer/plane.hpp"
#include "brauer/twosided.hpp"

namespace brauer {
namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(std::string name,
                  const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r;
    r.name = std::move(name);
    const auto t0 = Clock::now();
    try {
        auto [ok, detail] = body();
        r.passed = ok;
        r.detail = std::move(detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

ODecomp ms(std::initializer_list<std::pair<const char*, long long>> items) {
    ODecomp out;
    for (const auto& [text, count] : items) out[OLabel::parse(text)] += count;
    return out;
}

void add_scaled(ODecomp& acc, const ODecomp& part, long long k) {
    for (const auto& [label, count] : part) {
        auto it = acc.emplace(label, 0).first;
        it->second += k * count;
        if (it->second == 0) acc.erase(it);
    }
}

std::string decomp_str(const ODecomp& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [label, count] : m) {
        if (!first) os << ",";
        first = false;
        os << label.str() << ":" << count;
    }
    os << "}";
    return os.str();
}

// Orthogonal content of the product of two unitary-group sectors: branch
// each factor separately, then fuse every pair of branch targets.
ODecomp bracket_content(const Partition& muL, const Partition& muR, int d) {
    ODecomp out;
    const ODecomp left = branch_u_to_o(muL, d);
    const ODecomp right = branch_u_to_o(muR, d);
    for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right) add_scaled(out, tensor_o(a, b, d), ca * cb);
    return out;
}

// Iterated Pieri decomposition of the n-fold tensor power of the vector irrep.
ODecomp vector_power(int n, int d) {
    ODecomp acc{{OLabel{Partition{1}, false}, 1}};
    for (int step = 1; step < n; ++step) {
        ODecomp next;
        for (const auto& [label, count] : acc)
            add_scaled(next, pieri_o(label, 1, d), count);
        acc = std::move(next);
    }
    return acc;
}

std::vector<int> range_sites(int lo, int hi) {
    std::vector<int> s;
    for (int i = lo; i <= hi; ++i) s.push_back(i);
    return s;
}

long long ipow(int base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// The pair averages rewritten through Casimir matrices.  Constants: the
// u(d) Casimir scalars of the one-box and two-box labels and the so(d)
// scalars of the same shapes; the two-sided form subtracts the one-sided
// Casimirs so only cross pairs survive.
SymMatrix casimir_form(const Mode& mode, Kind kind, int d) {
    const int N = mode.sites();
    const double chi1 = d, chi2 = 2.0 * (d + 1), chi11 = 2.0 * (d - 1);
    const double xi1 = 2.0 * (d - 1), xi2 = 4.0 * d, xi11 = 4.0 * (d - 2);
    const auto dim = static_cast<Eigen::Index>(ipow(d, N));
    const SymMatrix id = SymMatrix::Identity(dim, dim);
    if (mode.family == Mode::Family::DeFinetti) {
        const int n = mode.n;
        SymMatrix cu = casimir_matrix(CasAlgebra::U, range_sites(1, n), n, d);
        SymMatrix sf = 2 / (chi2 - chi11) *
                       (2.0 / (n * (n - 1.0)) * cu +
                        (2.0 * (n - 2) * chi1 / (n - 1) - (chi2 + chi11) / 2) * id);
        if (kind == Kind::F) return sf;
        SymMatrix cso = casimir_matrix(CasAlgebra::SO, range_sites(1, n), n, d);
        return -1 / xi2 *
               (2.0 / (n * (n - 1.0)) * cso +
                (2.0 * (n - 2) * xi1 / (n - 1) - (xi2 + xi11) / 2) * id -
                (xi2 - xi11) / 2 * sf);
    }
    const int n = mode.n, m = mode.m;
    auto delta = [&](CasAlgebra alg) {
        return SymMatrix(casimir_matrix(alg, range_sites(1, N), N, d) -
                         casimir_matrix(alg, range_sites(1, n), N, d) -
                         casimir_matrix(alg, range_sites(n + 1, N), N, d));
    };
    SymMatrix sf = 2 / (n * m * (chi2 - chi11)) * delta(CasAlgebra::U);
    if (kind == Kind::F) return sf;
    return -1 / (n * m * xi2) * delta(CasAlgebra::SO) + (xi2 - xi11) / (2 * xi2) * sf;
}

// Distance from a point to the boundary (not the interior) of a polygon.
double boundary_dist(const std::vector<DPt>& poly, const DPt& p) {
    const size_t n = poly.size();
    if (n == 0) return std::numeric_limits<double>::infinity();
    if (n == 1) return std::hypot(p.x - poly[0].x, p.y - poly[0].y);
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_dist(p, poly[i], poly[(i + 1) % n]));
    return best;
}

// Lowest y of a convex polygon along the vertical line x; infinity when the
// line misses the polygon.
double lower_b_at(const std::vector<DPt>& poly, double x) {
    const size_t n = poly.size();
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        const DPt& a = poly[i];
        const DPt& b = poly[(i + 1) % n];
        const double lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
        if (x < lo || x > hi) continue;
        if (a.x == b.x) {
            best = std::min(best, std::min(a.y, b.y));
        } else {
            const double t = (x - a.x) / (b.x - a.x);
            best = std::min(best, a.y + t * (b.y - a.y));
        }
    }
    return best;
}

// Largest violation of support dominance over a direction grid.  For sweep
// polygons the support in a sweep direction is the exact top eigenvalue of
// the direction's operator, so this compares spectral quantities and is
// immune to the chord sag that vertex-in-polygon tests suffer where the two
// true boundaries share an arc.
double support_violation(const Region& inner, const Region& outer, int directions) {
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < directions; ++k) {
        const double t = 2 * M_PI * k / directions;
        const double c = std::cos(t), s = std::sin(t);
        worst = std::max(worst, polygon_support(inner.vertices, c, s) -
                                    polygon_support(outer.vertices, c, s));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Release gates.

// Gate 1: the 24 closed-form Casimir scalars, as exact integers, for every
// dimension from 2 to 10.  chi is checked whenever the label exists for the
// dimension; xi is checked through the ungated polynomial and additionally
// through the gated entry point when the label is a standard orthogonal one.
CheckResult gate_casimir_tables() {
    return timed("casimir-tables", []() -> std::pair<bool, std::string> {
        struct Row {
            Partition shape;
            long long cc, co, xc, xo;  // chi = cc*d + co, xi = xc*d + xo
        };
        const std::vector<Row> rows = {
            {Partition{}, 0, 0, 0, 0},
            {Partition{1}, 1, 0, 2, -2},
            {Partition{1, 1}, 2, -2, 4, -8},
            {Partition{2}, 2, 2, 4, 0},
            {Partition{1, 1, 1}, 3, -6, 6, -18},
            {Partition{2, 1}, 3, 0, 6, -6},
            {Partition{3}, 3, 6, 6, 6},
            {Partition{1, 1, 1, 1}, 4, -12, 8, -32},
            {Partition{2, 1, 1}, 4, -4, 8, -16},
            {Partition{2, 2}, 4, 0, 8, -8},
            {Partition{3, 1}, 4, 4, 8, 0},
            {Partition{4}, 4, 12, 8, 16},
        };
        int n_chi = 0, n_xi = 0;
        for (int d = 2; d <= 10; ++d)
            for (const auto& row : rows) {
                const std::string at = row.shape.str() + " d=" + std::to_string(d);
                if (row.shape.depth() <= d) {
                    if (chi_u(row.shape, d) != row.cc * d + row.co)
                        return {false, "chi mismatch at " + at};
                    ++n_chi;
                }
                if (xi_formal(row.shape, d) != row.xc * d + row.xo)
                    return {false, "xi mismatch at " + at};
                if (row.shape.depth() <= d / 2 &&
                    xi_so(row.shape, d) != row.xc * d + row.xo)
                    return {false, "gated xi mismatch at " + at};
                ++n_xi;
            }
        return {true, std::to_string(n_chi) + " chi and " + std::to_string(n_xi) +
                          " xi entries match their closed forms"};
    });
}

// Gate 2: the sector decompositions of the three-, four- and two-plus-two
// site invariance groups at d = 8, including every multiplicity (the
// doubled labels and the triple [2] in the symmetric-times-symmetric
// bracket), plus the dihedral block structure of the 2+2 case and its
// dimension-weighted union against the fourth tensor power.
CheckResult gate_sector_decompositions() {
    return timed("sector-decompositions", []() -> std::pair<bool, std::string> {
        const int d = 8;
        struct Case {
            Partition muL, muR;
            ODecomp want;
        };
        const std::vector<Case> cases = {
            // one site against a symmetrized pair
            {Partition{1}, Partition{1, 1},
             ms({{"[1]", 1}, {"[1,1,1]", 1}, {"[2,1]", 1}})},
            {Partition{1}, Partition{2}, ms({{"[1]", 2}, {"[2,1]", 1}, {"[3]", 1}})},
            // one site against a symmetrized triple
            {Partition{1}, Partition{1, 1, 1},
             ms({{"[1,1]", 1}, {"[1,1,1,1]", 1}, {"[2,1,1]", 1}})},
            {Partition{1}, Partition{2, 1},
             ms({{"0", 1},
                 {"[1,1]", 2},
                 {"[2]", 2},
                 {"[2,1,1]", 1},
                 {"[2,2]", 1},
                 {"[3,1]", 1}})},
            {Partition{1}, Partition{3},
             ms({{"0", 1}, {"[1,1]", 1}, {"[2]", 2}, {"[3,1]", 1}, {"[4]", 1}})},
            // two symmetrized pairs
            {Partition{1, 1}, Partition{1, 1},
             ms({{"0", 1},
                 {"[1,1]", 1},
                 {"[2]", 1},
                 {"[1,1,1,1]", 1},
                 {"[2,1,1]", 1},
                 {"[2,2]", 1}})},
            {Partition{1, 1}, Partition{2},
             ms({{"[1,1]", 2}, {"[2]", 1}, {"[2,1,1]", 1}, {"[3,1]", 1}})},
            {Partition{2}, Partition{1, 1},
             ms({{"[1,1]", 2}, {"[2]", 1}, {"[2,1,1]", 1}, {"[3,1]", 1}})},
            {Partition{2}, Partition{2},
             ms({{"0", 2},
                 {"[1,1]", 1},
                 {"[2]", 3},
                 {"[2,2]", 1},
                 {"[3,1]", 1},
                 {"[4]", 1}})},
        };
        for (const auto& c : cases) {
            const ODecomp got = bracket_content(c.muL, c.muR, d);
            if (got != c.want)
                return {false, c.muL.str() + " x " + c.muR.str() + ": got " +
                                   decomp_str(got) + ", want " + decomp_str(c.want)};
        }

        // Dihedral blocks of the four-site case.  The symmetry group of the
        // 2+2 split has four one-dimensional irreps and one two-dimensional
        // irrep; the restriction multiplicities of the symmetric-group
        // sectors are fixed test data ([4] -> trivial; [2,2] -> trivial +
        // sign; [3,1] -> twisted trivial + planar; [2,1,1] -> twisted sign +
        // planar; [1,1,1,1] -> sign).
        const ODecomp b4 = branch_u_to_o(Partition{4}, d);
        const ODecomp b31 = branch_u_to_o(Partition{3, 1}, d);
        const ODecomp b22 = branch_u_to_o(Partition{2, 2}, d);
        const ODecomp b211 = branch_u_to_o(Partition{2, 1, 1}, d);
        const ODecomp b1111 = branch_u_to_o(Partition{1, 1, 1, 1}, d);
        struct Block {
            const char* name;
            std::vector<const ODecomp*> parts;
            long long dim;
            ODecomp want;
        };
        const std::vector<Block> blocks = {
            {"trivial", {&b4, &b22}, 1,
             ms({{"0", 2}, {"[2]", 2}, {"[2,2]", 1}, {"[4]", 1}})},
            {"trivial-twist", {&b31}, 1, ms({{"[1,1]", 1}, {"[2]", 1}, {"[3,1]", 1}})},
            {"sign", {&b1111, &b22}, 1,
             ms({{"0", 1}, {"[1,1,1,1]", 1}, {"[2]", 1}, {"[2,2]", 1}})},
            {"sign-twist", {&b211}, 1, ms({{"[1,1]", 1}, {"[2,1,1]", 1}})},
            {"planar", {&b31, &b211}, 2,
             ms({{"[1,1]", 2}, {"[2]", 1}, {"[2,1,1]", 1}, {"[3,1]", 1}})},
        };
        ODecomp weighted;
        for (const auto& blk : blocks) {
            ODecomp got;
            for (const auto* p : blk.parts) add_scaled(got, *p, 1);
            if (got != blk.want)
                return {false,
                        std::string(blk.name) + " block: got " + decomp_str(got)};
            add_scaled(weighted, got, blk.dim);
        }
        if (weighted != vector_power(4, d))
            return {false, "weighted block union differs from the fourth power: " +
                               decomp_str(weighted)};
        return {true, "9 sector brackets, 5 dihedral blocks, weighted union at d=8"};
    });
}

// Gate 3: branching respects the tensor-power decomposition.  Summing the
// orthogonal branchings of all depth-bounded sectors of size n, weighted by
// the number of standard tableaux, must reproduce the Pieri power.
CheckResult gate_schur_weyl_powers() {
    return timed("schur-weyl-powers", []() -> std::pair<bool, std::string> {
        for (int d = 2; d <= 8; ++d)
            for (int n = 1; n <= 6; ++n) {
                ODecomp lhs;
                for (const auto& lam : enumerate_partitions(n, std::min(n, d)))
                    add_scaled(lhs, branch_u_to_o(lam, d), hook_dim_sn(lam));
                if (lhs != vector_power(n, d))
                    return {false, "mismatch at n=" + std::to_string(n) +
                                       " d=" + std::to_string(d)};
            }
        return {true, "n <= 6, d in 2..8"};
    });
}

// Gate 4: the exact rational construction and the eigenvalue-sweep oracle
// describe the same symmetric extendibility regions.
CheckResult gate_definetti_oracle_match() {
    return timed("definetti-oracle-match", []() -> std::pair<bool, std::string> {
        const std::pair<int, int> cases[] = {{3, 2}, {4, 2}, {3, 3}, {4, 3}, {3, 4}};
        double worst = 0;
        for (const auto& [n, d] : cases) {
            const double h = hausdorff(region_definetti(n, d),
                                       region_oracle(Mode::definetti(n), d, 720));
            worst = std::max(worst, h);
            if (h > 1e-6)
                return {false, "Hausdorff " + fmt(h) + " at n=" + std::to_string(n) +
                                   " d=" + std::to_string(d) + " (tol 1e-6)"};
        }
        return {true, "max Hausdorff " + fmt(worst) + " over 5 cases (tol 1e-6)"};
    });
}

// Gate 5: the pair-averaged operators equal their Casimir-matrix forms
// entrywise, and the two symmetric averages commute (both are functions of
// the same pair of total Casimirs).
CheckResult gate_casimir_formula_identities() {
    return timed("casimir-formula-identities", []() -> std::pair<bool, std::string> {
        std::vector<std::pair<Mode, int>> cases;
        for (const auto& [n, d] :
             std::initializer_list<std::pair<int, int>>{{3, 2}, {3, 3}, {2, 4}})
            cases.emplace_back(Mode::definetti(n), d);
        for (const auto& [n, m, d] :
             std::initializer_list<std::tuple<int, int, int>>{
                 {1, 2, 2}, {1, 2, 3}, {2, 2, 2}})
            cases.emplace_back(Mode::twosided(n, m), d);
        double worst_entry = 0;
        for (const auto& [mode, d] : cases)
            for (Kind kind : {Kind::F, Kind::B}) {
                const double gap = (op_savg(mode, kind, d) - casimir_form(mode, kind, d))
                                       .cwiseAbs()
                                       .maxCoeff();
                worst_entry = std::max(worst_entry, gap);
                if (gap > 1e-10)
                    return {false, "entry gap " + fmt(gap) + " at " + mode.str() +
                                       " d=" + std::to_string(d)};
            }
        double worst_comm = 0;
        for (const auto& [n, d] :
             std::initializer_list<std::pair<int, int>>{{3, 2}, {3, 3}, {2, 4}}) {
            const SymMatrix sf = op_savg(Mode::definetti(n), Kind::F, d);
            const SymMatrix sb = op_savg(Mode::definetti(n), Kind::B, d);
            const double c = (sf * sb - sb * sf).norm();
            worst_comm = std::max(worst_comm, c);
            if (c > 1e-10)
                return {false, "commutator norm " + fmt(c) + " at n=" +
                                   std::to_string(n) + " d=" + std::to_string(d)};
        }
        return {true, "max entry gap " + fmt(worst_entry) + ", max commutator " +
                          fmt(worst_comm) + " (tol 1e-10)"};
    });
}

// Gate 6: the qualitative two-sided claims, adjudicated by the oracle at 360
// sweep directions: coincidence and separation of the (1,2)/(2,2) pairs,
// the containment chain, the corner points with their dimension gates, and
// coverage of the separable rectangle.
CheckResult gate_twosided_oracle_claims() {
    return timed("twosided-oracle-claims", []() -> std::pair<bool, std::string> {
        const int angles = 360;
        std::map<std::string, Region> reg;
        for (const auto& [n, m] :
             std::initializer_list<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}})
            for (int d = 2; d <= 4; ++d) {
                const std::string key = std::to_string(n) + std::to_string(m) +
                                        std::to_string(d);
                reg.emplace(key, region_oracle(Mode::twosided(n, m), d, angles));
            }

        // (a) coincidence at d=2 and d=4, separation at d=3
        const double h2 = hausdorff(reg.at("122"), reg.at("222"));
        const double h4 = hausdorff(reg.at("124"), reg.at("224"));
        const double h3 = hausdorff(reg.at("123"), reg.at("223"));
        if (h2 > 1e-6) return {false, "(1,2)/(2,2) split at d=2: " + fmt(h2)};
        if (h4 > 1e-6) return {false, "(1,2)/(2,2) split at d=4: " + fmt(h4)};
        if (h3 <= 1e-3) return {false, "(1,2)/(2,2) coincide at d=3: " + fmt(h3)};

        // (b) containment chain, as support dominance on the sweep grid (the
        // boundaries share arcs, so vertex-in-polygon would measure chord sag)
        for (int d = 2; d <= 4; ++d) {
            const Region& wide = reg.at("12" + std::to_string(d));
            for (const char* inner : {"13", "22"}) {
                const double v =
                    support_violation(reg.at(inner + std::to_string(d)), wide, angles);
                if (v > 1e-9)
                    return {false, std::string("(") + inner[0] + "," + inner[1] +
                                       ") sticks out of (1,2) by " + fmt(v) +
                                       " at d=" + std::to_string(d)};
            }
        }

        // (c) corner points and their dimension gates
        for (const auto& [key, r] : reg) {
            const int d = key[2] - '0';
            const bool left_in = (key[0] == '1' && key[1] == '2') ? d >= 3 : d >= 4;
            if (boundary_dist(r.vertices, {1, 0}) > 1e-9)
                return {false, "(1,0) off the boundary for " + key};
            if (left_in != r.contains(-1, 0, 1e-9)) {
                if (left_in || point_polygon_dist({-1, 0}, r.vertices) > 1e-6)
                    return {false, "(-1,0) gate wrong for " + key};
            }
            if (!left_in && point_polygon_dist({-1, 0}, r.vertices) <= 1e-6)
                return {false, "(-1,0) should be excluded for " + key};
        }

        // (d) separable rectangle inside every region.  The rectangle corner
        // (0,1/d) lies exactly on the d=2 boundary, so this is support
        // dominance again rather than corner-in-polygon.
        for (const auto& [key, r] : reg) {
            const int d = key[2] - '0';
            const double v = support_violation(separable_rectangle(d), r, angles);
            if (v > 1e-9)
                return {false, "separable rectangle sticks out of " + key + " by " +
                                   fmt(v)};
        }
        return {true, "coincidence d2 " + fmt(h2) + ", d4 " + fmt(h4) +
                          ", separation d3 " + fmt(h3) + "; chain, corners and " +
                          "separable coverage hold over 9 regions"};
    });
}

// Gate 7: closed forms against the oracle.  The three-extension hull must
// agree to 1e-4 in Hausdorff distance; its algebraic anchor points sit on
// the oracle boundary (the interior anchor is only required to be covered).
// For the pair cases only the corner points and the delta=0 curve top are
// gated; the full curve agreement is reported as a diagnostic because the
// printed curve cannot be the exact boundary (it reaches negative b).
CheckResult gate_closed_form_vs_oracle() {
    return timed("closed-form-vs-oracle", []() -> std::pair<bool, std::string> {
        const int angles = 720, res = 2048;
        std::string curve_report;
        for (int d = 2; d <= 4; ++d) {
            const Region closed13 = region_twosided(1, 3, d, res);
            const Region oracle13 = region_oracle(Mode::twosided(1, 3), d, angles);
            const double h13 = hausdorff(closed13, oracle13);
            if (h13 > 1e-4)
                return {false,
                        "(1,3) closed/oracle gap " + fmt(h13) + " at d=" +
                            std::to_string(d) + " (tol 1e-4)"};
            const DPt top{1, (d + 2.0) / (3.0 * d)};
            const DPt corner{-1.0 / 3, 0};
            const DPt inner_pt{0, (d - 1.0) / (3.0 * d)};
            if (boundary_dist(oracle13.vertices, top) > 1e-6)
                return {false, "(1,(d+2)/3d) off the (1,3) boundary at d=" +
                                   std::to_string(d)};
            if (boundary_dist(oracle13.vertices, corner) > 1e-6)
                return {false, "(-1/3,0) off the (1,3) boundary at d=" +
                                   std::to_string(d)};
            if (!oracle13.contains(inner_pt.x, inner_pt.y, 1e-6))
                return {false, "(0,(d-1)/3d) not covered by (1,3) at d=" +
                                   std::to_string(d)};

            const Region oracle12 = region_oracle(Mode::twosided(1, 2), d, angles);
            const Region oracle22 = region_oracle(Mode::twosided(2, 2), d, angles);
            const DPt curve_top{1, std::sqrt(2.0 * (d + 2)) / (6.0 * d)};
            for (const auto& [name, r] :
                 std::initializer_list<std::pair<const char*, const Region*>>{
                     {"(1,2)", &oracle12}, {"(2,2)", &oracle22}}) {
                if (boundary_dist(r->vertices, {1, 0}) > 1e-4)
                    return {false, std::string("(1,0) off the ") + name +
                                       " boundary at d=" + std::to_string(d)};
                const bool left_in = (name[1] == '1') ? d >= 3 : d >= 4;
                if (left_in && boundary_dist(r->vertices, {-1, 0}) > 1e-4)
                    return {false, std::string("(-1,0) off the ") + name +
                                       " boundary at d=" + std::to_string(d)};
                if (boundary_dist(r->vertices, curve_top) > 1e-4)
                    return {false, std::string("curve top off the ") + name +
                                       " boundary at d=" + std::to_string(d)};
            }
            const double h12 = hausdorff(region_twosided(1, 2, d, res), oracle12);
            const double h22 = hausdorff(region_twosided(2, 2, d, res), oracle22);
            curve_report += " d" + std::to_string(d) + ": (1,2) " + fmt(h12) +
                            ", (2,2) " + fmt(h22) + ";";
        }
        return {true, "(1,3) matches to 1e-4 and anchors hold for d in 2..4; "
                      "reported pair-curve gaps:" +
                          curve_report};
    });
}

// Gate 8: exact rational structure of the symmetric regions: shrinking with
// the extension count, the common interior point, and the two-site region
// being the full triangle.
CheckResult gate_definetti_nesting() {
    return timed("definetti-nesting", []() -> std::pair<bool, std::string> {
        for (int d = 2; d <= 4; ++d) {
            const std::vector<QPt> tri = {{mpq_class(-1), mpq_class(0)},
                                          {mpq_class(1), mpq_class(0)},
                                          {mpq_class(1), mpq_class(1)}};
            if (definetti_hull_q(2, d) != tri)
                return {false, "two-site region is not the triangle at d=" +
                                   std::to_string(d)};
            std::vector<QPt> outer = definetti_hull_q(2, d);
            for (int n = 3; n <= 11; ++n) {
                const std::vector<QPt> inner = definetti_hull_q(n, d);
                for (const QPt& v : inner)
                    if (!polygon_contains(outer, v))
                        return {false, "region(" + std::to_string(n) +
                                           ") escapes region(" + std::to_string(n - 1) +
                                           ") at d=" + std::to_string(d)};
                const QPt common{mpq_class(1, d), mpq_class(1, d * d)};
                if (!polygon_contains(inner, common))
                    return {false, "(1/d,1/d^2) missing from region(" +
                                       std::to_string(n) + ") at d=" +
                                       std::to_string(d)};
                outer = inner;
            }
        }
        return {true, "exact nesting for n = 2..11, d in 2..4, with (1/d,1/d^2) "
                      "in every region"};
    });
}

// Gate 9: the d=3 limit shape: sampled region against the analytic lower
// boundary, monotone approach of the finite-n regions, and the two interior
// corner vertices.
CheckResult gate_limit_shape_d3() {
    return timed("limit-shape-d3", []() -> std::pair<bool, std::string> {
        const Region lim = region_limit(3, 100000, 12345ULL);
        double worst_curve = 0;
        for (int k = 0; k <= 200; ++k) {
            const double f = 5.0 / 9 + (1 - 5.0 / 9) * k / 200.0;
            const double lo = lower_b_at(lim.vertices, std::min(f, 1.0));
            if (!std::isfinite(lo))
                return {false, "vertical line misses the region at f=" + fmt(f)};
            worst_curve = std::max(worst_curve,
                                   std::abs(lo - limit_lower_b_d3(std::min(f, 1.0))));
        }
        if (worst_curve > 1e-2)
            return {false, "lower boundary off the analytic curve by " +
                               fmt(worst_curve) + " (tol 1e-2)"};
        double prev = std::numeric_limits<double>::infinity();
        std::string hs;
        for (int n : {5, 10, 20, 50}) {
            const double h = hausdorff(region_definetti(n, 3), lim);
            if (h > prev + 1e-9)
                return {false, "Hausdorff to the limit grows at n=" +
                                   std::to_string(n) + ": " + fmt(h) + " after " +
                                   fmt(prev)};
            prev = h;
            hs += " " + fmt(h);
        }
        for (const DPt want : {DPt{1, 1.0 / 3}, DPt{1.0 / 3, 1.0 / 9}}) {
            double best = std::numeric_limits<double>::infinity();
            for (const DPt& v : lim.vertices)
                best = std::min(best, std::hypot(v.x - want.x, v.y - want.y));
            if (best > 1e-3)
                return {false, "vertex (" + fmt(want.x) + "," + fmt(want.y) +
                                   ") missed by " + fmt(best) + " (tol 1e-3)"};
        }
        return {true, "curve gap " + fmt(worst_curve) +
                          "; Hausdorff to limit over n in {5,10,20,50}:" + hs};
    });
}

// ---------------------------------------------------------------------------
// Cheap cross-module invariants.

CheckResult inv_partitions() {
    return timed("partition-basics", []() -> std::pair<bool, std::string> {
        long long sq = 0;
        for (const auto& lam : enumerate_partitions(6, 6)) {
            const long long h = hook_dim_sn(lam);
            sq += h * h;
            if (lam.conjugate().conjugate() != lam)
                return {false, "conjugation is not an involution at " + lam.str()};
            if (lam.conjugate().content_sum() != -lam.content_sum())
                return {false, "content sum not antisymmetric at " + lam.str()};
        }
        if (sq != 720) return {false, "tableau counts square-sum to " + std::to_string(sq)};
        return {true, "tableau square-sum 6! and conjugation involution over n=6"};
    });
}

CheckResult inv_lr() {
    return timed("lr-symmetry", []() -> std::pair<bool, std::string> {
        const auto mus = enumerate_partitions(3, 3);
        const auto nus = enumerate_partitions(4, 4);
        for (const auto& mu : mus)
            for (const auto& nu : nus) {
                if (tensor_u(mu, nu, 8) != tensor_u(nu, mu, 8))
                    return {false, "fusion not symmetric at " + mu.str() + " x " +
                                       nu.str()};
                for (int k = 1; k <= 3; ++k) {
                    std::map<Partition, long long> want;
                    for (const auto& lam : pieri_u(mu, k, 5)) want[lam] = 1;
                    if (tensor_u(mu, Partition{k}, 5) != want)
                        return {false, "row fusion disagrees with the Pieri rule at " +
                                           mu.str() + " k=" + std::to_string(k)};
                }
            }
        return {true, "fusion symmetry and Pieri agreement on small shapes"};
    });
}

CheckResult inv_ogroup() {
    return timed("ogroup-fusion", []() -> std::pair<bool, std::string> {
        const OLabel a{Partition{2, 1}, false}, b{Partition{1, 1}, false};
        for (int d = 5; d <= 7; ++d) {
            if (tensor_o(a, b, d) != tensor_o(b, a, d))
                return {false, "orthogonal fusion not symmetric at d=" +
                                   std::to_string(d)};
            if (pieri_o(a, 1, d) != tensor_o(a, OLabel{Partition{1}, false}, d))
                return {false, "orthogonal Pieri disagrees with fusion at d=" +
                                   std::to_string(d)};
        }
        int checked = 0;
        for (int d = 2; d <= 5; ++d)
            for (int n = 1; n <= 6; ++n)
                for (const auto& lam : enumerate_partitions(n, std::min(n, 5))) {
                    if (lam.depth() <= d / 2) continue;
                    const auto m = modify(lam, d);
                    if (!m) continue;
                    if (xi_formal(lam, d) != xi_formal(m->label.shape, d))
                        return {false, "modification changed xi at " + lam.str() +
                                           " d=" + std::to_string(d)};
                    ++checked;
                }
        return {true, "fusion symmetry, Pieri agreement, and xi-invariant "
                      "modification on " +
                          std::to_string(checked) + " shapes"};
    });
}

CheckResult inv_casimir() {
    return timed("casimir-anchors", []() -> std::pair<bool, std::string> {
        for (int d = 2; d <= 10; ++d) {
            if (chi_u(Partition{1}, d) != d) return {false, "chi([1]) wrong"};
            if (xi_so(Partition{1}, d) != 2 * (d - 1)) return {false, "xi([1]) wrong"};
            if (chi_u(Partition{2, 1}, d) != 3 * d) return {false, "chi([2,1]) wrong"};
            if (d >= 4 && xi_so(Partition{3, 1}, d) != 8 * d)
                return {false, "xi([3,1]) wrong"};
        }
        return {true, "anchor scalars for d in 2..10"};
    });
}

CheckResult inv_plane() {
    return timed("plane-geometry", []() -> std::pair<bool, std::string> {
        for (int d = 2; d <= 6; ++d) {
            if (!on_werner_segment(1.0 / d, 1.0 / (d * d), d, 1e-12) ||
                !on_isotropic_segment(1.0 / d, 1.0 / (d * d), d, 1e-12))
                return {false, "segments miss (1/d,1/d^2) at d=" + std::to_string(d)};
            for (const Region& seg : {werner_segment(d), isotropic_segment(d)})
                for (const DPt& v : seg.vertices)
                    if (!in_triangle(v.x, v.y, 1e-12))
                        return {false, "segment leaves the triangle at d=" +
                                           std::to_string(d)};
        }
        for (double f = -0.9; f <= 1.0; f += 0.38)
            for (double b = 0.05; b <= 0.95; b += 0.3) {
                if (!in_triangle(f, b, 0)) continue;
                const auto [ff, bb] = fb_from_weights(weights_from_fb(f, b));
                if (std::abs(ff - f) + std::abs(bb - b) > 1e-12)
                    return {false, "weight roundtrip drifts at (" + fmt(f) + "," +
                                       fmt(b) + ")"};
            }
        return {true, "segment anchors and weight roundtrips"};
    });
}

CheckResult inv_definetti() {
    return timed("definetti-sanity", []() -> std::pair<bool, std::string> {
        const Region r33 = region_definetti(3, 3);
        const std::vector<DPt> want = {{-1, 0}, {1, 0}, {1, 5.0 / 9}};
        if (r33.vertices.size() != 3)
            return {false, "three-site region at d=3 is not a triangle"};
        for (size_t i = 0; i < 3; ++i)
            if (std::abs(r33.vertices[i].x - want[i].x) +
                    std::abs(r33.vertices[i].y - want[i].y) >
                1e-12)
                return {false, "three-site vertex off at index " + std::to_string(i)};
        const auto outer = definetti_hull_q(3, 3);
        for (const QPt& v : definetti_hull_q(4, 3))
            if (!polygon_contains(outer, v)) return {false, "four-site region escapes"};
        return {true, "d=3 three-site vertices exact; four-site nested"};
    });
}

CheckResult inv_twosided() {
    return timed("twosided-sanity", []() -> std::pair<bool, std::string> {
        for (const auto& [n, m] :
             std::initializer_list<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}})
            for (int d = 2; d <= 4; ++d)
                for (const DPt& v : region_twosided(n, m, d).vertices)
                    if (!in_triangle(v.x, v.y, 1e-9))
                        return {false, "closed region leaves the triangle"};
        const double h = hausdorff(region_twosided(1, 2, 2), region_twosided(2, 2, 2));
        if (h > 1e-9) return {false, "closed (1,2)/(2,2) split at d=2: " + fmt(h)};
        return {true, "closed regions inside the triangle; d=2 coincidence " + fmt(h)};
    });
}

CheckResult inv_oracle() {
    return timed("oracle-smoke", []() -> std::pair<bool, std::string> {
        const Region r =
            numerical_range(op_flip(1, 2, 2, 2), op_btilde(1, 2, 2, 2), 128);
        const double h = hausdorff(r, brauer_triangle());
        if (h > 1e-6) return {false, "two-site range off the triangle by " + fmt(h)};
        if (r.gap && *r.gap > 1e-8)
            return {false, "inner/outer gap too large: " + fmt(*r.gap)};
        return {true, "two-site range equals the triangle (gap " +
                          fmt(r.gap.value_or(0)) + ")"};
    });
}

CheckResult inv_geometry() {
    return timed("geometry-hull", []() -> std::pair<bool, std::string> {
        const std::vector<DPt> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
        auto hulled = convex_hull(std::vector<DPt>{
            {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.2, 0.7}});
        if (hulled != square) return {false, "hull drops or reorders square corners"};
        if (clip_convex(square, square) != square) return {false, "self-clip changes"};
        if (hausdorff_polygons(square, square) != 0)
            return {false, "self Hausdorff nonzero"};
        if (std::abs(point_polygon_dist({2, 0.5}, square) - 1) > 1e-12)
            return {false, "outside distance wrong"};
        if (point_polygon_dist({0.5, 0.5}, square) != 0)
            return {false, "inside distance nonzero"};
        return {true, "hull, clip, and distance primitives agree on the unit square"};
    });
}

} // namespace

std::vector<CheckResult> run_invariants() {
    return {inv_partitions(), inv_lr(),        inv_ogroup(),  inv_casimir(),
            inv_plane(),      inv_definetti(), inv_twosided(), inv_oracle(),
            inv_geometry()};
}

std::vector<CheckResult> run_acceptance() {
    return {gate_casimir_tables(),
            gate_sector_decompositions(),
            gate_schur_weyl_powers(),
            gate_definetti_oracle_match(),
            gate_casimir_formula_identities(),
            gate_twosided_oracle_claims(),
            gate_closed_form_vs_oracle(),
            gate_definetti_nesting(),
            gate_limit_shape_d3()};
}

} // namespace brauer
