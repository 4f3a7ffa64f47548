#include "brauer/ogroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "brauer/errors.hpp"
#include "brauer/lr.hpp"

namespace brauer {

OLabel OLabel::parse(std::string_view text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw UsageError("empty label string");
    text = text.substr(a, b - a + 1);
    bool star = false;
    if (!text.empty() && text.back() == '*') {
        star = true;
        text.remove_suffix(1);
    }
    return OLabel{Partition::parse(text), star};
}

std::string OLabel::str() const {
    return shape.str() + (star ? "*" : "");
}

bool standard_label(const Partition& shape, int d) {
    return shape.depth() <= d / 2;
}

OLabel normalize_label(OLabel a, int d) {
    if (d % 2 == 0 && a.shape.depth() == d / 2) a.star = false;
    return a;
}

std::optional<Modified> modify(const Partition& lam, int d) {
    if (d < 2) throw OutOfRange("d must be at least 2");
    Partition cur = lam;
    int sign = 1;
    bool star = false;
    while (!standard_label(cur, d)) {
        int p = cur.depth();
        int h = 2 * p - d;
        // Walk the outer boundary from the bottom-left box, going right when
        // the next box exists and up otherwise, marking h boxes.  Marks in a
        // row form a contiguous interval [firstCol[r], lastCol[r]].
        std::vector<int> firstCol(p + 1, 0), lastCol(p + 1, 0);
        int r = p, c = 1;
        for (int step = 0; step < h; ++step) {
            if (r < 1) return std::nullopt;  // boundary exhausted before h boxes
            if (firstCol[r] == 0) firstCol[r] = c;
            lastCol[r] = c;
            if (step + 1 == h) break;
            if (c + 1 <= cur.row(r))
                ++c;
            else
                --r;
        }
        int endCol = c;
        // Rebuild the remaining shape.  Every marked row must lose a suffix
        // reaching the row end, except that nothing may dangle right of a
        // gap; the survivor is the prefix left of the marks.
        std::vector<int> next;
        bool valid = true;
        for (int row = 1; row <= p; ++row) {
            if (firstCol[row] == 0) {
                next.push_back(cur.row(row));
            } else {
                if (lastCol[row] != cur.row(row)) valid = false;
                next.push_back(firstCol[row] - 1);
            }
        }
        for (size_t i = 1; valid && i < next.size(); ++i)
            if (next[i] > next[i - 1]) valid = false;
        if (!valid) return std::nullopt;
        sign *= (endCol % 2 == 1) ? 1 : -1;
        star = !star;
        cur = Partition(next);
    }
    return Modified{sign, normalize_label(OLabel{cur, star}, d)};
}

namespace {

struct NlCache {
    std::mutex mu;
    std::unordered_map<std::string, long long> map;
};

NlCache& nl_cache() {
    static NlCache c;
    return c;
}

} // namespace

long long newell_littlewood(const Partition& lam, const Partition& mu, const Partition& nu) {
    int excess = mu.size() + nu.size() - lam.size();
    if (excess < 0 || excess % 2 != 0) return 0;
    int k = excess / 2;
    if (k > std::min(mu.size(), nu.size())) return 0;

    const Partition& smaller = mu <= nu ? mu : nu;
    const Partition& larger = mu <= nu ? nu : mu;
    std::string key = lam.str() + "|" + smaller.str() + "|" + larger.str();
    {
        std::lock_guard<std::mutex> lock(nl_cache().mu);
        auto it = nl_cache().map.find(key);
        if (it != nl_cache().map.end()) return it->second;
    }

    long long total = 0;
    for (const Partition& alpha : enumerate_partitions(k, std::min(mu.depth(), nu.depth()))) {
        if (!mu.contains(alpha) || !nu.contains(alpha)) continue;
        for (const Partition& beta : enumerate_partitions(mu.size() - k, mu.depth())) {
            long long cmu = lr_coefficient(mu, alpha, beta);
            if (cmu == 0) continue;
            for (const Partition& gamma : enumerate_partitions(nu.size() - k, nu.depth())) {
                long long cnu = lr_coefficient(nu, alpha, gamma);
                if (cnu == 0) continue;
                long long clam = lr_coefficient(lam, beta, gamma);
                if (clam == 0) continue;
                total += cmu * cnu * clam;
            }
        }
    }
    {
        std::lock_guard<std::mutex> lock(nl_cache().mu);
        nl_cache().map.emplace(key, total);
    }
    return total;
}

namespace {

// Signed accumulation into an O(d) decomposition; every key is normalized.
void accumulate(ODecomp& acc, OLabel label, long long count, int d) {
    acc[normalize_label(std::move(label), d)] += count;
}

ODecomp finalize(ODecomp&& acc, const char* op) {
    ODecomp out;
    for (auto& [label, count] : acc) {
        if (count < 0)
            throw NegativeMultiplicity(std::string(op) + ": negative multiplicity for " + label.str());
        if (count > 0) out.emplace(label, count);
    }
    return out;
}

} // namespace

ODecomp tensor_o(const OLabel& a, const OLabel& b, int d) {
    if (!standard_label(a.shape, d) || !standard_label(b.shape, d))
        throw DepthExceeded("tensor_o inputs must be standard O(d) labels");
    bool starIn = a.star != b.star;
    int sa = a.shape.size(), sb = b.shape.size();
    int maxDepth = a.shape.depth() + b.shape.depth();
    ODecomp acc;
    for (int size = sa + sb; size >= std::abs(sa - sb); size -= 2) {
        for (const Partition& lam : enumerate_partitions(size, maxDepth)) {
            long long n = newell_littlewood(lam, a.shape, b.shape);
            if (n == 0) continue;
            auto m = modify(lam, d);
            if (!m) continue;
            OLabel out = m->label;
            out.star = out.star != starIn;
            accumulate(acc, std::move(out), n * m->sign, d);
        }
    }
    return finalize(std::move(acc), "tensor_o");
}

namespace {

// Enumerates partitions nu with nu <= mu rowwise and mu/nu a horizontal
// strip of exactly j boxes (no two removed boxes share a column).
void strip_removals(const Partition& mu, int j, std::vector<Partition>& out) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rowIdx, int rem) {
        if (rowIdx > mu.depth()) {
            if (rem == 0) out.emplace_back(cur);
            return;
        }
        int base = mu.row(rowIdx);
        // nu_i in [mu_{i+1}, mu_i] keeps mu/nu a horizontal strip.
        int lo = std::max(mu.row(rowIdx + 1), base - rem);
        for (int v = base; v >= lo; --v) {
            cur.push_back(v);
            rec(rowIdx + 1, rem - (base - v));
            cur.pop_back();
        }
    };
    rec(1, j);
}

} // namespace

ODecomp pieri_o(const OLabel& a, int k, int d) {
    if (k < 0) throw OutOfRange("pieri_o needs k >= 0");
    if (!standard_label(a.shape, d)) throw DepthExceeded("pieri_o input must be standard");
    if (a.shape.depth() >= d / 2)
        return tensor_o(a, OLabel{Partition{k}, false}, d);
    ODecomp acc;
    for (int j = 0; j <= std::min(k, a.shape.size()); ++j) {
        std::vector<Partition> removed;
        strip_removals(a.shape, j, removed);
        for (const Partition& mid : removed)
            for (const Partition& lam : pieri_u(mid, k - j, d / 2))
                accumulate(acc, OLabel{lam, a.star}, 1, d);
    }
    return finalize(std::move(acc), "pieri_o");
}

ODecomp branch_u_to_o(const Partition& lam, int d) {
    if (d < 2) throw OutOfRange("d must be at least 2");
    if (lam.depth() > d) throw DepthExceeded("branch input deeper than d");
    auto [core, stripped] = strip_full_columns(lam, d);
    ODecomp acc;
    for (int twok = 0; twok <= core.size(); twok += 2) {
        for (const Partition& kappa : enumerate_partitions(twok / 2, core.depth())) {
            std::vector<int> doubled;
            for (int r : kappa.rows()) doubled.push_back(2 * r);
            Partition twoKappa(std::move(doubled));
            if (!core.contains(twoKappa)) continue;
            for (const Partition& mu : enumerate_partitions(core.size() - twok, core.depth())) {
                long long c = lr_coefficient(core, twoKappa, mu);
                if (c == 0) continue;
                auto m = modify(mu, d);
                if (!m) continue;
                accumulate(acc, m->label, c * m->sign, d);
            }
        }
    }
    if (stripped % 2 == 1) {
        ODecomp flipped;
        for (auto& [label, count] : acc)
            flipped[normalize_label(OLabel{label.shape, !label.star}, d)] += count;
        acc = std::move(flipped);
    }
    return finalize(std::move(acc), "branch_u_to_o");
}

} // namespace brauer
