#include "brauer/lr.hpp"

#include <fstream>
#include <mutex>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "brauer/errors.hpp"

namespace brauer {

namespace {

struct LrCache {
    std::mutex mu;
    std::unordered_map<std::string, long long> map;
};

LrCache& cache() {
    static LrCache c;
    return c;
}

// mu and nu enter symmetrically, so the memo key is canonicalized.
std::string cache_key(const Partition& lam, const Partition& mu, const Partition& nu) {
    const Partition& a = mu <= nu ? mu : nu;
    const Partition& b = mu <= nu ? nu : mu;
    return lam.str() + "|" + a.str() + "|" + b.str();
}

// Counts LR skew tableaux of shape lam/mu, weight nu.  Cells are filled in
// reverse reading order (rows top to bottom, right to left within a row), so
// the lattice-word condition becomes a prefix condition on value counts and
// every semistandardness constraint refers to an already-filled cell.
struct LrCounter {
    const std::vector<int>& lam;
    std::vector<int> mu;  // padded to lam's depth
    const std::vector<int>& nu;
    std::vector<std::vector<int>> value;  // value[r][c], 0 = unfilled
    std::vector<int> counts;
    std::vector<std::pair<int, int>> cells;  // reverse reading order
    long long total = 0;

    LrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lam(l.rows()), nu(n.rows()) {
        mu.assign(lam.size(), 0);
        for (size_t i = 0; i < m.rows().size(); ++i) mu[i] = m.rows()[i];
        value.resize(lam.size());
        for (size_t r = 0; r < lam.size(); ++r) value[r].assign(lam[r], 0);
        counts.assign(nu.size() + 1, 0);
        for (size_t r = 0; r < lam.size(); ++r)
            for (int c = lam[r] - 1; c >= mu[r]; --c) cells.emplace_back(static_cast<int>(r), c);
    }

    void fill(size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        int vmax = static_cast<int>(nu.size());
        for (int v = 1; v <= vmax; ++v) {
            if (counts[v] >= nu[v - 1]) continue;
            if (v > 1 && counts[v] >= counts[v - 1]) continue;  // lattice prefix
            if (c + 1 < lam[r] && v > value[r][c + 1]) continue;  // row weakly increasing
            if (r > 0 && c >= mu[r - 1]) {
                if (v <= value[r - 1][c]) continue;  // column strictly increasing
            }
            value[r][c] = v;
            ++counts[v];
            fill(idx + 1);
            --counts[v];
            value[r][c] = 0;
        }
    }
};

} // namespace

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() != mu.size() + nu.size()) return 0;
    if (!lam.contains(mu) || !lam.contains(nu)) return 0;
    if (mu == lam) return nu.empty() ? 1 : 0;

    std::string key = cache_key(lam, mu, nu);
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        auto it = cache().map.find(key);
        if (it != cache().map.end()) return it->second;
    }
    LrCounter counter(lam, mu, nu);
    counter.fill(0);
    long long result = counter.total;
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        cache().map.emplace(key, result);
    }
    return result;
}

std::map<Partition, long long> tensor_u(const Partition& mu, const Partition& nu, int d) {
    if (d < 1) throw OutOfRange("d must be positive");
    if (mu.depth() > d || nu.depth() > d) throw DepthExceeded("tensor_u factor deeper than d");
    std::map<Partition, long long> out;
    for (const Partition& lam : enumerate_partitions(mu.size() + nu.size(), d)) {
        if (!lam.contains(mu)) continue;
        long long c = lr_coefficient(lam, mu, nu);
        if (c > 0) out.emplace(lam, c);
    }
    return out;
}

namespace {

void pieri_rec(const Partition& mu, int rowIdx, int rem, int d, std::vector<int>& cur,
               std::vector<Partition>& out) {
    int p = mu.depth();
    if (rowIdx > p + 1 || rowIdx > d) {
        if (rem == 0) out.emplace_back(cur);
        return;
    }
    int base = mu.row(rowIdx);
    // Upper bound keeps lam/mu a horizontal strip: lam_i <= mu_{i-1}.
    int hi = rowIdx == 1 ? base + rem : std::min(mu.row(rowIdx - 1), base + rem);
    for (int v = hi; v >= base; --v) {
        if (rowIdx > p && v == 0) {
            if (rem == 0) out.emplace_back(cur);
            continue;
        }
        cur.push_back(v);
        pieri_rec(mu, rowIdx + 1, rem - (v - base), d, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> pieri_u(const Partition& mu, int k, int d) {
    if (d < 1) throw OutOfRange("d must be positive");
    if (k < 0) throw OutOfRange("pieri_u needs k >= 0");
    if (mu.depth() > d) throw DepthExceeded("pieri_u input deeper than d");
    std::vector<Partition> out;
    std::vector<int> cur;
    pieri_rec(mu, 1, k, d, cur, out);
    return out;  // descending loops produce reverse-lexicographic order
}

void lr_cache_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // a cache that does not exist yet is empty, not an error
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError("bad LR cache JSON in '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw UsageError("LR cache must be a JSON object");
    std::lock_guard<std::mutex> lock(cache().mu);
    for (auto& [key, val] : j.items()) {
        if (!val.is_number_integer()) throw UsageError("LR cache values must be integers");
        cache().map.emplace(key, val.get<long long>());
    }
}

void lr_cache_save(const std::string& path) {
    nlohmann::json j = nlohmann::json::object();
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        for (const auto& [key, val] : cache().map) j[key] = val;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write LR cache '" + path + "'");
    out << j.dump() << "\n";
}

void lr_cache_clear() {
    std::lock_guard<std::mutex> lock(cache().mu);
    cache().map.clear();
}

size_t lr_cache_size() {
    std::lock_guard<std::mutex> lock(cache().mu);
    return cache().map.size();
}

} // namespace brauer
