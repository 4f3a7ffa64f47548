#include "brauer/partition.hpp"

#include <algorithm>
#include <numeric>

#include "brauer/errors.hpp"

namespace brauer {

Partition::Partition(std::initializer_list<int> parts) : rows_(parts) {
    canonicalize();
}

Partition::Partition(std::vector<int> parts) : rows_(std::move(parts)) {
    canonicalize();
}

void Partition::canonicalize() {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1]))
            throw UsageError("not a partition: rows must be weakly decreasing and positive");
    }
}

Partition Partition::parse(std::string_view text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos) throw UsageError("empty partition string");
    text = text.substr(a, b - a + 1);
    if (text == "0") return Partition{};
    if (text.front() != '[' || text.back() != ']')
        throw UsageError("partition must look like [3,1], [] or 0, got '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
        if (pos >= body.size()) break;
        size_t end = pos;
        while (end < body.size() && body[end] != ',') ++end;
        std::string token(body.substr(pos, end - pos));
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.pop_back();
        if (token.empty()) throw UsageError("empty entry in partition '" + std::string(text) + "'");
        try {
            size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad partition entry '" + token + "'");
        }
        pos = end + (end < body.size() ? 1 : 0);
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0);
}

int Partition::row(int i) const {
    if (i < 1) throw OutOfRange("row index is 1-based");
    return i <= depth() ? rows_[i - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.depth() > depth()) return false;
    for (int i = 0; i < inner.depth(); ++i)
        if (inner.rows_[i] > rows_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (rows_.empty()) return {};
    std::vector<int> cols(rows_[0], 0);
    for (int r : rows_)
        for (int j = 0; j < r; ++j) ++cols[j];
    return Partition(std::move(cols));
}

long long Partition::content_sum() const {
    long long total = 0;
    for (int i = 0; i < depth(); ++i)
        for (int j = 0; j < rows_[i]; ++j) total += j - i;
    return total;
}

std::string Partition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows_[i]);
    }
    out += ']';
    return out;
}

namespace {

void enumerate_rec(int n, int max_part, int max_rows, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_rows == 0) return;
    int lo = (n + max_rows - 1) / max_rows;  // smallest feasible leading part
    for (int p = std::min(n, max_part); p >= lo; --p) {
        cur.push_back(p);
        enumerate_rec(n - p, p, max_rows - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int max_rows) {
    if (n < 0) throw OutOfRange("partition size must be nonnegative");
    if (max_rows < 0) throw OutOfRange("max_rows must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(n, n, max_rows, cur, out);
    return out;
}

long long hook_dim_sn(const Partition& lam) {
    int n = lam.size();
    if (n > 20) throw OutOfRange("hook_dim_sn supports |lambda| <= 20");
    if (n == 0) return 1;
    Partition conj = lam.conjugate();
    __int128 hooks = 1;
    for (int i = 1; i <= lam.depth(); ++i)
        for (int j = 1; j <= lam.row(i); ++j)
            hooks *= (lam.row(i) - j) + (conj.row(j) - i) + 1;
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;  // 20! fits in int64
    return static_cast<long long>(fact / hooks);
}

std::pair<Partition, int> strip_full_columns(const Partition& lam, int d) {
    if (d < 1) throw OutOfRange("d must be positive");
    if (lam.depth() > d) throw DepthExceeded("depth exceeds d, not a GL(d) label");
    if (lam.depth() < d) return {lam, 0};
    int s = lam.row(d);
    std::vector<int> rest;
    for (int i = 1; i <= d; ++i) rest.push_back(lam.row(i) - s);
    return {Partition(std::move(rest)), s};
}

} // namespace brauer
