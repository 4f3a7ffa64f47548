#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brauer {

// Integer partition (Young diagram).  Rows are weakly decreasing positive
// integers; trailing zeros are trimmed on construction so that equal
// partitions always compare equal.  The empty partition is the default.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Accepts "[3,1]", "[3, 1]", "[]" and "0".  Throws UsageError on
    // malformed input.
    static Partition parse(std::string_view text);

    const std::vector<int>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int size() const;  // number of boxes
    int depth() const { return static_cast<int>(rows_.size()); }
    // 1-based row access; rows beyond the depth read as 0.
    int row(int i) const;

    bool contains(const Partition& inner) const;
    Partition conjugate() const;
    // Sum over boxes (i,j) (1-based) of the content j - i.
    long long content_sum() const;

    std::string str() const;  // "[3,1]", "[]"

    auto operator<=>(const Partition&) const = default;

  private:
    void canonicalize();
    std::vector<int> rows_;
};

// All partitions of n with at most max_rows rows, in reverse-lexicographic
// order: enumerate_partitions(4, 2) = [4], [3,1], [2,2].
std::vector<Partition> enumerate_partitions(int n, int max_rows);

// Dimension of the S_n irrep labelled by lam (the number of standard Young
// tableaux), via the hook length formula.  Exact in int64 for |lam| <= 20;
// larger inputs throw OutOfRange.
long long hook_dim_sn(const Partition& lam);

// Removes every column of height exactly d and returns the remaining shape
// together with the number of removed columns.  Requires depth(lam) <= d.
std::pair<Partition, int> strip_full_columns(const Partition& lam, int d);

} // namespace brauer
