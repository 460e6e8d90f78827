#include "polydiag/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace polydiag {

// ---------------------------------------------------------------------------
// IntegerPartition

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0)
            throw validation_error("integer partition parts must be positive, got " +
                                   std::to_string(p));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int IntegerPartition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool IntegerPartition::all_ones() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::string IntegerPartition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition SetPartition::from_rgs(int n, std::vector<int> rgs) {
    if (n < 1) throw validation_error("ground-set size must be positive, got " + std::to_string(n));
    if (static_cast<int>(rgs.size()) != n)
        throw validation_error("restricted-growth string has length " +
                               std::to_string(rgs.size()) + ", expected " + std::to_string(n));
    int maxv = -1;
    for (int i = 0; i < n; ++i) {
        if (rgs[i] < 0 || rgs[i] > maxv + 1)
            throw validation_error("not a restricted-growth string at position " +
                                   std::to_string(i + 1));
        maxv = std::max(maxv, rgs[i]);
    }
    return SetPartition(n, std::move(rgs), maxv + 1);
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1) throw validation_error("ground-set size must be positive, got " + std::to_string(n));
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw validation_error("empty block not allowed");
        for (int e : blocks[b]) {
            if (e < 1 || e > n)
                throw validation_error("element " + std::to_string(e) + " out of range [1," +
                                       std::to_string(n) + "]");
            if (owner[e - 1] != -1)
                throw validation_error("element " + std::to_string(e) +
                                       " appears in more than one block");
            owner[e - 1] = static_cast<int>(b);
        }
    }
    for (int e = 1; e <= n; ++e)
        if (owner[e - 1] == -1)
            throw validation_error("element " + std::to_string(e) + " missing from all blocks");

    // Renumber blocks by first occurrence to get the canonical RGS.
    std::vector<int> relabel(blocks.size(), -1);
    std::vector<int> rgs(static_cast<std::size_t>(n));
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int b = owner[i];
        if (relabel[b] == -1) relabel[b] = next++;
        rgs[i] = relabel[b];
    }
    return SetPartition(n, std::move(rgs), next);
}

SetPartition SetPartition::bottom(int n) {
    if (n < 1) throw validation_error("ground-set size must be positive");
    return SetPartition(n, std::vector<int>(static_cast<std::size_t>(n), 0), 1);
}

SetPartition SetPartition::top(int n) {
    if (n < 1) throw validation_error("ground-set size must be positive");
    std::vector<int> rgs(static_cast<std::size_t>(n));
    std::iota(rgs.begin(), rgs.end(), 0);
    return SetPartition(n, std::move(rgs), n);
}

std::vector<int> SetPartition::block_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(block_count_), 0);
    for (int b : rgs_) ++sizes[b];
    return sizes;
}

int SetPartition::essential_count() const {
    int count = 0;
    for (int s : block_sizes())
        if (s >= 2) ++count;
    return count;
}

IntegerPartition SetPartition::essential_shape() const {
    std::vector<int> parts;
    for (int s : block_sizes())
        if (s >= 2) parts.push_back(s - 1);
    return IntegerPartition(std::move(parts));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
    for (int i = 0; i < n_; ++i) out[rgs_[i]].push_back(i + 1);
    return out;
}

int SetPartition::block_of(int element) const {
    if (element < 1 || element > n_)
        throw validation_error("element " + std::to_string(element) + " out of range [1," +
                               std::to_string(n_) + "]");
    return rgs_[element - 1];
}

std::string SetPartition::to_string() const {
    std::ostringstream out;
    out << '{';
    auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
        if (b) out << '|';
        for (std::size_t i = 0; i < bs[b].size(); ++i) {
            if (i) out << ',';
            out << bs[b][i];
        }
    }
    out << '}';
    return out.str();
}

// ---------------------------------------------------------------------------
// Lattice operations

namespace {

void require_same_n(const SetPartition& a, const SetPartition& b) {
    if (a.n() != b.n())
        throw validation_error("partitions live on different ground sets: " +
                               std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

// Union-find on 0-based indices.
struct DisjointSets {
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

} // namespace

bool leq(const SetPartition& a, const SetPartition& b) {
    require_same_n(a, b);
    // b refines a iff the map (block of b) -> (block of a) is well defined.
    std::vector<int> image(static_cast<std::size_t>(b.block_count()), -1);
    for (int i = 0; i < a.n(); ++i) {
        int bb = b.rgs()[i], ab = a.rgs()[i];
        if (image[bb] == -1)
            image[bb] = ab;
        else if (image[bb] != ab)
            return false;
    }
    return true;
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
    require_same_n(a, b);
    DisjointSets ds(a.n());
    std::vector<int> first_of_a(static_cast<std::size_t>(a.block_count()), -1);
    std::vector<int> first_of_b(static_cast<std::size_t>(b.block_count()), -1);
    for (int i = 0; i < a.n(); ++i) {
        int& fa = first_of_a[a.rgs()[i]];
        if (fa == -1) fa = i; else ds.unite(fa, i);
        int& fb = first_of_b[b.rgs()[i]];
        if (fb == -1) fb = i; else ds.unite(fb, i);
    }
    std::vector<int> rgs(static_cast<std::size_t>(a.n()));
    std::vector<int> label(static_cast<std::size_t>(a.n()), -1);
    int next = 0;
    for (int i = 0; i < a.n(); ++i) {
        int root = ds.find(i);
        if (label[root] == -1) label[root] = next++;
        rgs[i] = label[root];
    }
    return SetPartition::from_rgs(a.n(), std::move(rgs));
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    require_same_n(a, b);
    // Blocks of the join are the nonempty pairwise intersections.
    std::vector<int> pair_label(static_cast<std::size_t>(a.block_count() * b.block_count()), -1);
    std::vector<int> rgs(static_cast<std::size_t>(a.n()));
    int next = 0;
    for (int i = 0; i < a.n(); ++i) {
        int key = a.rgs()[i] * b.block_count() + b.rgs()[i];
        if (pair_label[key] == -1) pair_label[key] = next++;
        rgs[i] = pair_label[key];
    }
    return SetPartition::from_rgs(a.n(), std::move(rgs));
}

IntegerPartition interval_shape(const SetPartition& a, const SetPartition& b) {
    if (!leq(a, b) || a == b)
        throw validation_error("interval_shape requires a < b in refinement order");
    // Count the distinct b-blocks inside each a-block.
    std::vector<int> seen(static_cast<std::size_t>(b.block_count()), 0);
    std::vector<int> splits(static_cast<std::size_t>(a.block_count()), 0);
    for (int i = 0; i < a.n(); ++i) {
        int bb = b.rgs()[i];
        if (!seen[bb]) {
            seen[bb] = 1;
            ++splits[a.rgs()[i]];
        }
    }
    std::vector<int> parts;
    for (int c : splits)
        if (c >= 2) parts.push_back(c - 1);
    return IntegerPartition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// DFS over restricted-growth strings in lexicographic order. When k is given,
// prunes branches that cannot reach exactly k blocks.
bool enumerate_rgs(std::vector<int>& rgs, int pos, int maxv, int n, std::optional<int> k,
                   const std::function<bool(const SetPartition&)>& visit) {
    if (pos == n) {
        if (k && maxv + 1 != *k) return true;
        return visit(SetPartition::from_rgs(n, rgs));
    }
    int cap = maxv + 1;
    if (k) cap = std::min(cap, *k - 1);
    for (int c = 0; c <= cap; ++c) {
        int new_max = std::max(maxv, c);
        // Remaining positions must still be able to open enough blocks.
        if (k && (new_max + 1) + (n - pos - 1) < *k) continue;
        rgs[pos] = c;
        if (!enumerate_rgs(rgs, pos + 1, new_max, n, k, visit)) return false;
    }
    return true;
}

} // namespace

void for_each_partition(int n, std::optional<int> k,
                        const std::function<bool(const SetPartition&)>& visit) {
    if (n < 1) throw validation_error("ground-set size must be positive, got " + std::to_string(n));
    if (k && (*k < 1 || *k > n))
        throw validation_error("block count " + std::to_string(*k) + " out of range [1," +
                               std::to_string(n) + "]");
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    enumerate_rgs(rgs, 1, 0, n, k, visit);
}

std::vector<SetPartition> all_partitions(int n, std::optional<int> k) {
    std::vector<SetPartition> out;
    for_each_partition(n, k, [&](const SetPartition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Stirling and Bell numbers

namespace {

std::mutex table_mutex;

// Rows of the Stirling triangle, row n holds S(n,0..n).
std::vector<std::vector<BigInt>>& stirling_rows() {
    static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};
    return rows;
}

// Bell triangle; bell(n) is the first entry of row n.
std::vector<std::vector<BigInt>>& bell_rows() {
    static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};
    return rows;
}

} // namespace

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0)
        throw validation_error("stirling2 requires nonnegative arguments");
    if (k > n) return BigInt(0);
    std::lock_guard<std::mutex> lock(table_mutex);
    auto& rows = stirling_rows();
    while (static_cast<int>(rows.size()) <= n) {
        int r = static_cast<int>(rows.size());
        std::vector<BigInt> row(static_cast<std::size_t>(r) + 1);
        row[0] = 0;
        for (int j = 1; j < r; ++j) row[j] = BigInt(j) * rows[r - 1][j] + rows[r - 1][j - 1];
        row[r] = 1;
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

BigInt bell(int n) {
    if (n < 0) throw validation_error("bell requires a nonnegative argument");
    std::lock_guard<std::mutex> lock(table_mutex);
    auto& rows = bell_rows();
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(prev.size() + 1);
        row[0] = prev.back();
        for (std::size_t j = 1; j < row.size(); ++j) row[j] = row[j - 1] + prev[j - 1];
        rows.push_back(std::move(row));
    }
    return rows[n][0];
}

} // namespace polydiag
