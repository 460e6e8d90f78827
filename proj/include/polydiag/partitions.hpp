#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polydiag/bigint.hpp"
#include "polydiag/errors.hpp"

namespace polydiag {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is allowed (essential shape of a partition with no essential blocks).
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Parts are sorted into canonical (weakly decreasing) order; zero or
    /// negative parts are rejected.
    explicit IntegerPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// |lambda|: sum of all parts.
    int sum() const;

    /// True iff lambda = 1^r.
    bool all_ones() const;

    /// Renders as "(4,2)"; the empty partition as "()".
    std::string to_string() const;

    auto operator<=>(const IntegerPartition&) const = default;

private:
    std::vector<int> parts_;
};

/// A partition of [n] = {1,...,n} into disjoint nonempty blocks, stored as a
/// restricted-growth string: element i (0-based) maps to the index of its
/// block, blocks numbered by first occurrence. The canonical form makes
/// equality, ordering and enumeration trivial.
///
/// Order convention used throughout this project: the lattice L_[n] is
/// oriented with bottom = the one-block partition and top = all singletons,
/// so "larger" means "finer". The rank function is the block count rho.
class SetPartition {
public:
    /// Builds from a restricted-growth string (0-based block indices).
    static SetPartition from_rgs(int n, std::vector<int> rgs);

    /// Builds from an explicit block decomposition (1-based elements).
    /// Blocks may arrive in any order; the result is canonical.
    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    /// One block {1..n}: the bottom of L_[n].
    static SetPartition bottom(int n);
    /// All singletons: the top of L_[n].
    static SetPartition top(int n);

    int n() const { return n_; }
    const std::vector<int>& rgs() const { return rgs_; }

    /// rho: number of blocks (the rank in L_[n]).
    int block_count() const { return block_count_; }
    /// epsilon: number of essential (size >= 2) blocks.
    int essential_count() const;
    /// lambda: essential shape, the sorted multiset of (block size - 1) over
    /// essential blocks.
    IntegerPartition essential_shape() const;

    bool is_bottom() const { return block_count_ == 1; }
    bool is_top() const { return block_count_ == n_; }

    /// Block decomposition, blocks ordered by minimum element, elements
    /// ascending (this is exactly the first-occurrence order of the RGS).
    std::vector<std::vector<int>> blocks() const;
    /// Sizes of the blocks in RGS block order.
    std::vector<int> block_sizes() const;
    /// 0-based block index of a 1-based element.
    int block_of(int element) const;

    /// Compact rendering "{1,2,3,5,7|9|4,6,8}".
    std::string to_string() const;

    auto operator<=>(const SetPartition&) const = default;

private:
    SetPartition(int n, std::vector<int> rgs, int blocks)
        : n_(n), rgs_(std::move(rgs)), block_count_(blocks) {}

    int n_ = 0;
    std::vector<int> rgs_;
    int block_count_ = 0;
};

/// Refinement order of L_[n]: a <= b iff every block of b is contained in a
/// block of a (a coarser-or-equal, b finer-or-equal).
bool leq(const SetPartition& a, const SetPartition& b);

/// Greatest lower bound: the finest common coarsening, i.e. the transitive
/// closure of the union of the two block equivalence relations.
SetPartition meet(const SetPartition& a, const SetPartition& b);

/// Least upper bound: the common refinement; blocks are the nonempty
/// pairwise intersections.
SetPartition join(const SetPartition& a, const SetPartition& b);

/// Shape of the interval [a, b] for a < b: one part (c - 1) for every block
/// of a that splits into c >= 2 blocks of b. For b = top this is the
/// essential shape of a.
IntegerPartition interval_shape(const SetPartition& a, const SetPartition& b);

/// Visits every partition of [n] (restricted to exactly k blocks when given)
/// exactly once, in lexicographic restricted-growth order. The visitor
/// returns false to stop early.
void for_each_partition(int n, std::optional<int> k,
                        const std::function<bool(const SetPartition&)>& visit);

/// Convenience eager variant of for_each_partition.
std::vector<SetPartition> all_partitions(int n, std::optional<int> k = std::nullopt);

/// Stirling number of the second kind, by the triangular recurrence
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1). Memoized; safe for concurrent readers.
BigInt stirling2(int n, int k);

/// Bell number via the Bell triangle. Memoized.
BigInt bell(int n);

} // namespace polydiag
