#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polydiag/bigint.hpp"
#include "polydiag/partitions.hpp"

namespace polydiag {

/// A strictly increasing sequence of partitions of [n] in refinement order,
/// never containing the top (all-singletons) partition. The empty chain is a
/// first-class value: it indexes the open configuration space itself.
class Chain {
public:
    explicit Chain(int n) : n_(n) {
        if (n < 1) throw validation_error("ground-set size must be positive");
    }
    Chain(int n, std::vector<SetPartition> partitions);

    int n() const { return n_; }
    int length() const { return static_cast<int>(partitions_.size()); }
    bool empty() const { return partitions_.empty(); }
    const std::vector<SetPartition>& partitions() const { return partitions_; }

    /// Rendering "{1,2|3,4} < {1,2|3|4}"; the empty chain as "{}".
    std::string to_string() const;

    auto operator<=>(const Chain&) const = default;

private:
    int n_ = 0;
    std::vector<SetPartition> partitions_;
};

/// A collection of subsets of [n], each of size >= 2, pairwise nested or
/// disjoint. Nests index the strata of the Fulton-MacPherson space X[n];
/// here they arise as the sets of essential blocks of chains.
class Nest {
public:
    explicit Nest(int n) : n_(n) {}
    Nest(int n, std::vector<std::vector<int>> members);

    int n() const { return n_; }
    /// Members in canonical order: ascending minimum, then descending size,
    /// so a member precedes everything nested inside it.
    const std::vector<std::vector<int>>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

    std::string to_string() const;

    auto operator<=>(const Nest&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> members_;
};

/// Rooted tree with leaves labeled 1..n: internal vertices carry the set of
/// leaf labels below them, no internal vertex except the root has fewer than
/// two children. Equivalent data to a Nest.
class RootedTree {
public:
    struct Vertex {
        std::vector<int> label; // sorted leaf labels below this vertex
        int parent;             // index into vertices(), -1 for the root
        auto operator<=>(const Vertex&) const = default;
    };

    RootedTree(int n, std::vector<Vertex> vertices);
    static RootedTree from_nest(const Nest& nest);

    int n() const { return n_; }
    /// vertices()[0] is the root with label [1..n].
    const std::vector<Vertex>& vertices() const { return verts_; }
    Nest nest() const;

    /// Leaf labels attached directly to vertex v (elements of v's label not
    /// covered by any internal child).
    std::vector<int> attached_leaves(int v) const;
    std::vector<int> internal_children(int v) const;

    auto operator<=>(const RootedTree&) const = default;

private:
    int n_ = 0;
    std::vector<Vertex> verts_;
};

/// Leveled tree: a rooted tree whose internal vertices carry integer levels,
/// strictly increasing away from the root (level 0), with every level 1..k
/// occupied. Levels live on internal vertices only; leaves are drawn below.
/// Leveled trees on [n] are in bijection with chains in L_[n] minus top.
class LeveledTree {
public:
    struct Vertex {
        std::vector<int> label;
        int parent; // -1 for the root
        int level;  // 0 for the root, >= 1 otherwise
        auto operator<=>(const Vertex&) const = default;
    };

    LeveledTree(int n, std::vector<Vertex> vertices);

    int n() const { return n_; }
    /// k: the number of levels (max level), 0 for the bare root.
    int depth() const { return depth_; }
    const std::vector<Vertex>& vertices() const { return verts_; }

    RootedTree forget() const;
    std::vector<int> attached_leaves(int v) const;
    std::vector<int> internal_children(int v) const;

    auto operator<=>(const LeveledTree&) const = default;

private:
    int n_ = 0;
    int depth_ = 0;
    std::vector<Vertex> verts_;
};

/// Chain -> leveled tree: internal vertices are the essential blocks occurring
/// in the chain, each at the level where it last survives unsubdivided.
LeveledTree chain_to_tree(const Chain& chain);

/// Leveled tree -> chain: the inverse bijection. pi_i groups two leaves
/// together iff the vertex separating them has level >= i.
Chain tree_to_chain(const LeveledTree& tree);

/// lambda_0..lambda_k for a nonempty chain: lambda_0 is the single part
/// rho(pi_1); lambda_i is the shape of [pi_i, pi_{i+1}] with pi_{k+1} = top.
std::vector<IntegerPartition> lambda_sequence(const Chain& chain);

/// All essential blocks occurring in the chain; the label of the stratum's
/// image under the blowdown to X[n].
Nest nest_of(const Chain& chain);

/// Visits every chain in L_[n] minus top exactly once (the empty chain
/// included), in depth-first order extending by refinement; restricted to a
/// fixed length when given. Visitor returns false to stop.
void for_each_chain(int n, std::optional<int> length,
                    const std::function<bool(const Chain&)>& visit);

/// Visits every nest on [n] exactly once, the empty nest included.
void for_each_nest(int n, const std::function<bool(const Nest&)>& visit);

/// Number of level assignments turning the rooted tree into a leveled tree.
BigInt eta_fiber_count(const RootedTree& tree);

/// Enumerates those level assignments as leveled trees.
void for_each_eta_fiber(const RootedTree& tree,
                        const std::function<bool(const LeveledTree&)>& visit);

/// Graphviz rendering: one rank per level, leaves on the bottom rank,
/// internal vertices annotated "label@level".
std::string to_dot(const LeveledTree& tree);

} // namespace polydiag
