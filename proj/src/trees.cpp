#include "polydiag/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace polydiag {

namespace {

std::vector<int> full_label(int n) {
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 1);
    return label;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return false;
    }
    return true;
}

// Canonical member order for nests and tree vertices: ascending minimum,
// then descending size, then lexicographic. A member comes before everything
// nested inside it.
bool member_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

} // namespace

// ---------------------------------------------------------------------------
// Chain

Chain::Chain(int n, std::vector<SetPartition> partitions)
    : n_(n), partitions_(std::move(partitions)) {
    if (n < 1) throw validation_error("ground-set size must be positive");
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        if (partitions_[i].n() != n_)
            throw validation_error("chain member " + std::to_string(i + 1) +
                                   " lives on the wrong ground set");
        if (partitions_[i].is_top())
            throw validation_error("the top partition may not be a chain member");
        if (i > 0 && !(leq(partitions_[i - 1], partitions_[i]) &&
                       partitions_[i - 1] != partitions_[i]))
            throw validation_error("chain is not strictly increasing at position " +
                                   std::to_string(i + 1));
    }
}

std::string Chain::to_string() const {
    if (partitions_.empty()) return "{}";
    std::ostringstream out;
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        if (i) out << " < ";
        out << partitions_[i].to_string();
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Nest

Nest::Nest(int n, std::vector<std::vector<int>> members) : n_(n), members_(std::move(members)) {
    if (n < 1) throw validation_error("ground-set size must be positive");
    for (auto& m : members_) {
        std::sort(m.begin(), m.end());
        if (m.size() < 2) throw validation_error("nest members must have at least 2 elements");
        if (std::adjacent_find(m.begin(), m.end()) != m.end())
            throw validation_error("nest member contains a repeated element");
        if (m.front() < 1 || m.back() > n_)
            throw validation_error("nest member element out of range [1," + std::to_string(n_) +
                                   "]");
    }
    std::sort(members_.begin(), members_.end(), member_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (!is_subset(members_[j], members_[i]) && !is_subset(members_[i], members_[j]) &&
                !is_disjoint(members_[i], members_[j]))
                throw validation_error("nest members overlap without nesting");
}

std::string Nest::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out << '|';
        for (std::size_t j = 0; j < members_[i].size(); ++j) {
            if (j) out << ',';
            out << members_[i][j];
        }
    }
    out << '}';
    return out.str();
}

// ---------------------------------------------------------------------------
// RootedTree

RootedTree::RootedTree(int n, std::vector<Vertex> vertices) : n_(n), verts_(std::move(vertices)) {
    if (n < 1) throw validation_error("ground-set size must be positive");
    if (verts_.empty()) throw validation_error("tree has no root");
    for (auto& v : verts_) std::sort(v.label.begin(), v.label.end());
    if (verts_[0].parent != -1 || verts_[0].label != full_label(n_))
        throw validation_error("vertex 0 must be the root labeled by the full set");

    // Canonical order below the root: parents always precede children.
    std::vector<std::size_t> order(verts_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) {
        if (verts_[a].label.size() != verts_[b].label.size())
            return verts_[a].label.size() > verts_[b].label.size();
        return verts_[a].label < verts_[b].label;
    });
    std::vector<int> where(verts_.size());
    for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = static_cast<int>(i);
    std::vector<Vertex> sorted;
    sorted.reserve(verts_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = verts_[order[i]];
        if (i > 0) {
            if (v.parent < 0 || v.parent >= static_cast<int>(verts_.size()))
                throw validation_error("vertex parent index out of range");
            v.parent = where[v.parent];
        }
        sorted.push_back(std::move(v));
    }
    verts_ = std::move(sorted);

    for (std::size_t i = 1; i < verts_.size(); ++i) {
        const auto& v = verts_[i];
        if (v.parent >= static_cast<int>(i))
            throw validation_error("tree parent links are not acyclic");
        if (v.label.empty() || v.label.front() < 1 || v.label.back() > n_ ||
            std::adjacent_find(v.label.begin(), v.label.end()) != v.label.end())
            throw validation_error("vertex label is not a valid subset of the ground set");
        const auto& p = verts_[v.parent];
        if (!is_subset(v.label, p.label))
            throw validation_error("vertex label not contained in its parent's label");
        if (v.parent != 0 && v.label.size() == p.label.size())
            throw validation_error("non-root vertex has the same label as its parent");
    }
    // Sibling labels must be pairwise disjoint; every non-root vertex needs
    // at least two children (internal or leaf).
    for (std::size_t v = 0; v < verts_.size(); ++v) {
        auto kids = internal_children(static_cast<int>(v));
        std::size_t covered = 0;
        for (std::size_t a = 0; a < kids.size(); ++a) {
            covered += verts_[kids[a]].label.size();
            for (std::size_t b = a + 1; b < kids.size(); ++b)
                if (!is_disjoint(verts_[kids[a]].label, verts_[kids[b]].label))
                    throw validation_error("sibling labels overlap");
        }
        if (covered > verts_[v].label.size())
            throw validation_error("children labels exceed the parent label");
        std::size_t child_count = kids.size() + (verts_[v].label.size() - covered);
        if (v != 0 && child_count < 2)
            throw validation_error("non-root internal vertex with fewer than 2 children");
    }
}

RootedTree RootedTree::from_nest(const Nest& nest) {
    std::vector<Vertex> verts;
    verts.push_back({full_label(nest.n()), -1});
    const auto& members = nest.members();
    for (const auto& m : members) verts.push_back({m, -1});
    // Parent of a member: the smallest member strictly containing it.
    for (std::size_t i = 0; i < members.size(); ++i) {
        int parent = 0;
        std::size_t best = static_cast<std::size_t>(nest.n()) + 1;
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (j == i || members[j].size() <= members[i].size()) continue;
            if (is_subset(members[i], members[j]) && members[j].size() < best) {
                best = members[j].size();
                parent = static_cast<int>(j) + 1;
            }
        }
        verts[i + 1].parent = parent;
    }
    return RootedTree(nest.n(), std::move(verts));
}

Nest RootedTree::nest() const {
    std::vector<std::vector<int>> members;
    for (std::size_t i = 1; i < verts_.size(); ++i) members.push_back(verts_[i].label);
    return Nest(n_, std::move(members));
}

std::vector<int> RootedTree::internal_children(int v) const {
    std::vector<int> kids;
    for (std::size_t i = 1; i < verts_.size(); ++i)
        if (verts_[i].parent == v) kids.push_back(static_cast<int>(i));
    return kids;
}

std::vector<int> RootedTree::attached_leaves(int v) const {
    std::vector<int> covered;
    for (int k : internal_children(v))
        covered.insert(covered.end(), verts_[k].label.begin(), verts_[k].label.end());
    std::sort(covered.begin(), covered.end());
    std::vector<int> leaves;
    std::set_difference(verts_[v].label.begin(), verts_[v].label.end(), covered.begin(),
                        covered.end(), std::back_inserter(leaves));
    return leaves;
}

// ---------------------------------------------------------------------------
// LeveledTree

LeveledTree::LeveledTree(int n, std::vector<Vertex> vertices)
    : n_(n), verts_(std::move(vertices)) {
    if (verts_.empty()) throw validation_error("tree has no root");
    for (auto& v : verts_) std::sort(v.label.begin(), v.label.end());

    // Canonical order: root first, then descending label size, then
    // lexicographic. Parents always precede children.
    std::vector<std::size_t> order(verts_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) {
        if (verts_[a].label.size() != verts_[b].label.size())
            return verts_[a].label.size() > verts_[b].label.size();
        return verts_[a].label < verts_[b].label;
    });
    std::vector<int> where(verts_.size());
    for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = static_cast<int>(i);
    std::vector<Vertex> sorted;
    sorted.reserve(verts_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = verts_[order[i]];
        if (i > 0) {
            if (v.parent < 0 || v.parent >= static_cast<int>(verts_.size()))
                throw validation_error("vertex parent index out of range");
            v.parent = where[v.parent];
        }
        sorted.push_back(std::move(v));
    }
    verts_ = std::move(sorted);

    // Structural checks are delegated to RootedTree on the forgetful image;
    // its canonical order coincides with the one above.
    {
        std::vector<RootedTree::Vertex> plain;
        plain.reserve(verts_.size());
        for (const auto& v : verts_) plain.push_back({v.label, v.parent});
        RootedTree shape(n, std::move(plain));
    }

    if (verts_[0].level != 0) throw validation_error("the root must be at level 0");
    for (std::size_t i = 1; i < verts_.size(); ++i) {
        if (verts_[i].level <= verts_[verts_[i].parent].level)
            throw validation_error("levels must strictly increase away from the root");
    }
    for (const auto& v : verts_) depth_ = std::max(depth_, v.level);
    std::vector<char> seen(static_cast<std::size_t>(depth_) + 1, 0);
    for (const auto& v : verts_) seen[v.level] = 1;
    for (int l = 1; l <= depth_; ++l)
        if (!seen[l])
            throw validation_error("level " + std::to_string(l) + " is unoccupied");
}

RootedTree LeveledTree::forget() const {
    std::vector<RootedTree::Vertex> plain;
    plain.reserve(verts_.size());
    for (const auto& v : verts_) plain.push_back({v.label, v.parent});
    return RootedTree(n_, std::move(plain));
}

std::vector<int> LeveledTree::internal_children(int v) const {
    std::vector<int> kids;
    for (std::size_t i = 1; i < verts_.size(); ++i)
        if (verts_[i].parent == v) kids.push_back(static_cast<int>(i));
    return kids;
}

std::vector<int> LeveledTree::attached_leaves(int v) const {
    std::vector<int> covered;
    for (int k : internal_children(v))
        covered.insert(covered.end(), verts_[k].label.begin(), verts_[k].label.end());
    std::sort(covered.begin(), covered.end());
    std::vector<int> leaves;
    std::set_difference(verts_[v].label.begin(), verts_[v].label.end(), covered.begin(),
                        covered.end(), std::back_inserter(leaves));
    return leaves;
}

// ---------------------------------------------------------------------------
// The bijection

LeveledTree chain_to_tree(const Chain& chain) {
    const int n = chain.n();
    // Every essential block, at the level where it last appears.
    std::map<std::vector<int>, int> level_of;
    const auto& parts = chain.partitions();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& block : parts[i].blocks())
            if (block.size() >= 2) level_of[block] = static_cast<int>(i) + 1;

    std::vector<LeveledTree::Vertex> verts;
    verts.push_back({full_label(n), -1, 0});
    std::vector<std::vector<int>> blocks;
    for (const auto& [block, level] : level_of) {
        verts.push_back({block, -1, level});
        blocks.push_back(block);
    }
    // Parent: smallest block strictly containing this one, else the root.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        int parent = 0;
        std::size_t best = static_cast<std::size_t>(n) + 1;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (j == i || blocks[j].size() <= blocks[i].size()) continue;
            if (is_subset(blocks[i], blocks[j]) && blocks[j].size() < best) {
                best = blocks[j].size();
                parent = static_cast<int>(j) + 1;
            }
        }
        verts[i + 1].parent = parent;
    }
    return LeveledTree(n, std::move(verts));
}

Chain tree_to_chain(const LeveledTree& tree) {
    const int n = tree.n();
    const int k = tree.depth();
    std::vector<SetPartition> parts;
    parts.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        // Blocks of pi_i: labels of the highest vertices still alive at
        // level i, i.e. level >= i while the parent sits below i.
        std::vector<std::vector<int>> blocks;
        std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& v : tree.vertices()) {
            if (v.parent < 0) continue;
            if (v.level >= i && tree.vertices()[v.parent].level < i) {
                blocks.push_back(v.label);
                for (int e : v.label) covered[e] = 1;
            }
        }
        for (int e = 1; e <= n; ++e)
            if (!covered[e]) blocks.push_back({e});
        parts.push_back(SetPartition::from_blocks(n, blocks));
    }
    return Chain(n, std::move(parts));
}

std::vector<IntegerPartition> lambda_sequence(const Chain& chain) {
    if (chain.empty())
        throw validation_error("the empty chain has no lambda sequence");
    const auto& parts = chain.partitions();
    std::vector<IntegerPartition> seq;
    seq.emplace_back(std::vector<int>{parts.front().block_count()});
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        seq.push_back(interval_shape(parts[i], parts[i + 1]));
    seq.push_back(interval_shape(parts.back(), SetPartition::top(chain.n())));
    return seq;
}

Nest nest_of(const Chain& chain) {
    std::vector<std::vector<int>> members;
    for (const auto& p : chain.partitions())
        for (const auto& block : p.blocks())
            if (block.size() >= 2) members.push_back(block);
    return Nest(chain.n(), std::move(members));
}

// ---------------------------------------------------------------------------
// Chain enumeration

namespace {

std::mutex partitions_cache_mutex;

const std::vector<SetPartition>& cached_partitions(int s) {
    static std::map<int, std::vector<SetPartition>> cache;
    std::lock_guard<std::mutex> lock(partitions_cache_mutex);
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, all_partitions(s)).first;
    return it->second;
}

// Visits every sigma with pi < sigma, excluding sigma = top, by choosing a
// partition of each block of pi (odometer order, skipping the identity and
// the all-singletons combination).
bool for_each_proper_refinement(const SetPartition& pi,
                                const std::function<bool(const SetPartition&)>& visit) {
    const int n = pi.n();
    auto blocks = pi.blocks();
    const std::size_t r = blocks.size();
    std::vector<const std::vector<SetPartition>*> choices(r);
    for (std::size_t b = 0; b < r; ++b)
        choices[b] = &cached_partitions(static_cast<int>(blocks[b].size()));

    std::vector<std::size_t> idx(r, 0);
    std::vector<int> rgs(static_cast<std::size_t>(n));
    std::vector<int> key(static_cast<std::size_t>(n), 0);
    while (true) {
        bool identity = true, all_top = true;
        for (std::size_t b = 0; b < r; ++b) {
            const SetPartition& q = (*choices[b])[idx[b]];
            if (!q.is_bottom()) identity = false;
            if (!q.is_top()) all_top = false;
        }
        if (!identity && !all_top) {
            // Stitch the per-block partitions into one partition of [n].
            for (std::size_t b = 0; b < r; ++b) {
                const SetPartition& q = (*choices[b])[idx[b]];
                for (std::size_t j = 0; j < blocks[b].size(); ++j)
                    key[blocks[b][j] - 1] = q.rgs()[j];
            }
            int next = 0;
            for (int e = 0; e < n; ++e) {
                // First occurrence decides the block index: two elements share
                // a block iff same pi-block and same sub-block within it.
                int found = -1;
                for (int f = 0; f < e; ++f)
                    if (pi.rgs()[f] == pi.rgs()[e] && key[f] == key[e]) {
                        found = rgs[f];
                        break;
                    }
                rgs[e] = found >= 0 ? found : next++;
            }
            if (!visit(SetPartition::from_rgs(n, rgs))) return false;
        }
        // Advance the odometer.
        std::size_t b = 0;
        while (b < r && ++idx[b] == choices[b]->size()) idx[b++] = 0;
        if (b == r) break;
    }
    return true;
}

struct ChainDfs {
    int n;
    std::optional<int> target_length;
    const std::function<bool(const Chain&)>* visit;
    std::vector<SetPartition> stack;

    bool emit() {
        return (*visit)(Chain(n, stack));
    }

    bool run(const SetPartition& last) {
        int len = static_cast<int>(stack.size());
        if (target_length) {
            if (len == *target_length) return true; // emitted by caller
            // Ranks strictly increase and stay below n.
            if (len + (n - 1 - last.block_count()) < *target_length) return true;
        }
        return for_each_proper_refinement(last, [&](const SetPartition& next) {
            stack.push_back(next);
            bool keep = true;
            if (!target_length || static_cast<int>(stack.size()) == *target_length)
                keep = emit();
            if (keep) keep = run(next);
            stack.pop_back();
            return keep;
        });
    }
};

} // namespace

void for_each_chain(int n, std::optional<int> length,
                    const std::function<bool(const Chain&)>& visit) {
    if (n < 2) throw validation_error("chain enumeration requires n >= 2");
    if (length && (*length < 0 || *length > n - 1))
        throw validation_error("chain length " + std::to_string(*length) + " out of range [0," +
                               std::to_string(n - 1) + "]");
    ChainDfs dfs{n, length, &visit, {}};
    if (!length || *length == 0)
        if (!visit(Chain(n))) return;
    if (length && *length == 0) return;

    bool keep = true;
    for_each_partition(n, std::nullopt, [&](const SetPartition& first) {
        if (first.is_top()) return true;
        dfs.stack.push_back(first);
        if (!length || *length == 1) keep = dfs.emit();
        if (keep) keep = dfs.run(first);
        dfs.stack.pop_back();
        return keep;
    });
}

// ---------------------------------------------------------------------------
// Nest enumeration

namespace {

struct NestDfs {
    int n;
    const std::function<bool(const Nest&)>* visit;
    std::vector<std::vector<int>> prefix;

    bool emit() { return (*visit)(Nest(n, prefix)); }

    // Enumerates the ways to place disjoint >=2-blocks (each a proper subset
    // of the current ground set) on `avail`, recursing into each block for
    // its own proper nest, then running `cont`.
    bool covers(const std::vector<int>& avail, std::size_t ground_size,
                const std::function<bool()>& cont) {
        if (avail.empty()) return cont();
        const int e = avail.front();
        std::vector<int> rest(avail.begin() + 1, avail.end());
        if (!covers(rest, ground_size, cont)) return false; // e stays uncovered
        const std::size_t rn = rest.size();
        for (std::size_t mask = 1; mask < (static_cast<std::size_t>(1) << rn); ++mask) {
            std::vector<int> block{e};
            std::vector<int> remaining;
            for (std::size_t i = 0; i < rn; ++i)
                (mask >> i & 1 ? block : remaining).push_back(rest[i]);
            if (block.size() == ground_size) continue; // the full set is not proper
            prefix.push_back(block);
            bool keep = covers(block, block.size(),
                               [&] { return covers(remaining, ground_size, cont); });
            prefix.pop_back();
            if (!keep) return false;
        }
        return true;
    }
};

} // namespace

void for_each_nest(int n, const std::function<bool(const Nest&)>& visit) {
    if (n < 2) throw validation_error("nest enumeration requires n >= 2");
    // Subset choices are driven by word-sized bitmasks.
    if (n > 63) throw validation_error("nest enumeration supports n <= 63");
    NestDfs dfs{n, &visit, {}};
    std::vector<int> all = full_label(n);
    dfs.covers(all, all.size(), [&] {
        if (!dfs.emit()) return false;
        // The same proper nest again, with the full set adjoined.
        dfs.prefix.push_back(all);
        bool keep = dfs.emit();
        dfs.prefix.pop_back();
        return keep;
    });
}

// ---------------------------------------------------------------------------
// Eta fibers

namespace {

// Levels are assigned one at a time: at each step any nonempty subset of the
// vertices whose parent is already placed (or is the root) may form the next
// level. This visits every legal assignment exactly once.
bool eta_dfs(const RootedTree& tree, std::vector<int>& level, int next_level, int unassigned,
             const std::function<bool(const std::vector<int>&)>& emit) {
    if (unassigned == 0) return emit(level);
    std::vector<int> avail;
    for (std::size_t v = 1; v < tree.vertices().size(); ++v) {
        int parent = tree.vertices()[v].parent;
        if (level[v] == 0 && (parent == 0 || level[parent] > 0))
            avail.push_back(static_cast<int>(v));
    }
    const std::size_t an = avail.size();
    for (std::size_t mask = 1; mask < (static_cast<std::size_t>(1) << an); ++mask) {
        int placed = 0;
        for (std::size_t i = 0; i < an; ++i)
            if (mask >> i & 1) {
                level[avail[i]] = next_level;
                ++placed;
            }
        bool keep = eta_dfs(tree, level, next_level + 1, unassigned - placed, emit);
        for (std::size_t i = 0; i < an; ++i)
            if (mask >> i & 1) level[avail[i]] = 0;
        if (!keep) return false;
    }
    return true;
}

} // namespace

namespace {

void require_maskable(const RootedTree& tree) {
    if (tree.vertices().size() > 64)
        throw validation_error("level assignment enumeration supports at most 63 "
                               "internal vertices");
}

} // namespace

BigInt eta_fiber_count(const RootedTree& tree) {
    require_maskable(tree);
    BigInt count = 0;
    std::vector<int> level(tree.vertices().size(), 0);
    eta_dfs(tree, level, 1, static_cast<int>(tree.vertices().size()) - 1,
            [&](const std::vector<int>&) {
                ++count;
                return true;
            });
    return count;
}

void for_each_eta_fiber(const RootedTree& tree,
                        const std::function<bool(const LeveledTree&)>& visit) {
    require_maskable(tree);
    std::vector<int> level(tree.vertices().size(), 0);
    eta_dfs(tree, level, 1, static_cast<int>(tree.vertices().size()) - 1,
            [&](const std::vector<int>& lv) {
                std::vector<LeveledTree::Vertex> verts;
                verts.reserve(tree.vertices().size());
                for (std::size_t v = 0; v < tree.vertices().size(); ++v)
                    verts.push_back({tree.vertices()[v].label, tree.vertices()[v].parent,
                                     v == 0 ? 0 : lv[v]});
                return visit(LeveledTree(tree.n(), std::move(verts)));
            });
}

// ---------------------------------------------------------------------------
// DOT rendering

std::string to_dot(const LeveledTree& tree) {
    std::ostringstream out;
    out << "graph leveled_tree {\n  rankdir=TB;\n  node [shape=plaintext];\n";
    const auto& verts = tree.vertices();
    for (int l = 0; l <= tree.depth(); ++l) {
        out << "  { rank=same;";
        for (std::size_t v = 0; v < verts.size(); ++v) {
            if (verts[v].level != l) continue;
            out << " v" << v << " [label=\"";
            if (v == 0) {
                out << "root";
            } else {
                for (std::size_t i = 0; i < verts[v].label.size(); ++i) {
                    if (i) out << ',';
                    out << verts[v].label[i];
                }
                out << '@' << verts[v].level;
            }
            out << "\"];";
        }
        out << " }\n";
    }
    out << "  { rank=same;";
    for (int e = 1; e <= tree.n(); ++e) out << " l" << e << " [label=\"" << e << "\"];";
    out << " }\n";
    for (std::size_t v = 1; v < verts.size(); ++v)
        out << "  v" << verts[v].parent << " -- v" << v << ";\n";
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (int e : tree.attached_leaves(static_cast<int>(v)))
            out << "  v" << v << " -- l" << e << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace polydiag
