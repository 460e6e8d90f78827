#include "polydiag/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polydiag {

// ---------------------------------------------------------------------------
// Brick

Brick::Brick(int m, IntegerPartition shape) : m_(m), shape_(std::move(shape)) {
    if (m < 1) throw validation_error("brick dimension parameter must be >= 1");
    if (shape_.empty()) throw validation_error("brick shape must be nonempty");
}

std::string Brick::to_string() const {
    return "M^" + std::to_string(m_) + "_" + shape_.to_string();
}

// ---------------------------------------------------------------------------
// Stratum

Stratum::Stratum(int m, Chain chain) : m_(m), chain_(std::move(chain)) {
    if (m < 1) throw validation_error("ambient dimension parameter must be >= 1");
    if (chain_.empty()) {
        base_size_ = chain_.n();
    } else {
        auto seq = lambda_sequence(chain_);
        base_size_ = seq.front().parts().front();
        fiber_shapes_.assign(seq.begin() + 1, seq.end());
    }
    // Dimension bookkeeping: m n - codim = m rho(pi_1) + sum (m |lambda_i| - 1).
    int rhs = m_ * base_size_;
    for (const auto& sh : fiber_shapes_) rhs += m_ * sh.sum() - 1;
    if (m_ * n() - codim() != rhs)
        throw identity_error("stratum dimension bookkeeping failed for chain " +
                             chain_.to_string());
}

std::optional<Stratum> Stratum::intersect(const Stratum& other) const {
    if (m_ != other.m_)
        throw validation_error("strata live over different ambient dimensions");
    auto merged = intersect_chains(chain_, other.chain_);
    if (!merged) return std::nullopt;
    return Stratum(m_, std::move(*merged));
}

std::optional<Chain> intersect_chains(const Chain& a, const Chain& b) {
    if (a.n() != b.n())
        throw validation_error("chains live on different ground sets");
    std::vector<SetPartition> all = a.partitions();
    all.insert(all.end(), b.partitions().begin(), b.partitions().end());
    std::sort(all.begin(), all.end(), [](const SetPartition& x, const SetPartition& y) {
        if (x.block_count() != y.block_count()) return x.block_count() < y.block_count();
        return x < y;
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        if (!leq(all[i], all[i + 1])) return std::nullopt;
    return Chain(a.n(), std::move(all));
}

// ---------------------------------------------------------------------------
// Bundles

std::pair<int, Brick> divisor_fiber(const SetPartition& pi, int m) {
    if (pi.is_top())
        throw validation_error("the top partition indexes no divisor");
    return {pi.block_count(), Brick(m, pi.essential_shape())};
}

std::string BundleDescription::to_string() const {
    std::ostringstream out;
    out << "X<" << base_size << ">";
    for (const auto& b : fibers) out << " x " << b.to_string();
    return out.str();
}

BundleDescription bundle_description(const Chain& chain, int m) {
    Stratum s(m, chain);
    BundleDescription d;
    d.m = m;
    d.n = chain.n();
    d.whole_space = chain.empty();
    d.base_size = s.base_size();
    for (const auto& sh : s.fiber_shapes()) d.fibers.emplace_back(m, sh);
    d.dim = s.dim();
    d.codim = s.codim();
    return d;
}

std::string BrickDecomposition::to_string() const {
    std::ostringstream out;
    out << "oM^1_(1^" << base_parts.size() << ") -> oM^" << m << "_" << shape.to_string()
        << " ->";
    for (int p : base_parts) out << " oM^" << m << "_(" << p << ")";
    if (permutahedral)
        out << " ; closed: Pi_" << base_parts.size() << " -> M^" << m << "_" << shape.to_string()
            << " -> (M^" << m << "_(1))^" << base_parts.size();
    return out.str();
}

BrickDecomposition brick_decomposition(const IntegerPartition& shape, int m) {
    Brick brick(m, shape); // validates m and shape
    if (brick.simple())
        throw validation_error("simple bricks admit no compound decomposition");
    BrickDecomposition d;
    d.m = m;
    d.shape = shape;
    d.torus_rank = shape.part_count() - 1;
    d.base_parts = shape.parts();
    d.permutahedral = shape.all_ones();
    return d;
}

// ---------------------------------------------------------------------------
// Refinement order on integer partitions

namespace {

bool fill_bins(std::vector<int>& bins, const std::vector<int>& parts, std::size_t idx) {
    if (idx == parts.size()) return true; // equal weights force all bins to 0
    int p = parts[idx];
    std::vector<int> tried;
    for (std::size_t b = 0; b < bins.size(); ++b) {
        if (bins[b] < p) continue;
        if (std::find(tried.begin(), tried.end(), bins[b]) != tried.end()) continue;
        tried.push_back(bins[b]);
        bins[b] -= p;
        if (fill_bins(bins, parts, idx + 1)) return true;
        bins[b] += p;
    }
    return false;
}

} // namespace

bool brick_order_leq(const IntegerPartition& coarse, const IntegerPartition& fine) {
    if (coarse.sum() != fine.sum())
        throw validation_error("refinement order compares partitions of equal weight only");
    std::vector<int> bins = coarse.parts();
    return fill_bins(bins, fine.parts(), 0);
}

// ---------------------------------------------------------------------------
// Strata of a brick: chains in the product lattice L_lambda

namespace {

// Interval shape between componentwise-comparable tuples; equal factors
// contribute nothing.
IntegerPartition tuple_interval_shape(const LambdaTuple& a, const LambdaTuple& b) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        IntegerPartition factor = interval_shape(a[i], b[i]);
        parts.insert(parts.end(), factor.parts().begin(), factor.parts().end());
    }
    return IntegerPartition(std::move(parts));
}

struct LambdaLattice {
    std::vector<std::vector<SetPartition>> factor_elements; // lex order per factor
    LambdaTuple bottom, top;

    explicit LambdaLattice(const IntegerPartition& shape) {
        for (int nu : shape.parts()) {
            factor_elements.push_back(all_partitions(nu + 1));
            bottom.push_back(SetPartition::bottom(nu + 1));
            top.push_back(SetPartition::top(nu + 1));
        }
    }

    // All tuples componentwise >= from, excluding `exclude_equal` and the top
    // tuple, odometer order over per-factor refinement lists.
    bool for_each_above(const LambdaTuple& from, bool exclude_equal,
                        const std::function<bool(const LambdaTuple&)>& visit) const {
        std::vector<std::vector<const SetPartition*>> options(factor_elements.size());
        for (std::size_t i = 0; i < factor_elements.size(); ++i)
            for (const auto& cand : factor_elements[i])
                if (leq(from[i], cand)) options[i].push_back(&cand);
        std::vector<std::size_t> idx(options.size(), 0);
        while (true) {
            bool equal = true, is_top = true;
            for (std::size_t i = 0; i < options.size(); ++i) {
                if (*options[i][idx[i]] != from[i]) equal = false;
                if (!options[i][idx[i]]->is_top()) is_top = false;
            }
            if (!(exclude_equal && equal) && !is_top) {
                LambdaTuple t;
                t.reserve(options.size());
                for (std::size_t i = 0; i < options.size(); ++i) t.push_back(*options[i][idx[i]]);
                if (!visit(t)) return false;
            }
            std::size_t i = 0;
            while (i < options.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
            if (i == options.size()) break;
        }
        return true;
    }
};

struct BrickChainDfs {
    const LambdaLattice* lattice;
    const std::function<bool(const BrickStratum&)>* visit;
    std::vector<LambdaTuple> stack;

    bool emit() {
        BrickStratum bs;
        bs.chain = stack;
        LambdaTuple prev = lattice->bottom;
        for (const auto& t : stack) {
            bs.shapes.push_back(tuple_interval_shape(prev, t));
            prev = t;
        }
        bs.shapes.push_back(tuple_interval_shape(prev, lattice->top));
        return (*visit)(bs);
    }

    bool run(const LambdaTuple& last) {
        return lattice->for_each_above(last, /*exclude_equal=*/true,
                                       [&](const LambdaTuple& next) {
                                           stack.push_back(next);
                                           bool keep = emit() && run(next);
                                           stack.pop_back();
                                           return keep;
                                       });
    }
};

} // namespace

void for_each_brick_stratum(const IntegerPartition& shape,
                            const std::function<bool(const BrickStratum&)>& visit) {
    if (shape.empty()) throw validation_error("brick shape must be nonempty");
    LambdaLattice lattice(shape);
    BrickChainDfs dfs{&lattice, &visit, {}};
    if (!dfs.emit()) return; // the empty chain: the open brick itself
    dfs.run(lattice.bottom);
}

} // namespace polydiag
