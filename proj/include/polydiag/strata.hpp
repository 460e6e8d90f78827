#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polydiag/partitions.hpp"
#include "polydiag/trees.hpp"

namespace polydiag {

/// A brick: the projective variety obtained from the product arrangement
/// indexed by an integer partition lambda over an m-dimensional factor, by
/// blowing up all arrangement strata and taking the proper transform of the
/// exceptional projective space. Purely combinatorial data here: the
/// geometry enters only through dimensions and Hodge polynomials.
class Brick {
public:
    Brick(int m, IntegerPartition shape);

    int m() const { return m_; }
    const IntegerPartition& shape() const { return shape_; }
    /// Complex dimension m|lambda| - 1.
    int dim() const { return m_ * shape_.sum() - 1; }
    /// Simple = one part; compound otherwise.
    bool simple() const { return shape_.part_count() == 1; }

    /// "M^2_(3,1)".
    std::string to_string() const;

    auto operator<=>(const Brick&) const = default;

private:
    int m_ = 1;
    IntegerPartition shape_;
};

/// A stratum of the polydiagonal compactification for a fixed chain, with the
/// bookkeeping the chain determines: codimension = chain length, base size
/// rho(pi_1), fiber bricks from the lambda sequence.
class Stratum {
public:
    Stratum(int m, Chain chain);

    int n() const { return chain_.n(); }
    int m() const { return m_; }
    const Chain& chain() const { return chain_; }
    int codim() const { return chain_.length(); }
    int dim() const { return m_ * n() - codim(); }
    /// rho(pi_1); n for the empty chain (the whole space over itself).
    int base_size() const { return base_size_; }
    /// lambda_1..lambda_k; empty for the empty chain.
    const std::vector<IntegerPartition>& fiber_shapes() const { return fiber_shapes_; }

    /// Nonempty exactly when the chains merge into a chain, in which case the
    /// result is the stratum of the union.
    std::optional<Stratum> intersect(const Stratum& other) const;

private:
    int m_ = 1;
    Chain chain_;
    int base_size_ = 0;
    std::vector<IntegerPartition> fiber_shapes_;
};

/// Merges two chains on the same ground set; empty when the union is not
/// totally ordered. S_a meets S_b exactly when this succeeds.
std::optional<Chain> intersect_chains(const Chain& a, const Chain& b);

/// The divisor of a partition pi (pi != top) is a bundle over X<rho(pi)> with
/// fiber the brick of the essential shape of pi.
std::pair<int, Brick> divisor_fiber(const SetPartition& pi, int m);

/// Bundle structure of a stratum: base X<rho(pi_1)> and one brick fiber per
/// lambda_i. For the empty chain, the whole-space description.
struct BundleDescription {
    int m = 1;
    int n = 0;
    bool whole_space = false;
    int base_size = 0;
    std::vector<Brick> fibers;
    int dim = 0;
    int codim = 0;

    /// "X<3> x M^1_(2) x M^1_(1,1) x M^1_(1,1)".
    std::string to_string() const;
};

BundleDescription bundle_description(const Chain& chain, int m);

/// Fibration data of a compound brick: the open brick fibers over the product
/// of open simple bricks with an algebraic-torus-quotient fiber of the stated
/// rank; for lambda = 1^r the closed brick fibers over (P^{m-1})^r with the
/// permutahedral variety as fiber.
struct BrickDecomposition {
    int m = 1;
    IntegerPartition shape;
    int torus_rank = 0;           // r - 1
    std::vector<int> base_parts;  // nu_1..nu_r, one open simple brick each
    bool permutahedral = false;   // lambda = 1^r

    std::string to_string() const;
};

/// Throws for simple bricks: they are the irreducible pieces.
BrickDecomposition brick_decomposition(const IntegerPartition& shape, int m);

/// Refinement order on integer partitions of the same weight: true iff every
/// part of coarse is a sum of parts of fine. When true, the fine brick is an
/// iterated blowup of the coarse one.
bool brick_order_leq(const IntegerPartition& coarse, const IntegerPartition& fine);

/// An element of the product lattice L_lambda: one partition of [nu_i + 1]
/// per part of lambda, ordered componentwise.
using LambdaTuple = std::vector<SetPartition>;

/// A stratum of the brick M^m_lambda: a chain in L_lambda avoiding bottom and
/// top, together with the interval shapes lambda_0..lambda_k cut out by the
/// chain (boundaries included).
struct BrickStratum {
    std::vector<LambdaTuple> chain;
    std::vector<IntegerPartition> shapes;
};

/// Visits every chain in L_lambda that includes neither bottom nor top (the
/// empty chain first), with its shape sequence.
void for_each_brick_stratum(const IntegerPartition& shape,
                            const std::function<bool(const BrickStratum&)>& visit);

} // namespace polydiag
