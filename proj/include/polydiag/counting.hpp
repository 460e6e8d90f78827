#pragma once

#include <utility>
#include <vector>

#include "polydiag/bigint.hpp"
#include "polydiag/partitions.hpp"

namespace polydiag {

/// Number of chains in L_[n] that contain the bottom partition; half the
/// strata count of the polydiagonal compactification. Z(1) = 1 and
/// Z(n) = sum over k < n of S(n,k) Z(k). Memoized.
BigInt z(int n);

/// Total strata of X<n>: 2 Z(n) chains in L_[n] minus top, n >= 2.
BigInt polydiag_strata(int n);

/// Total strata of the Fulton-MacPherson space X[n]: the number of nests on
/// [n], the empty nest included, n >= 2. Computed by a labeled-block DP.
BigInt fm_strata(int n);

/// Number of codimension-k strata of X<n>: length-k chains in L_[n] minus
/// top, via products of Stirling numbers over rank vectors.
BigInt strata_by_codim(int n, int k);

/// One blowdown stage: the partitions with rho = stage and more than one
/// essential block, grouped by block-size multiset.
struct ThetaStage {
    int stage; // rho of the centers blown up at this stage
    /// (block sizes, descending) -> number of set partitions of that shape.
    std::vector<std::pair<std::vector<int>, BigInt>> centers;

    BigInt total() const;
};

/// Stage schedule of the blowdown from X<n> to X[n]: stages run over
/// rho = 2..n-2; empty for n <= 3, where the map is the identity.
std::vector<ThetaStage> theta_schedule(int n);

/// Stage schedule of the blowup construction of X<n> itself: at stage k the
/// centers are the S(n,k) polydiagonals with exactly k blocks, k = 1..n-1.
std::vector<std::pair<int, BigInt>> construction_schedule(int n);

/// Number of set partitions of [n] whose multiset of block sizes is the given
/// one (sizes must sum to n).
BigInt partitions_of_shape(int n, const std::vector<int>& sizes);

} // namespace polydiag
