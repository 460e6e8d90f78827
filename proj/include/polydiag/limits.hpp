#pragma once

#include <array>
#include <vector>

#include "polydiag/bigint.hpp"
#include "polydiag/trees.hpp"

namespace polydiag {

/// Pairwise collision rates of a degenerating configuration: entry (i,j) is
/// the exponent e with distance(i,j) = O(t^e) as t -> 0, zero meaning the two
/// points do not collide. Rates are rationals; only their relative order
/// matters to the classification.
class ApproachProfile {
public:
    /// Accepts a full n x n matrix (diagonal entries ignored). Asymmetric or
    /// negative entries are rejected outright; the ultrametric law is checked
    /// separately by violations().
    ApproachProfile(int n, std::vector<std::vector<Rational>> exponents);

    int n() const { return n_; }
    const Rational& exponent(int i, int j) const; // 1-based, i != j

    /// Triples (i,j,k) with e_ik < min(e_ij, e_jk): failures of the valuation
    /// law. Empty iff the profile is realizable by approach curves.
    std::vector<std::array<int, 3>> violations() const;
    bool valid() const { return violations().empty(); }

private:
    int n_ = 0;
    std::vector<std::vector<Rational>> e_;
};

/// A family of approach curves: point i is a vector of m polynomials in t
/// with rational coefficients (ascending powers).
struct CurveFamily {
    int n = 0;
    int m = 0;
    /// coeffs[i][c][d]: coefficient of t^d in coordinate c of point i+1.
    std::vector<std::vector<std::vector<Rational>>> coeffs;
};

/// Pairwise orders of vanishing at t = 0 of the curve differences. Identical
/// curves are rejected (the family never enters the configuration space).
/// The result satisfies the ultrametric law automatically.
ApproachProfile profile_from_curves(const CurveFamily& curves);

/// Which stratum the family limits into.
struct Classification {
    Chain chain;
    LeveledTree tree;
    Nest nest; // the blowdown image label in X[n]
};

/// Thresholding the profile at each distinct positive rate yields the chain
/// of partitions of the limiting stratum: pi_j glues i,j iff e_ij >= (j-th
/// smallest positive rate). The all-zero profile classifies to the empty
/// chain (no collision at all).
Classification classify(const ApproachProfile& profile);

} // namespace polydiag
