#pragma once

#include <map>
#include <mutex>

#include "polydiag/counting.hpp"
#include "polydiag/polyring.hpp"
#include "polydiag/strata.hpp"
#include "polydiag/trees.hpp"

namespace polydiag {

/// Outcome of the global stratification identity: the sum of the open-stratum
/// polynomials over all chains must equal the universal polynomial, exactly.
struct ConsistencyReport {
    bool ok = false;
    int m = 0;
    int n = 0;
    XPoly expected; // the universal polynomial
    XPoly actual;   // the chain sum
    XPoly diff;     // actual - expected, zero when ok
};

/// Hodge-polynomial pipeline for a fixed base dimension m. All results are
/// exact; caches are write-once behind a lock, so a context may be shared
/// across threads.
///
/// The universal polynomial U_n(u, x) evaluates to the Hodge polynomial of
/// the compactification of n points in X once x is replaced by the Hodge
/// polynomial of X itself (in u = z zbar).
class HodgeContext {
public:
    explicit HodgeContext(int m);

    int m() const { return m_; }

    /// By the blowup recurrence:
    /// U_n = x^n + sum_{k<n} S(n,k) (e(P^{(n-k)m-1}) - 1) U_k, U_1 = x.
    XPoly u_poly(int n);

    /// The same polynomial by direct summation over index chains
    /// s = j_0 < ... < j_r = n; an independent route kept for cross-checks.
    XPoly u_poly_closed(int n);

    /// Hodge polynomial of the open brick for a shape lambda:
    /// prod_i prod_{j=1..nu_i} (u^m - j) divided exactly by (u - 1).
    UPoly open_brick_poly(const IntegerPartition& shape);

    /// Hodge polynomial of the closed brick: the sum over its strata (chains
    /// in L_lambda missing bottom and top) of products of open brick
    /// polynomials of the interval shapes.
    UPoly brick_poly(const IntegerPartition& shape);

    /// Closed stratum: U_{rho(pi_1)} times the closed brick polynomials of
    /// lambda_1..lambda_k. Open stratum: e(Conf(X, rho(pi_1))) times the open
    /// ones. The empty chain gives the whole space / the configuration space.
    XPoly stratum_poly(const Chain& chain, bool open);

    /// Verifies sum over all chains of stratum_poly(chain, open) == u_poly(n),
    /// coefficientwise.
    ConsistencyReport consistency_check(int n);

private:
    int m_ = 1;
    std::mutex mutex_;
    std::map<int, XPoly> u_memo_;
    std::map<IntegerPartition, UPoly> open_brick_memo_;
    std::map<IntegerPartition, UPoly> brick_memo_;
};

/// e(Conf(X, n)) as a polynomial in x = e(X): solved from the triangular
/// system x^n = sum_k S(n,k) conf_poly(k) given by the polydiagonal
/// decomposition of the n-th power. Independent of m.
XPoly conf_poly(int n);

} // namespace polydiag
