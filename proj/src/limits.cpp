#include "polydiag/limits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace polydiag {

ApproachProfile::ApproachProfile(int n, std::vector<std::vector<Rational>> exponents)
    : n_(n), e_(std::move(exponents)) {
    if (n < 1) throw validation_error("profile needs at least one point");
    if (static_cast<int>(e_.size()) != n)
        throw validation_error("exponent matrix must have n rows");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(e_[i].size()) != n)
            throw validation_error("exponent matrix row " + std::to_string(i + 1) +
                                   " must have n entries");
        e_[i][i] = 0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (e_[i][j] < 0)
                throw validation_error("exponent (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ") is negative");
            if (e_[i][j] != e_[j][i])
                throw validation_error("exponent matrix is not symmetric at (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
}

const Rational& ApproachProfile::exponent(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j)
        throw validation_error("exponent index out of range");
    return e_[i - 1][j - 1];
}

std::vector<std::array<int, 3>> ApproachProfile::violations() const {
    std::vector<std::array<int, 3>> bad;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = j + 1; k < n_; ++k) {
                if (i == j || i == k) continue;
                // e_jk >= min(e_ji, e_ik) for every triple.
                if (e_[j][k] < std::min(e_[j][i], e_[i][k]))
                    bad.push_back({j + 1, i + 1, k + 1});
            }
    return bad;
}

ApproachProfile profile_from_curves(const CurveFamily& curves) {
    if (curves.n < 1 || curves.m < 1)
        throw validation_error("curve family needs n >= 1 points in m >= 1 coordinates");
    if (static_cast<int>(curves.coeffs.size()) != curves.n)
        throw validation_error("curve family must list n curves");
    for (const auto& point : curves.coeffs)
        if (static_cast<int>(point.size()) != curves.m)
            throw validation_error("every curve must have m coordinates");

    auto degree = [&](int i, int c) {
        return static_cast<int>(curves.coeffs[i][c].size());
    };
    std::vector<std::vector<Rational>> e(
        static_cast<std::size_t>(curves.n),
        std::vector<Rational>(static_cast<std::size_t>(curves.n), Rational(0)));
    for (int i = 0; i < curves.n; ++i)
        for (int j = i + 1; j < curves.n; ++j) {
            // Order of vanishing of the difference: the smallest power with a
            // nonzero coefficient in any coordinate.
            int order = -1;
            for (int c = 0; c < curves.m; ++c) {
                int top = std::max(degree(i, c), degree(j, c));
                for (int d = 0; d < top; ++d) {
                    Rational a = d < degree(i, c) ? curves.coeffs[i][c][d] : Rational(0);
                    Rational b = d < degree(j, c) ? curves.coeffs[j][c][d] : Rational(0);
                    if (a != b) {
                        if (order < 0 || d < order) order = d;
                        break;
                    }
                }
            }
            if (order < 0)
                throw validation_error("curves " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) +
                                       " are identical: not a configuration family");
            e[i][j] = e[j][i] = Rational(order);
        }
    return ApproachProfile(curves.n, std::move(e));
}

Classification classify(const ApproachProfile& profile) {
    auto bad = profile.violations();
    if (!bad.empty())
        throw validation_error("profile violates the ultrametric law at triple (" +
                               std::to_string(bad[0][0]) + "," + std::to_string(bad[0][1]) + "," +
                               std::to_string(bad[0][2]) + ")");
    const int n = profile.n();
    std::set<Rational> thresholds;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (profile.exponent(i, j) > 0) thresholds.insert(profile.exponent(i, j));

    std::vector<SetPartition> parts;
    for (const Rational& s : thresholds) {
        // Equivalence classes of "collides at rate >= s"; transitivity is the
        // ultrametric law.
        std::vector<int> repr(static_cast<std::size_t>(n));
        std::iota(repr.begin(), repr.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (repr[x] != x) x = repr[x] = repr[repr[x]];
            return x;
        };
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (profile.exponent(i, j) >= s) repr[find(i - 1)] = find(j - 1);
        std::vector<int> rgs(static_cast<std::size_t>(n));
        std::vector<int> label(static_cast<std::size_t>(n), -1);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            int root = find(i);
            if (label[root] == -1) label[root] = next++;
            rgs[i] = label[root];
        }
        parts.push_back(SetPartition::from_rgs(n, std::move(rgs)));
    }
    Chain chain(n, std::move(parts));
    Classification result{chain, chain_to_tree(chain), nest_of(chain)};
    return result;
}

} // namespace polydiag
