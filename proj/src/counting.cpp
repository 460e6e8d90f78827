#include "polydiag/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace polydiag {

namespace {

std::mutex count_mutex;

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace

BigInt z(int n) {
    if (n <= 0) throw validation_error("z requires n >= 1");
    static std::vector<BigInt> memo = {BigInt(0), BigInt(1)}; // memo[1] = Z(1)
    std::lock_guard<std::mutex> lock(count_mutex);
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        BigInt val = 0;
        for (int k = 1; k < m; ++k) val += stirling2(m, k) * memo[k];
        memo.push_back(val);
    }
    return memo[n];
}

BigInt polydiag_strata(int n) {
    if (n < 2) throw validation_error("polydiag_strata requires n >= 2");
    return 2 * z(n);
}

BigInt fm_strata(int n) {
    if (n < 2) throw validation_error("fm_strata requires n >= 2");
    // g(s): nests on an s-set whose members are proper subsets;
    // full(s) = 2 g(s): all nests on an s-set (the member equal to the whole
    // set is either present or not). Peeling off the maximal members gives
    //   g(s) = sum over collections of disjoint >=2-blocks of sizes < s
    //          of the product of g(block size),
    // computed below by conditioning on the block containing element s.
    std::vector<BigInt> g(static_cast<std::size_t>(n) + 1);
    std::vector<BigInt> full(static_cast<std::size_t>(n) + 1);
    g[0] = g[1] = 1;
    full[0] = full[1] = 1;
    for (int s = 2; s <= n; ++s) {
        // full[j] for j < s doubles as the "collections of disjoint blocks
        // weighted by g" count, since both satisfy the same recursion.
        BigInt val = full[s - 1];
        for (int c = 2; c <= s - 1; ++c)
            val += binomial(static_cast<unsigned long>(s - 1), static_cast<unsigned long>(c - 1)) *
                   g[c] * full[s - c];
        g[s] = val;
        full[s] = 2 * val;
    }
    return full[n];
}

BigInt strata_by_codim(int n, int k) {
    if (n < 2) throw validation_error("strata_by_codim requires n >= 2");
    if (k < 0 || k > n - 1)
        throw validation_error("codimension " + std::to_string(k) + " out of range [0," +
                               std::to_string(n - 1) + "]");
    if (k == 0) return 1; // the empty chain
    // chains_below[b][j]: number of j-chains whose finest member is a fixed
    // partition with b blocks; coarser members merge blocks, S(b,a) ways each.
    std::vector<std::vector<BigInt>> chains_below(
        static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(k) + 1));
    for (int b = 1; b <= n - 1; ++b) {
        chains_below[b][1] = 1;
        for (int j = 2; j <= k; ++j) {
            BigInt sum = 0;
            for (int a = j - 1; a <= b - 1; ++a)
                sum += stirling2(b, a) * chains_below[a][j - 1];
            chains_below[b][j] = sum;
        }
    }
    BigInt total = 0;
    for (int b = k; b <= n - 1; ++b) total += stirling2(n, b) * chains_below[b][k];
    return total;
}

BigInt partitions_of_shape(int n, const std::vector<int>& sizes) {
    if (std::accumulate(sizes.begin(), sizes.end(), 0) != n)
        throw validation_error("block sizes do not sum to the ground-set size");
    BigInt count = factorial(static_cast<unsigned long>(n));
    for (int s : sizes) {
        if (s < 1) throw validation_error("block sizes must be positive");
        count /= factorial(static_cast<unsigned long>(s));
    }
    std::map<int, int> mult;
    for (int s : sizes) ++mult[s];
    for (const auto& [size, m] : mult) count /= factorial(static_cast<unsigned long>(m));
    return count;
}

BigInt ThetaStage::total() const {
    BigInt sum = 0;
    for (const auto& [sizes, count] : centers) sum += count;
    return sum;
}

namespace {

// Integer partitions of n into exactly k parts, descending lexicographic.
void shapes_with_k_parts(int n, int k, int max_part, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    // Each remaining part is between 1 and max_part; k parts must reach n.
    for (int p = std::min(n - (k - 1), max_part); p >= 1; --p) {
        if (p * k < n) break;
        cur.push_back(p);
        shapes_with_k_parts(n - p, k - 1, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<ThetaStage> theta_schedule(int n) {
    if (n < 1) throw validation_error("theta_schedule requires n >= 1");
    std::vector<ThetaStage> schedule;
    // For n <= 3 the blowdown is the identity: no stage has a center with
    // more than one essential block.
    for (int stage = 2; stage <= n - 2; ++stage) {
        ThetaStage st{stage, {}};
        std::vector<std::vector<int>> shapes;
        std::vector<int> cur;
        shapes_with_k_parts(n, stage, n, cur, shapes);
        for (const auto& sizes : shapes) {
            int essential = static_cast<int>(
                std::count_if(sizes.begin(), sizes.end(), [](int s) { return s >= 2; }));
            if (essential <= 1) continue;
            st.centers.emplace_back(sizes, partitions_of_shape(n, sizes));
        }
        schedule.push_back(std::move(st));
    }
    return schedule;
}

std::vector<std::pair<int, BigInt>> construction_schedule(int n) {
    if (n < 2) throw validation_error("construction_schedule requires n >= 2");
    std::vector<std::pair<int, BigInt>> stages;
    for (int k = 1; k <= n - 1; ++k) stages.emplace_back(k, stirling2(n, k));
    return stages;
}

} // namespace polydiag
