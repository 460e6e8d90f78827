#include "polydiag/hodge.hpp"

namespace polydiag {

HodgeContext::HodgeContext(int m) : m_(m) {
    if (m < 1) throw validation_error("base dimension m must be >= 1");
}

XPoly HodgeContext::u_poly(int n) {
    if (n < 1) throw validation_error("u_poly requires n >= 1");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = u_memo_.find(n);
        if (it != u_memo_.end()) return it->second;
    }
    XPoly result;
    if (n == 1) {
        result = XPoly::variable();
    } else {
        result = XPoly::variable().pow(n);
        for (int k = 1; k < n; ++k) {
            UPoly weight = UPoly(stirling2(n, k)) * projective_reduced((n - k) * m_);
            if (weight.is_zero()) continue;
            result += XPoly(weight) * u_poly(k);
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return u_memo_.emplace(n, std::move(result)).first->second;
}

XPoly HodgeContext::u_poly_closed(int n) {
    if (n < 1) throw validation_error("u_poly_closed requires n >= 1");
    // weight[s]: sum over index chains s = j_0 < ... < j_r = n of the product
    // of S(j_i, j_{i-1}) (e(P^{(j_i - j_{i-1}) m - 1}) - 1).
    std::vector<UPoly> weight(static_cast<std::size_t>(n) + 1);
    weight[n] = UPoly(1);
    for (int s = n - 1; s >= 1; --s) {
        UPoly acc;
        for (int j = s + 1; j <= n; ++j)
            acc += UPoly(stirling2(j, s)) * projective_reduced((j - s) * m_) * weight[j];
        weight[s] = acc;
    }
    XPoly result = XPoly::variable().pow(n);
    for (int s = 1; s <= n - 1; ++s)
        result += XPoly::monomial(weight[s], s);
    return result;
}

XPoly conf_poly(int n) {
    if (n < 1) throw validation_error("conf_poly requires n >= 1");
    static std::mutex conf_mutex;
    static std::vector<XPoly> memo = {XPoly(), XPoly::variable()};
    std::lock_guard<std::mutex> lock(conf_mutex);
    while (static_cast<int>(memo.size()) <= n) {
        int s = static_cast<int>(memo.size());
        XPoly val = XPoly::variable().pow(s);
        for (int k = 1; k < s; ++k) val -= XPoly(UPoly(stirling2(s, k))) * memo[k];
        memo.push_back(std::move(val));
    }
    return memo[n];
}

UPoly HodgeContext::open_brick_poly(const IntegerPartition& shape) {
    if (shape.empty()) throw validation_error("brick shape must be nonempty");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = open_brick_memo_.find(shape);
        if (it != open_brick_memo_.end()) return it->second;
    }
    // Each part contributes the configuration count of nu_i + 1 points in
    // affine m-space modulo translation; the projectivization divides out one
    // torus factor.
    UPoly numerator(1);
    const UPoly um = UPoly::monomial(1, m_);
    for (int nu : shape.parts())
        for (int j = 1; j <= nu; ++j) numerator *= um - UPoly(BigInt(j));
    UPoly result = exact_div(numerator, UPoly::variable() - UPoly(1));
    std::lock_guard<std::mutex> lock(mutex_);
    return open_brick_memo_.emplace(shape, std::move(result)).first->second;
}

UPoly HodgeContext::brick_poly(const IntegerPartition& shape) {
    if (shape.empty()) throw validation_error("brick shape must be nonempty");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = brick_memo_.find(shape);
        if (it != brick_memo_.end()) return it->second;
    }
    UPoly total;
    for_each_brick_stratum(shape, [&](const BrickStratum& bs) {
        UPoly term(1);
        for (const auto& sh : bs.shapes) term *= open_brick_poly(sh);
        total += term;
        return true;
    });
    std::lock_guard<std::mutex> lock(mutex_);
    return brick_memo_.emplace(shape, std::move(total)).first->second;
}

XPoly HodgeContext::stratum_poly(const Chain& chain, bool open) {
    if (chain.empty()) return open ? conf_poly(chain.n()) : u_poly(chain.n());
    auto seq = lambda_sequence(chain);
    int base = seq.front().parts().front();
    XPoly result = open ? conf_poly(base) : u_poly(base);
    for (std::size_t i = 1; i < seq.size(); ++i)
        result *= XPoly(open ? open_brick_poly(seq[i]) : brick_poly(seq[i]));
    return result;
}

ConsistencyReport HodgeContext::consistency_check(int n) {
    if (n < 2) throw validation_error("consistency_check requires n >= 2");
    ConsistencyReport report;
    report.m = m_;
    report.n = n;
    report.expected = u_poly(n);
    XPoly sum;
    for_each_chain(n, std::nullopt, [&](const Chain& chain) {
        sum += stratum_poly(chain, /*open=*/true);
        return true;
    });
    report.actual = sum;
    report.diff = report.actual - report.expected;
    report.ok = report.diff.is_zero();
    return report;
}

} // namespace polydiag
