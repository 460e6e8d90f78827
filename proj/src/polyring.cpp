#include "polydiag/polyring.hpp"

#include <sstream>

namespace polydiag {

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(BigInt coeff, int power) {
    if (power < 0) throw validation_error("monomial power must be nonnegative");
    if (coeff == 0) return UPoly();
    std::vector<BigInt> c(static_cast<std::size_t>(power) + 1);
    c.back() = std::move(coeff);
    return UPoly(std::move(c));
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& UPoly::coeff(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

BigInt UPoly::eval(const BigInt& value) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::pow(int e) const {
    if (e < 0) throw validation_error("polynomial power must be nonnegative");
    UPoly acc(1);
    UPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    const int step = (var == "t") ? 2 : 1;
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt abs_c = abs(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (abs_c != 1 || i == 0) out << abs_c.get_str();
        if (i > 0) {
            out << var;
            if (i * step > 1) out << '^' << i * step;
        }
    }
    return out.str();
}

UPoly exact_div(const UPoly& p, const UPoly& q) {
    if (q.is_zero()) throw validation_error("division by the zero polynomial");
    if (p.is_zero()) return UPoly();
    std::vector<BigInt> rem(p.coeffs());
    const auto& d = q.coeffs();
    int dq = q.degree();
    int dr = p.degree();
    if (dr < dq)
        throw identity_error("polynomial division left remainder " + p.to_string());
    std::vector<BigInt> quot(static_cast<std::size_t>(dr - dq) + 1);
    for (int i = dr; i >= dq; --i) {
        if (rem[i] == 0) continue;
        BigInt factor, leftover;
        mpz_tdiv_qr(factor.get_mpz_t(), leftover.get_mpz_t(), rem[i].get_mpz_t(),
                    d.back().get_mpz_t());
        if (leftover != 0)
            throw identity_error("polynomial division left remainder " +
                                 UPoly(std::vector<BigInt>(rem.begin(), rem.begin() + i + 1))
                                     .to_string());
        quot[i - dq] = factor;
        for (int j = 0; j <= dq; ++j) rem[i - dq + j] -= factor * d[j];
    }
    UPoly remainder{std::vector<BigInt>(rem.begin(), rem.end())};
    if (!remainder.is_zero())
        throw identity_error("polynomial division left remainder " + remainder.to_string());
    return UPoly(std::move(quot));
}

UPoly projective(int d) {
    if (d < 1) throw validation_error("projective requires d >= 1");
    return UPoly(std::vector<BigInt>(static_cast<std::size_t>(d), BigInt(1)));
}

UPoly projective_reduced(int d) {
    if (d < 1) throw validation_error("projective_reduced requires d >= 1");
    std::vector<BigInt> c(static_cast<std::size_t>(d), BigInt(1));
    c[0] = 0;
    return UPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// XPoly

XPoly::XPoly(UPoly constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

XPoly::XPoly(std::vector<UPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::monomial(UPoly coeff, int power) {
    if (power < 0) throw validation_error("monomial power must be nonnegative");
    if (coeff.is_zero()) return XPoly();
    std::vector<UPoly> c(static_cast<std::size_t>(power) + 1);
    c.back() = std::move(coeff);
    return XPoly(std::move(c));
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const UPoly& XPoly::coeff(int i) const {
    static const UPoly zero;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly();
    std::vector<UPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return XPoly(std::move(c));
}

XPoly XPoly::pow(int e) const {
    if (e < 0) throw validation_error("polynomial power must be nonnegative");
    XPoly acc(UPoly(1));
    XPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

XPoly XPoly::eval_x(const XPoly& value) const {
    XPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + XPoly(*it);
    return acc;
}

UPoly XPoly::eval_x(const UPoly& value) const {
    UPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

std::string XPoly::to_string(const std::string& uvar) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const UPoly& c = coeffs_[i];
        if (c.is_zero()) continue;
        // Composite coefficients are parenthesized; single monomials are not.
        int terms = 0;
        for (const auto& cc : c.coeffs())
            if (cc != 0) ++terms;
        std::string cs = c.to_string(uvar);
        bool negative = cs.front() == '-';
        if (negative) cs.erase(cs.begin());
        if (!first)
            out << (negative ? '-' : '+');
        else if (negative)
            out << '-';
        first = false;
        if (i == 0) {
            out << (terms > 1 ? "(" + cs + ")" : cs);
            continue;
        }
        if (terms > 1)
            out << '(' << cs << ')';
        else if (cs != "1")
            out << cs;
        out << 'x';
        if (i > 1) out << '^' << i;
    }
    return out.str();
}

} // namespace polydiag
