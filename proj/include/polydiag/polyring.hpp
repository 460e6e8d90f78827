#pragma once

#include <compare>
#include <string>
#include <vector>

#include "polydiag/bigint.hpp"
#include "polydiag/errors.hpp"

namespace polydiag {

/// Dense univariate polynomial in u with exact integer coefficients. The
/// variable u stands for t^2 = z zbar: every Hodge polynomial in this project
/// depends on z zbar only, so degrees are halved and no information is lost.
/// Canonical form: no trailing zero coefficient; zero is the empty vector.
class UPoly {
public:
    UPoly() = default;
    UPoly(long value) : UPoly(BigInt(value)) {} // NOLINT(google-explicit-constructor)
    UPoly(BigInt constant);                     // NOLINT(google-explicit-constructor)
    explicit UPoly(std::vector<BigInt> coeffs);

    static UPoly monomial(BigInt coeff, int power);
    static UPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in u; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of u^i (zero beyond the degree).
    const BigInt& coeff(int i) const;

    BigInt eval(const BigInt& value) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    UPoly pow(int e) const;
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// "u^2+4u+1" (descending powers); var "t" doubles the exponents.
    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Exact quotient p / q; throws identity_error carrying the remainder if the
/// division is not exact over the integers. Divisibility failures signal a
/// formula bug, never input trouble, so they are never silently truncated.
UPoly exact_div(const UPoly& p, const UPoly& q);

/// e(P^{d-1}) = 1 + u + ... + u^{d-1}, d >= 1.
UPoly projective(int d);

/// e(P^{d-1}) - 1 = u + ... + u^{d-1}: the amount a blowup with a
/// codimension-d center adds per center. Zero for d = 1.
UPoly projective_reduced(int d);

/// Polynomial in x with UPoly coefficients; x is the formal stand-in for the
/// Hodge polynomial of the base variety.
class XPoly {
public:
    XPoly() = default;
    XPoly(UPoly constant); // NOLINT(google-explicit-constructor)
    XPoly(long value) : XPoly(UPoly(value)) {}
    explicit XPoly(std::vector<UPoly> coeffs);

    static XPoly variable() { return monomial(UPoly(1), 1); }
    static XPoly monomial(UPoly coeff, int power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in x; -1 for zero.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<UPoly>& coeffs() const { return coeffs_; }
    const UPoly& coeff(int i) const;

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }
    XPoly pow(int e) const;
    friend bool operator==(const XPoly&, const XPoly&) = default;

    /// Substitutes a value for x.
    XPoly eval_x(const XPoly& value) const;
    UPoly eval_x(const UPoly& value) const;

    /// "x^2+ux" with composite u-coefficients parenthesized: "(u+1)x".
    std::string to_string(const std::string& uvar = "u") const;

private:
    void trim();
    std::vector<UPoly> coeffs_;
};

} // namespace polydiag
