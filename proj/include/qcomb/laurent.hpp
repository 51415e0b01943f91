#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace qcomb {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer-coefficient polynomial in q with possibly negative exponents.
///
/// Terms are kept in a sorted exponent -> coefficient map with no zero
/// coefficients stored, so operator== is exact structural equality.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly constant(BigInt c);
    static LaurentPoly monomial(int exponent, BigInt coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coefficient(int exponent) const;

    /// Lowest/highest exponent with a nonzero coefficient; throws on the zero polynomial.
    int min_exponent() const;
    int max_exponent() const;

    void add_term(int exponent, const BigInt& coefficient);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& other) const;

    /// Multiply by q^shift.
    LaurentPoly shifted(int shift) const;
    LaurentPoly scaled(const BigInt& factor) const;

    /// Exact substitution q = x. Negative exponents are only meaningful for
    /// x in {1, -1}; evaluating them elsewhere throws (at 0 in particular).
    BigInt evaluate(const BigInt& x) const;

    /// Exact division; throws if the quotient is not a Laurent polynomial
    /// over the integers.
    static LaurentPoly divide_exact(const LaurentPoly& numerator, const LaurentPoly& denominator);

    /// Canonical text form: ascending exponents, "c*q^e" terms with unit
    /// coefficients and exponents 0/1 abbreviated, e.g. "1 - q + 2*q^3".
    std::string str() const;

    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<int, BigInt> terms_;
};

}  // namespace qcomb
