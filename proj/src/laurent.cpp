#include "qcomb/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qcomb {

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(0, std::move(c)); }

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coefficient) {
    LaurentPoly p;
    if (coefficient != 0) p.terms_[exponent] = std::move(coefficient);
    return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e + shift] = c;
    return out;
}

LaurentPoly LaurentPoly::scaled(const BigInt& factor) const {
    LaurentPoly out;
    if (factor == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_[e] = c * factor;
    return out;
}

BigInt LaurentPoly::evaluate(const BigInt& x) const {
    if (terms_.empty()) return 0;
    if (min_exponent() < 0 && x != 1 && x != -1) {
        if (x == 0) throw std::domain_error("evaluate at 0 with negative exponent");
        throw std::domain_error("negative exponents require evaluation at 1 or -1");
    }
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        if (x == 1) {
            total += c;
        } else if (x == -1) {
            total += (e % 2 == 0) ? c : -c;
        } else if (e == 0) {
            total += c;
        } else {
            BigInt p = 1;
            for (int i = 0; i < e; ++i) p *= x;
            total += c * p;
        }
    }
    return total;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& numerator, const LaurentPoly& denominator) {
    if (denominator.is_zero()) throw std::domain_error("division by zero polynomial");
    if (numerator.is_zero()) return zero();
    LaurentPoly rem = numerator;
    LaurentPoly quot;
    const int de = denominator.min_exponent();
    const BigInt& dc = denominator.terms_.begin()->second;
    // an exact quotient has top exponent num.max - den.max, and the emitted
    // exponents strictly increase, so this bound also forces termination
    const int quot_max = numerator.max_exponent() - denominator.max_exponent();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        if (re - de > quot_max || rc % dc != 0)
            throw std::domain_error("polynomial division is not exact");
        LaurentPoly t = monomial(re - de, rc / dc);
        quot += t;
        rem -= t * denominator;
    }
    return quot;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace qcomb
